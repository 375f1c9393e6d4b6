#include "qtheta/serialize.hpp"

#include "qtheta/errors.hpp"

namespace qtheta {

Json to_json(const QSeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(c.get_str());
  return Json{{"lattice_den", s.lattice_den()}, {"val", s.val()}, {"prec", s.prec()}, {"coeffs", coeffs}};
}

QSeries qseries_from_json(const Json& j) {
  std::vector<Integer> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.emplace_back(c.get<std::string>());
  return QSeries(j.at("lattice_den").get<std::int64_t>(), j.at("val").get<std::int64_t>(), std::move(coeffs),
                 j.at("prec").get<std::int64_t>());
}

Json to_json(const ZetaQSeries& f) {
  Json terms = Json::array();
  for (const auto& [twice, s] : f.terms()) terms.push_back(Json{{"zeta_num_over_2", twice}, {"qseries", to_json(s)}});
  return Json{{"qprec", to_string(f.qprec())}, {"terms", terms}};
}

ZetaQSeries zeta_from_json(const Json& j) {
  ZetaQSeries f(parse_exprat(j.at("qprec").get<std::string>()));
  for (const auto& t : j.at("terms"))
    f.add(HalfInt::from_twice(t.at("zeta_num_over_2").get<std::int64_t>()), qseries_from_json(t.at("qseries")));
  return f;
}

Json to_json(const ThetaExpr& e) {
  Json terms = Json::array();
  for (const auto& [mono, c] : e.terms()) {
    Json atoms = Json::array();
    for (const auto& s : mono) atoms.push_back(Json{{"m", s.m}, {"a", s.a}, {"scale", s.scale}});
    terms.push_back(Json{{"coeff", c}, {"atoms", atoms}});
  }
  return Json{{"terms", terms}};
}

ThetaExpr theta_expr_from_json(const Json& j) {
  ThetaExpr e;
  for (const auto& t : j.at("terms")) {
    ThetaExpr term = ThetaExpr::constant(t.at("coeff").get<std::int64_t>());
    for (const auto& a : t.at("atoms"))
      term = term * ThetaExpr::theta(a.at("m").get<std::int64_t>(), a.at("a").get<std::int64_t>(),
                                     a.value("scale", std::int64_t{1}));
    e += term;
  }
  return e;
}

Json to_json(const CPhiSeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs) coeffs.push_back(c.get_str());
  return Json{{"k", s.k}, {"method", to_string(s.method)}, {"coeffs", coeffs}};
}

CPhiSeries cphi_from_json(const Json& j) {
  CPhiSeries s{j.at("k").get<unsigned>(), parse_method(j.at("method").get<std::string>()), {}};
  for (const auto& c : j.at("coeffs")) s.coeffs.emplace_back(c.get<std::string>());
  return s;
}

Json to_json(const Report& r) {
  Json j{{"claim", r.claim}, {"range", r.range}, {"status", r.status()}};
  if (r.first_failure) j["first_failure"] = *r.first_failure;
  if (r.discrepancy) j["discrepancy"] = *r.discrepancy;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

}  // namespace qtheta
