#include <cstdlib>
#include <map>

#include "qtheta/errors.hpp"
#include "qtheta/frobenius.hpp"

namespace qtheta {

std::int64_t FrobeniusArray::weight() const {
  std::int64_t w = static_cast<std::int64_t>(top.size());
  for (const auto& p : top) w += p.value;
  for (const auto& p : bottom) w += p.value;
  return w;
}

bool FrobeniusArray::valid(unsigned k) const {
  if (top.size() != bottom.size()) return false;
  for (const auto* row : {&top, &bottom}) {
    for (std::size_t i = 0; i < row->size(); ++i) {
      const auto& p = (*row)[i];
      if (p.value < 0 || p.color < 1 || p.color > static_cast<int>(k)) return false;
      if (i > 0 && !(p < (*row)[i - 1])) return false;
    }
  }
  return true;
}

std::uint64_t enumeration_cap() {
  if (const char* env = std::getenv("QTHETA_ENUM_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return 10'000'000;
}

namespace {

using Row = std::vector<ColoredPart>;

struct Rows {
  // rows[m][s]: rows of length m with part sum s
  std::vector<std::vector<std::vector<Row>>> rows;
};

// All strictly decreasing colored rows with length + sum <= n_max.
Rows build_rows(unsigned k, std::int64_t n_max) {
  Rows r;
  r.rows.resize(static_cast<std::size_t>(n_max + 1));
  for (auto& by_sum : r.rows) by_sum.resize(static_cast<std::size_t>(n_max + 1));
  Row cur;
  // Next part must be below `bound` in the colored order.
  std::function<void(ColoredPart, std::int64_t)> descend = [&](ColoredPart bound, std::int64_t sum) {
    auto len = static_cast<std::int64_t>(cur.size());
    r.rows[static_cast<std::size_t>(len)][static_cast<std::size_t>(sum)].push_back(cur);
    for (std::int64_t v = std::min(bound.value, n_max); v >= 0; --v) {
      if (len + 1 + sum + v > n_max) continue;
      int top_color = v == bound.value ? bound.color - 1 : static_cast<int>(k);
      for (int c = top_color; c >= 1; --c) {
        cur.push_back({v, c});
        descend(cur.back(), sum + v);
        cur.pop_back();
      }
    }
  };
  descend(ColoredPart{n_max + 1, 1}, 0);
  return r;
}

std::uint64_t pair_count(const Rows& r, std::int64_t n_max) {
  std::uint64_t total = 0;
  for (std::int64_t m = 0; m <= n_max; ++m) {
    const auto& by_sum = r.rows[static_cast<std::size_t>(m)];
    for (std::int64_t s1 = 0; s1 + m <= n_max; ++s1)
      for (std::int64_t s2 = 0; s1 + s2 + m <= n_max; ++s2)
        total += by_sum[static_cast<std::size_t>(s1)].size() * by_sum[static_cast<std::size_t>(s2)].size();
  }
  return total;
}

}  // namespace

std::uint64_t count_frobenius_arrays(unsigned k, std::int64_t n_max) {
  if (k < 1) throw DomainError("k must be >= 1");
  if (n_max < 0) return 0;
  return pair_count(build_rows(k, n_max), n_max);
}

void for_each_frobenius_array(unsigned k, std::int64_t n_max, const std::function<void(const FrobeniusArray&)>& f,
                              std::uint64_t cap) {
  if (k < 1) throw DomainError("k must be >= 1");
  if (n_max < 0) return;
  Rows r = build_rows(k, n_max);
  std::uint64_t n = pair_count(r, n_max);
  if (n > cap)
    throw CapExceeded(std::to_string(n) + " arrays of weight <= " + std::to_string(n_max) + " exceed the cap of " +
                      std::to_string(cap));
  FrobeniusArray a;
  for (std::int64_t m = 0; m <= n_max; ++m) {
    const auto& by_sum = r.rows[static_cast<std::size_t>(m)];
    for (std::int64_t s1 = 0; s1 + m <= n_max; ++s1)
      for (std::int64_t s2 = 0; s1 + s2 + m <= n_max; ++s2)
        for (const auto& top : by_sum[static_cast<std::size_t>(s1)])
          for (const auto& bottom : by_sum[static_cast<std::size_t>(s2)]) {
            a.top = top;
            a.bottom = bottom;
            f(a);
          }
  }
}

CPhiSeries cphi_enumerate(unsigned k, std::int64_t n_max, std::uint64_t cap) {
  if (n_max < 0) throw DomainError("n_max must be >= 0");
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n_max + 1));
  for_each_frobenius_array(k, n_max, [&](const FrobeniusArray& a) { ++counts[static_cast<std::size_t>(a.weight())]; },
                           cap);
  CPhiSeries out{k, CPhiMethod::enumeration, {}};
  for (auto c : counts) out.coeffs.emplace_back(std::to_string(c));
  return out;
}

}  // namespace qtheta
