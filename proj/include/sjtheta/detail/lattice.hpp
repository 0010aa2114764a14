#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace sjtheta {

namespace detail {

inline std::int64_t isqrt_floor(std::int64_t k) {
  auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(k)));
  while (s * s > k) --s;
  while ((s + 1) * (s + 1) <= k) ++s;
  return s;
}

// Visits every v in Z^n with |v|^2 == shell, in lexicographic order.
template <class F>
void visit_shell(std::vector<int>& v, std::size_t pos, std::int64_t remaining, F& f) {
  const std::size_t n = v.size();
  if (pos + 1 == n) {
    const std::int64_t s = isqrt_floor(remaining);
    if (s * s != remaining) return;
    v[pos] = static_cast<int>(-s);
    f(static_cast<const int*>(v.data()));
    if (s != 0) {
      v[pos] = static_cast<int>(s);
      f(static_cast<const int*>(v.data()));
    }
    return;
  }
  const std::int64_t b = isqrt_floor(remaining);
  for (std::int64_t x = -b; x <= b; ++x) {
    v[pos] = static_cast<int>(x);
    visit_shell(v, pos + 1, remaining - x * x, f);
  }
}

}  // namespace detail

template <class F>
void for_each_lattice_point(std::size_t n, double radius, F&& f) {
  if (n == 0 || radius < 0) return;
  const auto max_shell = static_cast<std::int64_t>(std::floor(radius * radius));
  std::vector<int> v(n, 0);
  for (std::int64_t k = 0; k <= max_shell; ++k) detail::visit_shell(v, 0, k, f);
}

}  // namespace sjtheta
