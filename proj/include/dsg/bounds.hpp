#ifndef DSG_BOUNDS_HPP
#define DSG_BOUNDS_HPP

// Exact checks of the approximation guarantees. Epsilons are rationals p/q and
// every comparison is carried out in 128-bit integers; irrational factors such
// as sqrt(eps1*eps2) are isolated on one side and squared away.

#include <cmath>
#include <cstdint>
#include <cstdlib>

#include "dsg/density.hpp"
#include "dsg/error.hpp"

namespace dsg {

struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Best rational approximation with denominator at most `max_den`
/// (continued fractions). 0.1 becomes exactly 1/10.
inline Ratio ratio_from_double(double x, std::int64_t max_den = 10000) {
  detail::require(x >= 0.0 && std::isfinite(x), "ratio_from_double needs a finite non-negative value");
  std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double rest = x;
  for (int iter = 0; iter < 64; ++iter) {
    const double whole = std::floor(rest);
    if (whole > 1e15) break;
    const auto a = static_cast<std::int64_t>(whole);
    const std::int64_t q2 = q0 + a * q1;
    if (q2 > max_den) break;
    const std::int64_t p2 = p0 + a * p1;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const double frac = rest - whole;
    if (frac < 1e-12 || std::abs(static_cast<double>(p1) / static_cast<double>(q1) - x) < 1e-15) break;
    rest = 1.0 / frac;
  }
  return {p1, q1};
}

namespace detail {

inline void require_ratio(const Density& d) {
  require(d.kind() == Density::Kind::ratio, "expected an undirected or clique density");
}

}  // namespace detail

/// d(out) >= (1 - 3 eps) d(H*). Vacuously true when 1 - 3 eps <= 0.
inline bool undirected_bound_holds(const Density& out, const Density& best, Ratio eps) {
  detail::require_ratio(out);
  detail::require_ratio(best);
  const wide_int factor = eps.den - 3 * wide_int(eps.num);
  if (factor <= 0) return true;
  return wide_int(out.numerator()) * best.denominator() * eps.den >=
         factor * best.numerator() * out.denominator();
}

/// |E(H* \ S)| <= eps |E(H*)|.
inline bool missing_edges_bound_holds(std::uint64_t missing_edges, std::uint64_t optimum_edges, Ratio eps) {
  return wide_int(missing_edges) * eps.den <= wide_int(eps.num) * optimum_edges;
}

/// d(out) >= (1 - sqrt(e1 e2)) / sqrt((1 + 3 e1)(1 + 3 e2)) * d(S1*, S2*).
inline bool directed_bound_holds(const Density& out, const Density& best, Ratio eps1, Ratio eps2) {
  detail::require(out.kind() == Density::Kind::root_ratio && best.kind() == Density::Kind::root_ratio,
                  "expected directed densities");
  // With out = e/sqrt(a), best = E/sqrt(b), e_i = p_i/q_i the squared claim is
  //   e^2 b (q1+3p1)(q2+3p2) >= E^2 a (q1 q2 + p1 p2 - 2 sqrt(p1 p2 q1 q2)).
  const wide_int e = out.numerator(), a = out.denominator();
  const wide_int big_e = best.numerator(), b = best.denominator();
  const wide_int lhs = e * e * b * (eps1.den + 3 * wide_int(eps1.num)) * (eps2.den + 3 * wide_int(eps2.num));
  const wide_int k = big_e * big_e * a;
  const wide_int q = wide_int(eps1.den) * eps2.den + wide_int(eps1.num) * eps2.num;
  const wide_int p = wide_int(eps1.num) * eps2.num * eps1.den * eps2.den;
  const wide_int gap = k * q - lhs;  // must be <= 2 k sqrt(p)
  if (gap <= 0) return true;
  return 4 * k * k * p >= gap * gap;
}

/// |E(S1*\S1, S2*\S2)| <= sqrt(e1 e2) |E(S1*, S2*)|.
inline bool missing_arcs_bound_holds(std::uint64_t missing_arcs, std::uint64_t optimum_arcs, Ratio eps1,
                                     Ratio eps2) {
  const wide_int x = missing_arcs, y = optimum_arcs;
  return x * x * eps1.den * eps2.den <= y * y * eps1.num * eps2.num;
}

/// g(out) >= (1 - 3 sqrt(eps)) g(H*). Vacuously true when 1 - 3 sqrt(eps) <= 0.
inline bool clique_bound_holds(const Density& out, const Density& best, Ratio eps) {
  detail::require_ratio(out);
  detail::require_ratio(best);
  if (9 * wide_int(eps.num) >= eps.den) return true;
  const wide_int a = best.numerator(), b = best.denominator();
  const wide_int c = out.numerator(), d = out.denominator();
  const wide_int gap = a * d - c * b;  // (g* - g_out) * b * d
  if (gap <= 0) return true;
  return 9 * wide_int(eps.num) * a * a * d * d >= wide_int(eps.den) * gap * gap;
}

}  // namespace dsg

#endif
