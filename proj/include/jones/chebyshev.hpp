#ifndef JONES_CHEBYSHEV_HPP
#define JONES_CHEBYSHEV_HPP

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "jones/annulus.hpp"
#include "jones/cluster.hpp"
#include "jones/laurent.hpp"

namespace jones {

/// T_n with exact integer coefficients, constant term first.
struct ChebyshevPoly {
  unsigned degree = 0;
  std::vector<Integer> coefficients{1};

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Evaluated exactly at the (dyadic) value of x, rounded once.
  double operator()(double x) const { return (*this)(Rational(x)).convert_to<double>(); }

  /// Horner substitution of a Laurent polynomial.
  LaurentPoly operator()(const LaurentPoly& arg) const {
    LaurentPoly acc(arg.vars());
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it)
      acc = acc * arg + LaurentPoly::constant(arg.vars(), *it);
    return acc;
  }

  /// The polynomial in a single variable named `var`.
  LaurentPoly as_laurent(const std::string& var = "x") const {
    return (*this)(LaurentPoly::variable({var}, 0));
  }

  friend bool operator==(const ChebyshevPoly&, const ChebyshevPoly&) = default;
};

/// T_0 = 1, T_1 = x, T_{n+1} = 2x T_n - T_{n-1}.
inline ChebyshevPoly chebyshev_T(unsigned n) {
  std::vector<Integer> prev{1};
  if (n == 0) return {0, prev};
  std::vector<Integer> cur{0, 1};
  for (unsigned k = 1; k < n; ++k) {
    std::vector<Integer> next(cur.size() + 1, 0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += 2 * cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {n, cur};
}

inline void to_json(nlohmann::json& j, const ChebyshevPoly& p) {
  j = nlohmann::json::array();
  for (const auto& c : p.coefficients) j.push_back(c.str());
}

/// Both sides of 2^{n-1} * 2 T_n((t + 1/t) / 2) = 2^{n-1} (t^n + t^{-n}) over Z[t^{+-1}].
struct HalfsumSides {
  LaurentPoly lhs;
  LaurentPoly rhs;
};

/// Clears the 2^n denominator of T_n((t + 1/t)/2): sum_k c_k 2^{n-k} (t + 1/t)^k.
inline HalfsumSides halfsum_sides(unsigned n) {
  const std::vector<std::string> vars{"t"};
  const LaurentPoly z = LaurentPoly::variable(vars, 0) + LaurentPoly::monomial(vars, {-1});
  const ChebyshevPoly tn = chebyshev_T(n);
  LaurentPoly lhs(vars);
  LaurentPoly z_power = LaurentPoly::constant(vars, 1);
  for (unsigned k = 0; k <= n; ++k) {
    const Integer scale = tn.coefficients[k] * (Integer(1) << (n - k));
    lhs = lhs + scale * z_power;
    z_power = z_power * z;
  }
  const Integer half_scale = Integer(1) << (n - 1);
  const LaurentPoly rhs =
      half_scale * (LaurentPoly::monomial(vars, {static_cast<std::int32_t>(n)}) +
                    LaurentPoly::monomial(vars, {-static_cast<std::int32_t>(n)}));
  return {lhs, rhs};
}

/// T_n((t + 1/t)/2) = (t^n + t^{-n})/2, checked exactly.
inline bool verify_halfsum_identity(unsigned n) {
  if (n < 1) throw std::invalid_argument("verify_halfsum_identity: n must be positive");
  const auto sides = halfsum_sides(n);
  return sides.lhs == sides.rhs;
}

/// x_i^p x_{i+1}^q of the annulus algebra.
struct MonomialPair {
  long i = 1;
  unsigned p = 0;
  unsigned q = 0;
};

/// T_n(x1 x4 - x2 x3), n >= 1.
struct ChebyshevOfCasimir {
  unsigned n = 1;
};

using BasisElement = std::variant<MonomialPair, ChebyshevOfCasimir>;

/// Expands a basis element of A(2,2) in the initial cluster (x1, x2). The
/// variables x_i, x_{i+1} must be reachable within `depth` mutations.
inline LaurentPoly basis_expand(const BasisElement& element, long depth) {
  if (depth < 1) throw std::invalid_argument("basis_expand: depth must be positive");
  const Rank2Params annulus{2, 2};
  if (const auto* mp = std::get_if<MonomialPair>(&element)) {
    const long needed = std::max(rank2_distance(mp->i), rank2_distance(mp->i + 1));
    if (needed > depth)
      throw std::out_of_range("x_" + std::to_string(mp->i) + ", x_" + std::to_string(mp->i + 1) +
                              " need " + std::to_string(needed) + " mutations, depth is " +
                              std::to_string(depth));
    return rank2_variable(annulus, mp->i).pow(mp->p) * rank2_variable(annulus, mp->i + 1).pow(mp->q);
  }
  const auto& cc = std::get<ChebyshevOfCasimir>(element);
  if (cc.n < 1) throw std::invalid_argument("ChebyshevOfCasimir requires n >= 1");
  // x3 and x4 sit two mutations away.
  if (depth < 2) throw std::out_of_range("casimir needs x3, x4: depth must be at least 2");
  const auto xs = rank2_sequence(annulus, 4);
  return chebyshev_T(cc.n)(casimir_window(xs, 1));
}

}  // namespace jones

#endif  // JONES_CHEBYSHEV_HPP
