#ifndef JONES_ANNULUS_HPP
#define JONES_ANNULUS_HPP

// The cluster algebra of the annulus with one marked point on each boundary
// component: exchange matrix [[0, 2], [-2, 0]], the casimir x1 x4 - x2 x3 and
// the resolution of (x1, x2) in terms of the modulus t = R / r.

#include <cmath>
#include <optional>
#include <utility>

#include "json.hpp"

#include "jones/cluster.hpp"
#include "jones/laurent.hpp"
#include "jones/scalar.hpp"

namespace jones {

inline ExchangeMatrix annulus_exchange_matrix() { return {{0, 2}, {-2, 0}}; }

inline Seed annulus_seed() { return Seed::initial(annulus_exchange_matrix()); }

/// x1 x4 - x2 x3 where x3 = (1 + x2^2) / x1 and x4 = (1 + x3^2) / x2.
inline LaurentPoly casimir(const LaurentPoly& x1, const LaurentPoly& x2) {
  const LaurentPoly one = LaurentPoly::constant(x1.vars(), 1);
  const LaurentPoly x3 = exact_div(one + x2.pow(2), x1);
  const LaurentPoly x4 = exact_div(one + x3.pow(2), x2);
  return x1 * x4 - x2 * x3;
}

/// The casimir of the initial annulus cluster, in (x1, x2).
inline LaurentPoly annulus_casimir() {
  const auto vars = LaurentPoly::standard_vars(2);
  return casimir(LaurentPoly::variable(vars, 0), LaurentPoly::variable(vars, 1));
}

/// x_i x_{i+3} - x_{i+1} x_{i+2} over a window of the A(2,2) sequence.
inline LaurentPoly casimir_window(const std::vector<LaurentPoly>& xs, std::size_t i) {
  if (i < 1 || i + 3 > xs.size()) throw std::out_of_range("casimir_window: window exceeds sequence");
  return xs[i - 1] * xs[i + 2] - xs[i] * xs[i + 1];
}

/// Point of the Teichmuller space of the annulus, or a complex continuation of it.
class TeichmullerParam {
 public:
  static TeichmullerParam from_value(Scalar t) {
    if (t.is_zero()) throw std::domain_error("Teichmuller parameter t = 0");
    if (t.equals(Rational(-1))) throw SingularTrace("Teichmuller parameter t = -1");
    return TeichmullerParam(std::move(t), std::nullopt);
  }

  /// t = R / r for an annulus r <= |z| <= R.
  static TeichmullerParam from_radii(const Scalar& r, const Scalar& R) {
    if (!r.is_real() || !R.is_real()) throw std::domain_error("radii must be real");
    const double rd = r.to_complex().real();
    const double Rd = R.to_complex().real();
    if (!(rd > 0.0) || !(Rd > 0.0)) throw std::domain_error("radii must be positive");
    const bool ordered = (r.is_exact() && R.is_exact()) ? r.rational() < R.rational() : rd < Rd;
    if (!ordered) throw std::domain_error("annulus requires r < R");
    return TeichmullerParam(R / r, std::make_pair(r, R));
  }

  const Scalar& t() const { return t_; }
  const std::optional<std::pair<Scalar, Scalar>>& radii() const { return radii_; }

 private:
  TeichmullerParam(Scalar t, std::optional<std::pair<Scalar, Scalar>> radii)
      : t_(std::move(t)), radii_(std::move(radii)) {}

  Scalar t_;
  std::optional<std::pair<Scalar, Scalar>> radii_;
};

struct PennerPoint {
  Complex x1;
  Complex x2;
  /// x2 was negated from the principal root to restore x1 x2 = 2t.
  bool x2_branch_adjusted = false;
};

/// x1 = (sqrt2/2) sqrt(t^2 + t sqrt(t^2 - 16)), x2 = (sqrt2/2) sqrt(t^2 - t sqrt(t^2 - 16))
/// with principal roots. Off the real axis the principal x2 can come out as
/// the negative root, giving x1 x2 = -2t; x2 is then replaced by the other
/// square root of its radicand.
inline PennerPoint penner_resolution(const TeichmullerParam& param) {
  const Complex t = param.t().to_complex();
  const Complex inner = std::sqrt(t * t - 16.0);
  const double half_sqrt2 = std::sqrt(2.0) / 2.0;
  PennerPoint p;
  p.x1 = checked_finite(half_sqrt2 * std::sqrt(t * t + t * inner));
  p.x2 = checked_finite(half_sqrt2 * std::sqrt(t * t - t * inner));
  if (std::abs(p.x1 * p.x2 - 2.0 * t) > std::abs(p.x1 * p.x2 + 2.0 * t)) {
    p.x2 = -p.x2;
    p.x2_branch_adjusted = true;
  }
  return p;
}

struct CasimirCheck {
  Complex t;
  Complex x1;
  Complex x2;
  Complex casimir;
  Complex halfsum;
  double error = 0.0;
  bool x2_branch_adjusted = false;
  bool pass = false;
};

/// Resolves (x1, x2) at t, evaluates the symbolic casimir there, and compares
/// with (t + 1/t) / 2. Passes when |casimir - halfsum| <= tol * max(1, |halfsum|).
inline CasimirCheck verify_casimir_halfsum(const TeichmullerParam& param, double tol) {
  static const LaurentPoly symbolic = annulus_casimir();
  const PennerPoint p = penner_resolution(param);
  CasimirCheck c;
  c.t = param.t().to_complex();
  c.x1 = p.x1;
  c.x2 = p.x2;
  c.x2_branch_adjusted = p.x2_branch_adjusted;
  c.casimir = evaluate(symbolic, {{"x1", Scalar(p.x1)}, {"x2", Scalar(p.x2)}}).to_complex();
  c.halfsum = 0.5 * (c.t + 1.0 / c.t);
  c.error = std::abs(c.casimir - c.halfsum);
  c.pass = c.error <= tol * std::max(1.0, std::abs(c.halfsum));
  return c;
}

namespace detail {
inline nlohmann::json complex_json(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }
inline Complex complex_from_json(const nlohmann::json& j) {
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}
}  // namespace detail

inline void to_json(nlohmann::json& j, const CasimirCheck& c) {
  j = {{"t", detail::complex_json(c.t)},
       {"x1", detail::complex_json(c.x1)},
       {"x2", detail::complex_json(c.x2)},
       {"casimir", detail::complex_json(c.casimir)},
       {"halfsum", detail::complex_json(c.halfsum)},
       {"error", c.error},
       {"x2_branch_adjusted", c.x2_branch_adjusted},
       {"pass", c.pass}};
}

inline void from_json(const nlohmann::json& j, CasimirCheck& c) {
  c.t = detail::complex_from_json(j.at("t"));
  c.x1 = detail::complex_from_json(j.at("x1"));
  c.x2 = detail::complex_from_json(j.at("x2"));
  c.casimir = detail::complex_from_json(j.at("casimir"));
  c.halfsum = detail::complex_from_json(j.at("halfsum"));
  j.at("error").get_to(c.error);
  j.at("x2_branch_adjusted").get_to(c.x2_branch_adjusted);
  j.at("pass").get_to(c.pass);
}

}  // namespace jones

#endif  // JONES_ANNULUS_HPP
