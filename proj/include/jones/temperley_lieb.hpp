#ifndef JONES_TEMPERLEY_LIEB_HPP
#define JONES_TEMPERLEY_LIEB_HPP

// The Jones projection e_t in M_2 (x) M_2 and the tower e_1, ..., e_m acting
// on m + 1 tensor slots, e_i occupying slots (i, i + 1).
//
// e_t = (e11(x)e22 + t e22(x)e11 + sqrt(t) (e12(x)e21 + e21(x)e12)) / (1 + t)
// is the rank-one projection onto |12> + sqrt(t)|21> (bilinear normalization),
// so it is idempotent for every t != -1 and Hermitian for real t > 0. The
// variant with e11(x)e11 and t e22(x)e22 on the diagonal is kept separately
// for auditing: it is not idempotent.
//
// Exact mode is used when t is rational with a rational square root.

#include <deque>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "jones/errors.hpp"
#include "jones/matrix.hpp"
#include "jones/report.hpp"
#include "jones/scalar.hpp"

namespace jones {

inline void require_admissible_t(const Scalar& t) {
  if (t.is_zero()) throw std::domain_error("t = 0 is not admissible");
  if (t.equals(Rational(-1))) throw SingularTrace("t = -1: 1 + t vanishes");
  if (!t.is_exact() && std::abs(t.to_complex() + 1.0) < 1e-300)
    throw SingularTrace("t = -1: 1 + t vanishes");
}

/// Exact mode applies when t and sqrt(t) are both rational.
inline bool exact_mode(const Scalar& t) { return t.is_exact() && exact_sqrt(t.rational()).has_value(); }

/// t / (1 + t)^2.
inline Scalar trace_parameter(const Scalar& t) {
  require_admissible_t(t);
  const Scalar s = Scalar(1) + t;
  return t / (s * s);
}

namespace detail {

template <typename S>
S to_mode(const Scalar& x) {
  if constexpr (std::is_same_v<S, Rational>) return x.rational();
  else return x.to_complex();
}

template <typename S>
Matrix<S> off_diagonal_swap() {
  return kron(matrix_unit<S>(1, 2), matrix_unit<S>(2, 1)) + kron(matrix_unit<S>(2, 1), matrix_unit<S>(1, 2));
}

template <typename S>
Matrix<S> jones_projection_in(const S& t, const S& sqrt_t) {
  Matrix<S> m = kron(matrix_unit<S>(1, 1), matrix_unit<S>(2, 2)) + t * kron(matrix_unit<S>(2, 2), matrix_unit<S>(1, 1)) +
                sqrt_t * off_diagonal_swap<S>();
  return S(S(1) / (S(1) + t)) * m;
}

template <typename S>
Matrix<S> printed_projection_in(const S& t, const S& sqrt_t) {
  Matrix<S> m = kron(matrix_unit<S>(1, 1), matrix_unit<S>(1, 1)) + t * kron(matrix_unit<S>(2, 2), matrix_unit<S>(2, 2)) +
                sqrt_t * off_diagonal_swap<S>();
  return S(S(1) / (S(1) + t)) * m;
}

template <typename S>
Matrix<S> place_on_slots(const Matrix<S>& local, std::size_t i, std::size_t slots) {
  // identity on slots 1..i-1, local on (i, i+1), identity on i+2..slots
  Matrix<S> left = Matrix<S>::identity(std::size_t{1} << (i - 1));
  Matrix<S> right = Matrix<S>::identity(std::size_t{1} << (slots - i - 1));
  return kron(kron(left, local), right);
}

inline std::size_t tower_dimension(std::size_t m) {
  if (m < 1) throw std::invalid_argument("tower needs m >= 1");
  if (m + 1 >= 8 * sizeof(std::size_t) || (std::size_t{1} << (m + 1)) > matrix_size_cap())
    throw SizeCapExceeded("tower with m = " + std::to_string(m) + " exceeds dimension cap " +
                          std::to_string(matrix_size_cap()));
  return std::size_t{1} << (m + 1);
}

}  // namespace detail

inline AnyMatrix jones_projection(const Scalar& t) {
  require_admissible_t(t);
  if (exact_mode(t)) return detail::jones_projection_in<Rational>(t.rational(), *exact_sqrt(t.rational()));
  const Complex tc = t.to_complex();
  return detail::jones_projection_in<Complex>(tc, std::sqrt(tc));
}

/// The diagonal-e11(x)e11 variant, for auditing.
inline AnyMatrix printed_projection(const Scalar& t) {
  require_admissible_t(t);
  if (exact_mode(t)) return detail::printed_projection_in<Rational>(t.rational(), *exact_sqrt(t.rational()));
  const Complex tc = t.to_complex();
  return detail::printed_projection_in<Complex>(tc, std::sqrt(tc));
}

template <typename S>
struct TLTower {
  Scalar t;
  std::size_t m = 0;
  std::vector<Matrix<S>> generators;
  S tau;
};

using AnyTower = std::variant<TLTower<Rational>, TLTower<Complex>>;

/// Builds e_1..e_m from a local 4x4 operator (the Jones projection unless overridden).
template <typename S>
TLTower<S> tower_from_local(const Scalar& t, std::size_t m, const Matrix<S>& local) {
  const std::size_t dim = detail::tower_dimension(m);
  (void)dim;
  TLTower<S> tower{t, m, {}, detail::to_mode<S>(trace_parameter(t))};
  for (std::size_t i = 1; i <= m; ++i) tower.generators.push_back(detail::place_on_slots(local, i, m + 1));
  return tower;
}

inline AnyTower tl_generators(const Scalar& t, std::size_t m) {
  detail::tower_dimension(m);
  return std::visit([&](const auto& e) -> AnyTower { return tower_from_local(t, m, e); }, jones_projection(t));
}

/// Tower built on the audited (non-projection) formula.
inline AnyTower tl_generators_from_printed(const Scalar& t, std::size_t m) {
  detail::tower_dimension(m);
  return std::visit([&](const auto& e) -> AnyTower { return tower_from_local(t, m, e); }, printed_projection(t));
}

namespace detail {

template <typename S>
bool within(const typename Matrix<S>::Magnitude& dev, double tol) {
  if constexpr (ScalarTraits<S>::exact) return dev == 0;
  else return dev <= tol;
}

template <typename S>
std::string mode_text(const S& value) {
  if constexpr (ScalarTraits<S>::exact) {
    return value.str();
  } else {
    std::ostringstream os;
    os << std::setprecision(12) << value.real();
    if (value.imag() != 0.0) os << (value.imag() < 0 ? "-" : "+") << std::abs(value.imag()) << "i";
    return os.str();
  }
}

template <typename S>
Report verify_tower(const TLTower<S>& tower, double tol) {
  using Mag = typename Matrix<S>::Magnitude;
  const auto& e = tower.generators;
  const std::size_t m = e.size();
  Report report;
  report.title = "Temperley-Lieb relations, t = " + tower.t.to_string() + ", m = " + std::to_string(m) +
                 ", tau = " + mode_text(tower.tau) + (ScalarTraits<S>::exact ? " (exact)" : " (floating)");

  Mag idem = 0;
  for (const auto& g : e) idem = std::max(idem, max_deviation(g * g, g));
  report.add("idempotent", within<S>(idem, tol), Deviation(idem));

  Mag far = 0;
  std::size_t far_pairs = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 2; j < m; ++j) {
      far = std::max(far, max_deviation(e[i] * e[j], e[j] * e[i]));
      ++far_pairs;
    }
  report.add("far_commutation", within<S>(far, tol), Deviation(far),
             far_pairs == 0 ? "vacuous (m < 3)" : std::to_string(far_pairs) + " pair(s)");

  Mag braid = 0;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    braid = std::max(braid, max_deviation(e[i] * e[i + 1] * e[i], tower.tau * e[i]));
    braid = std::max(braid, max_deviation(e[i + 1] * e[i] * e[i + 1], tower.tau * e[i + 1]));
  }
  report.add("tl_relation", within<S>(braid, tol), Deviation(braid),
             m < 2 ? "vacuous (m < 2)" : "tau = " + mode_text(tower.tau));

  const Complex tc = tower.t.to_complex();
  if (tower.t.is_real() && tc.real() > 0.0) {
    Mag herm = 0;
    for (const auto& g : e) herm = std::max(herm, max_deviation(g, g.adjoint()));
    report.add("hermitian", within<S>(herm, tol), Deviation(herm));
  }
  return report;
}

}  // namespace detail

/// Idempotency, far commutation and e_i e_{i+-1} e_i = tau e_i. Exact towers
/// must show zero deviation; floating towers pass within `tol` per entry.
inline Report verify_tl_relations(const AnyTower& tower, double tol = 1e-10) {
  return std::visit([&](const auto& tw) { return detail::verify_tower(tw, tol); }, tower);
}

namespace detail {

// Conjugating by the diagonal operator (x)_k diag(1, t^{k/2}) turns e_i into
// the same slot placement of [[1, t], [1, t]] / (1 + t) on span{|12>, |21>},
// which is rational whenever t is.
inline Matrix<Rational> gauged_projection(const Rational& t) {
  Matrix<Rational> m(4);
  const Rational s = 1 / (1 + t);
  m(1, 1) = s;
  m(1, 2) = t * s;
  m(2, 1) = s;
  m(2, 2) = t * s;
  return m;
}

class ExactSpan {
 public:
  // Adds v if independent; returns whether it was added.
  bool insert(std::map<std::size_t, Rational> v) {
    reduce(v);
    if (v.empty()) return false;
    const Rational pivot = v.begin()->second;
    for (auto& [k, x] : v) x /= pivot;
    const std::size_t key = v.begin()->first;
    rows_.emplace(key, std::move(v));
    return true;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  void reduce(std::map<std::size_t, Rational>& v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      const std::size_t key = it->first;
      const Rational coef = it->second;
      for (const auto& [k, x] : row->second) {
        auto& slot = v[k];
        slot -= coef * x;
        if (slot == 0) v.erase(k);
      }
      it = v.upper_bound(key);
    }
  }

  std::map<std::size_t, std::map<std::size_t, Rational>> rows_;
};

class FloatSpan {
 public:
  explicit FloatSpan(double rel_tol) : rel_tol_(rel_tol) {}

  bool insert(std::vector<Complex> v) {
    double norm0 = 0.0;
    for (const auto& x : v) norm0 += std::norm(x);
    norm0 = std::sqrt(norm0);
    if (norm0 == 0.0) return false;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : basis_) {
        Complex dot{0.0, 0.0};
        for (std::size_t i = 0; i < v.size(); ++i) dot += std::conj(q[i]) * v[i];
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= dot * q[i];
      }
    double norm = 0.0;
    for (const auto& x : v) norm += std::norm(x);
    norm = std::sqrt(norm);
    if (norm <= rel_tol_ * norm0) return false;
    for (auto& x : v) x /= norm;
    basis_.push_back(std::move(v));
    return true;
  }
  std::size_t rank() const { return basis_.size(); }

 private:
  double rel_tol_;
  std::vector<std::vector<Complex>> basis_;
};

template <typename S, typename Span>
std::size_t word_span_dimension(const std::vector<Matrix<S>>& gens, Span span) {
  auto flatten = [](const Matrix<S>& a) {
    if constexpr (ScalarTraits<S>::exact) {
      std::map<std::size_t, Rational> v;
      for (std::size_t i = 0; i < a.data().size(); ++i)
        if (a.data()[i] != 0) v.emplace(i, a.data()[i]);
      return v;
    } else {
      return a.data();
    }
  };
  const std::size_t dim = gens.front().dim();
  std::deque<Matrix<S>> frontier{Matrix<S>::identity(dim)};
  span.insert(flatten(frontier.front()));
  while (!frontier.empty()) {
    Matrix<S> w = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : gens) {
      Matrix<S> next = w * g;
      if (span.insert(flatten(next))) frontier.push_back(std::move(next));
    }
  }
  return span.rank();
}

}  // namespace detail

/// Dimension of the span of all words in {1, e_1, ..., e_m}, grown by right
/// multiplication until no new independent word appears. Exact for rational t.
inline std::size_t tl_algebra_dimension(const Scalar& t = Scalar(3), std::size_t m = 3) {
  require_admissible_t(t);
  if (m < 1) throw std::invalid_argument("tl_algebra_dimension needs m >= 1");
  if (m > 5) throw SizeCapExceeded("tl_algebra_dimension supports m <= 5");
  detail::tower_dimension(m);
  if (t.is_exact()) {
    const auto local = detail::gauged_projection(t.rational());
    std::vector<Matrix<Rational>> gens;
    for (std::size_t i = 1; i <= m; ++i) gens.push_back(detail::place_on_slots(local, i, m + 1));
    return detail::word_span_dimension(gens, detail::ExactSpan{});
  }
  const auto tower = std::get<TLTower<Complex>>(tl_generators(t, m));
  return detail::word_span_dimension(tower.generators, detail::FloatSpan{1e-9});
}

struct AuditResult {
  Scalar t;
  bool exact = false;
  Deviation printed_dev;
  Deviation corrected_dev;
  /// Largest diagonal entry of |e^2 - e| for the printed form.
  Deviation printed_diagonal_dev;
  bool printed_is_projection = false;
  bool corrected_is_projection = false;

  Report report() const {
    Report r;
    r.title = "e_t formula audit at t = " + t.to_string() + (exact ? " (exact)" : " (floating)");
    // The expected outcome is a nonzero deviation for the printed form.
    r.add("printed_formula_not_idempotent", !printed_is_projection, printed_dev,
          "||e^2 - e||_max, diagonal part " + deviation_text(printed_diagonal_dev));
    r.add("corrected_formula_idempotent", corrected_is_projection, corrected_dev, "||e^2 - e||_max");
    return r;
  }
};

/// Measures ||e^2 - e|| (max entry) for the audited diagonal-e11(x)e11 formula
/// and for the corrected projection.
inline AuditResult audit_printed_formula(const Scalar& t, double tol = 1e-10) {
  AuditResult result{t, exact_mode(t), Deviation(0.0), Deviation(0.0), Deviation(0.0), false, false};
  auto measure = [&](const AnyMatrix& any, Deviation& dev, Deviation& diag, bool& is_projection) {
    std::visit([&](const auto& e) {
      using S = std::decay_t<decltype(e(0, 0))>;
      const auto sq = e * e;
      const auto d = max_deviation(sq, e);
      typename Matrix<S>::Magnitude dd = 0;
      for (std::size_t i = 0; i < e.dim(); ++i) dd = std::max(dd, ScalarTraits<S>::abs(sq(i, i) - e(i, i)));
      dev = Deviation(d);
      diag = Deviation(dd);
      is_projection = detail::within<S>(d, tol);
    }, any);
  };
  Deviation unused;
  measure(printed_projection(t), result.printed_dev, result.printed_diagonal_dev, result.printed_is_projection);
  measure(jones_projection(t), result.corrected_dev, unused, result.corrected_is_projection);
  return result;
}

}  // namespace jones

#endif  // JONES_TEMPERLEY_LIEB_HPP
