#ifndef JONES_SPECTRUM_HPP
#define JONES_SPECTRUM_HPP

// Index values (1 + t)^2 / t, the roots of t^n + t^{-n} = 2, and the admissible
// spectrum {4 cos^2(pi/n) : n >= 3} together with the branch [4, infinity).

#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "jones/errors.hpp"
#include "jones/scalar.hpp"

namespace jones {

/// Where an index value comes from: a root of unity e^{2 pi i/n}, the value
/// t = 1 joining the two branches, or a real t > 1.
struct Origin {
  enum class Kind { discrete, boundary, continuous };
  Kind kind = Kind::continuous;
  unsigned n = 0;

  static Origin discrete(unsigned n) { return {Kind::discrete, n}; }
  static Origin boundary() { return {Kind::boundary, 1}; }
  static Origin continuous() { return {Kind::continuous, 0}; }

  std::string name() const {
    switch (kind) {
      case Kind::discrete: return "discrete";
      case Kind::boundary: return "boundary";
      case Kind::continuous: break;
    }
    return "continuous";
  }
  friend bool operator==(const Origin&, const Origin&) = default;
};

struct IndexValue {
  Scalar t;
  Scalar index;
  Scalar tau;
  Origin origin;

  double real_index() const { return index.to_complex().real(); }
};

/// 4 cos^2(pi / n).
inline double discrete_index(unsigned n) {
  const double c = std::cos(std::numbers::pi / static_cast<double>(n));
  return 4.0 * c * c;
}

/// All n solutions of t^n + t^{-n} = 2, i.e. (t^n - 1)^2 = 0: the n-th roots
/// of unity e^{2 pi i k/n}, k = 0..n-1 (+1 and -1 exact).
inline std::vector<Scalar> solve_chebyshev_unit(unsigned n) {
  if (n < 1) throw std::invalid_argument("solve_chebyshev_unit: n must be positive");
  std::vector<Scalar> roots;
  roots.reserve(n);
  for (unsigned k = 0; k < n; ++k) roots.push_back(Scalar::root_of_unity(k, n));
  return roots;
}

/// |t^n + t^{-n} - 2|.
inline double chebyshev_unit_residual(const Scalar& t, unsigned n) {
  const Complex z = t.to_complex();
  const Complex zn = std::pow(z, static_cast<int>(n));
  return std::abs(zn + 1.0 / zn - 2.0);
}

/// (1 + t)^2 / t and its reciprocal. t = -1 raises SingularTrace, t = 0 is a
/// domain error. On the unit circle the index is 2 + 2 Re t; a non-real result
/// there is a logic error.
inline IndexValue index_of(const Scalar& t, Origin origin = Origin::continuous()) {
  if (t.is_zero()) throw std::domain_error("index_of: t = 0");
  if (t.equals(Rational(-1))) throw SingularTrace("index_of: t = -1 makes t/(1+t)^2 singular");
  const Scalar s = Scalar(1) + t;
  if (s.is_zero()) throw SingularTrace("index_of: t = -1 makes t/(1+t)^2 singular");
  IndexValue v{t, s * s / t, t / (s * s), origin};
  if (!t.is_exact()) {
    const Complex z = t.to_complex();
    if (std::abs(std::abs(z) - 1.0) <= 1e-12) {
      const Complex idx = v.index.to_complex();
      if (std::abs(idx.imag()) > 1e-12 * std::max(1.0, std::abs(idx)))
        throw std::logic_error("index_of: non-real index on the unit circle");
    }
  }
  return v;
}

struct SpectrumReport {
  std::vector<IndexValue> discrete;
  IndexValue boundary;
  std::vector<IndexValue> continuous_samples;

  /// Discrete values strictly increase, stay below 4, and match 4cos^2(pi/n) to 1e-12.
  bool consistent() const {
    double previous = -1.0;
    for (const auto& v : discrete) {
      const double x = v.real_index();
      if (!(x > previous) || !(x < 4.0)) return false;
      if (std::abs(x - discrete_index(v.origin.n)) > 1e-12) return false;
      if (std::abs(v.index.to_complex().imag()) > 1e-12) return false;
      previous = x;
    }
    for (const auto& v : continuous_samples)
      if (!(v.real_index() > 4.0)) return false;
    return true;
  }
};

inline const std::vector<Scalar>& default_continuous_samples() {
  static const std::vector<Scalar> samples{Scalar(Rational(3, 2)), Scalar(2), Scalar(10)};
  return samples;
}

/// Discrete spectrum for 3 <= n <= n_max at t = e^{2 pi i/n}, the boundary
/// value 4 at t = 1, and index values at sampled real t > 1.
inline SpectrumReport jones_spectrum(unsigned n_max,
                                     const std::vector<Scalar>& samples = default_continuous_samples()) {
  if (n_max < 3) throw std::invalid_argument("jones_spectrum: n_max must be at least 3");
  SpectrumReport r{{}, index_of(Scalar(1), Origin::boundary()), {}};
  for (unsigned n = 3; n <= n_max; ++n) r.discrete.push_back(index_of(Scalar::root_of_unity(1, n), Origin::discrete(n)));
  for (const auto& t : samples) {
    if (!t.is_real() || !(t.to_complex().real() > 1.0))
      throw std::invalid_argument("continuous samples need real t > 1");
    r.continuous_samples.push_back(index_of(t, Origin::continuous()));
  }
  return r;
}

namespace detail {

inline nlohmann::json scalar_json(const Scalar& s) {
  if (s.is_exact()) return {{"exact", s.rational().str()}, {"value", to_double(s.rational())}};
  const Complex z = s.to_complex();
  return nlohmann::json::array({z.real(), z.imag()});
}

inline Scalar scalar_from_json(const nlohmann::json& j) {
  if (j.is_object()) return Scalar(Rational(j.at("exact").get<std::string>()));
  return Scalar::complex(j.at(0).get<double>(), j.at(1).get<double>());
}

}  // namespace detail

inline void to_json(nlohmann::json& j, const IndexValue& v) {
  j = {{"t", detail::scalar_json(v.t)},
       {"index", v.real_index()},
       {"index_exact", v.index.is_exact() ? nlohmann::json(v.index.rational().str()) : nlohmann::json(nullptr)},
       {"tau", v.tau.to_complex().real()},
       {"origin", v.origin.name()}};
  if (v.origin.kind != Origin::Kind::continuous) j["n"] = v.origin.n;
}

inline void from_json(const nlohmann::json& j, IndexValue& v) {
  v.t = detail::scalar_from_json(j.at("t"));
  const auto& exact = j.at("index_exact");
  v.index = exact.is_null() ? Scalar::complex(j.at("index").get<double>(), 0.0)
                            : Scalar(Rational(exact.get<std::string>()));
  v.tau = exact.is_null() ? Scalar::complex(j.at("tau").get<double>(), 0.0)
                          : Scalar(Rational(1) / v.index.rational());
  const auto origin = j.at("origin").get<std::string>();
  if (origin == "discrete") v.origin = Origin::discrete(j.at("n").get<unsigned>());
  else if (origin == "boundary") v.origin = Origin::boundary();
  else if (origin == "continuous") v.origin = Origin::continuous();
  else throw ParseError("unknown origin '" + origin + "'");
}

inline void to_json(nlohmann::json& j, const SpectrumReport& r) {
  j = {{"discrete", r.discrete},
       {"boundary", r.boundary},
       {"continuous", {{"interval", nlohmann::json::array({4, nullptr})}, {"samples", r.continuous_samples}}},
       {"consistent", r.consistent()}};
}

inline void from_json(const nlohmann::json& j, SpectrumReport& r) {
  j.at("discrete").get_to(r.discrete);
  j.at("boundary").get_to(r.boundary);
  j.at("continuous").at("samples").get_to(r.continuous_samples);
}

/// CSV with header n,t_re,t_im,index; continuous samples leave n empty.
inline std::string render_csv(const SpectrumReport& r) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "n,t_re,t_im,index\n";
  auto row = [&](const IndexValue& v) {
    const Complex t = v.t.to_complex();
    if (v.origin.kind != Origin::Kind::continuous) os << v.origin.n;
    os << "," << t.real() << "," << t.imag() << "," << v.real_index() << "\n";
  };
  for (const auto& v : r.discrete) row(v);
  row(r.boundary);
  for (const auto& v : r.continuous_samples) row(v);
  return os.str();
}

/// Aligned table, 9 significant digits.
inline std::string render_table(const SpectrumReport& r) {
  std::ostringstream os;
  os << std::setprecision(9);
  os << std::left << std::setw(12) << "origin" << std::right << std::setw(6) << "n" << std::setw(18) << "t_re"
     << std::setw(18) << "t_im" << std::setw(18) << "index" << "\n";
  auto row = [&](const IndexValue& v) {
    const Complex t = v.t.to_complex();
    os << std::left << std::setw(12) << v.origin.name() << std::right << std::setw(6)
       << (v.origin.kind == Origin::Kind::continuous ? std::string("-") : std::to_string(v.origin.n))
       << std::setw(18) << t.real() << std::setw(18) << t.imag() << std::setw(18) << v.real_index() << "\n";
  };
  for (const auto& v : r.discrete) row(v);
  row(r.boundary);
  for (const auto& v : r.continuous_samples) row(v);
  os << "continuous branch: [4, inf) from real t > 1\n";
  return os.str();
}

}  // namespace jones

#endif  // JONES_SPECTRUM_HPP
