#ifndef JONES_MATRIX_HPP
#define JONES_MATRIX_HPP

// Dense square matrices over exact rationals or complex doubles. Products skip
// zero entries, which keeps exact arithmetic on the (very sparse) tensor
// generators affordable.

#include <cstdlib>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "jones/errors.hpp"
#include "jones/scalar.hpp"

namespace jones {

template <typename S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  using Magnitude = Rational;
  static constexpr bool exact = true;
  static Rational zero() { return 0; }
  static Rational one() { return 1; }
  static bool is_zero(const Rational& x) { return x == 0; }
  static Rational conj(const Rational& x) { return x; }
  static Magnitude abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }
  static Complex to_complex(const Rational& x) { return {to_double(x), 0.0}; }
};

template <>
struct ScalarTraits<Complex> {
  using Magnitude = double;
  static constexpr bool exact = false;
  static Complex zero() { return {0.0, 0.0}; }
  static Complex one() { return {1.0, 0.0}; }
  static bool is_zero(const Complex& x) { return x == Complex(0.0, 0.0); }
  static Complex conj(const Complex& x) { return std::conj(x); }
  static Magnitude abs(const Complex& x) { return std::abs(x); }
  static Complex to_complex(const Complex& x) { return x; }
};

/// Largest dimension any matrix construction may allocate. Overridable with
/// the JONES_VERIFY_MAX_DIM environment variable.
inline std::size_t matrix_size_cap() {
  if (const char* env = std::getenv("JONES_VERIFY_MAX_DIM")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 256;
}

template <typename S>
class Matrix {
 public:
  using Traits = ScalarTraits<S>;
  using Magnitude = typename Traits::Magnitude;

  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim, Traits::zero()) {}

  static Matrix identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = Traits::one();
    return m;
  }

  std::size_t dim() const { return dim_; }
  S& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  S trace() const {
    S t = Traits::zero();
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  Matrix adjoint() const {
    Matrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) out(j, i) = Traits::conj((*this)(i, j));
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    a.require_dim(b);
    Matrix out(a.dim_);
    const std::size_t n = a.dim_;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        const S& aik = a(i, k);
        if (Traits::is_zero(aik)) continue;
        for (std::size_t j = 0; j < n; ++j) {
          const S& bkj = b(k, j);
          if (Traits::is_zero(bkj)) continue;
          out(i, j) += aik * bkj;
        }
      }
    }
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.require_dim(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.require_dim(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend Matrix operator*(const S& s, Matrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  /// Largest entrywise |a_ij - b_ij|.
  friend Magnitude max_deviation(const Matrix& a, const Matrix& b) {
    a.require_dim(b);
    Magnitude m = 0;
    for (std::size_t i = 0; i < a.data_.size(); ++i) {
      Magnitude d = Traits::abs(a.data_[i] - b.data_[i]);
      if (d > m) m = d;
    }
    return m;
  }

  const std::vector<S>& data() const { return data_; }

 private:
  void require_dim(const Matrix& other) const {
    if (dim_ != other.dim_) throw std::invalid_argument("matrix dimension mismatch");
  }

  std::size_t dim_ = 0;
  std::vector<S> data_;
};

/// Kronecker product a (x) b, with a acting on the leading tensor slot.
template <typename S>
Matrix<S> kron(const Matrix<S>& a, const Matrix<S>& b) {
  const std::size_t n = a.dim() * b.dim();
  if (n > matrix_size_cap())
    throw SizeCapExceeded("kron: dimension " + std::to_string(n) + " exceeds cap " +
                          std::to_string(matrix_size_cap()));
  Matrix<S> out(n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (ScalarTraits<S>::is_zero(a(i, j))) continue;
      for (std::size_t k = 0; k < b.dim(); ++k)
        for (std::size_t l = 0; l < b.dim(); ++l) out(i * b.dim() + k, j * b.dim() + l) = a(i, j) * b(k, l);
    }
  return out;
}

/// Matrix unit e_ij of M_2 (1-based indices).
template <typename S>
Matrix<S> matrix_unit(std::size_t i, std::size_t j) {
  Matrix<S> m(2);
  m(i - 1, j - 1) = ScalarTraits<S>::one();
  return m;
}

using AnyMatrix = std::variant<Matrix<Rational>, Matrix<Complex>>;

/// JSON array of rows of [re, im] pairs.
template <typename S>
nlohmann::json matrix_to_json(const Matrix<S>& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const Complex z = ScalarTraits<S>::to_complex(m(i, j));
      row.push_back({z.real(), z.imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Matrix<Complex> matrix_from_json(const nlohmann::json& j) {
  Matrix<Complex> m(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i].size() != j.size()) throw ParseError("matrix JSON is not square");
    for (std::size_t k = 0; k < j.size(); ++k) m(i, k) = {j[i][k].at(0).get<double>(), j[i][k].at(1).get<double>()};
  }
  return m;
}

}  // namespace jones

#endif  // JONES_MATRIX_HPP
