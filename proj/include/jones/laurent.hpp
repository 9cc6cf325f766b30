#ifndef JONES_LAURENT_HPP
#define JONES_LAURENT_HPP

// Multivariate Laurent polynomials over Z: the ring Z[x1^{+-1}, ..., xn^{+-1}].
//
// Terms are kept in a map ordered graded-lexicographically on exponent
// vectors, so equality is structural and printing is deterministic. The
// leading term is the last entry of the map.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "jones/errors.hpp"
#include "jones/scalar.hpp"

namespace jones {

using Exponent = std::vector<std::int32_t>;

/// Graded lexicographic order: total degree first, then lex with x1 > x2 > ...
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const {
    const long da = std::accumulate(a.begin(), a.end(), 0L);
    const long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

class LaurentPoly {
 public:
  using TermMap = std::map<Exponent, Integer, GrlexLess>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  /// Variables x1..xn.
  static std::vector<std::string> standard_vars(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
    return out;
  }

  static LaurentPoly constant(std::vector<std::string> vars, const Integer& c) {
    LaurentPoly p(std::move(vars));
    p.add_term(Exponent(p.vars_.size(), 0), c);
    return p;
  }

  static LaurentPoly monomial(std::vector<std::string> vars, Exponent exp, const Integer& c = 1) {
    LaurentPoly p(std::move(vars));
    if (exp.size() != p.vars_.size())
      throw std::invalid_argument("monomial: exponent length does not match variable count");
    p.add_term(std::move(exp), c);
    return p;
  }

  /// The variable with 0-based position `index`.
  static LaurentPoly variable(std::vector<std::string> vars, std::size_t index) {
    if (index >= vars.size()) throw std::out_of_range("variable index out of range");
    Exponent e(vars.size(), 0);
    e[index] = 1;
    return monomial(std::move(vars), std::move(e));
  }

  static LaurentPoly from_terms(std::vector<std::string> vars,
                                const std::vector<std::pair<Exponent, Integer>>& terms) {
    LaurentPoly p(std::move(vars));
    for (const auto& [e, c] : terms) {
      if (e.size() != p.vars_.size())
        throw std::invalid_argument("from_terms: exponent length does not match variable count");
      p.add_term(e, c);
    }
    return p;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of a monomial (0 if absent).
  Integer coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  std::pair<Exponent, Integer> leading_term() const {
    if (is_zero()) throw std::logic_error("leading_term of zero polynomial");
    return *terms_.rbegin();
  }

  /// Componentwise minimum exponent over all terms (zeros for the zero polynomial).
  Exponent min_exponents() const {
    Exponent m(vars_.size(), 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
      first = false;
    }
    return m;
  }

  std::int32_t max_abs_exponent() const {
    std::int32_t m = 0;
    for (const auto& [e, c] : terms_)
      for (auto v : e) m = std::max(m, v < 0 ? -v : v);
    return m;
  }

  bool all_coefficients_positive() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
  }

  /// True when every exponent is nonnegative.
  bool is_polynomial() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) {
      return std::all_of(t.first.begin(), t.first.end(), [](auto v) { return v >= 0; });
    });
  }

  /// Multiplication by the monomial x^shift.
  LaurentPoly shifted(const Exponent& shift) const {
    require_arity(shift.size());
    LaurentPoly out(vars_);
    for (const auto& [e, c] : terms_) {
      Exponent s = e;
      for (std::size_t i = 0; i < s.size(); ++i) s[i] += shift[i];
      out.terms_.emplace(std::move(s), c);
    }
    return out;
  }

  LaurentPoly pow(unsigned e) const {
    LaurentPoly result = constant(vars_, 1);
    LaurentPoly base = *this;
    while (e > 0) {
      if (e & 1U) result = result * base;
      e >>= 1U;
      if (e > 0) base = base * base;
    }
    return result;
  }

  LaurentPoly operator-() const {
    LaurentPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    a.require_same_vars(b);
    LaurentPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
  }

  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.require_same_vars(b);
    LaurentPoly out(a.vars_);
    Exponent e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  friend LaurentPoly operator*(const Integer& k, const LaurentPoly& a) {
    LaurentPoly out(a.vars_);
    if (k == 0) return out;
    for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, k * c);
    return out;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  void require_same_vars(const LaurentPoly& other) const {
    if (vars_ != other.vars_) throw std::invalid_argument("Laurent polynomials over different variable lists");
  }

  /// `c*x1^a1*...*xn^an` terms, leading term first, joined by " + " / " - ".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      const bool negative = c < 0;
      const Integer magnitude = negative ? Integer(-c) : c;
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += vars_[i];
        if (e[i] != 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty()) {
        out += magnitude.str();
      } else if (magnitude == 1) {
        out += mono;
      } else {
        out += magnitude.str() + "*" + mono;
      }
    }
    return out;
  }

 private:
  void add_term(const Exponent& e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void require_arity(std::size_t n) const {
    if (n != vars_.size()) throw std::invalid_argument("exponent length does not match variable count");
  }

  std::vector<std::string> vars_;
  TermMap terms_;
};

/// The exact quotient a / b in the Laurent ring; throws NotLaurent when none exists.
///
/// Both operands are shifted by monomials so that every variable has minimum
/// exponent zero. A Laurent quotient of a by b exists iff the shifted divisor
/// divides the shifted dividend in Z[x], so ordinary leading-term division
/// (which terminates, grlex being a well-order on N^n) decides it.
inline LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  a.require_same_vars(b);
  if (b.is_zero()) throw std::domain_error("exact_div: division by the zero polynomial");
  if (a.is_zero()) return a;

  const Exponent amin = a.min_exponents();
  const Exponent bmin = b.min_exponents();
  Exponent neg_amin = amin;
  Exponent neg_bmin = bmin;
  for (auto& v : neg_amin) v = -v;
  for (auto& v : neg_bmin) v = -v;

  LaurentPoly remainder = a.shifted(neg_amin);
  const LaurentPoly divisor = b.shifted(neg_bmin);
  const auto [lead_exp, lead_coef] = divisor.leading_term();

  std::vector<std::pair<Exponent, Integer>> quotient_terms;
  while (!remainder.is_zero()) {
    const auto [rexp, rcoef] = remainder.leading_term();
    Exponent qexp(rexp.size());
    for (std::size_t i = 0; i < rexp.size(); ++i) {
      qexp[i] = rexp[i] - lead_exp[i];
      if (qexp[i] < 0)
        throw NotLaurent("(" + a.to_string() + ") / (" + b.to_string() +
                         ") is not a Laurent polynomial: leading monomial not divisible");
    }
    Integer qcoef;
    Integer rem;
    boost::multiprecision::divide_qr(rcoef, lead_coef, qcoef, rem);
    if (rem != 0)
      throw NotLaurent("(" + a.to_string() + ") / (" + b.to_string() +
                       ") is not a Laurent polynomial: coefficient not divisible");
    const LaurentPoly step = LaurentPoly::monomial(a.vars(), qexp, qcoef);
    remainder = remainder - step * divisor;
    quotient_terms.emplace_back(std::move(qexp), std::move(qcoef));
  }

  Exponent back(amin.size());
  for (std::size_t i = 0; i < back.size(); ++i) back[i] = amin[i] - bmin[i];
  return LaurentPoly::from_terms(a.vars(), quotient_terms).shifted(back);
}

/// Assignment of values to variable names.
using Point = std::map<std::string, Scalar>;

/// Evaluates at a point. Exact when every used value is rational.
inline Scalar evaluate(const LaurentPoly& p, const Point& point) {
  std::vector<Scalar> values;
  values.reserve(p.vars().size());
  for (const auto& v : p.vars()) {
    auto it = point.find(v);
    if (it == point.end()) throw std::invalid_argument("evaluate: no value assigned to " + v);
    values.push_back(it->second);
  }
  Scalar total(0);
  bool exact = std::all_of(values.begin(), values.end(), [](const Scalar& s) { return s.is_exact(); });
  if (!exact) total = Scalar(Complex(0.0, 0.0));
  for (const auto& [e, c] : p.terms()) {
    Scalar term{Rational(c)};
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (e[i] < 0 && values[i].is_zero())
        throw std::domain_error("evaluate: " + p.vars()[i] + " = 0 under a negative exponent");
      term = term * values[i].pow(e[i]);
    }
    total = total + term;
  }
  return total;
}

namespace detail {

class LaurentParser {
 public:
  LaurentParser(std::string_view text, const std::vector<std::string>& vars)
      : text_(text), vars_(vars) {}

  LaurentPoly parse() {
    LaurentPoly result(vars_);
    skip_ws();
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = get() == '-';
    result = result + signed_term(negative);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      const char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      result = result + signed_term(op == '-');
    }
    return result;
  }

 private:
  LaurentPoly signed_term(bool negative) {
    Integer coef = negative ? -1 : 1;
    Exponent exp(vars_.size(), 0);
    factor(coef, exp);
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      get();
      factor(coef, exp);
    }
    return LaurentPoly::monomial(vars_, exp, coef);
  }

  void factor(Integer& coef, Exponent& exp) {
    skip_ws();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef *= Integer(digits());
      return;
    }
    std::string name;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
      name += get();
    if (name.empty()) fail("expected a coefficient or variable");
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) fail("unknown variable '" + name + "'");
    long power = 1;
    skip_ws();
    if (peek() == '^') {
      get();
      skip_ws();
      const bool paren = peek() == '(';
      if (paren) get();
      skip_ws();
      bool neg = false;
      if (peek() == '-' || peek() == '+') neg = get() == '-';
      const std::string d = digits();
      power = std::stol(d);
      if (neg) power = -power;
      if (paren) {
        skip_ws();
        if (get() != ')') fail("expected ')'");
      }
    }
    exp[static_cast<std::size_t>(it - vars_.begin())] += static_cast<std::int32_t>(power);
  }

  std::string digits() {
    std::string d;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) d += get();
    if (d.empty()) fail("expected digits");
    return d;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() {
    if (at_end()) fail("unexpected end of input");
    return text_[pos_++];
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("Laurent polynomial '" + std::string(text_) + "' at offset " +
                     std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the text form produced by LaurentPoly::to_string (and looser
/// variants: repeated factors, `x^(-2)`, whitespace anywhere).
inline LaurentPoly parse_laurent(std::string_view text, const std::vector<std::string>& vars) {
  return detail::LaurentParser(text, vars).parse();
}

inline void to_json(nlohmann::json& j, const LaurentPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back({{"exp", it->first}, {"coef", it->second.str()}});
  j = {{"vars", p.vars()}, {"terms", terms}};
}

inline void from_json(const nlohmann::json& j, LaurentPoly& p) {
  const auto vars = j.at("vars").get<std::vector<std::string>>();
  std::vector<std::pair<Exponent, Integer>> terms;
  for (const auto& t : j.at("terms")) {
    auto e = t.at("exp").get<Exponent>();
    if (e.size() != vars.size()) throw ParseError("term exponent length does not match vars");
    Integer c;
    try {
      c = Integer(t.at("coef").get<std::string>());
    } catch (const std::runtime_error&) {
      throw ParseError("bad coefficient " + t.at("coef").dump());
    }
    terms.emplace_back(std::move(e), std::move(c));
  }
  p = LaurentPoly::from_terms(vars, terms);
}

}  // namespace jones

#endif  // JONES_LAURENT_HPP
