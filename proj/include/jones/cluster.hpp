#ifndef JONES_CLUSTER_HPP
#define JONES_CLUSTER_HPP

// Seeds and mutation for skew-symmetric cluster algebras, plus the rank-2
// recurrence x_{i-1} x_{i+1} = 1 + x_i^{b or c}. The two engines are kept
// separate so that they can be checked against each other.
//
// Directions are 1-based throughout, as in mutation paths written "1,2,1,...".

#include <cstdlib>
#include <deque>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "jones/errors.hpp"
#include "jones/laurent.hpp"

namespace jones {

using ExchangeMatrix = std::vector<std::vector<long>>;

inline bool is_skew_symmetric(const ExchangeMatrix& b) {
  const std::size_t n = b.size();
  for (const auto& row : b)
    if (row.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (b[i][j] != -b[j][i]) return false;
  return true;
}

/// A cluster of Laurent polynomials in the initial variables together with a
/// skew-symmetric exchange matrix.
class Seed {
 public:
  Seed(ExchangeMatrix matrix, std::vector<LaurentPoly> cluster)
      : matrix_(std::move(matrix)), cluster_(std::move(cluster)) {
    if (matrix_.empty()) throw std::invalid_argument("seed rank must be positive");
    if (!is_skew_symmetric(matrix_)) throw std::invalid_argument("exchange matrix is not skew-symmetric");
    if (cluster_.size() != matrix_.size())
      throw std::invalid_argument("cluster size does not match exchange matrix");
    for (const auto& x : cluster_) x.require_same_vars(cluster_.front());
  }

  /// The initial seed: cluster (x1, ..., xn) in its own variables.
  static Seed initial(ExchangeMatrix matrix) {
    const auto vars = LaurentPoly::standard_vars(matrix.size());
    std::vector<LaurentPoly> cluster;
    for (std::size_t i = 0; i < matrix.size(); ++i) cluster.push_back(LaurentPoly::variable(vars, i));
    return Seed(std::move(matrix), std::move(cluster));
  }

  std::size_t rank() const { return matrix_.size(); }
  const ExchangeMatrix& matrix() const { return matrix_; }
  const std::vector<LaurentPoly>& cluster() const { return cluster_; }
  /// 1-based cluster entry.
  const LaurentPoly& variable(std::size_t k) const { return cluster_.at(k - 1); }
  const std::vector<std::string>& vars() const { return cluster_.front().vars(); }

  friend bool operator==(const Seed& a, const Seed& b) {
    return a.matrix_ == b.matrix_ && a.cluster_ == b.cluster_;
  }

 private:
  ExchangeMatrix matrix_;
  std::vector<LaurentPoly> cluster_;
};

/// Matrix mutation in 1-based direction k.
inline ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, std::size_t k) {
  const std::size_t n = b.size();
  if (k < 1 || k > n) throw std::out_of_range("mutation direction out of range");
  const std::size_t kk = k - 1;
  ExchangeMatrix out = b;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == kk || j == kk) {
        out[i][j] = -b[i][j];
      } else {
        out[i][j] = b[i][j] + (std::labs(b[i][kk]) * b[kk][j] + b[i][kk] * std::labs(b[kk][j])) / 2;
      }
    }
  }
  return out;
}

/// Seed mutation in 1-based direction k. The new variable is obtained by exact
/// Laurent division, so a NotLaurent here is a genuine counterexample.
inline Seed mutate_seed(const Seed& s, std::size_t k) {
  const std::size_t n = s.rank();
  if (k < 1 || k > n) throw std::out_of_range("mutation direction " + std::to_string(k) + " out of range");
  const std::size_t kk = k - 1;
  const auto& b = s.matrix();
  const auto& x = s.cluster();
  LaurentPoly positive = LaurentPoly::constant(s.vars(), 1);
  LaurentPoly negative = positive;
  for (std::size_t i = 0; i < n; ++i) {
    if (b[i][kk] > 0) positive = positive * x[i].pow(static_cast<unsigned>(b[i][kk]));
    if (b[i][kk] < 0) negative = negative * x[i].pow(static_cast<unsigned>(-b[i][kk]));
  }
  std::vector<LaurentPoly> cluster = x;
  cluster[kk] = exact_div(positive + negative, x[kk]);
  return Seed(mutate_matrix(b, k), std::move(cluster));
}

struct Rank2Params {
  long b = 2;
  long c = 2;

  Rank2Params(long b_, long c_) : b(b_), c(c_) {
    if (b < 1 || c < 1) throw std::invalid_argument("rank-2 parameters must be positive");
  }
};

namespace detail {

// Exponent in the relation centred at x_i: b for odd i, c for even i.
inline unsigned rank2_exponent(const Rank2Params& p, long i) {
  return static_cast<unsigned>((i % 2 != 0) ? p.b : p.c);
}

inline std::vector<std::string> rank2_vars() { return LaurentPoly::standard_vars(2); }

}  // namespace detail

/// x_1, ..., x_count of the rank-2 cluster algebra A(b, c) in (x1, x2).
inline std::vector<LaurentPoly> rank2_sequence(const Rank2Params& p, std::size_t count) {
  if (count < 2) throw std::invalid_argument("rank2_sequence: count must be at least 2");
  const auto vars = detail::rank2_vars();
  const LaurentPoly one = LaurentPoly::constant(vars, 1);
  std::vector<LaurentPoly> xs{LaurentPoly::variable(vars, 0), LaurentPoly::variable(vars, 1)};
  for (std::size_t i = 2; i < count; ++i) {
    // xs[i - 1] is x_i; produce x_{i+1} from x_{i-1} x_{i+1} = 1 + x_i^e.
    const auto e = detail::rank2_exponent(p, static_cast<long>(i));
    xs.push_back(exact_div(one + xs[i - 1].pow(e), xs[i - 2]));
  }
  return xs;
}

/// Cluster variable x_index (any integer index) of A(b, c); indices <= 0 are
/// reached by running the recurrence backwards.
inline LaurentPoly rank2_variable(const Rank2Params& p, long index) {
  if (index >= 1) return rank2_sequence(p, static_cast<std::size_t>(std::max(2L, index))).at(index - 1);
  const auto vars = detail::rank2_vars();
  const LaurentPoly one = LaurentPoly::constant(vars, 1);
  LaurentPoly next = LaurentPoly::variable(vars, 1);  // x_{i+1}
  LaurentPoly cur = LaurentPoly::variable(vars, 0);   // x_i
  for (long i = 1; i > index; --i) {
    LaurentPoly prev = exact_div(one + cur.pow(detail::rank2_exponent(p, i)), next);
    next = std::move(cur);
    cur = std::move(prev);
  }
  return cur;
}

/// Mutations needed to reach x_index from the initial cluster (x1, x2).
inline long rank2_distance(long index) {
  if (index >= 3) return index - 2;
  if (index <= 0) return 1 - index;
  return 0;
}

struct LaurentStep {
  std::size_t step = 0;
  std::size_t direction = 0;
  bool laurent = true;
  bool skew_symmetric = true;
  bool positive_coefficients = true;
  std::int32_t max_abs_exponent = 0;
  std::size_t max_terms = 0;
  std::string new_variable;
  std::string error;
};

struct LaurentReport {
  std::vector<LaurentStep> steps;
  std::optional<Seed> final_seed;

  bool passed() const {
    for (const auto& s : steps)
      if (!s.laurent || !s.skew_symmetric) return false;
    return true;
  }
  bool all_positive() const {
    for (const auto& s : steps)
      if (!s.positive_coefficients) return false;
    return true;
  }
};

/// Applies the mutations of `path` in order and records, for each step, that
/// every cluster entry is Laurent in the initial variables together with
/// growth statistics. A NotLaurent stops the walk as a failing entry.
inline LaurentReport check_laurent_phenomenon(const Seed& start, const std::vector<std::size_t>& path) {
  for (auto k : path)
    if (k < 1 || k > start.rank()) throw std::out_of_range("path direction " + std::to_string(k) + " out of range");
  LaurentReport report;
  Seed current = start;
  for (std::size_t i = 0; i < path.size(); ++i) {
    LaurentStep step;
    step.step = i + 1;
    step.direction = path[i];
    try {
      current = mutate_seed(current, path[i]);
    } catch (const NotLaurent& e) {
      step.laurent = false;
      step.positive_coefficients = false;
      step.error = e.what();
      report.steps.push_back(std::move(step));
      report.final_seed = current;
      return report;
    }
    step.skew_symmetric = is_skew_symmetric(current.matrix());
    for (const auto& x : current.cluster()) {
      step.max_abs_exponent = std::max(step.max_abs_exponent, x.max_abs_exponent());
      step.max_terms = std::max(step.max_terms, x.num_terms());
      step.positive_coefficients = step.positive_coefficients && x.all_coefficients_positive();
    }
    step.new_variable = current.variable(path[i]).to_string();
    report.steps.push_back(std::move(step));
  }
  report.final_seed = current;
  return report;
}

/// Alternating path 1, 2, 1, 2, ... of the given length.
inline std::vector<std::size_t> alternating_path(std::size_t length) {
  std::vector<std::size_t> path;
  for (std::size_t i = 0; i < length; ++i) path.push_back(i % 2 + 1);
  return path;
}

struct ExplorationResult {
  std::size_t seeds_visited = 0;
  std::size_t distinct_variables = 0;
  std::size_t depth_reached = 0;
  bool truncated_by_budget = false;
};

/// Breadth-first walk over mutation sequences without immediate backtracking,
/// up to max_depth. Stops expanding a seed once any of its entries exceeds
/// term_budget terms.
inline ExplorationResult explore_seeds(const Seed& start, std::size_t max_depth, std::size_t term_budget) {
  struct Node {
    Seed seed;
    std::size_t depth;
    std::size_t last;
  };
  ExplorationResult result;
  std::set<std::string> variables;
  for (const auto& x : start.cluster()) variables.insert(x.to_string());
  std::deque<Node> queue{{start, 0, 0}};
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    ++result.seeds_visited;
    result.depth_reached = std::max(result.depth_reached, node.depth);
    if (node.depth == max_depth) continue;
    for (std::size_t k = 1; k <= node.seed.rank(); ++k) {
      if (k == node.last) continue;
      Seed next = mutate_seed(node.seed, k);
      const auto& fresh = next.variable(k);
      variables.insert(fresh.to_string());
      if (fresh.num_terms() > term_budget) {
        result.truncated_by_budget = true;
        continue;
      }
      queue.push_back({std::move(next), node.depth + 1, k});
    }
  }
  result.distinct_variables = variables.size();
  return result;
}

inline void to_json(nlohmann::json& j, const Seed& s) {
  nlohmann::json cluster = nlohmann::json::array();
  for (const auto& x : s.cluster()) cluster.push_back(x.to_string());
  j = {{"rank", s.rank()}, {"B", s.matrix()}, {"cluster", cluster}};
}

/// Reads {"rank": n, "B": [[int]], "cluster": [laurent-text]}; cluster entries
/// are parsed over x1..xn and default to the initial cluster when absent.
inline Seed seed_from_json(const nlohmann::json& j) {
  const auto rank = j.at("rank").get<std::size_t>();
  auto matrix = j.at("B").get<ExchangeMatrix>();
  if (matrix.size() != rank) throw ParseError("seed: B does not have `rank` rows");
  if (!j.contains("cluster")) return Seed::initial(std::move(matrix));
  const auto vars = LaurentPoly::standard_vars(rank);
  std::vector<LaurentPoly> cluster;
  for (const auto& text : j.at("cluster")) cluster.push_back(parse_laurent(text.get<std::string>(), vars));
  return Seed(std::move(matrix), std::move(cluster));
}

inline void to_json(nlohmann::json& j, const LaurentStep& s) {
  j = {{"step", s.step},
       {"direction", s.direction},
       {"laurent", s.laurent},
       {"skew_symmetric", s.skew_symmetric},
       {"positive_coefficients", s.positive_coefficients},
       {"max_abs_exponent", s.max_abs_exponent},
       {"max_terms", s.max_terms},
       {"new_variable", s.new_variable}};
  if (!s.error.empty()) j["error"] = s.error;
}

inline void from_json(const nlohmann::json& j, LaurentStep& s) {
  j.at("step").get_to(s.step);
  j.at("direction").get_to(s.direction);
  j.at("laurent").get_to(s.laurent);
  j.at("skew_symmetric").get_to(s.skew_symmetric);
  j.at("positive_coefficients").get_to(s.positive_coefficients);
  j.at("max_abs_exponent").get_to(s.max_abs_exponent);
  j.at("max_terms").get_to(s.max_terms);
  j.at("new_variable").get_to(s.new_variable);
  s.error = j.value("error", std::string{});
}

inline void to_json(nlohmann::json& j, const LaurentReport& r) {
  j = {{"steps", r.steps}, {"pass", r.passed()}, {"all_positive", r.all_positive()}};
  if (r.final_seed) j["final_seed"] = *r.final_seed;
}

/// Plain-text table, one row per step.
inline std::string render_table(const LaurentReport& r) {
  std::ostringstream os;
  os << "step  dir  laurent  skew  positive  max|exp|  max_terms\n";
  for (const auto& s : r.steps) {
    os.width(4);
    os << s.step << "  ";
    os.width(3);
    os << s.direction << "  " << (s.laurent ? "yes    " : "NO     ") << "  "
       << (s.skew_symmetric ? "yes " : "NO  ") << "  " << (s.positive_coefficients ? "yes     " : "no      ")
       << "  ";
    os.width(8);
    os << s.max_abs_exponent << "  ";
    os.width(9);
    os << s.max_terms << "\n";
    if (!s.error.empty()) os << "      error: " << s.error << "\n";
  }
  os << (r.passed() ? "PASS" : "FAIL") << ": " << r.steps.size() << " step(s)\n";
  return os.str();
}

}  // namespace jones

#endif  // JONES_CLUSTER_HPP
