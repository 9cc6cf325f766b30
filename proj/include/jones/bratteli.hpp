#ifndef JONES_BRATTELI_HPP
#define JONES_BRATTELI_HPP

// Finite truncations of Bratteli diagrams: the Pascal triangle of the GICAR
// algebra, the doubling diagram of M_{2^inf}, and the diagonal Powers unitaries
// exp(i diag(1, lambda))^{(x) m}.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "jones/matrix.hpp"
#include "jones/scalar.hpp"

namespace jones {

struct BratteliEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  unsigned multiplicity = 1;
  friend bool operator==(const BratteliEdge&, const BratteliEdge&) = default;
};

/// levels[n][k] is the dimension of vertex k at level n; edges[n] connects
/// level n to level n + 1.
struct BratteliDiagram {
  std::vector<std::vector<Integer>> levels;
  std::vector<std::vector<BratteliEdge>> edges;

  std::size_t depth() const { return levels.empty() ? 0 : levels.size() - 1; }

  /// Level 0 is a single vertex of dimension 1 and each vertex dimension is
  /// the multiplicity-weighted sum over its parents.
  bool well_formed() const {
    if (levels.empty() || levels[0] != std::vector<Integer>{1}) return false;
    if (edges.size() != depth()) return false;
    for (std::size_t n = 0; n < depth(); ++n) {
      std::vector<Integer> sum(levels[n + 1].size(), 0);
      for (const auto& e : edges[n]) {
        if (e.from >= levels[n].size() || e.to >= sum.size()) return false;
        sum[e.to] += e.multiplicity * levels[n][e.from];
      }
      if (sum != levels[n + 1]) return false;
      for (const auto& d : levels[n + 1])
        if (d <= 0) return false;
    }
    return true;
  }

  friend bool operator==(const BratteliDiagram&, const BratteliDiagram&) = default;
};

constexpr std::size_t kMaxBratteliLevels = 64;

inline void require_levels(std::size_t levels) {
  if (levels > kMaxBratteliLevels)
    throw SizeCapExceeded("Bratteli diagrams are generated up to level " + std::to_string(kMaxBratteliLevels));
}

/// w_j = sum_i mult(i -> j) v_i from level n to level n + 1.
inline std::vector<Integer> push_dimension_vector(const BratteliDiagram& d, std::size_t level,
                                                  const std::vector<Integer>& v) {
  if (level >= d.depth()) throw std::out_of_range("push_dimension_vector: no edges leave level " + std::to_string(level));
  if (v.size() != d.levels[level].size())
    throw std::invalid_argument("push_dimension_vector: vector length " + std::to_string(v.size()) +
                                " does not match level size " + std::to_string(d.levels[level].size()));
  std::vector<Integer> w(d.levels[level + 1].size(), 0);
  for (const auto& e : d.edges[level]) w[e.to] += e.multiplicity * v[e.from];
  return w;
}

/// Pascal triangle: vertex (n, k) of dimension C(n, k), edges (n,k) -> (n+1,k), (n+1,k+1).
inline BratteliDiagram gicar_diagram(std::size_t levels) {
  require_levels(levels);
  BratteliDiagram d;
  d.levels.push_back({1});
  for (std::size_t n = 0; n < levels; ++n) {
    std::vector<BratteliEdge> edges;
    for (std::size_t k = 0; k <= n; ++k) {
      edges.push_back({k, k, 1});
      edges.push_back({k, k + 1, 1});
    }
    d.edges.push_back(std::move(edges));
    std::vector<Integer> next(n + 2, 0);
    for (const auto& e : d.edges.back()) next[e.to] += e.multiplicity * d.levels[n][e.from];
    d.levels.push_back(std::move(next));
  }
  return d;
}

/// One vertex per level, dimension 2^n, a double edge between levels.
inline BratteliDiagram car_diagram(std::size_t levels) {
  require_levels(levels);
  BratteliDiagram d;
  d.levels.push_back({1});
  for (std::size_t n = 0; n < levels; ++n) {
    d.edges.push_back({{0, 0, 2}});
    d.levels.push_back({2 * d.levels[n][0]});
  }
  return d;
}

/// Dimension count for the unital inclusion at level n: the Pascal level sums
/// to the CAR level dimension, sum_k C(n, k) = 2^n.
inline bool embedding_dimension_check(std::size_t n) {
  require_levels(n);
  const auto gicar = gicar_diagram(n);
  const auto car = car_diagram(n);
  Integer total = 0;
  for (const auto& dim : gicar.levels[n]) total += dim;
  return total == car.levels[n][0];
}

struct PowersSpec {
  double lambda = 0.5;
  std::size_t m = 1;

  PowersSpec(double lambda_, std::size_t m_) : lambda(lambda_), m(m_) {
    if (!(lambda > 0.0 && lambda < 1.0)) throw std::invalid_argument("Powers product needs 0 < lambda < 1");
    if (m < 1) throw std::invalid_argument("Powers product needs m >= 1");
  }
};

constexpr std::size_t kMaxPowersLevel = 7;

/// exp(i diag(1, lambda)) tensored m times: diagonal with phase
/// (#zeros + lambda * #ones) on the basis vector with that bit pattern.
inline Matrix<Complex> powers_unitary(const PowersSpec& p) {
  if (p.m > kMaxPowersLevel || (std::size_t{1} << p.m) > matrix_size_cap())
    throw SizeCapExceeded("powers_unitary supports m <= " + std::to_string(kMaxPowersLevel));
  Matrix<Complex> local(2);
  local(0, 0) = std::exp(Complex(0.0, 1.0));
  local(1, 1) = std::exp(Complex(0.0, p.lambda));
  Matrix<Complex> u = local;
  for (std::size_t i = 1; i < p.m; ++i) u = kron(u, local);
  return u;
}

/// a -> U a U*.
inline Matrix<Complex> powers_conjugate(const Matrix<Complex>& u, const Matrix<Complex>& a) {
  return u * a * u.adjoint();
}

namespace detail {
// Vertices are numbered globally, level by level: level n starts at offsets[n].
inline std::vector<std::size_t> vertex_offsets(const BratteliDiagram& d) {
  std::vector<std::size_t> offsets{0};
  for (const auto& level : d.levels) offsets.push_back(offsets.back() + level.size());
  return offsets;
}
}  // namespace detail

/// {"levels": [[dims]], "edges": [[from, to, mult]]} with global vertex ids.
/// Dimensions that do not fit in 64 bits are written as decimal strings.
inline void to_json(nlohmann::json& j, const BratteliDiagram& d) {
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& level : d.levels) {
    nlohmann::json dims = nlohmann::json::array();
    for (const auto& x : level) {
      if (x <= std::numeric_limits<std::uint64_t>::max()) dims.push_back(x.convert_to<std::uint64_t>());
      else dims.push_back(x.str());
    }
    levels.push_back(std::move(dims));
  }
  const auto offsets = detail::vertex_offsets(d);
  nlohmann::json edges = nlohmann::json::array();
  for (std::size_t n = 0; n < d.edges.size(); ++n)
    for (const auto& e : d.edges[n]) edges.push_back({offsets[n] + e.from, offsets[n + 1] + e.to, e.multiplicity});
  j = {{"levels", levels}, {"edges", edges}};
}

inline void from_json(const nlohmann::json& j, BratteliDiagram& d) {
  d = {};
  for (const auto& level : j.at("levels")) {
    std::vector<Integer> dims;
    for (const auto& x : level)
      dims.push_back(x.is_string() ? Integer(x.get<std::string>()) : Integer(x.get<std::uint64_t>()));
    d.levels.push_back(std::move(dims));
  }
  d.edges.assign(d.depth(), {});
  const auto offsets = detail::vertex_offsets(d);
  auto locate = [&](std::size_t id) {
    const auto it = std::upper_bound(offsets.begin(), offsets.end(), id);
    if (it == offsets.begin() || it == offsets.end()) throw ParseError("vertex id out of range");
    const auto level = static_cast<std::size_t>(it - offsets.begin()) - 1;
    return std::make_pair(level, id - offsets[level]);
  };
  for (const auto& e : j.at("edges")) {
    const auto [from_level, from] = locate(e.at(0).get<std::size_t>());
    const auto [to_level, to] = locate(e.at(1).get<std::size_t>());
    if (to_level != from_level + 1 || from_level >= d.edges.size())
      throw ParseError("edge does not join consecutive levels");
    d.edges[from_level].push_back({from, to, e.at(2).get<unsigned>()});
  }
}

/// Graphviz rendering, one rank per level.
inline std::string to_dot(const BratteliDiagram& d, const std::string& name = "bratteli") {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=TB;\n";
  for (std::size_t n = 0; n < d.levels.size(); ++n) {
    os << "  { rank=same;";
    for (std::size_t k = 0; k < d.levels[n].size(); ++k)
      os << " v" << n << "_" << k << " [label=\"" << d.levels[n][k].str() << "\"];";
    os << " }\n";
  }
  for (std::size_t n = 0; n < d.edges.size(); ++n)
    for (const auto& e : d.edges[n]) {
      os << "  v" << n << "_" << e.from << " -> v" << n + 1 << "_" << e.to;
      if (e.multiplicity > 1) os << " [label=\"" << e.multiplicity << "\"]";
      os << ";\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace jones

#endif  // JONES_BRATTELI_HPP
