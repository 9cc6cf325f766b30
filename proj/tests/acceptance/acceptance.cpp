// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance                 all criteria
//   acceptance --criterion 4   a single criterion
//
// Exit status is 0 only when every selected criterion passes.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "jones/commands.hpp"
#include "oracles.hpp"

using namespace jones;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double time_limit;  // seconds, 0 = none
  std::function<Outcome()> body;
};

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(3) << x;
  return os.str();
}

Outcome spectrum_reproduction() {
  Outcome o;
  const auto r = jones_spectrum(64);
  double worst = 0.0;
  double previous = -1.0;
  bool increasing = true;
  bool below_four = true;
  for (const auto& v : r.discrete) {
    const double c = std::cos(std::numbers::pi / v.origin.n);
    worst = std::max({worst, std::abs(v.real_index() - 4 * c * c), std::abs(v.index.to_complex().imag())});
    increasing = increasing && v.real_index() > previous;
    below_four = below_four && v.real_index() < 4.0;
    previous = v.real_index();
  }
  o.require(r.discrete.size() == 62, "expected 62 discrete values");
  o.require(worst <= 1e-12, "max |index - 4cos^2(pi/n)| = " + fmt(worst));
  o.require(increasing, "not strictly increasing");
  o.require(below_four, "value >= 4");
  for (const auto& v : r.continuous_samples) o.require(v.real_index() > 4.0, "continuous sample <= 4");
  o.detail = o.pass ? "n = 3..64, max error " + fmt(worst) : o.detail;
  return o;
}

Outcome temperley_lieb_relations() {
  Outcome o;
  std::vector<Scalar> ts{Scalar(1), Scalar(2), Scalar(3), Scalar(4), Scalar(9)};
  for (long n = 3; n <= 12; ++n) ts.push_back(Scalar::root_of_unity(1, n));
  std::size_t towers = 0;
  for (const auto& t : ts)
    for (std::size_t m = 1; m <= 5; ++m) {
      const AnyTower tower = tl_generators(t, m);
      const bool expect_exact = t.is_exact() && (t == Scalar(1) || t == Scalar(4) || t == Scalar(9));
      o.require(!expect_exact || std::holds_alternative<TLTower<Rational>>(tower), "t = " + t.to_string() + " not exact");
      const Report r = verify_tl_relations(tower, 1e-10);
      o.require(r.passed(), "t = " + t.to_string() + ", m = " + std::to_string(m));
      ++towers;
    }
  if (o.pass) o.detail = std::to_string(towers) + " towers, exact at t = 1, 4, 9";
  return o;
}

Outcome printed_formula_audit() {
  Outcome o;
  const AuditResult a = audit_printed_formula(Scalar(1));
  const auto* printed = std::get_if<Rational>(&a.printed_dev);
  const auto* corrected = std::get_if<Rational>(&a.corrected_dev);
  o.require(a.exact && printed && corrected, "not computed in rational mode");
  if (printed && corrected) {
    o.require(*printed == Rational(1, 4), "printed ||e^2 - e||_max = " + printed->str() + ", expected 1/4");
    o.require(*corrected == 0, "corrected ||e^2 - e||_max = " + corrected->str());
    if (o.pass) o.detail = "printed 1/4, corrected 0 (exact)";
    else o.detail += " (diagonal part " + deviation_text(a.printed_diagonal_dev) + ")";
  }
  return o;
}

Outcome laurent_phenomenon() {
  Outcome o;
  const auto report = check_laurent_phenomenon(annulus_seed(), alternating_path(12));
  o.require(report.steps.size() == 12 && report.passed(), "not all 12 steps Laurent");
  o.require(report.all_positive(), "negative coefficient");
  const auto xs = rank2_sequence({2, 2}, 14);
  Seed s = annulus_seed();
  bool agree = true;
  for (std::size_t i = 0; i < 12; ++i) {
    const std::size_t k = i % 2 + 1;
    s = mutate_seed(s, k);
    agree = agree && s.variable(k) == xs[i + 2];
  }
  o.require(agree, "general and rank-2 engines disagree");
  std::vector<Integer> values;
  bool integral = true;
  for (std::size_t i = 0; i < 8; ++i) {
    const Scalar v = evaluate(xs[i], {{"x1", Scalar(1)}, {"x2", Scalar(1)}});
    integral = integral && v.is_exact() && denominator(v.rational()) == 1;
    values.push_back(numerator(v.rational()));
  }
  o.require(integral, "non-integral specialization");
  o.require(values == std::vector<Integer>{1, 1, 2, 5, 13, 34, 89, 233}, "specialized sequence mismatch");
  if (o.pass) o.detail = "12/12 Laurent, positive, engines agree, 1 1 2 5 13 34 89 233";
  return o;
}

Outcome chebyshev_identities() {
  Outcome o;
  for (unsigned n = 1; n <= 20; ++n) o.require(verify_halfsum_identity(n), "halfsum n = " + std::to_string(n));
  for (unsigned m = 0; m <= 6; ++m)
    for (unsigned n = 0; n <= 6; ++n)
      o.require(chebyshev_T(m)(chebyshev_T(n).as_laurent()) == chebyshev_T(m * n).as_laurent(),
                "T_" + std::to_string(m) + " o T_" + std::to_string(n));
  if (o.pass) o.detail = "halfsum n <= 20, composition m, n <= 6, exact";
  return o;
}

Outcome casimir_identity() {
  Outcome o;
  const auto vars = LaurentPoly::standard_vars(2);
  const LaurentPoly x1 = LaurentPoly::variable(vars, 0);
  const LaurentPoly x2 = LaurentPoly::variable(vars, 1);
  const LaurentPoly one = LaurentPoly::constant(vars, 1);
  // casimir * x1 x2 = x1^2 + 1 + x2^2
  o.require(annulus_casimir() * x1 * x2 == x1 * x1 + one + x2 * x2, "symbolic identity");
  double worst = 0.0;
  for (const auto& t : default_casimir_points()) {
    const CasimirCheck c = verify_casimir_halfsum(TeichmullerParam::from_value(t), 1e-10);
    worst = std::max(worst, c.error / std::max(1.0, std::abs(c.halfsum)));
    o.require(c.pass, "t = " + t.to_string() + " error " + fmt(c.error));
  }
  if (o.pass) o.detail = "symbolic exact, 28 points, max rel error " + fmt(worst);
  return o;
}

Outcome root_solving() {
  Outcome o;
  double worst = 0.0;
  for (unsigned n = 1; n <= 64; ++n) {
    const auto roots = solve_chebyshev_unit(n);
    o.require(roots.size() == n, "wrong root count for n = " + std::to_string(n));
    for (const auto& t : roots) {
      worst = std::max(worst, chebyshev_unit_residual(t, n));
      o.require(std::abs(std::pow(t.to_complex(), static_cast<int>(n)) - 1.0) <= 1e-12,
                "not an n-th root of unity, n = " + std::to_string(n));
    }
  }
  o.require(worst <= 1e-12, "residual " + fmt(worst));
  bool singular = false;
  try {
    index_of(Scalar(-1));
  } catch (const SingularTrace&) {
    singular = true;
  }
  o.require(singular, "t = -1 not rejected with SingularTrace");
  if (o.pass) o.detail = "n <= 64, max residual " + fmt(worst) + ", t = -1 rejected";
  return o;
}

Outcome bratteli_combinatorics() {
  Outcome o;
  const auto g = gicar_diagram(64);
  for (unsigned n = 0; n <= 64; ++n) {
    Integer total = 0;
    for (unsigned k = 0; k <= n; ++k) {
      o.require(g.levels[n][k] == oracle::binomial(n, k), "C(" + std::to_string(n) + "," + std::to_string(k) + ")");
      total += g.levels[n][k];
    }
    o.require(total == (Integer(1) << n), "sum at level " + std::to_string(n));
    o.require(embedding_dimension_check(n), "embedding check at level " + std::to_string(n));
    if (n < 64) o.require(push_dimension_vector(g, n, g.levels[n]) == g.levels[n + 1], "Pascal push at level " + std::to_string(n));
  }
  double worst = 0.0;
  for (std::size_t m = 1; m <= 4; ++m) {
    const auto u = powers_unitary(PowersSpec(0.5, m));
    const std::size_t d = u.dim();
    for (int trial = 0; trial < 10; ++trial) {
      Matrix<Complex> a(d), b(d);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          a(i, j) = {oracle::uniform_real(-1, 1), oracle::uniform_real(-1, 1)};
          b(i, j) = {oracle::uniform_real(-1, 1), oracle::uniform_real(-1, 1)};
        }
      worst = std::max(worst, max_deviation(powers_conjugate(u, a * b), powers_conjugate(u, a) * powers_conjugate(u, b)));
    }
  }
  o.require(worst <= 1e-12, "Powers conjugation deviation " + fmt(worst));
  if (o.pass) o.detail = "binomials and 2^n through level 64, Powers deviation " + fmt(worst);
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::string dims;
  for (std::size_t m = 1; m <= 4; ++m) {
    const std::size_t d = tl_algebra_dimension(Scalar(3), m);
    dims += (dims.empty() ? "" : ", ") + std::to_string(d);
    o.require(Integer(d) == oracle::catalan(static_cast<unsigned>(m + 1)), "m = " + std::to_string(m) + " gives " + std::to_string(d));
  }
  o.detail = (o.pass ? "" : o.detail + "; ") + "dimensions " + dims;
  return o;
}

Outcome walkthrough() {
  Outcome o;
  std::ostringstream out, err;
  const int code = cmd_walkthrough({}, out, err);
  o.require(code == kExitOk, "exit code " + std::to_string(code) + " " + err.str());
  if (o.pass) o.detail = "exit 0";
  return o;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "Jones spectrum reproduction", 1.0, spectrum_reproduction},
      {2, "Temperley-Lieb relations", 30.0, temperley_lieb_relations},
      {3, "Printed-formula audit", 0.0, printed_formula_audit},
      {4, "Laurent phenomenon", 5.0, laurent_phenomenon},
      {5, "Chebyshev identities", 0.0, chebyshev_identities},
      {6, "Casimir identity", 0.0, casimir_identity},
      {7, "Root solving", 0.0, root_solving},
      {8, "Bratteli combinatorics", 0.0, bratteli_combinatorics},
      {9, "Oracle equivalence (Catalan dimensions)", 0.0, oracle_equivalence},
      {10, "Walkthrough end to end", 60.0, walkthrough},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  bool all_pass = true;
  int ran = 0;
  for (const auto& c : criteria()) {
    if (only != 0 && c.id != only) continue;
    ++ran;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0.0 && seconds >= c.time_limit) {
      o.pass = false;
      o.detail += "; runtime " + fmt(seconds) + " s over " + fmt(c.time_limit) + " s";
    }
    all_pass = all_pass && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.id << "  " << c.name << "  ["
              << o.detail << "]  (" << std::fixed << std::setprecision(3) << seconds << " s)" << std::defaultfloat
              << "\n";
  }
  if (ran == 0) {
    std::cerr << "no criterion " << only << "\n";
    return 2;
  }
  return all_pass ? 0 : 1;
}
