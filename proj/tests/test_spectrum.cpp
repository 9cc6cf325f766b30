#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "jones/spectrum.hpp"
#include "jones/temperley_lieb.hpp"
#include "oracles.hpp"

using namespace jones;

TEST(Spectrum, SolveChebyshevUnit) {
  const auto one = solve_chebyshev_unit(1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], Scalar(1));

  const auto four = solve_chebyshev_unit(4);
  ASSERT_EQ(four.size(), 4u);
  const std::vector<Complex> expected{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(std::abs(four[k].to_complex() - expected[k]), 0.0, 1e-15);

  const auto three = solve_chebyshev_unit(3);
  EXPECT_NEAR(std::abs(three[1].to_complex() - Complex(-0.5, std::sqrt(3.0) / 2)), 0.0, 1e-15);
  EXPECT_THROW(solve_chebyshev_unit(0), std::invalid_argument);
}

TEST(SpectrumProperty, RootsSolveTheEquation) {
  for (unsigned n = 1; n <= 64; ++n) {
    const auto roots = solve_chebyshev_unit(n);
    ASSERT_EQ(roots.size(), n);
    for (const auto& t : roots) {
      EXPECT_LE(chebyshev_unit_residual(t, n), 1e-12) << n;
      EXPECT_NEAR(std::abs(std::pow(t.to_complex(), static_cast<int>(n)) - 1.0), 0.0, 1e-12);
    }
  }
}

TEST(Spectrum, IndexExamples) {
  EXPECT_NEAR(index_of(Scalar::root_of_unity(1, 3)).real_index(), 1.0, 1e-12);
  EXPECT_EQ(index_of(Scalar(1)).index, Scalar(4));
  EXPECT_THROW(index_of(Scalar(-1)), SingularTrace);
  EXPECT_THROW(index_of(Scalar::root_of_unity(1, 2)), SingularTrace);
  EXPECT_THROW(index_of(Scalar(0)), std::domain_error);
}

TEST(Spectrum, DiscreteValues) {
  const auto r = jones_spectrum(7);
  ASSERT_EQ(r.discrete.size(), 5u);
  const std::vector<double> expected{1.0, 2.0, (3.0 + std::sqrt(5.0)) / 2.0, 3.0, 3.2469796037174667};
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_NEAR(r.discrete[i].real_index(), expected[i], 1e-12);
  EXPECT_TRUE(r.consistent());
  EXPECT_EQ(r.boundary.index, Scalar(4));
  EXPECT_EQ(r.boundary.origin, Origin::boundary());
  EXPECT_THROW(jones_spectrum(2), std::invalid_argument);
}

TEST(Spectrum, ContinuousSamples) {
  const auto r = jones_spectrum(3);
  ASSERT_EQ(r.continuous_samples.size(), 3u);
  EXPECT_EQ(r.continuous_samples[0].index, Scalar(Rational(25, 6)));
  EXPECT_EQ(r.continuous_samples[1].index, Scalar(Rational(9, 2)));
  EXPECT_EQ(r.continuous_samples[2].index, Scalar(Rational(121, 10)));
  EXPECT_THROW(jones_spectrum(3, {Scalar(Rational(1, 2))}), std::invalid_argument);
}

TEST(SpectrumProperty, DiscreteMatchesCosineFormula) {
  const auto r = jones_spectrum(64);
  double previous = 0.0;
  for (const auto& v : r.discrete) {
    const unsigned n = v.origin.n;
    const double c = std::cos(std::numbers::pi / n);
    EXPECT_NEAR(v.real_index(), 4 * c * c, 1e-12) << n;
    EXPECT_NEAR(v.index.to_complex().imag(), 0.0, 1e-12);
    EXPECT_GT(v.real_index(), previous);
    EXPECT_LT(v.real_index(), 4.0);
    if (n >= 8) EXPECT_LT(4.0 - v.real_index(), 4 * std::numbers::pi * std::numbers::pi / (n * n));
    EXPECT_NEAR(std::abs(v.index.to_complex() * v.tau.to_complex() - 1.0), 0.0, 1e-12);
    previous = v.real_index();
  }
}

TEST(SpectrumProperty, ContinuousBranchAboveFour) {
  for (int trial = 0; trial < 1000; ++trial) {
    const double t = trial % 2 == 0 ? oracle::uniform_real(1.0, 2.0) : oracle::uniform_real(1.0, 1e6);
    if (t == 1.0) continue;
    EXPECT_GT(index_of(Scalar(Complex(t, 0.0))).real_index(), 4.0) << t;
  }
  for (int trial = 0; trial < 100; ++trial) {
    const Rational t = 1 + abs(oracle::random_rational());
    const IndexValue v = index_of(Scalar(t));
    EXPECT_GT(v.index.rational(), 4);
    EXPECT_EQ(v.index * v.tau, Scalar(1));
  }
}

TEST(SpectrumProperty, IndexInvariantUnderConjugationAndInversion) {
  for (unsigned n = 3; n <= 40; ++n)
    for (unsigned k = 1; k < n; ++k) {
      const Complex t = Scalar::root_of_unity(k, n).to_complex();
      if (std::abs(t + 1.0) < 1e-12) continue;
      const double idx = index_of(Scalar(t)).real_index();
      EXPECT_NEAR(index_of(Scalar(std::conj(t))).real_index(), idx, 1e-12);
      EXPECT_NEAR(index_of(Scalar(1.0 / t)).real_index(), idx, 1e-12);
    }
}

TEST(Spectrum, TraceParameterMatchesTowerRelation) {
  for (unsigned n = 3; n <= 8; ++n) {
    const Scalar t = Scalar::root_of_unity(1, n);
    const auto tower = std::get<TLTower<Complex>>(tl_generators(t, 2));
    const IndexValue v = index_of(t, Origin::discrete(n));
    EXPECT_NEAR(std::abs(tower.tau - v.tau.to_complex()), 0.0, 1e-12);
    const auto& e = tower.generators;
    EXPECT_LE(max_deviation(e[0] * e[1] * e[0], v.tau.to_complex() * e[0]), 1e-10);
  }
}

TEST(Spectrum, Csv) {
  const std::string csv = render_csv(jones_spectrum(6));
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "n,t_re,t_im,index");
  std::vector<double> indices;
  std::vector<std::string> ns;
  while (std::getline(in, line)) {
    ns.push_back(line.substr(0, line.find(',')));
    indices.push_back(std::stod(line.substr(line.rfind(',') + 1)));
  }
  ASSERT_EQ(indices.size(), 4u + 1u + 3u);
  EXPECT_NEAR(indices[0], 1.0, 1e-12);
  EXPECT_NEAR(indices[1], 2.0, 1e-12);
  EXPECT_NEAR(indices[2], 2.6180340, 1e-7);
  EXPECT_NEAR(indices[3], 3.0, 1e-12);
  EXPECT_EQ(ns[4], "1");
  EXPECT_EQ(ns[5], "");
}

TEST(Spectrum, JsonRoundTrip) {
  const auto r = jones_spectrum(10);
  const nlohmann::json j = r;
  EXPECT_EQ(j["discrete"][0]["n"], 3);
  EXPECT_TRUE(j["consistent"].get<bool>());
  const auto back = j.get<SpectrumReport>();
  ASSERT_EQ(back.discrete.size(), r.discrete.size());
  for (std::size_t i = 0; i < r.discrete.size(); ++i) {
    EXPECT_EQ(back.discrete[i].origin, r.discrete[i].origin);
    EXPECT_NEAR(back.discrete[i].real_index(), r.discrete[i].real_index(), 1e-15);
  }
  EXPECT_EQ(back.continuous_samples[0].index, r.continuous_samples[0].index);
  EXPECT_EQ(back.boundary.index, Scalar(4));
}
