#include <doctest.h>

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "dnacode/asymptotics.hpp"
#include "dnacode/errors.hpp"

using namespace dnacode;

namespace {

// Largest real eigenvalue of the companion matrix of x^(m+1) - q x^m + q - 1.
double companion_root(unsigned q, unsigned m) {
  const int d = static_cast<int>(m) + 1;
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) c(i, i - 1) = 1.0;
  // Monic coefficients a_0..a_m with the last column holding -a_i.
  c(0, d - 1) = -(static_cast<double>(q) - 1.0);
  c(d - 1, d - 1) = static_cast<double>(q);
  const Eigen::VectorXcd ev = c.eigenvalues();
  double best = 0.0;
  for (int i = 0; i < ev.size(); ++i) {
    if (std::abs(ev[i].imag()) < 1e-9) best = std::max(best, ev[i].real());
  }
  return best;
}

}  // namespace

TEST_SUITE("asymptotics") {

TEST_CASE("dominant root agrees with the companion matrix eigenvalue") {
  for (unsigned q : {2u, 3u, 4u}) {
    for (unsigned m = 1; m <= 10; ++m) {
      if (q == 2 && m == 1) continue;
      CAPTURE(q);
      CAPTURE(m);
      CHECK(capacity(q, m).lambda == doctest::Approx(companion_root(q, m)).epsilon(1e-9));
    }
  }
}

TEST_CASE("root residual is tiny") {
  for (unsigned q : {2u, 4u}) {
    for (unsigned m = 1; m <= 12; ++m) {
      const auto r = capacity(q, m);
      CAPTURE(q);
      CAPTURE(m);
      CHECK(r.residual < 1e-10);
    }
  }
}

TEST_CASE("special capacities") {
  CHECK(capacity(2, 1).lambda == 1.0);
  CHECK(capacity(2, 1).capacity_bits == 0.0);
  CHECK(capacity(4, 1).capacity_bits == doctest::Approx(std::log2(3.0)).epsilon(1e-14));
  CHECK(capacity(4, kNoRunLimit).capacity_bits == 2.0);
  CHECK(leading_coefficient(4, 1) == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK(rll_count_approx(4, 1, 6) == doctest::Approx(972.0).epsilon(1e-10));
  CHECK_THROWS_AS(capacity(1, 3), DomainError);
}

TEST_CASE("capacity increases with m and with q") {
  for (unsigned m = 1; m < 10; ++m) {
    CHECK(capacity(2, m + 1).capacity_bits > capacity(2, m).capacity_bits);
    CHECK(capacity(4, m + 1).capacity_bits > capacity(4, m).capacity_bits);
    CHECK(capacity(3, m).capacity_bits > capacity(2, m).capacity_bits);
    CHECK(capacity(4, m).capacity_bits > capacity(3, m).capacity_bits);
  }
}

TEST_CASE("leading coefficient predicts counts at n = 20") {
  for (unsigned q : {2u, 4u}) {
    for (unsigned m = 2; m <= 5; ++m) {
      const double ratio = rll_count_approx(q, m, 20) / to_double(rll_count(q, m, 20));
      CHECK(std::abs(ratio - 1.0) < 1e-3);
    }
  }
}

TEST_CASE("asymptotic redundancy slope") {
  const double slope = rll_redundancy(2, 2, 401, Estimate::asymptotic) - rll_redundancy(2, 2, 400, Estimate::asymptotic);
  CHECK(slope == doctest::Approx(1.0 - capacity(2, 2).capacity_bits));
  CHECK(slope == doctest::Approx(0.3058).epsilon(2e-4));
  const double exact = rll_redundancy(4, 3, 200, Estimate::exact);
  CHECK(exact == doctest::Approx(rll_redundancy(4, 3, 200, Estimate::asymptotic)).epsilon(1e-6));
}

TEST_CASE("plane coding efficiency") {
  CHECK(efficiency_eta(2) == doctest::Approx(0.881).epsilon(1e-3));
  CHECK(efficiency_eta(4) == doctest::Approx(0.975).epsilon(1e-3));
  CHECK(efficiency_eta(7) == doctest::Approx(0.997).epsilon(1e-3));
  CHECK_THROWS_AS(efficiency_eta(1), DomainError);
}

TEST_CASE("binary gamma") {
  CHECK(gamma_binary(2) == doctest::Approx(0.1708).epsilon(3e-4));
  CHECK(gamma_binary(10) == doctest::Approx(0.9565).epsilon(1e-4));
  CHECK(gamma_binary(kNoRunLimit) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(gamma_binary(1), DomainError);
}

TEST_CASE("quaternary runlength law") {
  double previous = 0.0;
  for (unsigned m = 1; m <= 10; ++m) {
    const auto d = quaternary_runlength_distribution(m);
    double mass = 0.0;
    for (double p : d.probs) mass += p;
    CHECK(std::abs(mass - 1.0) < 1e-12);
    CHECK(d.tail_bound < 1e-12);
    CHECK(std::isfinite(d.mean_runlength));
    CHECK(std::isfinite(d.variance));
    CHECK(d.gamma() > previous);
    CHECK(d.gamma() < 1.0);
    previous = d.gamma();
  }
  CHECK(gamma_quaternary(1) == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(gamma_quaternary(3) == doctest::Approx(0.8796).epsilon(1e-4));
  CHECK(gamma_quaternary(10) == doctest::Approx(0.9999).epsilon(1e-4));
}

TEST_CASE("tail function") {
  CHECK(q_function(0.0) == doctest::Approx(0.5));
  CHECK(q_function(1.0) == doctest::Approx(0.158655253931457).epsilon(1e-12));
  CHECK(q_function(-1.0) == doctest::Approx(1.0 - 0.158655253931457).epsilon(1e-12));
  CHECK(q_function(10.0) > 0.0);
}

TEST_CASE("gaussian weight model keeps huge totals in log form") {
  const auto g = gaussian_weight_model(WeightFamily::balance, 0, 100);
  CHECK(g.mean == 50.0);
  CHECK(g.variance == 25.0);
  CHECK(g.log2_total == 200.0);
  const double exact = std::log2(to_double(binomial(100, 50))) + 100.0;
  CHECK(std::abs(g.log2_estimate(50) - exact) < std::log2(1.01));
  const auto wide = gaussian_weight_model(WeightFamily::quaternary_rll, 3, 2000);
  CHECK(std::isfinite(wide.log2_estimate(1000)));
  CHECK(std::isinf(wide.estimate(1000)));
}

TEST_CASE("unscaled variance is the plain n/4") {
  const auto scaled = gaussian_weight_model(WeightFamily::quaternary_rll, 2, 80);
  const auto plain = gaussian_weight_model(WeightFamily::quaternary_rll, 2, 80, VarianceModel::unscaled);
  CHECK(plain.variance == 20.0);
  CHECK(scaled.variance == doctest::Approx(20.0 * gamma_quaternary(2)));
}

TEST_CASE("combined redundancy") {
  const double bin_exact = combined_redundancy(Alphabet::binary, 3, 0.05, 150, Estimate::exact);
  const double bin_asym = combined_redundancy(Alphabet::binary, 3, 0.05, 150, Estimate::asymptotic);
  const double quat_exact = combined_redundancy(Alphabet::quaternary, 3, 0.05, 150, Estimate::exact);
  const double quat_asym = combined_redundancy(Alphabet::quaternary, 3, 0.05, 150, Estimate::asymptotic);
  CHECK(std::abs(bin_exact - bin_asym) < 0.1);
  CHECK(std::abs(quat_exact - quat_asym) < 0.1);
  // gamma_2(2) < gamma_4(2): binary weights are more concentrated, so fewer
  // words fall outside the bound.
  CHECK(balance_term(Alphabet::binary, 2, 0.05, 60) < balance_term(Alphabet::quaternary, 2, 0.05, 60));
  CHECK_THROWS_AS(combined_redundancy(Alphabet::binary, 1, 0.05, 20, Estimate::exact), DomainError);
  CHECK_THROWS_AS(combined_redundancy(Alphabet::quaternary, 2, 0.0, 20, Estimate::exact), DomainError);
  CHECK_THROWS_AS(combined_redundancy(Alphabet::quaternary, 2, 0.01, 3, Estimate::exact), UndefinedRedundancy);
}

}
