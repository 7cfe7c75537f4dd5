#pragma once

#include <vector>

#include "dnacode/counting.hpp"

namespace dnacode {

/// Dominant root of x^(m+1) - q x^m + q - 1 = 0 and the capacity log2 of it.
struct CapacityResult {
  double lambda = 0.0;
  double capacity_bits = 0.0;
  /// Width of the final bracket around lambda.
  double tolerance = 0.0;
  /// |lambda^(m+1) - q lambda^m + q - 1| at the returned root.
  double residual = 0.0;
};

CapacityResult capacity(unsigned q, unsigned m);

/// Value of the characteristic polynomial at x.
double characteristic_polynomial(unsigned q, unsigned m, double x);

/// A_q(m) in N_q(m, n) ~ A_q(m) lambda^n.
double leading_coefficient(unsigned q, unsigned m);

/// A_q(m) lambda_q(m)^n.
double rll_count_approx(unsigned q, unsigned m, unsigned n);

enum class Estimate { exact, asymptotic };

/// n log2 q - log2 N_q(m, n), exactly or as n (log2 q - C_q(m)) - log2 A_q(m).
double rll_redundancy(unsigned q, unsigned m, unsigned n, Estimate mode);

/// (1 + C_2(m)) / C_4(m): asymptotic efficiency of binary plane coding.
double efficiency_eta(unsigned m);

/// Variance factor of the Gaussian weight law for binary m-constrained words.
/// m = kNoRunLimit gives the unconstrained value 1.
double gamma_binary(unsigned m);

/// Runlength law of the AT/GC indicator sequence of a maxentropic quaternary
/// m-constrained source: P(k) = c N_2(m, k) lambda_4^-k.
struct RunlengthDistribution {
  std::vector<double> probs;  // probs[k - 1] = P(k)
  double mean_runlength = 0.0;
  double variance = 0.0;
  /// Upper bound on the probability mass past the last retained k.
  double tail_bound = 0.0;

  std::size_t truncation() const { return probs.size(); }
  double gamma() const { return variance / mean_runlength; }
};

RunlengthDistribution quaternary_runlength_distribution(unsigned m);

double gamma_quaternary(unsigned m);

/// Q(x), upper tail of the standard normal.
double q_function(double x);

enum class WeightFamily { balance, binary_rll, quaternary_rll };

/// Which variance to put under the Gaussian: gamma n / 4 from the runlength
/// law, or the unconstrained n / 4.
enum class VarianceModel { runlength_scaled, unscaled };

/// Gaussian approximation of a weight distribution, scaled by the total
/// number of words. The total is kept as log2 because it overflows double.
struct GaussianApprox {
  double mean = 0.0;
  double variance = 0.0;
  double log2_total = 0.0;

  double density(double u) const;
  double log2_estimate(double w) const;
  double estimate(double w) const;
};

/// m is ignored for the balance family.
GaussianApprox gaussian_weight_model(WeightFamily family, unsigned m, unsigned n,
                                     VarianceModel variance = VarianceModel::runlength_scaled);

double gaussian_weight_approx(WeightFamily family, unsigned m, unsigned w, unsigned n);

/// 1 - 2 Q(2 a sqrt(n / gamma)): Gaussian share of words within unbalance a.
double near_balanced_fraction_approx(unsigned n, double a, double gamma = 1.0);

/// -log2 of the above, the extra bits the balance constraint costs on top of
/// the run constraint.
double balance_term(Alphabet kind, unsigned m, double a, unsigned n);

/// Redundancy of strands that meet both the run and the balance constraint.
/// Binary kind counts only the constrained plane (n bits); quaternary counts
/// the whole strand (2n bits).
double combined_redundancy(Alphabet kind, unsigned m, double a, unsigned n, Estimate mode,
                           BoundaryMode boundary = BoundaryMode::strict);

}  // namespace dnacode
