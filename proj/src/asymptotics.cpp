#include "dnacode/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "dnacode/errors.hpp"

namespace dnacode {

namespace {

constexpr int kIterationCap = 200;

void require_alphabet_run(unsigned q, unsigned m) {
  if (q < 2) throw DomainError("alphabet size must be at least 2");
  if (m < 1) throw DomainError("maximum run must be at least 1");
}

double bits_per_symbol(unsigned q) { return std::log2(static_cast<double>(q)); }

// t_k = N_2(m, k) / lambda^k for k = 1..count, without forming N_2 itself.
std::vector<double> scaled_binary_counts(unsigned m, double lambda, std::size_t count) {
  std::vector<double> t(count + 1, 0.0);
  const double inv = 1.0 / lambda;
  for (std::size_t k = 1; k <= count; ++k) {
    if (k <= m) {
      t[k] = std::pow(2.0 * inv, static_cast<double>(k));
    } else {
      double acc = 0.0, scale = 1.0;
      for (unsigned j = 1; j <= m; ++j) {
        scale *= inv;
        acc += t[k - j] * scale;
      }
      t[k] = acc;
    }
  }
  return t;
}

}  // namespace

double characteristic_polynomial(unsigned q, unsigned m, double x) {
  // x^m (x - q) + q - 1 keeps the cancellation at the scale of q - 1.
  return std::pow(x, static_cast<double>(m)) * (x - q) + (q - 1.0);
}

CapacityResult capacity(unsigned q, unsigned m) {
  require_alphabet_run(q, m);
  CapacityResult out;
  if (m == kNoRunLimit) {
    out.lambda = q;
    out.capacity_bits = bits_per_symbol(q);
    return out;
  }
  // x = 1 is always a root; the dominant one is the only other positive root.
  // For q = 2, m = 1 they coincide.
  if (q == 2 && m == 1) {
    out.lambda = 1.0;
    return out;
  }
  // Solved in long double: near x = q the slope is about q^m, so a root
  // rounded to double cannot get the residual below 1e-10 for m around 10.
  using Real = long double;
  auto poly = [&](Real x) { return std::pow(x, static_cast<Real>(m)) * (x - q) + (q - 1.0L); };
  auto slope = [&](Real x) { return std::pow(x, m - 1.0L) * ((m + 1.0L) * x - static_cast<Real>(q) * m); };
  Real lo = 1.0L + 1e-9L, hi = q;
  if (poly(lo) >= 0.0L) throw NumericError("root not bracketed");
  int iterations = 0;
  while (hi - lo > 1e-6L && iterations < kIterationCap) {
    const Real mid = 0.5L * (lo + hi);
    (poly(mid) < 0.0L ? lo : hi) = mid;
    ++iterations;
  }
  Real x = 0.5L * (lo + hi);
  for (; iterations < kIterationCap; ++iterations) {
    Real next = x - poly(x) / slope(x);
    if (next <= lo || next >= hi) next = 0.5L * (lo + hi);
    (poly(next) < 0.0L ? lo : hi) = next;
    const bool settled = std::abs(next - x) <= 4 * std::numeric_limits<Real>::epsilon() * next;
    x = next;
    if (settled) break;
  }
  out.lambda = static_cast<double>(x);
  out.capacity_bits = static_cast<double>(std::log2(x));
  out.tolerance = static_cast<double>(std::max(hi - lo, x * std::numeric_limits<Real>::epsilon()));
  out.residual = static_cast<double>(std::abs(poly(x)));
  if (out.residual > 1e-10) {
    throw NumericError("capacity root did not converge for q=" + std::to_string(q) +
                       ", m=" + std::to_string(m));
  }
  return out;
}

double leading_coefficient(unsigned q, unsigned m) {
  require_alphabet_run(q, m);
  const double lambda = capacity(q, m).lambda;
  // H(x) = r(x) / p(x), r = qT, p = 1 - (q-1)T, evaluated at x = 1/lambda.
  const double x = 1.0 / lambda;
  double t = 0.0, t_slope = 0.0, xi = 1.0;
  for (unsigned i = 1; i <= m; ++i) {
    t_slope += i * xi;
    xi *= x;
    t += xi;
  }
  const double r = q * t;
  const double p_slope = -(q - 1.0) * t_slope;
  if (std::abs(p_slope) < 1e-300) throw NumericError("degenerate denominator in A_q(m)");
  return -lambda * r / p_slope;
}

double rll_count_approx(unsigned q, unsigned m, unsigned n) {
  return leading_coefficient(q, m) * std::pow(capacity(q, m).lambda, static_cast<double>(n));
}

double rll_redundancy(unsigned q, unsigned m, unsigned n, Estimate mode) {
  if (mode == Estimate::exact) return n * bits_per_symbol(q) - log2_count(rll_count(q, m, n));
  return n * (bits_per_symbol(q) - capacity(q, m).capacity_bits) -
         std::log2(leading_coefficient(q, m));
}

double efficiency_eta(unsigned m) {
  if (m < 2) throw DomainError("efficiency of binary plane coding needs m >= 2");
  return (1.0 + capacity(2, m).capacity_bits) / capacity(4, m).capacity_bits;
}

double gamma_binary(unsigned m) {
  if (m < 2) throw DomainError("gamma_2 is degenerate for m < 2");
  const double lambda = capacity(2, m).lambda;
  // Runlength k occurs with probability lambda^-k, k = 1..m.
  double mass = 0.0, mean = 0.0, second = 0.0, p = 1.0;
  for (unsigned k = 1; k <= m; ++k) {
    p /= lambda;
    mass += p;
    mean += k * p;
    second += static_cast<double>(k) * k * p;
    if (m == kNoRunLimit && p < 1e-18) break;
  }
  if (std::abs(mass - 1.0) > 1e-12) {
    throw NumericError("runlength probabilities sum to " + std::to_string(mass));
  }
  return (second - mean * mean) / mean;
}

RunlengthDistribution quaternary_runlength_distribution(unsigned m) {
  require_alphabet_run(4, m);
  const double lambda = capacity(4, m).lambda;
  // N_2(m, k+1) <= 2 N_2(m, k), so the scaled terms decay at least like
  // (2 / lambda)^k and the tail past k is bounded by t_k r / (1 - r).
  const double ratio = 2.0 / lambda;
  std::size_t limit = 64;
  std::vector<double> t;
  double tail = 0.0;
  for (;;) {
    t = scaled_binary_counts(std::min<unsigned>(m, static_cast<unsigned>(limit)), lambda, limit);
    double raw_mass = 0.0;
    for (std::size_t k = 1; k <= limit; ++k) raw_mass += t[k];
    tail = t[limit] * ratio / (1.0 - ratio) / raw_mass;
    if (t[limit] / raw_mass < 1e-15 && tail < 1e-12) break;
    limit *= 2;
    if (limit > (1u << 16)) throw NumericError("runlength distribution tail did not decay");
  }
  RunlengthDistribution d;
  double norm = 0.0;
  for (std::size_t k = 1; k <= limit; ++k) norm += t[k];
  d.probs.resize(limit);
  double mean = 0.0;
  for (std::size_t k = 1; k <= limit; ++k) {
    d.probs[k - 1] = t[k] / norm;
    mean += k * d.probs[k - 1];
  }
  double var = 0.0;
  for (std::size_t k = 1; k <= limit; ++k) {
    const double dev = k - mean;
    var += dev * dev * d.probs[k - 1];
  }
  d.mean_runlength = mean;
  d.variance = var;
  d.tail_bound = tail;
  return d;
}

double gamma_quaternary(unsigned m) { return quaternary_runlength_distribution(m).gamma(); }

double q_function(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double GaussianApprox::density(double u) const {
  const double z = (u - mean) / std::sqrt(variance);
  return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi * variance);
}

double GaussianApprox::log2_estimate(double w) const { return std::log2(density(w)) + log2_total; }

double GaussianApprox::estimate(double w) const { return std::exp2(log2_estimate(w)); }

GaussianApprox gaussian_weight_model(WeightFamily family, unsigned m, unsigned n,
                                     VarianceModel variance) {
  if (n < 1) throw DomainError("length must be at least 1");
  GaussianApprox g;
  g.mean = n / 2.0;
  double gamma = 1.0;
  switch (family) {
    case WeightFamily::balance:
      g.log2_total = 2.0 * n;
      break;
    case WeightFamily::binary_rll:
      if (variance == VarianceModel::runlength_scaled) gamma = gamma_binary(m);
      g.log2_total = log2_count(rll_count(2, m, n));
      break;
    case WeightFamily::quaternary_rll:
      if (variance == VarianceModel::runlength_scaled) gamma = gamma_quaternary(m);
      g.log2_total = log2_count(rll_count(4, m, n));
      break;
  }
  g.variance = gamma * n / 4.0;
  return g;
}

double gaussian_weight_approx(WeightFamily family, unsigned m, unsigned w, unsigned n) {
  return gaussian_weight_model(family, m, n).estimate(w);
}

double near_balanced_fraction_approx(unsigned n, double a, double gamma) {
  return 1.0 - 2.0 * q_function(2.0 * a * std::sqrt(n / gamma));
}

double balance_term(Alphabet kind, unsigned m, double a, unsigned n) {
  if (!(a > 0.0)) throw DomainError("unbalance bound must be positive");
  const double gamma = kind == Alphabet::binary ? gamma_binary(m) : gamma_quaternary(m);
  const double share = near_balanced_fraction_approx(n, a, gamma);
  if (!(share > 0.0)) throw UndefinedRedundancy("balance share is not positive");
  return -std::log2(share);
}

double combined_redundancy(Alphabet kind, unsigned m, double a, unsigned n, Estimate mode,
                           BoundaryMode boundary) {
  if (kind == Alphabet::binary && m < 2) throw DomainError("binary combined redundancy needs m >= 2");
  if (!(a > 0.0)) throw DomainError("unbalance bound must be positive");
  const unsigned q = kind == Alphabet::binary ? 2 : 4;
  if (mode == Estimate::asymptotic) {
    return rll_redundancy(q, m, n, Estimate::asymptotic) + balance_term(kind, m, a, n);
  }
  const WeightProfile profile = weight_profile(kind, m, n);
  BigCount admitted = 0;
  for (unsigned w = 0; w <= n; ++w) {
    if (weight_admitted(w, n, a, boundary)) admitted += profile.counts[w];
  }
  if (admitted.is_zero()) throw UndefinedRedundancy("no word meets both constraints");
  return n * bits_per_symbol(q) - log2_count(admitted);
}

}  // namespace dnacode
