#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <utility>

#include "semiflat/poly.hpp"

namespace semiflat {

enum class NormMethod { ExactEven, Sampled, SupEstimate };

struct NormEstimate {
  double alpha = 0.0;  // +infinity for sup estimates
  double value = 0.0;
  NormMethod method = NormMethod::Sampled;
  double rel_error_bound = 0.0;  // 0 for ExactEven
  std::size_t nodes_used = 0;
};

struct NormOptions {
  double tolerance = 1e-8;                     // sampled-path stopping rule
  std::size_t max_nodes = std::size_t{1} << 24;  // doubling cap
};

// |v|^alpha. Even integer alpha uses binary powering of |v|^2, which stays
// exact for integer-valued inputs; other alpha goes through pow.
double abs_pow(std::complex<double> v, double alpha);

// L^{2m} norm via Parseval on the m-fold self-product: the 2m-th root of
// sum_k |c_k(P^m)|^2. Integer coefficients at small degree are convolved in
// 64-bit integers; larger inputs go through zero-padded transforms.
NormEstimate norm_exact_even(const CoeffPoly& p, unsigned two_m);

// ((1/M) sum_j |P(xi_{M,j})|^alpha)^{1/alpha} with M doubled from
// 4*(degree+1) until the relative change drops below the tolerance.
// Throws convergence_error (carrying the last two iterates) at the node cap.
NormEstimate norm_sampled(const CoeffPoly& p, double alpha, double tolerance,
                          std::size_t max_nodes = NormOptions{}.max_nodes);

// (1/n) sum_{j<n} |P(xi_{n,j})|^alpha, the two-sided interpolation mean.
// The node count is caller-chosen; n <= degree deliberately aliases.
double mz_discrete_mean(const CoeffPoly& p, double alpha, std::size_t n_nodes);

// Extremes of (discrete mean at `degree` nodes) / (converged norm^alpha)
// over seeded random polynomials sum_{j=1}^{degree} c_j z^j with c_j = +-1.
std::pair<double, double> mz_ratio_experiment(std::size_t degree, double alpha,
                                              std::size_t trials,
                                              std::uint64_t seed);

// Max of |P| over oversample*(degree+1) equispaced nodes; a lower bound on
// the sup. rel_error_bound is pi*degree/nodes (sup <= value/(1-bound)).
NormEstimate sup_norm_estimate(const CoeffPoly& p, unsigned oversample);

}  // namespace semiflat
