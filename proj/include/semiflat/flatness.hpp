#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "semiflat/arith.hpp"
#include "semiflat/norms.hpp"
#include "semiflat/poly.hpp"

namespace semiflat {

enum class Family { Liouville, Moebius };
enum class PointStatus { Ok, Failed };

struct CurvePoint {
  std::size_t n = 0;
  double stat = 0.0;
  NormMethod method = NormMethod::ExactEven;
  double rel_error = 0.0;
  PointStatus status = PointStatus::Ok;
};

struct FlatnessCurve {
  double alpha = 0.0;
  Family family = Family::Liouville;
  std::vector<CurvePoint> points;  // sorted by n, strictly increasing
  double fitted_exponent = 0.0;    // NaN when fewer than 3 usable points
  double fit_residual = 0.0;
};

struct FitResult {
  double exponent = 0.0;
  double residual = 0.0;
};

struct ChainRecord {
  double lhs = 0.0;            // |L(N)|^alpha / N^{alpha/2 + 1}
  double discrete_mean = 0.0;  // node mean of |P_N/sqrt(N)|^alpha
  double norm_alpha = 0.0;     // ||P_N/sqrt(N)||_alpha^alpha
};

struct LacunaryRecord {
  double empirical = 0.0;     // alpha-moment of the L2-normalized polynomial
  double reference = 0.0;     // Gamma(alpha/2 + 1)
  double mc_reference = 0.0;  // seeded Monte Carlo moment of the limit law
};

// stat(N) = ||P_N||_alpha / sqrt(N) over the grid, exact even-order norms
// when alpha is an even integer and sampled norms otherwise. Norm-engine
// failures flag the point and leave the rest of the curve intact.
FlatnessCurve semiflat_curve(Family family, double alpha,
                             std::span<const std::size_t> n_grid,
                             const SieveTable& table, double tolerance = 1e-8);

// Ordinary least squares of log(stat) against log(N); residual is the RMS
// misfit. Needs >= 3 points with positive stat.
FitResult growth_exponent_fit(std::span<const std::pair<double, double>> points);

// The lower-bound route through the partial sum: lhs is the single-node
// truncation and never exceeds discrete_mean (same floating divisions on
// both sides).
ChainRecord lower_bound_chain(std::size_t n, double alpha,
                              const SieveTable& table);

// |L(N)| / N^{1/2 + 1/alpha}; bounded iff the partial sums grow no faster
// than the norm chain allows.
double littlewood_rhs(std::size_t n, double alpha, const SieveTable& table);

// (1/N^{1+alpha/2}) sum_{k=1}^{N-1} |P_{N-1}(xi_{N,k})|^alpha: the node mean
// over the nontrivial N-th roots of unity, inner sum truncated at N-1.
double cvt_statistic(std::size_t n, double alpha, const SieveTable& table);

// alpha-moment of the normalized lacunary cosine sum next to two references:
// Gamma(alpha/2 + 1) and a seeded Monte Carlo moment of a standard normal.
// alpha must lie in (0, 2).
LacunaryRecord lacunary_limit(std::size_t n, double alpha, LacunaryGaps gaps,
                              std::size_t mc_trials, std::uint64_t seed);

}  // namespace semiflat
