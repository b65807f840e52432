#include "semiflat/flatness.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "semiflat/errors.hpp"
#include "semiflat/parallel.hpp"
#include "semiflat/rng.hpp"

namespace semiflat {
namespace {

bool is_even_integer(double alpha) {
  return alpha == std::round(alpha) &&
         static_cast<long long>(alpha) % 2 == 0 && alpha >= 2.0;
}

CoeffPoly build_family_poly(Family family, std::size_t n,
                            const SieveTable& table) {
  return family == Family::Liouville ? build_liouville_poly(n, table)
                                     : build_mobius_poly(n, table);
}

}  // namespace

FlatnessCurve semiflat_curve(Family family, double alpha,
                             std::span<const std::size_t> n_grid,
                             const SieveTable& table, double tolerance) {
  if (alpha <= 0.0)
    throw std::invalid_argument("semiflat_curve: alpha must be positive");
  if (n_grid.empty())
    throw std::invalid_argument("semiflat_curve: empty grid");
  const SieveKind want =
      family == Family::Liouville ? SieveKind::Liouville : SieveKind::Moebius;
  if (table.kind() != want)
    throw std::invalid_argument("semiflat_curve: table kind mismatch");
  for (std::size_t i = 0; i + 1 < n_grid.size(); ++i)
    if (n_grid[i] >= n_grid[i + 1])
      throw std::invalid_argument("semiflat_curve: grid must be increasing");
  if (n_grid.back() > table.n_max())
    throw std::invalid_argument("semiflat_curve: grid exceeds table n_max");

  FlatnessCurve curve;
  curve.alpha = alpha;
  curve.family = family;
  curve.points.reserve(n_grid.size());
  const bool exact = is_even_integer(alpha);

  // Inner kernels are parallel; points are assembled in grid order so the
  // output is identical for any worker count.
  for (std::size_t n : n_grid) {
    CurvePoint pt;
    pt.n = n;
    try {
      const CoeffPoly p = build_family_poly(family, n, table);
      const NormEstimate est =
          exact ? norm_exact_even(p, static_cast<unsigned>(alpha))
                : norm_sampled(p, alpha, tolerance);
      pt.stat = est.value / std::sqrt(static_cast<double>(n));
      pt.method = est.method;
      pt.rel_error = est.rel_error_bound;
      pt.status = PointStatus::Ok;
    } catch (const convergence_error&) {
      pt.stat = 0.0;
      pt.method = NormMethod::Sampled;
      pt.rel_error = std::numeric_limits<double>::quiet_NaN();
      pt.status = PointStatus::Failed;
    }
    curve.points.push_back(pt);
  }

  std::vector<std::pair<double, double>> ok_points;
  for (const auto& pt : curve.points)
    if (pt.status == PointStatus::Ok && pt.stat > 0.0)
      ok_points.emplace_back(static_cast<double>(pt.n), pt.stat);
  if (ok_points.size() >= 3) {
    const FitResult fit = growth_exponent_fit(ok_points);
    curve.fitted_exponent = fit.exponent;
    curve.fit_residual = fit.residual;
  } else {
    curve.fitted_exponent = std::numeric_limits<double>::quiet_NaN();
    curve.fit_residual = std::numeric_limits<double>::quiet_NaN();
  }
  return curve;
}

FitResult growth_exponent_fit(
    std::span<const std::pair<double, double>> points) {
  if (points.size() < 3)
    throw std::invalid_argument("growth_exponent_fit: need >= 3 points");
  const auto n = static_cast<double>(points.size());
  double mx = 0.0, my = 0.0;
  for (const auto& [x, y] : points) {
    if (!(x > 0.0))
      throw std::invalid_argument("growth_exponent_fit: nonpositive N");
    if (!(y > 0.0))
      throw std::invalid_argument("growth_exponent_fit: nonpositive stat");
    mx += std::log(x);
    my += std::log(y);
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [x, y] : points) {
    const double dx = std::log(x) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(y) - my);
  }
  if (sxx == 0.0)
    throw std::invalid_argument("growth_exponent_fit: degenerate grid");
  FitResult fit;
  fit.exponent = sxy / sxx;
  const double intercept = my - fit.exponent * mx;
  double rss = 0.0;
  for (const auto& [x, y] : points) {
    const double e = std::log(y) - (intercept + fit.exponent * std::log(x));
    rss += e * e;
  }
  fit.residual = std::sqrt(rss / n);
  return fit;
}

ChainRecord lower_bound_chain(std::size_t n, double alpha,
                              const SieveTable& table) {
  if (alpha <= 1.0)
    throw std::invalid_argument("lower_bound_chain: alpha must exceed 1");
  if (n == 0 || n > table.n_max())
    throw std::out_of_range("lower_bound_chain: n out of table range");
  const CoeffPoly p = build_liouville_poly(n, table);
  const double mean = mz_discrete_mean(p, alpha, n);
  const double half_scale = std::pow(static_cast<double>(n), alpha * 0.5);
  const double partial =
      std::abs(static_cast<double>(partial_sum(table, n)));
  const double l_pow = abs_pow({partial, 0.0}, alpha);

  ChainRecord rec;
  rec.discrete_mean = mean / half_scale;
  // Same division chain as the discrete mean (by N first, then by N^{alpha/2})
  // so the single-term truncation inequality holds without tolerance.
  rec.lhs = (l_pow / static_cast<double>(n)) / half_scale;
  const bool exact = is_even_integer(alpha);
  const NormEstimate est = exact
                               ? norm_exact_even(p, static_cast<unsigned>(alpha))
                               : norm_sampled(p, alpha, 1e-9);
  rec.norm_alpha =
      std::pow(est.value / std::sqrt(static_cast<double>(n)), alpha);
  return rec;
}

double littlewood_rhs(std::size_t n, double alpha, const SieveTable& table) {
  if (alpha <= 1.0)
    throw std::invalid_argument("littlewood_rhs: alpha must exceed 1");
  if (n == 0 || n > table.n_max())
    throw std::out_of_range("littlewood_rhs: n out of table range");
  const double partial =
      std::abs(static_cast<double>(partial_sum(table, n)));
  return partial / std::pow(static_cast<double>(n), 0.5 + 1.0 / alpha);
}

double cvt_statistic(std::size_t n, double alpha, const SieveTable& table) {
  if (alpha <= 1.0)
    throw std::invalid_argument("cvt_statistic: alpha must exceed 1");
  if (n < 2) throw std::invalid_argument("cvt_statistic: n must be >= 2");
  if (n > table.n_max())
    throw std::out_of_range("cvt_statistic: n exceeds table n_max");
  const CoeffPoly p = build_liouville_poly(n - 1, table);
  const RootSample sample = eval_at_roots(p, n);
  const double sum = chunked_sum<double>(
      n - 1, [&](std::size_t j) { return abs_pow(sample.values[j + 1], alpha); });
  return sum / std::pow(static_cast<double>(n), 1.0 + alpha * 0.5);
}

LacunaryRecord lacunary_limit(std::size_t n, double alpha, LacunaryGaps gaps,
                              std::size_t mc_trials, std::uint64_t seed) {
  if (!(alpha > 0.0 && alpha < 2.0))
    throw std::invalid_argument("lacunary_limit: alpha must lie in (0, 2)");
  if (mc_trials == 0)
    throw std::invalid_argument("lacunary_limit: mc_trials must be >= 1");
  const CoeffPoly p = build_lacunary(n, gaps);
  const double l2 = norm_exact_even(p, 2).value;
  const NormEstimate sampled = norm_sampled(p, alpha, 1e-8);

  LacunaryRecord rec;
  rec.empirical = std::pow(sampled.value / l2, alpha);
  rec.reference = std::tgamma(alpha * 0.5 + 1.0);
  Rng rng(seed);
  double acc = 0.0;
  for (std::size_t t = 0; t < mc_trials; ++t)
    acc += std::pow(std::abs(rng.next_normal()), alpha);
  rec.mc_reference = acc / static_cast<double>(mc_trials);
  return rec;
}

}  // namespace semiflat
