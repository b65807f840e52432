#include "semiflat/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "semiflat/errors.hpp"
#include "semiflat/fft.hpp"
#include "semiflat/parallel.hpp"
#include "semiflat/rng.hpp"

namespace semiflat {
namespace {

// Largest degree of the m-fold self-product we are willing to form.
constexpr std::int64_t kConvolutionBudget = std::int64_t{1} << 22;

bool is_small_integer(std::complex<double> c) {
  return c.imag() == 0.0 && c.real() == std::round(c.real()) &&
         std::abs(c.real()) <= 8.0;
}

std::complex<double> pow_uint(std::complex<double> base, unsigned e) {
  std::complex<double> r{1.0, 0.0};
  while (e) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

double discrete_pow_mean(const RootSample& sample, double alpha) {
  const auto& v = sample.values;
  const double sum =
      chunked_sum<double>(v.size(), [&](std::size_t j) { return abs_pow(v[j], alpha); });
  return sum / static_cast<double>(sample.node_count);
}

}  // namespace

double abs_pow(std::complex<double> v, double alpha) {
  const double ns = v.real() * v.real() + v.imag() * v.imag();
  const double half = alpha * 0.5;
  if (half == std::round(half) && half >= 0.0 && half <= 64.0) {
    double r = 1.0, base = ns;
    auto e = static_cast<unsigned>(half);
    while (e) {
      if (e & 1u) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }
  return std::pow(ns, half);
}

NormEstimate norm_exact_even(const CoeffPoly& p, unsigned two_m) {
  if (two_m == 0 || two_m % 2 != 0)
    throw std::invalid_argument("norm_exact_even: order must be even and > 0");
  const unsigned m = two_m / 2;
  const CoeffPoly q = analytic_equivalent(p);
  const std::int64_t deg = q.degree();
  const std::int64_t product_deg = static_cast<std::int64_t>(m) * deg;
  if (product_deg > kConvolutionBudget)
    throw size_error("norm_exact_even: product degree " +
                     std::to_string(product_deg) + " exceeds budget " +
                     std::to_string(kConvolutionBudget));

  const auto& c = q.coefficients();
  const auto n_coeff = static_cast<std::size_t>(deg) + 1;

  const bool integer_path =
      deg <= 512 && two_m <= 8 &&
      std::all_of(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(n_coeff),
                  is_small_integer);
  double sum_sq = 0.0;
  if (integer_path) {
    std::vector<std::int64_t> acc(n_coeff);
    for (std::size_t i = 0; i < n_coeff; ++i)
      acc[i] = static_cast<std::int64_t>(c[i].real());
    std::vector<std::int64_t> base = acc;
    for (unsigned step = 1; step < m; ++step) {
      std::vector<std::int64_t> next(acc.size() + base.size() - 1, 0);
      for (std::size_t i = 0; i < acc.size(); ++i) {
        if (acc[i] == 0) continue;
        for (std::size_t j = 0; j < base.size(); ++j)
          next[i + j] += acc[i] * base[j];
      }
      acc = std::move(next);
    }
    unsigned __int128 total = 0;
    for (std::int64_t v : acc)
      total += static_cast<unsigned __int128>(static_cast<__int128>(v) *
                                              static_cast<__int128>(v));
    sum_sq = static_cast<double>(total);
  } else {
    const std::size_t len =
        fft::good_size(static_cast<std::size_t>(product_deg) + 1);
    std::vector<std::complex<double>> buf(len, {0.0, 0.0});
    std::copy(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(n_coeff),
              buf.begin());
    fft::transform(buf, +1);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(len); ++j)
      buf[static_cast<std::size_t>(j)] =
          pow_uint(buf[static_cast<std::size_t>(j)], m);
    fft::transform(buf, -1);
    const double inv_len = 1.0 / static_cast<double>(len);
    sum_sq = chunked_sum<double>(
        static_cast<std::size_t>(product_deg) + 1, [&](std::size_t k) {
          const std::complex<double> ck = buf[k] * inv_len;
          return ck.real() * ck.real() + ck.imag() * ck.imag();
        });
  }

  NormEstimate est;
  est.alpha = static_cast<double>(two_m);
  est.value = std::pow(sum_sq, 1.0 / static_cast<double>(two_m));
  est.method = NormMethod::ExactEven;
  est.rel_error_bound = 0.0;
  est.nodes_used = 0;
  return est;
}

NormEstimate norm_sampled(const CoeffPoly& p, double alpha, double tolerance,
                          std::size_t max_nodes) {
  if (alpha <= 0.0)
    throw std::invalid_argument("norm_sampled: alpha must be positive");
  if (!(tolerance > 0.0 && tolerance < 1.0))
    throw std::invalid_argument("norm_sampled: tolerance outside (0, 1)");
  std::size_t nodes = 4 * (static_cast<std::size_t>(p.degree()) + 1);
  double prev = std::numeric_limits<double>::quiet_NaN();
  double last = prev;
  while (nodes <= max_nodes) {
    const RootSample sample = eval_at_roots(p, nodes);
    const double mean = discrete_pow_mean(sample, alpha);
    prev = last;
    last = std::pow(mean, 1.0 / alpha);
    if (!std::isnan(prev)) {
      const double scale = std::max(last, prev);
      const double change = scale == 0.0 ? 0.0 : std::abs(last - prev) / scale;
      if (change < tolerance) {
        NormEstimate est;
        est.alpha = alpha;
        est.value = last;
        est.method = NormMethod::Sampled;
        est.rel_error_bound = change;
        est.nodes_used = nodes;
        return est;
      }
    }
    nodes *= 2;
  }
  throw convergence_error(
      "norm_sampled: no convergence below tolerance within " +
          std::to_string(max_nodes) + " nodes",
      last, prev, max_nodes);
}

double mz_discrete_mean(const CoeffPoly& p, double alpha,
                        std::size_t n_nodes) {
  if (alpha <= 1.0)
    throw std::invalid_argument("mz_discrete_mean: alpha must exceed 1");
  if (n_nodes == 0)
    throw std::invalid_argument("mz_discrete_mean: node count must be >= 1");
  return discrete_pow_mean(eval_at_roots(p, n_nodes), alpha);
}

std::pair<double, double> mz_ratio_experiment(std::size_t degree, double alpha,
                                              std::size_t trials,
                                              std::uint64_t seed) {
  if (degree == 0)
    throw std::invalid_argument("mz_ratio_experiment: degree must be >= 1");
  if (trials == 0)
    throw std::invalid_argument("mz_ratio_experiment: empty experiment");
  if (alpha <= 1.0)
    throw std::invalid_argument("mz_ratio_experiment: alpha must exceed 1");
  Rng rng(seed);
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<std::complex<double>> c(degree + 1, {0.0, 0.0});
    for (std::size_t j = 1; j <= degree; ++j)
      c[j] = {static_cast<double>(rng.next_sign()), 0.0};
    const CoeffPoly p = CoeffPoly::dense(PolyKind::Custom, std::move(c));
    const double mean = mz_discrete_mean(p, alpha, degree);
    const double nrm = norm_sampled(p, alpha, 1e-9).value;
    const double ratio = mean / std::pow(nrm, alpha);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  return {lo, hi};
}

NormEstimate sup_norm_estimate(const CoeffPoly& p, unsigned oversample) {
  if (oversample < 4)
    throw std::invalid_argument("sup_norm_estimate: oversample must be >= 4");
  const std::size_t nodes =
      oversample * (static_cast<std::size_t>(p.degree()) + 1);
  const RootSample sample = eval_at_roots(p, nodes);
  double max_sq = 0.0;
  for (const auto& v : sample.values)
    max_sq = std::max(max_sq, v.real() * v.real() + v.imag() * v.imag());
  NormEstimate est;
  est.alpha = std::numeric_limits<double>::infinity();
  est.value = std::sqrt(max_sq);
  est.method = NormMethod::SupEstimate;
  est.rel_error_bound = std::numbers::pi * static_cast<double>(p.degree()) /
                        static_cast<double>(nodes);
  est.nodes_used = nodes;
  return est;
}

}  // namespace semiflat
