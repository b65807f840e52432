#include "semiflat/poly.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

#include "semiflat/errors.hpp"
#include "semiflat/fft.hpp"

namespace semiflat {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::int64_t dense_degree(const std::vector<std::complex<double>>& c) {
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] != std::complex<double>(0.0, 0.0))
      return static_cast<std::int64_t>(i);
  }
  return 0;
}

}  // namespace

CoeffPoly CoeffPoly::dense(PolyKind kind,
                           std::vector<std::complex<double>> coeffs) {
  if (coeffs.empty())
    throw std::invalid_argument("CoeffPoly: empty coefficient array");
  CoeffPoly p;
  p.kind_ = kind;
  p.coeffs_ = std::move(coeffs);
  p.degree_ = dense_degree(p.coeffs_);
  return p;
}

CoeffPoly CoeffPoly::cosine(PolyKind kind, std::vector<CosineTerm> terms) {
  if (terms.empty())
    throw std::invalid_argument("CoeffPoly: empty cosine term list");
  CoeffPoly p;
  p.kind_ = kind;
  p.cosine_ = std::move(terms);
  std::int64_t deg = 0;
  for (const auto& t : p.cosine_) {
    if (t.frequency < 0)
      throw std::invalid_argument("CoeffPoly: negative cosine frequency");
    deg = std::max(deg, t.frequency);
  }
  p.degree_ = deg;
  return p;
}

std::complex<double> CoeffPoly::coefficient_sum() const {
  if (is_cosine()) {
    double s = 0.0;
    for (const auto& t : cosine_) s += t.amplitude;
    return {s, 0.0};
  }
  std::complex<double> s{0.0, 0.0};
  for (const auto& c : coeffs_) s += c;
  return s;
}

CoeffPoly build_liouville_poly(std::size_t n, const SieveTable& table) {
  if (table.kind() != SieveKind::Liouville)
    throw std::invalid_argument("build_liouville_poly: table kind mismatch");
  if (n == 0) throw std::invalid_argument("build_liouville_poly: n must be >= 1");
  if (n > table.n_max())
    throw std::invalid_argument("build_liouville_poly: n exceeds table n_max");
  std::vector<std::complex<double>> c(n + 1);
  for (std::size_t j = 1; j <= n; ++j)
    c[j] = {static_cast<double>(table.value(j)), 0.0};
  return CoeffPoly::dense(PolyKind::LiouvillePoly, std::move(c));
}

CoeffPoly build_mobius_poly(std::size_t n, const SieveTable& table) {
  if (table.kind() != SieveKind::Moebius)
    throw std::invalid_argument("build_mobius_poly: table kind mismatch");
  if (n == 0) throw std::invalid_argument("build_mobius_poly: n must be >= 1");
  if (n > table.n_max())
    throw std::invalid_argument("build_mobius_poly: n exceeds table n_max");
  std::vector<std::complex<double>> c(n + 1);
  for (std::size_t j = 1; j <= n; ++j)
    c[j] = {static_cast<double>(table.value(j)), 0.0};
  return CoeffPoly::dense(PolyKind::MoebiusPoly, std::move(c));
}

CoeffPoly build_lacunary(std::size_t n, LacunaryGaps gaps) {
  if (n == 0) throw std::invalid_argument("build_lacunary: n must be >= 1");
  std::vector<CosineTerm> terms;
  terms.reserve(n);
  if (gaps.kind == GapKind::PaperDoubleExp) {
    for (std::size_t k = 1; k <= n; ++k) {
      if (k >= 63 || (std::uint64_t{1} << k) >= 63 ||
          (std::int64_t{1} << (std::uint64_t{1} << k)) > kLacunaryDegreeBudget)
        throw size_error(
            "build_lacunary: frequency 2^(2^" + std::to_string(k) +
            ") exceeds degree budget " + std::to_string(kLacunaryDegreeBudget));
      terms.push_back({std::int64_t{1} << (std::uint64_t{1} << k), 1.0});
    }
  } else {
    if (gaps.q < 2)
      throw std::invalid_argument("build_lacunary: geometric ratio must be >= 2");
    std::int64_t f = 1;
    for (std::size_t k = 1; k <= n; ++k) {
      if (f > kLacunaryDegreeBudget / gaps.q)
        throw size_error("build_lacunary: frequency q^" + std::to_string(k) +
                         " exceeds degree budget " +
                         std::to_string(kLacunaryDegreeBudget));
      f *= gaps.q;
      terms.push_back({f, 1.0});
    }
  }
  return CoeffPoly::cosine(PolyKind::LacunaryCosine, std::move(terms));
}

std::pair<CoeffPoly, CoeffPoly> build_rudin_shapiro(unsigned k) {
  if (k > 20)
    throw size_error("build_rudin_shapiro: k over cap 20 (degree 2^k - 1)");
  std::vector<std::complex<double>> p{{1.0, 0.0}};
  std::vector<std::complex<double>> q{{1.0, 0.0}};
  for (unsigned step = 0; step < k; ++step) {
    const std::size_t half = p.size();
    std::vector<std::complex<double>> np(2 * half), nq(2 * half);
    for (std::size_t i = 0; i < half; ++i) {
      np[i] = p[i];
      np[half + i] = q[i];
      nq[i] = p[i];
      nq[half + i] = -q[i];
    }
    p = std::move(np);
    q = std::move(nq);
  }
  return {CoeffPoly::dense(PolyKind::RudinShapiroP, std::move(p)),
          CoeffPoly::dense(PolyKind::RudinShapiroQ, std::move(q))};
}

RootSample eval_at_roots(const CoeffPoly& p, std::size_t node_count,
                         EvalStrategy strategy) {
  if (node_count == 0)
    throw std::invalid_argument("eval_at_roots: node count must be >= 1");
  RootSample out;
  out.node_count = node_count;
  out.values.resize(node_count);
  const auto m = static_cast<std::int64_t>(node_count);

  if (p.is_cosine()) {
    const auto& terms = p.cosine_terms();
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(node_count);
         ++j) {
      double v = 0.0;
      for (const auto& t : terms) {
        const std::int64_t r = (j * t.frequency) % m;
        v += t.amplitude * std::cos(kTwoPi * static_cast<double>(r) /
                                    static_cast<double>(m));
      }
      out.values[static_cast<std::size_t>(j)] = {v, 0.0};
    }
    return out;
  }

  const auto& c = p.coefficients();
  const bool fits_transform =
      node_count >= static_cast<std::size_t>(p.degree()) + 1;
  bool use_transform = fits_transform;
  if (strategy == EvalStrategy::Horner) use_transform = false;
  if (strategy == EvalStrategy::FastTransform && !fits_transform)
    throw std::invalid_argument(
        "eval_at_roots: transform path needs node count >= degree + 1");

  if (use_transform) {
    std::vector<std::complex<double>> buf(node_count, {0.0, 0.0});
    const std::size_t n_coeff =
        std::min(c.size(), static_cast<std::size_t>(p.degree()) + 1);
    std::copy(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(n_coeff),
              buf.begin());
    fft::transform(buf, +1);
    out.values = std::move(buf);
    return out;
  }

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(node_count);
       ++j) {
    const double angle =
        kTwoPi * static_cast<double>(j) / static_cast<double>(node_count);
    const std::complex<double> z{std::cos(angle), std::sin(angle)};
    std::complex<double> v = c.back();
    for (std::size_t k = c.size() - 1; k-- > 0;) v = v * z + c[k];
    out.values[static_cast<std::size_t>(j)] = v;
  }
  return out;
}

CoeffPoly analytic_equivalent(const CoeffPoly& p) {
  if (!p.is_cosine()) return p;
  const std::int64_t g = p.degree();
  std::vector<std::complex<double>> c(static_cast<std::size_t>(2 * g) + 1,
                                      {0.0, 0.0});
  for (const auto& t : p.cosine_terms()) {
    if (t.frequency == 0) {
      c[static_cast<std::size_t>(g)] += t.amplitude;
    } else {
      c[static_cast<std::size_t>(g + t.frequency)] += t.amplitude * 0.5;
      c[static_cast<std::size_t>(g - t.frequency)] += t.amplitude * 0.5;
    }
  }
  return CoeffPoly::dense(PolyKind::Custom, std::move(c));
}

void write_poly_csv(const CoeffPoly& p, std::ostream& out) {
  out << "index,re,im\n";
  char buf[64];
  auto fmt = [&buf](double x) {
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return std::string(buf);
  };
  if (p.is_cosine()) {
    for (const auto& t : p.cosine_terms())
      out << t.frequency << ',' << fmt(t.amplitude) << ",0\n";
    return;
  }
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i <= static_cast<std::size_t>(p.degree()); ++i)
    out << i << ',' << fmt(c[i].real()) << ',' << fmt(c[i].imag()) << '\n';
}

}  // namespace semiflat
