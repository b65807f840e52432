#include "semiflat/zeta.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "semiflat/errors.hpp"
#include "semiflat/parallel.hpp"

namespace semiflat {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;

void require_finite(Complex s, const char* where) {
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
    throw std::invalid_argument(std::string(where) +
                                ": non-finite argument rejected");
}

void require_re_above_one(Complex s, const char* where) {
  require_finite(s, where);
  if (s.real() <= 1.0)
    throw std::domain_error(std::string(where) + ": requires Re(s) > 1");
}

Complex cpow_real_base(double base, Complex e) {
  // base^e for base > 0
  return std::exp(e * std::log(base));
}

// 1 - e^w without cancellation for small |w|.
Complex one_minus_exp(Complex w) {
  if (std::abs(w) < 1e-4) {
    // -(w + w^2/2 + w^3/6 + w^4/24)
    return -(w + w * w * (0.5 + w * (1.0 / 6.0 + w * (1.0 / 24.0))));
  }
  return 1.0 - std::exp(w);
}

// Lanczos coefficients, g = 607/128.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

Complex gamma_right_half(Complex s) {
  // valid for Re(s) >= 0.5
  const Complex z = s - 1.0;
  Complex acc{kLanczos[0], 0.0};
  for (int k = 1; k < 15; ++k) acc += kLanczos[k] / (z + static_cast<double>(k));
  const Complex t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * kPi) * std::exp((z + 0.5) * std::log(t) - t) * acc;
}

// Terms for alternating-series acceleration; more terms for larger |Im(s)|.
int eta_term_count(Complex s) {
  const int n = 40 + static_cast<int>(std::ceil(1.3 * std::abs(s.imag())));
  return std::min(n, 380);
}

Complex eta_accelerated(Complex s) {
  const int n = eta_term_count(s);
  double d = std::pow(3.0 + 2.0 * std::sqrt(2.0), n);
  d = (d + 1.0 / d) / 2.0;
  double b = -1.0;
  double c = -d;
  Complex acc{0.0, 0.0};
  for (int k = 0; k < n; ++k) {
    c = b - c;
    acc += c * std::exp(-s * std::log(static_cast<double>(k + 1)));
    b *= (static_cast<double>(k) + n) * (static_cast<double>(k) - n) /
         ((k + 0.5) * (k + 1.0));
  }
  return acc / d;
}

Complex zeta_eta_raw(Complex s, bool allow_fallback);

// Average of nearby points, used at the removable zeros of 1 - 2^{1-s}.
Complex zeta_eta_nearby_average(Complex s) {
  const double delta = 1e-3;
  const Complex a = zeta_eta_raw(s + Complex{0.0, delta}, false);
  const Complex b = zeta_eta_raw(s - Complex{0.0, delta}, false);
  return (a + b) * 0.5;
}

Complex zeta_eta_raw(Complex s, bool allow_fallback) {
  const Complex denom = one_minus_exp((1.0 - s) * kLn2);
  if (std::abs(denom) < 1e-6) {
    if (std::abs(s - Complex{1.0, 0.0}) < 1e-3)
      throw pole_error("zeta: simple pole with residue 1 at s = 1",
                       Complex{1.0, 0.0});
    if (!allow_fallback)
      throw convergence_error(
          "zeta_eta: ill-conditioned near a removable zero of 1 - 2^{1-s}",
          0.0, 0.0, 0);
    return zeta_eta_nearby_average(s);
  }
  return eta_accelerated(s) / denom;
}

// Coefficients of x/(e^x - 1): B_n / n! for n = 0, 1, 2, 4, ..., 40.
struct BoseCoeff {
  int n;
  double c;
};
constexpr BoseCoeff kBoseSeries[] = {
    {0, 1.0},
    {1, -0.5},
    {2, 0.0833333333333333333},
    {4, -0.00138888888888888889},
    {6, 0.0000330687830687830688},
    {8, -8.2671957671957672e-7},
    {10, 2.0876756987868099e-8},
    {12, -5.28419013868749318e-10},
    {14, 1.33825365306846788e-11},
    {16, -3.38968029632258287e-13},
    {18, 8.58606205627784456e-15},
    {20, -2.17486869855806187e-16},
    {22, 5.50900282836022952e-18},
    {24, -1.39544646858125233e-19},
    {26, 3.53470703962946747e-21},
    {28, -8.95351742703754685e-23},
    {30, 2.26795245233768306e-24},
    {32, -5.74479066887220245e-26},
    {34, 1.4551724756148649e-27},
    {36, -3.68599494066531018e-29},
    {38, 9.33673425709504467e-31},
    {40, -2.36502241570062993e-32},
};

Complex bose_integrand(Complex s, double x) {
  return std::exp((s - 1.0) * std::log(x)) / std::expm1(x);
}

Complex adaptive_simpson(Complex s, double a, double b, Complex fa, Complex fb,
                         Complex fm, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const Complex flm = bose_integrand(s, lm);
  const Complex frm = bose_integrand(s, rm);
  const Complex whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  const Complex left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const Complex right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const Complex delta = left + right - whole;
  if (depth <= 0)
    throw convergence_error("bose_integral_check: quadrature depth exhausted",
                            std::abs(left + right), std::abs(whole), 0);
  if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_simpson(s, a, m, fa, fm, flm, tol * 0.5, depth - 1) +
         adaptive_simpson(s, m, b, fm, fb, frm, tol * 0.5, depth - 1);
}

}  // namespace

Complex gamma_fn(Complex s) {
  require_finite(s, "gamma_fn");
  if (s.imag() == 0.0 && s.real() <= 0.0 &&
      s.real() == std::floor(s.real())) {
    const auto k = static_cast<unsigned long long>(-s.real());
    double residue = 1.0;
    for (unsigned long long i = 1; i <= k; ++i) residue /= static_cast<double>(i);
    if (k % 2 == 1) residue = -residue;
    throw pole_error("gamma_fn: pole at s = -" + std::to_string(k), residue);
  }
  if (s.real() >= 0.5) return gamma_right_half(s);
  // reflection: Gamma(s) Gamma(1-s) = pi / sin(pi s)
  return kPi / (std::sin(kPi * s) * gamma_right_half(1.0 - s));
}

SeriesValue zeta_series(Complex s, std::uint64_t n_terms) {
  require_re_above_one(s, "zeta_series");
  if (n_terms == 0)
    throw std::invalid_argument("zeta_series: need at least one term");
  const Complex sum = chunked_sum<Complex>(n_terms, [&](std::size_t i) {
    return std::exp(-s * std::log(static_cast<double>(i + 1)));
  });
  const Complex tail =
      cpow_real_base(static_cast<double>(n_terms), 1.0 - s) / (s - 1.0);
  SeriesValue out;
  out.value = sum + tail;
  out.tail_bound = std::pow(static_cast<double>(n_terms), -s.real());
  return out;
}

Complex zeta_euler(Complex s, std::uint64_t prime_limit) {
  require_re_above_one(s, "zeta_euler");
  if (prime_limit < 2)
    throw std::invalid_argument("zeta_euler: prime limit must be >= 2");
  if (prime_limit > (std::uint64_t{1} << 32))
    throw size_error("zeta_euler: prime limit over 2^32");
  const auto primes = primes_up_to(static_cast<std::uint32_t>(prime_limit));
  Complex prod{1.0, 0.0};
  for (std::uint32_t p : primes)
    prod *= 1.0 / (1.0 - cpow_real_base(static_cast<double>(p), -s));
  return prod;
}

Complex zeta_eta(Complex s) {
  require_finite(s, "zeta_eta");
  if (s.real() <= 0.0)
    throw std::domain_error("zeta_eta: requires Re(s) > 0");
  if (s == Complex{1.0, 0.0})
    throw pole_error("zeta: simple pole with residue 1 at s = 1",
                     Complex{1.0, 0.0});
  return zeta_eta_raw(s, true);
}

Complex zeta_fe(Complex s) {
  require_finite(s, "zeta_fe");
  if (s.real() >= 1.0)
    throw std::domain_error("zeta_fe: requires Re(s) < 1");
  if (s == Complex{0.0, 0.0}) return {-0.5, 0.0};
  const Complex chi = std::exp(s * kLn2) * cpow_real_base(kPi, s - 1.0) *
                      std::sin(0.5 * kPi * s) * gamma_fn(1.0 - s);
  return chi * zeta_eta(1.0 - s);
}

Complex zeta_fn(Complex s) {
  require_finite(s, "zeta_fn");
  if (s.real() > 0.0) return zeta_eta(s);
  return zeta_fe(s);
}

Complex xi_fn(Complex s) {
  require_finite(s, "xi_fn");
  // s/2 Gamma(s/2) = Gamma(s/2 + 1) removes the pole at s = 0.
  return (s - 1.0) * gamma_fn(0.5 * s + 1.0) *
         std::exp(-0.5 * s * std::log(kPi)) * zeta_fn(s);
}

Complex e_fn(Complex t) {
  require_finite(t, "e_fn");
  return xi_fn(Complex{0.5, 0.0} + Complex{0.0, 1.0} * t);
}

IdentityCheck dirichlet_identity_check(DirichletIdentity which, Complex s,
                                       std::size_t n_terms,
                                       const SieveTable& liouville,
                                       const SieveTable& moebius) {
  require_re_above_one(s, "dirichlet_identity_check");
  if (n_terms == 0)
    throw std::invalid_argument("dirichlet_identity_check: empty sum");
  const SieveTable& table =
      which == DirichletIdentity::LambdaZeta2Zeta ? liouville : moebius;
  const SieveKind want = which == DirichletIdentity::LambdaZeta2Zeta
                             ? SieveKind::Liouville
                             : SieveKind::Moebius;
  if (table.kind() != want)
    throw std::invalid_argument("dirichlet_identity_check: table kind mismatch");
  if (n_terms > table.n_max())
    throw std::out_of_range("dirichlet_identity_check: n_terms exceeds table");

  const bool absolute = which == DirichletIdentity::AbsMuRatio;
  const auto vals = table.values();
  const Complex partial = chunked_sum<Complex>(n_terms, [&](std::size_t i) {
    const std::size_t n = i + 1;
    int v = vals[n];
    if (v == 0) return Complex{0.0, 0.0};
    if (absolute) v = 1;
    return static_cast<double>(v) *
           std::exp(-s * std::log(static_cast<double>(n)));
  });

  Complex closed;
  switch (which) {
    case DirichletIdentity::MuInvZeta:
      closed = 1.0 / zeta_eta(s);
      break;
    case DirichletIdentity::LambdaZeta2Zeta:
      closed = zeta_eta(2.0 * s) / zeta_eta(s);
      break;
    case DirichletIdentity::AbsMuRatio:
      closed = zeta_eta(s) / zeta_eta(2.0 * s);
      break;
  }

  IdentityCheck out;
  out.partial_sum = partial;
  out.closed_form = closed;
  out.residual = std::abs(partial - closed);
  out.envelope = std::pow(static_cast<double>(n_terms), 1.0 - s.real());
  return out;
}

BoseCheck bose_integral_check(Complex s) {
  require_re_above_one(s, "bose_integral_check");
  // [0, 1]: integrate the power series of x/(e^x - 1) term by term.
  Complex head{0.0, 0.0};
  for (const auto& [n, c] : kBoseSeries)
    head += c / (s + static_cast<double>(n - 1));
  // [1, upper]: adaptive Simpson; the tail beyond is below double noise.
  const double upper = 60.0 + 8.0 * std::max(0.0, s.real());
  const Complex fa = bose_integrand(s, 1.0);
  const Complex fb = bose_integrand(s, upper);
  const Complex fm = bose_integrand(s, 0.5 * (1.0 + upper));
  const Complex tail =
      adaptive_simpson(s, 1.0, upper, fa, fb, fm, 1e-13, 60);

  BoseCheck out;
  out.integral = head + tail;
  out.product = zeta_eta(s) * gamma_fn(s);
  out.residual = std::abs(out.integral - out.product);
  return out;
}

}  // namespace semiflat
