#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>

#include "semiflat/arith.hpp"

namespace semiflat {

using Complex = std::complex<double>;

// Gamma via a 15-term Lanczos approximation, reflected for Re(s) < 0.5.
// Nonpositive integers raise pole_error carrying the residue (-1)^k/k!.
Complex gamma_fn(Complex s);

struct SeriesValue {
  Complex value;
  double tail_bound = 0.0;  // scale of the truncation error, N^{-Re(s)}
};

// Direct Dirichlet series sum_{n<=N} n^{-s} plus the integral tail
// correction N^{1-s}/(s-1). Requires Re(s) > 1.
SeriesValue zeta_series(Complex s, std::uint64_t n_terms);

// Euler product over primes up to prime_limit. Requires Re(s) > 1.
Complex zeta_euler(Complex s, std::uint64_t prime_limit);

// Alternating-series continuation eta(s)/(1 - 2^{1-s}) for Re(s) > 0,
// eta summed with convergence acceleration. s = 1 raises pole_error.
// Near the removable points 1 + 2 pi i k/log 2 the value is recovered from
// nearby points with a documented accuracy downgrade.
Complex zeta_eta(Complex s);

// Right-hand side of the functional equation,
// 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s), usable for Re(s) < 1.
Complex zeta_fe(Complex s);

// Dispatcher: eta continuation for Re(s) > 0, functional equation otherwise.
Complex zeta_fn(Complex s);

// xi(s) = s(s-1)/2 pi^{-s/2} Gamma(s/2) zeta(s), computed through
// Gamma(s/2 + 1) so the s = 0 pole cancels analytically. E(t) = xi(1/2 + it).
Complex xi_fn(Complex s);
Complex e_fn(Complex t);

enum class DirichletIdentity { MuInvZeta, LambdaZeta2Zeta, AbsMuRatio };

struct IdentityCheck {
  double residual = 0.0;  // |partial Dirichlet sum - closed form|
  double envelope = 0.0;  // expected decay scale N^{1-Re(s)}
  Complex partial_sum;
  Complex closed_form;
};

// Partial Dirichlet sums against their closed forms: sum mu(n)/n^s = 1/zeta,
// sum lambda(n)/n^s = zeta(2s)/zeta(s), sum |mu(n)|/n^s = zeta(s)/zeta(2s).
// Requires Re(s) > 1 and tables covering n_terms.
IdentityCheck dirichlet_identity_check(DirichletIdentity which, Complex s,
                                       std::size_t n_terms,
                                       const SieveTable& liouville,
                                       const SieveTable& moebius);

struct BoseCheck {
  double residual = 0.0;
  Complex integral;
  Complex product;  // zeta(s) * Gamma(s)
};

// zeta(s) Gamma(s) = integral_0^inf x^{s-1}/(e^x - 1) dx, the integral done
// by a power series on [0, 1] and adaptive quadrature beyond. Re(s) > 1.
BoseCheck bose_integral_check(Complex s);

}  // namespace semiflat
