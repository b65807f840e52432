#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "semiflat/arith.hpp"

namespace semiflat {

enum class PolyKind {
  LiouvillePoly,
  MoebiusPoly,
  LacunaryCosine,
  RudinShapiroP,
  RudinShapiroQ,
  Custom,
};

enum class GapKind { PaperDoubleExp, Geometric };

struct LacunaryGaps {
  GapKind kind = GapKind::Geometric;
  std::uint32_t q = 2;  // ratio for Geometric; ignored for PaperDoubleExp
};

struct CosineTerm {
  std::int64_t frequency;
  double amplitude;
};

// Largest frequency a lacunary build may request; keeps densified arrays and
// transform lengths bounded.
inline constexpr std::int64_t kLacunaryDegreeBudget = std::int64_t{1} << 17;

// A trigonometric polynomial, stored either as a dense array of analytic
// coefficients (index k holds the coefficient of z^k) or as a sparse list of
// cosine terms sum a_t cos(f_t theta). Immutable after construction.
class CoeffPoly {
 public:
  static CoeffPoly dense(PolyKind kind,
                         std::vector<std::complex<double>> coeffs);
  static CoeffPoly cosine(PolyKind kind, std::vector<CosineTerm> terms);

  PolyKind kind() const noexcept { return kind_; }
  bool is_cosine() const noexcept { return !cosine_.empty(); }
  std::int64_t degree() const noexcept { return degree_; }

  // Dense coefficient array; empty for cosine-form polynomials.
  const std::vector<std::complex<double>>& coefficients() const noexcept {
    return coeffs_;
  }
  const std::vector<CosineTerm>& cosine_terms() const noexcept {
    return cosine_;
  }

  // Value at z = 1 (the coefficient sum).
  std::complex<double> coefficient_sum() const;

 private:
  CoeffPoly() = default;
  PolyKind kind_ = PolyKind::Custom;
  std::int64_t degree_ = 0;
  std::vector<std::complex<double>> coeffs_;
  std::vector<CosineTerm> cosine_;
};

// Values of a polynomial at the M-th roots of unity, values[j] = P(e^{2 pi i j/M}).
struct RootSample {
  std::size_t node_count = 0;
  std::vector<std::complex<double>> values;
};

enum class EvalStrategy { Auto, FastTransform, Horner };

CoeffPoly build_liouville_poly(std::size_t n, const SieveTable& table);
CoeffPoly build_mobius_poly(std::size_t n, const SieveTable& table);

// Cosine polynomial with unit amplitudes at frequencies 2^{2^k} (k = 1..n)
// or q^k (k = 1..n).
CoeffPoly build_lacunary(std::size_t n, LacunaryGaps gaps);

// (P_k, Q_k) with P_0 = Q_0 = 1, P_{k+1} = P_k + z^{2^k} Q_k,
// Q_{k+1} = P_k - z^{2^k} Q_k; all coefficients are +-1, degree 2^k - 1.
std::pair<CoeffPoly, CoeffPoly> build_rudin_shapiro(unsigned k);

// Auto picks a zero-padded transform when M >= degree + 1 and per-node Horner
// summation otherwise (where folding z^M -> 1 aliases high coefficients).
RootSample eval_at_roots(const CoeffPoly& p, std::size_t node_count,
                         EvalStrategy strategy = EvalStrategy::Auto);

// Dense analytic polynomial with the same modulus on the unit circle.
// Cosine-form input is shifted by z^{g_max}; dense input is returned as is.
CoeffPoly analytic_equivalent(const CoeffPoly& p);

// CSV lines "index,re,im" with header. For cosine-form polynomials rows carry
// (frequency, amplitude, 0).
void write_poly_csv(const CoeffPoly& p, std::ostream& out);

}  // namespace semiflat
