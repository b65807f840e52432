#pragma once

#include <complex>
#include <cstddef>

#include "semiflat/poly.hpp"

namespace semiflat::reference {

// Serial baselines for the parallel/transform kernels. Kept deliberately
// plain: single thread, straight loops, no shared machinery beyond the
// polynomial type itself.

// Horner (dense) or direct cosine summation at one point on the circle.
std::complex<double> eval_point(const CoeffPoly& p, std::complex<double> z);

// Plain serial (1/M) sum_j |P(xi_{M,j})|^alpha.
double discrete_mean(const CoeffPoly& p, double alpha, std::size_t n_nodes);

// Schoolbook m-fold self-convolution norm, any degree.
double norm_even_schoolbook(const CoeffPoly& p, unsigned two_m);

}  // namespace semiflat::reference
