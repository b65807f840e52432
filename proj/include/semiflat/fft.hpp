#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace semiflat::fft {

// In-place unnormalized DFT of the full vector. sign=+1 computes
// X_j = sum_k x_k e^{+2 pi i jk/n}, sign=-1 the conjugate transform.
// Any length n >= 1 is supported. Plans are cached per (n, sign) and the
// planner never measures, so results are reproducible run to run.
void transform(std::vector<std::complex<double>>& data, int sign);

// Smallest power of two >= n; used where the transform length is free.
std::size_t good_size(std::size_t n);

}  // namespace semiflat::fft
