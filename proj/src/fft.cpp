#include "semiflat/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace semiflat::fft {
namespace {

std::mutex plan_mutex;
std::map<std::pair<std::size_t, int>, fftw_plan>& plan_cache() {
  static auto* cache = new std::map<std::pair<std::size_t, int>, fftw_plan>();
  return *cache;
}

// Planning is not thread safe in FFTW; executing distinct or shared plans on
// caller-owned buffers is. FFTW_UNALIGNED lets one plan serve any buffer.
fftw_plan plan_for(std::size_t n, int sign) {
  std::lock_guard<std::mutex> lock(plan_mutex);
  auto& cache = plan_cache();
  const auto key = std::make_pair(n, sign);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  std::vector<std::complex<double>> scratch(n);
  auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
  fftw_plan p =
      fftw_plan_dft_1d(static_cast<int>(n), buf, buf,
                       sign > 0 ? FFTW_BACKWARD : FFTW_FORWARD,
                       FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (p == nullptr) throw std::runtime_error("fft: planner failed");
  cache.emplace(key, p);
  return p;
}

}  // namespace

void transform(std::vector<std::complex<double>>& data, int sign) {
  const std::size_t n = data.size();
  if (n <= 1) return;
  if (n > static_cast<std::size_t>(1) << 30)
    throw std::length_error("fft: transform length over 2^30");
  fftw_plan p = plan_for(n, sign);
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(p, buf, buf);
}

std::size_t good_size(std::size_t n) {
  std::size_t s = 1;
  while (s < n) s <<= 1;
  return s;
}

}  // namespace semiflat::fft
