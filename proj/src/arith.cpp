#include "semiflat/arith.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>

#include "semiflat/errors.hpp"

namespace semiflat {
namespace {

constexpr std::size_t kPrefixStride = 1024;

std::uint64_t isqrt_u64(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Linear sieve: each composite is crossed off exactly once via its smallest
// prime factor. Serial; used below SieveOptions::parallel_threshold and as
// the reference the segmented path is tested against.
void linear_fill(SieveKind kind, std::vector<std::int8_t>& v) {
  const std::size_t n = v.size() - 1;
  v[1] = 1;
  if (n < 2) return;
  std::vector<std::uint8_t> composite(n + 1, 0);
  std::vector<std::uint32_t> primes;
  primes.reserve(static_cast<std::size_t>(
      n / std::max(1.0, std::log(static_cast<double>(n)) - 1.2)));
  for (std::size_t i = 2; i <= n; ++i) {
    if (!composite[i]) {
      primes.push_back(static_cast<std::uint32_t>(i));
      v[i] = -1;
    }
    for (std::uint32_t p : primes) {
      const std::size_t ip = i * p;
      if (ip > n) break;
      composite[ip] = 1;
      if (i % p == 0) {
        // p^2 divides ip: lambda flips sign, mu vanishes.
        v[ip] = kind == SieveKind::Liouville ? static_cast<std::int8_t>(-v[i])
                                             : static_cast<std::int8_t>(0);
        break;
      }
      v[ip] = static_cast<std::int8_t>(-v[i]);
    }
  }
}

// Segmented factorization: per segment, divide out every base prime
// (p <= sqrt(n_max)); whatever remains is 1 or a single large prime.
// Segments are independent, so the loop parallelizes without coordination.
void segmented_fill(SieveKind kind, std::vector<std::int8_t>& v,
                    std::size_t segment_size) {
  const std::size_t n = v.size() - 1;
  const auto base = primes_up_to(static_cast<std::uint32_t>(isqrt_u64(n)));
  const std::size_t n_segments = (n + segment_size - 1) / segment_size;
#pragma omp parallel
  {
    std::vector<std::uint32_t> rem(segment_size);
    std::vector<std::uint8_t> flags(segment_size);  // bit0 parity, bit1 square
#pragma omp for schedule(dynamic)
    for (std::ptrdiff_t seg = 0; seg < static_cast<std::ptrdiff_t>(n_segments);
         ++seg) {
      const std::size_t lo = 1 + static_cast<std::size_t>(seg) * segment_size;
      const std::size_t hi = std::min(n + 1, lo + segment_size);
      const std::size_t len = hi - lo;
      for (std::size_t i = 0; i < len; ++i) {
        rem[i] = static_cast<std::uint32_t>(lo + i);
        flags[i] = 0;
      }
      for (std::uint32_t p : base) {
        const std::uint64_t p64 = p;
        for (std::uint64_t m = ((lo + p64 - 1) / p64) * p64; m < hi; m += p64) {
          const std::size_t idx = static_cast<std::size_t>(m - lo);
          std::uint32_t r = rem[idx];
          unsigned e = 0;
          while (r % p == 0) {
            r /= p;
            ++e;
          }
          rem[idx] = r;
          flags[idx] ^= static_cast<std::uint8_t>(e & 1u);
          if (e >= 2) flags[idx] |= 2u;
        }
      }
      for (std::size_t i = 0; i < len; ++i) {
        unsigned f = flags[i];
        if (rem[i] > 1) f ^= 1u;  // leftover prime factor > sqrt(n)
        const std::int8_t lam = (f & 1u) ? -1 : 1;
        v[lo + i] =
            (kind == SieveKind::Moebius && (f & 2u)) ? std::int8_t{0} : lam;
      }
    }
  }
}

void check_size(std::size_t n_max, const SieveOptions& options) {
  if (n_max == 0) throw size_error("sieve: n_max must be at least 1");
  if (n_max > options.max_n)
    throw size_error("sieve: n_max " + std::to_string(n_max) +
                     " exceeds configured budget " +
                     std::to_string(options.max_n));
  if (n_max >= (std::uint64_t{1} << 32))
    throw size_error("sieve: n_max must be below 2^32");
}

SieveTable build(SieveKind kind, std::size_t n_max,
                 const SieveOptions& options) {
  check_size(n_max, options);
  std::vector<std::int8_t> v(n_max + 1, 0);
  if (n_max <= options.parallel_threshold) {
    linear_fill(kind, v);
  } else {
    segmented_fill(kind, v, std::max<std::size_t>(options.segment_size, 1024));
  }
  return SieveTable::from_values(kind, std::move(v), options);
}

}  // namespace

int SieveTable::value(std::size_t n) const {
  if (n == 0 || n > n_max_)
    throw std::out_of_range("SieveTable::value: index out of [1, n_max]");
  return values_[n];
}

std::int64_t SieveTable::prefix(std::size_t x) const {
  if (x > n_max_) throw std::out_of_range("SieveTable::prefix: x > n_max");
  if (!sparse_prefix_) return prefix_[x];
  const std::size_t cp = x / kPrefixStride;
  std::int64_t acc = prefix_[cp];
  for (std::size_t i = cp * kPrefixStride + 1; i <= x; ++i) acc += values_[i];
  return acc;
}

void SieveTable::build_prefix(std::size_t sparse_threshold) {
  if (n_max_ <= sparse_threshold) {
    sparse_prefix_ = false;
    prefix_.assign(n_max_ + 1, 0);
    std::int64_t acc = 0;
    for (std::size_t x = 1; x <= n_max_; ++x) {
      acc += values_[x];
      prefix_[x] = acc;
    }
  } else {
    sparse_prefix_ = true;
    prefix_.assign(n_max_ / kPrefixStride + 1, 0);
    std::int64_t acc = 0;
    for (std::size_t x = 1; x <= n_max_; ++x) {
      acc += values_[x];
      if (x % kPrefixStride == 0) prefix_[x / kPrefixStride] = acc;
    }
  }
}

SieveTable SieveTable::from_values(SieveKind kind,
                                   std::vector<std::int8_t> values,
                                   const SieveOptions& options) {
  if (values.size() < 2)
    throw size_error("SieveTable: need at least one value");
  SieveTable t;
  t.kind_ = kind;
  t.n_max_ = values.size() - 1;
  t.values_ = std::move(values);
  t.values_[0] = 0;
  t.build_prefix(options.sparse_prefix_threshold);
  return t;
}

SieveTable sieve_liouville(std::size_t n_max, const SieveOptions& options) {
  return build(SieveKind::Liouville, n_max, options);
}

SieveTable sieve_moebius(std::size_t n_max, const SieveOptions& options) {
  return build(SieveKind::Moebius, n_max, options);
}

int liouville_oracle(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("liouville_oracle: n must be >= 1");
  unsigned omega = 0;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
    while (n % p == 0) {
      n /= p;
      ++omega;
    }
  }
  if (n > 1) ++omega;
  return (omega & 1u) ? -1 : 1;
}

int moebius_oracle(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("moebius_oracle: n must be >= 1");
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      sign = -sign;
    }
  }
  if (n > 1) sign = -sign;
  return sign;
}

std::int64_t partial_sum(const SieveTable& table, std::size_t x) {
  if (x == 0 || x > table.n_max())
    throw std::out_of_range("partial_sum: x out of [1, n_max]");
  return table.prefix(x);
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  std::vector<std::uint8_t> composite(static_cast<std::size_t>(limit) + 1, 0);
  for (std::size_t i = 2; i * i <= limit; ++i) {
    if (composite[i]) continue;
    for (std::size_t j = i * i; j <= limit; j += i) composite[j] = 1;
  }
  primes.reserve(static_cast<std::size_t>(
      limit / std::max(1.0, std::log(static_cast<double>(limit)) - 1.2)));
  for (std::size_t i = 2; i <= limit; ++i)
    if (!composite[i]) primes.push_back(static_cast<std::uint32_t>(i));
  return primes;
}

void save_table(const SieveTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw std::runtime_error("save_table: cannot open " + path.string());
  const char magic[4] = {'S', 'F', 'L', '1'};
  out.write(magic, 4);
  const char kind = static_cast<char>(table.kind());
  out.write(&kind, 1);
  const std::uint64_t n = table.n_max();
  unsigned char len[8];
  for (int i = 0; i < 8; ++i)
    len[i] = static_cast<unsigned char>((n >> (8 * i)) & 0xffu);
  out.write(reinterpret_cast<const char*>(len), 8);
  out.write(reinterpret_cast<const char*>(table.values().data() + 1),
            static_cast<std::streamsize>(n));
  if (!out)
    throw std::runtime_error("save_table: write failed for " + path.string());
}

SieveTable load_table(const std::filesystem::path& path,
                      const SieveOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("load_table: cannot open " + path.string());
  char magic[4] = {};
  in.read(magic, 4);
  if (!in || std::memcmp(magic, "SFL1", 4) != 0)
    throw std::runtime_error("load_table: bad magic in " + path.string());
  char kind_byte = 0;
  in.read(&kind_byte, 1);
  if (!in || (kind_byte != 0 && kind_byte != 1))
    throw std::runtime_error("load_table: bad kind byte in " + path.string());
  unsigned char len[8] = {};
  in.read(reinterpret_cast<char*>(len), 8);
  if (!in) throw std::runtime_error("load_table: truncated header");
  std::uint64_t n = 0;
  for (int i = 0; i < 8; ++i) n |= static_cast<std::uint64_t>(len[i]) << (8 * i);
  if (n == 0 || n > options.max_n)
    throw size_error("load_table: stored n_max outside configured budget");
  std::vector<std::int8_t> values(n + 1, 0);
  in.read(reinterpret_cast<char*>(values.data() + 1),
          static_cast<std::streamsize>(n));
  if (!in) throw std::runtime_error("load_table: truncated value array");
  const SieveKind kind = static_cast<SieveKind>(kind_byte);
  for (std::uint64_t i = 1; i <= n; ++i) {
    const std::int8_t v = values[i];
    if (v < -1 || v > 1 || (kind == SieveKind::Liouville && v == 0))
      throw std::runtime_error("load_table: corrupt value array");
  }
  return SieveTable::from_values(kind, std::move(values), options);
}

}  // namespace semiflat
