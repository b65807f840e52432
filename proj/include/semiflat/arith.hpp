#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace semiflat {

enum class SieveKind : std::uint8_t { Liouville = 0, Moebius = 1 };

struct SieveOptions {
  // Above this size construction switches from the serial linear sieve to
  // OpenMP-parallel segmented factorization.
  std::size_t parallel_threshold = std::size_t{1} << 26;
  // Entries per segment in the parallel path; bounds per-thread working
  // memory (5 bytes per entry).
  std::size_t segment_size = std::size_t{1} << 22;
  // Above this size prefix sums are checkpointed every 1024 entries instead
  // of stored densely; partial sums then finish with a short local scan.
  std::size_t sparse_prefix_threshold = 10'000'000;
  // Hard cap on n_max (one byte per value).
  std::size_t max_n = 2'000'000'000;
};

// Values of the Liouville or Moebius function on [1, n_max] plus prefix sums.
// Immutable once built; queries are read-only and safe to share across
// threads.
class SieveTable {
 public:
  SieveKind kind() const noexcept { return kind_; }
  std::size_t n_max() const noexcept { return n_max_; }

  // value(n) for 1 <= n <= n_max; entries are in {-1, 0, +1}.
  int value(std::size_t n) const;

  // Sum of values over [1, x]; L(x) for Liouville, M(x) for Moebius.
  std::int64_t prefix(std::size_t x) const;

  // Raw value array; index 0 is an unused sentinel.
  std::span<const std::int8_t> values() const noexcept { return values_; }

  static SieveTable from_values(SieveKind kind, std::vector<std::int8_t> values,
                                const SieveOptions& options = {});

 private:
  SieveTable() = default;
  void build_prefix(std::size_t sparse_threshold);

  SieveKind kind_ = SieveKind::Liouville;
  std::size_t n_max_ = 0;
  bool sparse_prefix_ = false;
  std::vector<std::int8_t> values_;   // size n_max + 1, [0] = 0
  std::vector<std::int64_t> prefix_;  // dense, or one checkpoint per stride
};

SieveTable sieve_liouville(std::size_t n_max, const SieveOptions& options = {});
SieveTable sieve_moebius(std::size_t n_max, const SieveOptions& options = {});

// Trial-division oracles, independent of the sieve path.
int liouville_oracle(std::uint64_t n);
int moebius_oracle(std::uint64_t n);

// prefix(x) with range validation; 1 <= x <= table.n_max().
std::int64_t partial_sum(const SieveTable& table, std::size_t x);

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

// Binary cache: magic "SFL1", kind byte, little-endian u64 n_max, raw int8
// values for n = 1..n_max. Prefix sums are rebuilt on load.
void save_table(const SieveTable& table, const std::filesystem::path& path);
SieveTable load_table(const std::filesystem::path& path,
                      const SieveOptions& options = {});

}  // namespace semiflat
