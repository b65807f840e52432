#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace semiflat {

// Input exceeds a configured budget (memory, degree, node cap).
class size_error : public std::runtime_error {
 public:
  explicit size_error(const std::string& what) : std::runtime_error(what) {}
};

// An iterative scheme hit its budget before stabilizing; carries the last two
// iterates so callers can report partial results.
class convergence_error : public std::runtime_error {
 public:
  convergence_error(const std::string& what, double last, double previous,
                    std::size_t nodes_used)
      : std::runtime_error(what),
        last_(last),
        previous_(previous),
        nodes_used_(nodes_used) {}

  double last() const noexcept { return last_; }
  double previous() const noexcept { return previous_; }
  std::size_t nodes_used() const noexcept { return nodes_used_; }

 private:
  double last_;
  double previous_;
  std::size_t nodes_used_;
};

// Evaluation requested exactly at a pole; carries the residue there.
class pole_error : public std::domain_error {
 public:
  pole_error(const std::string& what, std::complex<double> residue)
      : std::domain_error(what), residue_(residue) {}

  std::complex<double> residue() const noexcept { return residue_; }

 private:
  std::complex<double> residue_;
};

}  // namespace semiflat
