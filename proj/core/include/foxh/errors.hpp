#pragma once

#include <stdexcept>
#include <string>

namespace foxh {

/// Invalid parameterization (order counts, weights, malformed input files).
class spec_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Gamma factor evaluated at a non-positive integer.  `factor` identifies the
/// offending gamma in a Mellin kernel (-1 when standalone) and `lattice_index`
/// the pole index within that factor's lattice.
class pole_error : public std::domain_error {
 public:
  explicit pole_error(const std::string& what, int factor = -1, long lattice_index = -1)
      : std::domain_error(what), factor_(factor), lattice_index_(lattice_index) {}
  int factor() const noexcept { return factor_; }
  long lattice_index() const noexcept { return lattice_index_; }

 private:
  int factor_;
  long lattice_index_;
};

/// A stated inequality of a lemma/theorem does not hold for the given
/// parameters.  The message names the failed constraint.
class precondition_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A series or quadrature failed to converge (divergent input, truncation cap
/// reached with no stable estimate, interlaced pole lattices, ...).
class convergence_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// exp(log-magnitude) exceeds the representable double range.
class overflow_error : public std::range_error {
 public:
  using std::range_error::range_error;
};

/// A hypothesis set admits no parameters (empty constraint region).
class infeasible_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace foxh
