#pragma once

#include <stdexcept>
#include <string>

namespace taildep {

// Malformed input: unreadable files, bad CSV cells, inconsistent columns.
struct data_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Estimation failure: empty exceedance sets, degenerate likelihoods,
// optimizer breakdown. Distinct from precondition violations, which throw
// std::invalid_argument.
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace taildep
