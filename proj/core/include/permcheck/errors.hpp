#pragma once

#include <stdexcept>
#include <string>

namespace permcheck {

// Thrown when a construction would exceed a configured resource cap
// (group order, permutation degree, lattice enumeration bound).
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown on malformed external input (group files, cycle strings,
// group-name grammar).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Resource caps. Exhaustive lattice work is quadratic in the group order,
// so everything above these bounds is rejected up front instead of silently
// grinding.
struct Caps {
  int max_group_order = 2000;   // closure aborts beyond this many elements
  int max_degree = 32;          // permutation points accepted from input
  int max_lattice_order = 360;  // largest group whose full lattice we enumerate
};

}  // namespace permcheck
