#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "permcheck/errors.hpp"
#include "permcheck/permutation.hpp"

namespace permcheck {

// Parsed form of the generator file format:
//
//   # comment
//   degree 4
//   gen (1 2)(3 4)
//   gen (1 3)(2 4)
//
// Points are 1-based in files. Blank lines and '#' comments are ignored.
// The degree line must come first; at least one generator is required.
struct GroupFile {
  int degree = 0;
  std::vector<Permutation> generators;
};

GroupFile parse_group_file(std::istream& in, const Caps& caps = {});
GroupFile load_group_file(const std::string& path, const Caps& caps = {});

}  // namespace permcheck
