#include "permcheck/group_file.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace permcheck {

GroupFile parse_group_file(std::istream& in, const Caps& caps) {
  GroupFile out;
  std::string line;
  int lineno = 0;
  bool have_degree = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string keyword;
    if (!(ls >> keyword)) continue;  // blank
    if (keyword == "degree") {
      if (have_degree) throw ParseError("line " + std::to_string(lineno) + ": duplicate degree line");
      if (!(ls >> out.degree) || out.degree < 1)
        throw ParseError("line " + std::to_string(lineno) + ": bad degree");
      if (out.degree > caps.max_degree)
        throw CapExceeded("degree " + std::to_string(out.degree) + " exceeds cap of " +
                          std::to_string(caps.max_degree));
      have_degree = true;
    } else if (keyword == "gen") {
      if (!have_degree)
        throw ParseError("line " + std::to_string(lineno) + ": 'gen' before 'degree'");
      std::string rest;
      std::getline(ls, rest);
      try {
        out.generators.push_back(parse_cycles(rest, out.degree));
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
      }
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unknown keyword '" + keyword + "'");
    }
  }
  if (!have_degree) throw ParseError("missing 'degree' line");
  if (out.generators.empty()) throw ParseError("no generators");
  return out;
}

GroupFile load_group_file(const std::string& path, const Caps& caps) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open group file: " + path);
  return parse_group_file(f, caps);
}

}  // namespace permcheck
