#include "permcheck/catalog.hpp"

#include <cctype>
#include <stdexcept>

#include "permcheck/group_file.hpp"

namespace permcheck {

namespace {

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) {
    f *= i;
    if (f > 1'000'000'000LL) return f;  // saturate well above any cap
  }
  return f;
}

Permutation rotation_cycle(int points) {
  std::vector<int> im(points);
  for (int i = 0; i < points; ++i) im[i] = (i + 1) % points;
  return Permutation(std::move(im));
}

// Reflection fixing point 0: i -> -i mod n. Together with the rotation
// cycle this realizes r^s = r^-1. Degenerate at n = 2, which D4 handles
// separately.
Permutation dihedral_reflection(int points) {
  std::vector<int> im(points);
  for (int i = 0; i < points; ++i) im[i] = (points - i) % points;
  return Permutation(std::move(im));
}

Permutation embed(const Permutation& p, int total, int offset) {
  std::vector<int> im(total);
  for (int i = 0; i < total; ++i) im[i] = i;
  for (int i = 0; i < p.degree(); ++i) im[offset + i] = offset + p(i);
  return Permutation(std::move(im));
}

std::vector<Permutation> generators_for(const GroupSpec& spec, const Caps& caps);

std::vector<Permutation> product_generators(const GroupSpec& spec, const Caps& caps) {
  const GroupSpec& a = spec.factors[0];
  const GroupSpec& b = spec.factors[1];
  std::vector<Permutation> ga = generators_for(a, caps);
  std::vector<Permutation> gb = generators_for(b, caps);
  const int da = ga.front().degree();
  const int db = gb.front().degree();
  if (da + db > caps.max_degree)
    throw CapExceeded("direct product degree " + std::to_string(da + db) + " exceeds cap of " +
                      std::to_string(caps.max_degree));
  std::vector<Permutation> out;
  for (const auto& p : ga) out.push_back(embed(p, da + db, 0));
  for (const auto& p : gb) out.push_back(embed(p, da + db, da));
  return out;
}

std::vector<Permutation> generators_for(const GroupSpec& spec, const Caps& caps) {
  auto check_degree = [&](int d) {
    if (d > caps.max_degree)
      throw CapExceeded("degree " + std::to_string(d) + " exceeds cap of " +
                        std::to_string(caps.max_degree));
  };
  switch (spec.kind) {
    case GroupSpec::Kind::cyclic: {
      if (spec.n < 1) throw std::invalid_argument("cyclic: n must be >= 1");
      if (spec.n == 1) {
        check_degree(1);
        return {Permutation::identity(1)};
      }
      // Minimal faithful degree: one cycle per prime-power factor of n
      // (their lcm is n). C60 acts on 4+3+5 = 12 points, not 60.
      std::vector<int> cycle_lengths;
      int rest = spec.n;
      for (int p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        int q = 1;
        while (rest % p == 0) {
          q *= p;
          rest /= p;
        }
        cycle_lengths.push_back(q);
      }
      if (rest > 1) cycle_lengths.push_back(rest);
      int degree = 0;
      for (int q : cycle_lengths) degree += q;
      check_degree(degree);
      std::vector<int> im(degree);
      int offset = 0;
      for (int q : cycle_lengths) {
        for (int i = 0; i < q; ++i) im[offset + i] = offset + (i + 1) % q;
        offset += q;
      }
      return {Permutation(std::move(im))};
    }
    case GroupSpec::Kind::dihedral: {
      if (spec.n < 4 || spec.n % 2 != 0)
        throw std::invalid_argument("dihedral: order must be even and >= 4");
      int half = spec.n / 2;
      if (half == 2) {
        // Klein four-group on 4 points; two points cannot carry it.
        check_degree(4);
        return {parse_cycles("(1 2)", 4), parse_cycles("(3 4)", 4)};
      }
      check_degree(half);
      return {rotation_cycle(half), dihedral_reflection(half)};
    }
    case GroupSpec::Kind::symmetric: {
      if (spec.n < 1) throw std::invalid_argument("symmetric: n must be >= 1");
      check_degree(spec.n);
      if (spec.n == 1) return {Permutation::identity(1)};
      std::vector<Permutation> gens = {parse_cycles("(1 2)", spec.n)};
      if (spec.n > 2) gens.push_back(rotation_cycle(spec.n));
      return gens;
    }
    case GroupSpec::Kind::alternating: {
      if (spec.n < 3) {
        if (spec.n < 1) throw std::invalid_argument("alternating: n must be >= 1");
        check_degree(spec.n);
        return {Permutation::identity(spec.n)};
      }
      check_degree(spec.n);
      std::vector<Permutation> gens = {parse_cycles("(1 2 3)", spec.n)};
      if (spec.n > 3) {
        // The long cycle must be even: full n-cycle for odd n, an
        // (n-1)-cycle fixing point 1 for even n.
        if (spec.n % 2 == 1) {
          gens.push_back(rotation_cycle(spec.n));
        } else {
          std::vector<int> im(spec.n);
          im[0] = 0;
          for (int i = 1; i < spec.n; ++i) im[i] = i % (spec.n - 1) + 1;
          gens.push_back(Permutation(std::move(im)));
        }
      }
      return gens;
    }
    case GroupSpec::Kind::quaternion8:
      // Regular representation on the eight unit quaternions
      // 1,-1,i,-i,j,-j,k,-k (in that labeling).
      check_degree(8);
      return {parse_cycles("(1 3 2 4)(5 7 6 8)", 8), parse_cycles("(1 5 2 6)(3 8 4 7)", 8)};
    case GroupSpec::Kind::direct_product:
      return product_generators(spec, caps);
    case GroupSpec::Kind::from_file:
      return load_group_file(spec.path, caps).generators;
  }
  throw std::logic_error("unreachable");
}

bool parse_int(const std::string& s, std::size_t& pos, int& out) {
  if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) return false;
  out = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
    out = out * 10 + (s[pos++] - '0');
  return true;
}

GroupSpec parse_atom(const std::string& token) {
  if (token.empty()) throw ParseError("empty group name");
  if (token == "Q8") return spec_quaternion8();
  std::size_t pos = 1;
  int n = 0;
  if (!parse_int(token, pos, n) || pos != token.size())
    throw ParseError("bad group name: '" + token + "'");
  switch (token[0]) {
    case 'C': return spec_cyclic(n);
    case 'D': return spec_dihedral(n);
    case 'S': return spec_symmetric(n);
    case 'A': return spec_alternating(n);
    default: throw ParseError("bad group name: '" + token + "'");
  }
}

}  // namespace

long long GroupSpec::expected_order() const {
  switch (kind) {
    case Kind::cyclic: return n;
    case Kind::dihedral: return n;
    case Kind::symmetric: return factorial(n);
    case Kind::alternating: return n < 3 ? 1 : factorial(n) / 2;
    case Kind::quaternion8: return 8;
    case Kind::direct_product: {
      long long a = factors[0].expected_order();
      long long b = factors[1].expected_order();
      return (a < 0 || b < 0) ? -1 : a * b;
    }
    case Kind::from_file: return -1;
  }
  return -1;
}

GroupSpec spec_cyclic(int n) {
  GroupSpec s;
  s.kind = GroupSpec::Kind::cyclic;
  s.n = n;
  s.name = "C" + std::to_string(n);
  return s;
}

GroupSpec spec_dihedral(int order) {
  GroupSpec s;
  s.kind = GroupSpec::Kind::dihedral;
  s.n = order;
  s.name = "D" + std::to_string(order);
  return s;
}

GroupSpec spec_symmetric(int n) {
  GroupSpec s;
  s.kind = GroupSpec::Kind::symmetric;
  s.n = n;
  s.name = "S" + std::to_string(n);
  return s;
}

GroupSpec spec_alternating(int n) {
  GroupSpec s;
  s.kind = GroupSpec::Kind::alternating;
  s.n = n;
  s.name = "A" + std::to_string(n);
  return s;
}

GroupSpec spec_quaternion8() {
  GroupSpec s;
  s.kind = GroupSpec::Kind::quaternion8;
  s.n = 8;
  s.name = "Q8";
  return s;
}

GroupSpec spec_direct_product(GroupSpec a, GroupSpec b) {
  GroupSpec s;
  s.kind = GroupSpec::Kind::direct_product;
  s.name = a.name + "x" + b.name;
  s.factors.push_back(std::move(a));
  s.factors.push_back(std::move(b));
  return s;
}

GroupSpec spec_from_file(std::string path) {
  GroupSpec s;
  s.kind = GroupSpec::Kind::from_file;
  s.name = "file:" + path;
  s.path = std::move(path);
  return s;
}

GroupSpec parse_group_name(const std::string& text) {
  if (text.rfind("file:", 0) == 0) {
    std::string path = text.substr(5);
    if (path.empty()) throw ParseError("file: needs a path");
    return spec_from_file(std::move(path));
  }
  std::vector<GroupSpec> atoms;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t x = text.find('x', start);
    std::string tok = text.substr(start, x == std::string::npos ? x : x - start);
    atoms.push_back(parse_atom(tok));
    if (x == std::string::npos) break;
    start = x + 1;
  }
  GroupSpec spec = std::move(atoms.front());
  for (std::size_t i = 1; i < atoms.size(); ++i)
    spec = spec_direct_product(std::move(spec), std::move(atoms[i]));
  return spec;
}

GroupTable build(const GroupSpec& spec, const Caps& caps) {
  long long expect = spec.expected_order();
  if (expect > caps.max_group_order)
    throw CapExceeded(spec.name + ": order " + std::to_string(expect) + " exceeds cap of " +
                      std::to_string(caps.max_group_order));
  GroupTable g = GroupTable::closure(generators_for(spec, caps), caps.max_group_order);
  if (expect >= 0 && g.order() != expect)
    throw std::logic_error(spec.name + ": constructed order " + std::to_string(g.order()) +
                           " != expected " + std::to_string(expect));
  if (spec.kind == GroupSpec::Kind::dihedral && spec.n / 2 > 2) {
    // r^s = r^-1 must hold in the table.
    int r = 1, s = 2;  // BFS order: e, r, s, ...
    if (g.conjugate(r, s) != g.inv(r))
      throw std::logic_error(spec.name + ": dihedral relation r^s = r^-1 failed");
  }
  return g;
}

std::vector<std::pair<std::string, Permutation>> named_generators(const GroupSpec& spec) {
  Caps caps;
  switch (spec.kind) {
    case GroupSpec::Kind::cyclic:
      return {{"g", generators_for(spec, caps).front()}};
    case GroupSpec::Kind::dihedral: {
      auto gens = generators_for(spec, caps);
      return {{"r", gens[0]}, {"s", gens[1]}};
    }
    case GroupSpec::Kind::symmetric: {
      auto gens = generators_for(spec, caps);
      if (gens.size() == 1) return {{"t", gens[0]}};
      return {{"t", gens[0]}, {"c", gens[1]}};
    }
    case GroupSpec::Kind::alternating: {
      auto gens = generators_for(spec, caps);
      if (gens.size() == 1) return {{"a", gens[0]}};
      return {{"a", gens[0]}, {"c", gens[1]}};
    }
    case GroupSpec::Kind::quaternion8: {
      auto gens = generators_for(spec, caps);
      return {{"i", gens[0]}, {"j", gens[1]}};
    }
    default:
      return {};
  }
}

std::vector<GroupSpec> survey_corpus(int max_order) {
  std::vector<GroupSpec> base;
  for (int n = 1; n <= max_order; ++n) base.push_back(spec_cyclic(n));
  for (int n = 4; n <= max_order; n += 2) base.push_back(spec_dihedral(n));
  if (max_order >= 6) base.push_back(spec_symmetric(3));
  if (max_order >= 24) base.push_back(spec_symmetric(4));
  if (max_order >= 12) base.push_back(spec_alternating(4));
  if (max_order >= 60) base.push_back(spec_alternating(5));
  if (max_order >= 8) base.push_back(spec_quaternion8());
  // Elementary abelian 2-groups up to order 16 (C2 itself is already in).
  for (int k = 2; k <= 4; ++k) {
    int ord = 1 << k;
    if (ord > max_order || ord > 16) break;
    GroupSpec s = spec_cyclic(2);
    for (int i = 1; i < k; ++i) s = spec_direct_product(std::move(s), spec_cyclic(2));
    base.push_back(std::move(s));
  }

  std::vector<GroupSpec> out;
  std::vector<std::string> seen;
  auto add = [&](GroupSpec s) {
    for (const auto& name : seen)
      if (name == s.name) return;
    seen.push_back(s.name);
    out.push_back(std::move(s));
  };
  for (const auto& s : base) add(s);
  for (std::size_t i = 0; i < base.size(); ++i) {
    long long oi = base[i].expected_order();
    if (oi < 2) continue;
    for (std::size_t j = i; j < base.size(); ++j) {
      long long oj = base[j].expected_order();
      if (oj < 2 || oi * oj > max_order) continue;
      add(spec_direct_product(base[i], base[j]));
    }
  }
  return out;
}

}  // namespace permcheck
