#pragma once

#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ordrep/errors.hpp"
#include "ordrep/group.hpp"
#include "ordrep/posaut.hpp"
#include "ordrep/posrep.hpp"
#include "ordrep/rational.hpp"

namespace ordrep {

// Declarative key/value input format for groups and representations.
//
//   # comments and blank lines are ignored
//   group = klein4                      named: cyclic N, dihedral N, symmetric N,
//                                       klein4, quaternion8
//   group = product(cyclic 2, cyclic 4) direct product of named groups
//   group = explicit 4 : (1 2)(3 4), (1 3)(2 4)
//   degree = 6                          representation degree
//   gen = (1 2)(3 4)                    image of the i-th group generator
//   mult = 1 1 1 1 1 1                  optional multiplier for the last gen,
//                                       entries are positive rationals "p/q"
//   gen = images 2 1 4 3 5 6            image-array form (1-based)
//   subgroup = (1 3)(2 4)               subgroup generators, comma separated;
//                                       "e" for the trivial subgroup
//   theta_degree = 2                    representation of the subgroup, given
//   theta_gen = (1 2)                   on the listed subgroup generators
//   theta_mult = 2 1/2
//
// Permutations use 1-based cycle notation; points outside all cycles are
// fixed.

struct GenSpec {
  std::string perm;                 // cycle string or "images ..." form
  std::vector<std::string> mult;    // empty = all ones
  int line = 0;
};

struct GroupSpecData {
  enum class Kind { named, product, explicit_gens } kind = Kind::named;
  std::string name;                        // named: "cyclic 4", "klein4", ...
  std::vector<std::string> members;        // product: member named specs
  int degree = 0;                          // explicit
  std::vector<std::string> gen_texts;      // explicit
  int line = 0;
};

struct SpecFile {
  std::optional<GroupSpecData> group;
  std::optional<int> degree;
  std::vector<GenSpec> gens;
  std::optional<std::vector<std::string>> subgroup_gens;
  std::optional<int> theta_degree;
  std::vector<GenSpec> theta_gens;
};

namespace detail {

inline std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r\n");
  auto b = s.find_last_not_of(" \t\r\n");
  if (a == std::string::npos) return {};
  return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

inline int parse_int(const std::string& s, int line, const std::string& field) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::logic_error&) {
    throw ParseError("expected an integer, got '" + s + "'", line, field);
  }
}

inline GroupSpecData parse_group_value(const std::string& value, int line) {
  GroupSpecData out;
  out.line = line;
  std::string v = trim(value);
  if (v.rfind("product(", 0) == 0) {
    if (v.back() != ')') throw ParseError("product spec must end with ')'", line, "group");
    out.kind = GroupSpecData::Kind::product;
    out.members = split(v.substr(8, v.size() - 9), ',');
    if (out.members.size() < 2) throw ParseError("product needs at least two members", line, "group");
    return out;
  }
  if (v.rfind("explicit", 0) == 0) {
    out.kind = GroupSpecData::Kind::explicit_gens;
    auto colon = v.find(':');
    if (colon == std::string::npos)
      throw ParseError("explicit group needs 'explicit N : perms'", line, "group");
    out.degree = parse_int(trim(v.substr(8, colon - 8)), line, "group");
    for (auto& t : split(v.substr(colon + 1), ','))
      if (!t.empty()) out.gen_texts.push_back(t);
    return out;
  }
  out.kind = GroupSpecData::Kind::named;
  out.name = v;
  return out;
}

}  // namespace detail

inline SpecFile parse_spec(std::istream& in) {
  SpecFile out;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::string s = detail::trim(raw);
    if (s.empty()) continue;
    auto eq = s.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", line);
    std::string key = detail::trim(s.substr(0, eq));
    std::string value = detail::trim(s.substr(eq + 1));
    if (value.empty()) throw ParseError("empty value", line, key);

    if (key == "group") {
      out.group = detail::parse_group_value(value, line);
    } else if (key == "degree") {
      out.degree = detail::parse_int(value, line, key);
    } else if (key == "gen") {
      out.gens.push_back(GenSpec{value, {}, line});
    } else if (key == "mult") {
      if (out.gens.empty()) throw ParseError("'mult' before any 'gen'", line, key);
      if (!out.gens.back().mult.empty()) throw ParseError("duplicate 'mult' for this gen", line, key);
      out.gens.back().mult = detail::split(value, ' ');
      std::erase_if(out.gens.back().mult, [](const std::string& t) { return t.empty(); });
    } else if (key == "subgroup") {
      std::vector<std::string> gens;
      for (auto& t : detail::split(value, ','))
        if (!t.empty() && t != "e") gens.push_back(t);
      out.subgroup_gens = std::move(gens);
    } else if (key == "theta_degree") {
      out.theta_degree = detail::parse_int(value, line, key);
    } else if (key == "theta_gen") {
      out.theta_gens.push_back(GenSpec{value, {}, line});
    } else if (key == "theta_mult") {
      if (out.theta_gens.empty()) throw ParseError("'theta_mult' before any 'theta_gen'", line, key);
      if (!out.theta_gens.back().mult.empty())
        throw ParseError("duplicate 'theta_mult' for this theta_gen", line, key);
      out.theta_gens.back().mult = detail::split(value, ' ');
      std::erase_if(out.theta_gens.back().mult, [](const std::string& t) { return t.empty(); });
    } else {
      throw ParseError("unknown key '" + key + "'", line);
    }
  }
  return out;
}

namespace detail {

inline Permutation parse_perm_value(const std::string& text, int degree, int line,
                                    const std::string& field) {
  try {
    std::string v = trim(text);
    if (v.rfind("images", 0) == 0) {
      std::istringstream body(v.substr(6));
      std::vector<int> one_based;
      int p;
      while (body >> p) one_based.push_back(p);
      if (static_cast<int>(one_based.size()) != degree)
        throw Error("image array has " + std::to_string(one_based.size()) + " entries, expected " +
                    std::to_string(degree));
      return parse_image_array(one_based);
    }
    return parse_cycles(v, degree);
  } catch (const Error& e) {
    throw ParseError(e.what(), line, field);
  }
}

inline GroupPtr build_named_group(const std::string& name, std::size_t cap, int line) {
  auto parts = split(name, ' ');
  std::erase_if(parts, [](const std::string& t) { return t.empty(); });
  if (parts.empty()) throw ParseError("empty group name", line, "group");
  const std::string& head = parts[0];
  auto arg = [&](const char* what) {
    if (parts.size() != 2) throw ParseError(std::string(what) + " needs one integer argument", line, "group");
    return parse_int(parts[1], line, "group");
  };
  try {
    if (head == "cyclic") return cyclic_group(arg("cyclic"), cap);
    if (head == "dihedral") return dihedral_group(arg("dihedral"), cap);
    if (head == "symmetric") return symmetric_group(arg("symmetric"), cap);
    if (head == "klein4") return klein4_group(cap);
    if (head == "quaternion8") return quaternion8_group(cap);
    if (head == "trivial") return trivial_group(1, cap);
  } catch (const Error& e) {
    throw ParseError(e.what(), line, "group");
  }
  throw ParseError("unknown group '" + name + "'", line, "group");
}

}  // namespace detail

inline GroupPtr build_group(const SpecFile& spec, std::size_t cap = kDefaultCap) {
  if (!spec.group) throw ParseError("missing 'group'", 0, "group");
  const GroupSpecData& g = *spec.group;
  switch (g.kind) {
    case GroupSpecData::Kind::named:
      return detail::build_named_group(g.name, cap, g.line);
    case GroupSpecData::Kind::product: {
      GroupPtr acc = detail::build_named_group(g.members[0], cap, g.line);
      for (std::size_t i = 1; i < g.members.size(); ++i)
        acc = direct_product(*acc, *detail::build_named_group(g.members[i], cap, g.line), cap);
      return acc;
    }
    case GroupSpecData::Kind::explicit_gens: {
      if (g.degree < 1) throw ParseError("explicit group degree must be >= 1", g.line, "group");
      std::vector<Permutation> gens;
      for (const auto& t : g.gen_texts)
        gens.push_back(detail::parse_perm_value(t, g.degree, g.line, "group"));
      try {
        return make_group(g.degree, std::move(gens), cap);
      } catch (const Error& e) {
        throw ParseError(e.what(), g.line, "group");
      }
    }
  }
  throw ParseError("unreachable group kind", g.line, "group");
}

namespace detail {

inline PosAut build_gen_posaut(const GenSpec& gs, int degree, const std::string& field) {
  Permutation sigma = parse_perm_value(gs.perm, degree, gs.line, field);
  if (gs.mult.empty()) return PosAut::from_permutation(sigma);
  if (static_cast<int>(gs.mult.size()) != degree)
    throw ParseError("multiplier has " + std::to_string(gs.mult.size()) + " entries, expected " +
                         std::to_string(degree),
                     gs.line, field);
  std::vector<Rational> entries;
  for (const auto& t : gs.mult) {
    Rational r;
    try {
      r = Rational::parse(t);
    } catch (const Error& e) {
      throw ParseError(e.what(), gs.line, field);
    }
    if (r.sign() <= 0)
      throw ParseError("multiplier entries must be strictly positive, got '" + t + "'", gs.line,
                       field);
    entries.push_back(r);
  }
  return PosAut{Multiplier::from_rationals(entries), sigma};
}

}  // namespace detail

// The representation described by degree/gen/mult, over the file's group.
inline PosRep build_rep(const SpecFile& spec, const GroupPtr& group) {
  if (!spec.degree) throw ParseError("missing 'degree'", 0, "degree");
  if (spec.gens.size() != group->generators().size())
    throw ParseError("file has " + std::to_string(spec.gens.size()) + " 'gen' lines but the group has " +
                         std::to_string(group->generators().size()) + " generators",
                     spec.gens.empty() ? 0 : spec.gens.back().line, "gen");
  std::vector<PosAut> images;
  for (const auto& gs : spec.gens) images.push_back(detail::build_gen_posaut(gs, *spec.degree, "gen"));
  return PosRep::from_generators(group, images);
}

struct SubgroupSpec {
  Subgroup subgroup;
  std::vector<Permutation> generators;  // in file order
};

inline SubgroupSpec build_subgroup(const SpecFile& spec, const GroupPtr& group) {
  if (!spec.subgroup_gens) throw ParseError("missing 'subgroup'", 0, "subgroup");
  SubgroupSpec out;
  for (const auto& t : *spec.subgroup_gens) {
    Permutation p = detail::parse_perm_value(t, group->degree(), 0, "subgroup");
    if (group->index_of(p) < 0)
      throw ParseError("subgroup generator " + t + " is not an element of the group", 0, "subgroup");
    out.generators.push_back(p);
  }
  out.subgroup = subgroup_generated_by(*group, out.generators);
  return out;
}

// The subgroup representation described by theta_degree/theta_gen/theta_mult,
// over the subgroup generated by the listed generators.
struct ThetaSpec {
  GroupPtr subgroup_group;  // generated by the file's subgroup generators
  PosRep rep;
};

inline ThetaSpec build_theta(const SpecFile& spec, const GroupPtr& group,
                             const SubgroupSpec& sub, std::size_t cap = kDefaultCap) {
  if (!spec.theta_degree) throw ParseError("missing 'theta_degree'", 0, "theta_degree");
  if (spec.theta_gens.size() != sub.generators.size())
    throw ParseError("need one 'theta_gen' per subgroup generator (" +
                         std::to_string(sub.generators.size()) + ")",
                     0, "theta_gen");
  GroupPtr h_group = make_group(group->degree(), sub.generators, cap);
  std::vector<PosAut> images;
  for (const auto& gs : spec.theta_gens)
    images.push_back(detail::build_gen_posaut(gs, *spec.theta_degree, "theta_gen"));
  return ThetaSpec{h_group, PosRep::from_generators(h_group, images)};
}

}  // namespace ordrep
