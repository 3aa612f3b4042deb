#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ordrep/errors.hpp"
#include "ordrep/gspace.hpp"
#include "ordrep/group.hpp"
#include "ordrep/posaut.hpp"
#include "ordrep/posrep.hpp"

namespace ordrep {

// ----------------------------------------------------------------------------
// Factorization rho_s = m pi_s m^-1

struct Factorization {
  std::vector<Permutation> pi;  // permutation part per element (p o rho)
  Multiplier m;                 // canonically normalized conjugating multiplier
};

// True iff rho_s == m pi_s m^-1 for every s, exactly.
inline bool verify_factorization(const PosRep& rho, const Factorization& f) {
  if (f.m.degree() != rho.degree()) return false;
  Multiplier minv = f.m.inverse();
  for (int s = 0; s < rho.group().order(); ++s) {
    // (m, e)(1, pi)(m^-1, e) = (m * pi(m^-1), pi)
    PosAut rebuilt{f.m * permuted(minv, f.pi[s]), f.pi[s]};
    if (!(rebuilt == rho.at(s))) return false;
  }
  return true;
}

// Splits rho into its unique permutation part pi and a single multiplier m
// with rho_s = m pi_s m^-1. The multiplier part of rho_s is a crossed
// homomorphism f on the image group pi(G) (it depends only on pi_s); the
// trivializing m is the exact geometric mean of f over pi(G), normalized so
// the geometric mean over every pi-orbit of coordinates is 1.
inline Factorization factor(const PosRep& rho) {
  const PermGroup& g = rho.group();
  int n = rho.degree();

  Factorization out;
  out.pi = rho.permutation_parts();

  // f: image permutation -> multiplier part, collected over distinct pi_s
  std::map<Permutation, Multiplier> f;
  for (int s = 0; s < g.order(); ++s) {
    auto [it, fresh] = f.emplace(out.pi[s], rho.at(s).m);
    if (!fresh && !(it->second == rho.at(s).m))
      throw Error("factor: multiplier part is not a function of the permutation part");
  }

  long long image_order = static_cast<long long>(f.size());
  Multiplier avg = Multiplier::ones(n);
  for (const auto& [sigma, mult] : f) avg = avg * mult;
  for (auto& e : avg.entries) e = e.root(image_order);

  // per-orbit normalization: geometric mean 1 on every pi(G)-orbit
  GSpace coords = rho.coordinate_space();
  for (const auto& orbit : orbits(coords)) {
    ExactPositive mean = ExactPositive::one();
    for (int i : orbit) mean *= avg.entries[i];
    mean = mean.root(static_cast<long long>(orbit.size()));
    ExactPositive scale = mean.inverse();
    for (int i : orbit) avg.entries[i] *= scale;
  }

  out.m = std::move(avg);
  if (!verify_factorization(rho, out))
    throw Error("factor: internal consistency failure (input is not a homomorphism?)");
  return out;
}

// ----------------------------------------------------------------------------
// Decomposition into irreducibles

struct Summand {
  Subgroup class_key;  // canonical representative of the stabilizer's conjugacy class
  int index = 0;       // |G : H| = dimension of one copy
  int multiplicity = 0;
  std::vector<std::vector<int>> orbit_blocks;  // the coordinate sets realizing each copy
};

struct Decomposition {
  int total_degree = 0;
  std::vector<Summand> summands;

  // multiset over class keys, for order-equivalence decisions
  std::map<std::vector<int>, int> multiset() const {
    std::map<std::vector<int>, int> out;
    for (const auto& s : summands) out[s.class_key.members] += s.multiplicity;
    return out;
  }

  std::vector<int> dimensions() const {
    std::vector<int> out;
    for (const auto& s : summands)
      for (int k = 0; k < s.multiplicity; ++k) out.push_back(s.index);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
  }
};

inline Decomposition decompose(const PosRep& rho) {
  const PermGroup& g = rho.group();
  GSpace coords = rho.coordinate_space();
  auto orbs = orbits(coords);

  std::map<std::vector<int>, Summand> by_class;
  for (const auto& orbit : orbs) {
    Subgroup stab = stabilizer(coords, orbit.front());
    Subgroup key = conjugacy_class_key(g, stab);
    Summand& s = by_class[key.members];
    if (s.multiplicity == 0) {
      s.class_key = key;
      s.index = static_cast<int>(orbit.size());
    }
    s.multiplicity += 1;
    s.orbit_blocks.push_back(orbit);
  }

  Decomposition out;
  out.total_degree = rho.degree();
  for (auto& [key, s] : by_class) out.summands.push_back(std::move(s));
  std::sort(out.summands.begin(), out.summands.end(), [](const Summand& a, const Summand& b) {
    if (a.index != b.index) return a.index > b.index;
    return a.class_key.members < b.class_key.members;
  });
  return out;
}

inline bool is_irreducible(const PosRep& rho) {
  return orbits(rho.coordinate_space()).size() == 1;
}

// All invariant bands, as coordinate sets: every union of pi(G)-orbits,
// including the empty and the full one. Capped at 2^20 sets.
inline std::vector<std::vector<int>> invariant_bands(const PosRep& rho) {
  auto orbs = orbits(rho.coordinate_space());
  if (orbs.size() > 20)
    throw TooManyOrbits("invariant_bands: " + std::to_string(orbs.size()) + " orbits (cap 20)");
  std::vector<std::vector<int>> out;
  out.reserve(std::size_t{1} << orbs.size());
  for (std::size_t mask = 0; mask < (std::size_t{1} << orbs.size()); ++mask) {
    std::vector<int> band;
    for (std::size_t i = 0; i < orbs.size(); ++i)
      if (mask & (std::size_t{1} << i)) band.insert(band.end(), orbs[i].begin(), orbs[i].end());
    std::sort(band.begin(), band.end());
    out.push_back(std::move(band));
  }
  return out;
}

// ----------------------------------------------------------------------------
// Order and linear equivalence

struct OrderEquivalence {
  bool equivalent = false;
  std::optional<PosAut> witness;  // T with T rho2_s = rho1_s T for all s
};

namespace detail {

// A permutation intertwining the permutation parts: sigma pi2_s = pi1_s sigma,
// built orbit by orbit from conjugate stabilizers. Assumes the decomposition
// multisets agree.
inline Permutation match_permutation_parts(const PosRep& r1, const PosRep& r2) {
  const PermGroup& g = r1.group();
  GSpace c1 = r1.coordinate_space();
  GSpace c2 = r2.coordinate_space();
  auto o1 = orbits(c1);
  auto o2 = orbits(c2);

  std::map<std::vector<int>, std::vector<int>> buckets1, buckets2;
  for (std::size_t i = 0; i < o1.size(); ++i)
    buckets1[conjugacy_class_key(g, stabilizer(c1, o1[i].front())).members].push_back(
        static_cast<int>(i));
  for (std::size_t i = 0; i < o2.size(); ++i)
    buckets2[conjugacy_class_key(g, stabilizer(c2, o2[i].front())).members].push_back(
        static_cast<int>(i));

  std::vector<int> images(r2.degree(), -1);
  for (const auto& [key, ids2] : buckets2) {
    const auto& ids1 = buckets1.at(key);
    for (std::size_t k = 0; k < ids2.size(); ++k) {
      const auto& orbit2 = o2[ids2[k]];
      const auto& orbit1 = o1[ids1[k]];
      int y0 = orbit2.front(), x0 = orbit1.front();
      Subgroup stab2 = stabilizer(c2, y0);
      Subgroup stab1 = stabilizer(c1, x0);
      int r = conjugating_element(g, stab1, stab2);  // r stab1 r^-1 = stab2
      std::vector<int> carrier = orbit_transversal(c2, y0);
      int rx0 = c1.act(r, x0);
      for (int p : orbit2) images[p] = c1.act(carrier[p], rx0);
    }
  }
  return Permutation(std::move(images));
}

}  // namespace detail

// Order equivalence is decided on the stabilizer-class multisets of the two
// decompositions; on success an exact intertwining lattice automorphism
// T = (m1 * sigma(m2)^-1, sigma) is constructed and verified.
inline OrderEquivalence order_equivalent(const PosRep& r1, const PosRep& r2) {
  if (!same_group(r1, r2)) throw GroupMismatch("order_equivalent: different groups");
  if (r1.degree() != r2.degree()) return {};
  if (decompose(r1).multiset() != decompose(r2).multiset()) return {};

  Permutation sigma = detail::match_permutation_parts(r1, r2);
  Factorization f1 = factor(r1);
  Factorization f2 = factor(r2);
  PosAut t{f1.m * permuted(f2.m, sigma).inverse(), sigma};

  for (int s = 0; s < r1.group().order(); ++s)
    if (!(semidirect_mul(t, r2.at(s)) == semidirect_mul(r1.at(s), t)))
      throw Error("order_equivalent: constructed witness fails to intertwine");
  return OrderEquivalence{true, t};
}

// Character: fixed-point count of the permutation part (= the exact trace).
struct Character {
  std::vector<long long> values;  // per element, in canonical element order

  friend bool operator==(const Character& a, const Character& b) = default;
};

inline Character character(const PosRep& rho) {
  Character out;
  out.values.reserve(rho.group().order());
  for (int s = 0; s < rho.group().order(); ++s) {
    const Permutation& p = rho.at(s).sigma;
    long long fixed = 0;
    for (int i = 0; i < p.degree(); ++i)
      if (p[i] == i) ++fixed;
    out.values.push_back(fixed);
  }
  return out;
}

inline bool linear_equivalent(const PosRep& r1, const PosRep& r2) {
  if (!same_group(r1, r2)) throw GroupMismatch("linear_equivalent: different groups");
  return character(r1) == character(r2);
}

// ----------------------------------------------------------------------------
// Order dual

struct OrderDualEntry {
  Subgroup subgroup;  // class representative H
  PosRep rep;         // pi^H acting on the cosets G/H
};

// One coset representation per conjugacy class of subgroups: the complete
// list of irreducibles up to order equivalence. Ordered by (|H|, members).
inline std::vector<OrderDualEntry> order_dual(const GroupPtr& g) {
  std::vector<OrderDualEntry> out;
  for (const auto& cls : conjugacy_classes_of_subgroups(*g))
    out.push_back(OrderDualEntry{cls.front(), PosRep::coset_rep(g, cls.front())});
  return out;
}

inline bool dedekind_check(const PermGroup& g) {
  for (const auto& h : all_subgroups(g))
    if (!is_normal(g, h)) return false;
  return true;
}

struct DedekindReport {
  bool dedekind = false;
  bool characters_pairwise_distinct = false;
  bool character_formula_holds = false;  // char(pi^N)(s) = |G:N| for s in N, else 0
};

inline DedekindReport verify_dedekind_correspondence(const GroupPtr& g) {
  DedekindReport out;
  out.dedekind = dedekind_check(*g);
  auto dual = order_dual(g);

  out.characters_pairwise_distinct = true;
  std::vector<Character> chars;
  chars.reserve(dual.size());
  for (const auto& e : dual) chars.push_back(character(e.rep));
  for (std::size_t i = 0; i < chars.size(); ++i)
    for (std::size_t j = i + 1; j < chars.size(); ++j)
      if (chars[i] == chars[j]) out.characters_pairwise_distinct = false;

  out.character_formula_holds = true;
  if (out.dedekind) {
    for (std::size_t i = 0; i < dual.size(); ++i) {
      const Subgroup& n = dual[i].subgroup;
      long long idx = g->order() / n.order();
      for (int s = 0; s < g->order(); ++s) {
        long long expect = n.contains(s) ? idx : 0;
        if (chars[i].values[s] != expect) out.character_formula_holds = false;
      }
    }
  }
  return out;
}

}  // namespace ordrep
