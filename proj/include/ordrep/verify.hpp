#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ordrep/group.hpp"
#include "ordrep/imprimitivity.hpp"
#include "ordrep/induction.hpp"
#include "ordrep/posrep.hpp"
#include "ordrep/structure.hpp"

namespace ordrep {

// The built-in verification suite: exact reproductions of the library's
// defining examples plus exhaustive desk-scale property sweeps. Each check is
// self-contained and reports pass/fail with a short detail line.

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

// Named groups of order <= 12 used by the exhaustive sweeps.
inline std::vector<std::pair<std::string, GroupPtr>> small_group_catalog() {
  std::vector<std::pair<std::string, GroupPtr>> out;
  for (int n = 1; n <= 12; ++n) out.emplace_back("cyclic" + std::to_string(n), cyclic_group(n));
  out.emplace_back("klein4", klein4_group());
  for (int n = 3; n <= 6; ++n) out.emplace_back("dihedral" + std::to_string(n), dihedral_group(n));
  out.emplace_back("sym3", symmetric_group(3));
  out.emplace_back("quaternion8", quaternion8_group());
  out.emplace_back("c2xc4", direct_product(*cyclic_group(2), *cyclic_group(4)));
  out.emplace_back("c2xc6", direct_product(*cyclic_group(2), *cyclic_group(6)));
  out.emplace_back("alt4", make_group(4, {parse_cycles("(1 2 3)", 4), parse_cycles("(1 2)(3 4)", 4)}));
  return out;
}

namespace verify_detail {

// Independent subgroup count: enumerate every subset of element indices by
// bitmask and keep the closed ones, then bucket by conjugacy. Exponential in
// the group order; used only as an oracle for |G| <= 12.
inline int conjugacy_class_count_by_subsets(const PermGroup& g) {
  int n = g.order();
  std::vector<std::vector<int>> subgroups;
  for (unsigned long long mask = 1; mask < (1ULL << n); ++mask) {
    if (!(mask & 1ULL)) continue;  // identity has index 0
    std::vector<int> members;
    for (int i = 0; i < n; ++i)
      if (mask & (1ULL << i)) members.push_back(i);
    bool closed = true;
    for (int a : members) {
      if (!(mask & (1ULL << g.inv(a)))) {
        closed = false;
        break;
      }
      for (int b : members)
        if (!(mask & (1ULL << g.mul(a, b)))) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (closed) subgroups.push_back(std::move(members));
  }
  std::set<std::vector<int>> seen;
  int classes = 0;
  for (const auto& members : subgroups) {
    if (seen.contains(members)) continue;
    ++classes;
    for (int r = 0; r < n; ++r) {
      std::vector<int> conj;
      conj.reserve(members.size());
      for (int s : members) conj.push_back(g.mul(g.mul(r, s), g.inv(r)));
      std::sort(conj.begin(), conj.end());
      seen.insert(std::move(conj));
    }
  }
  return classes;
}

inline std::string dims_str(const std::vector<int>& dims) {
  std::string out = "(";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(dims[i]);
  }
  return out + ")";
}

struct Failure {
  std::string what;
};

inline void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

inline CheckResult run_one(int id, const std::string& name, const std::function<std::string()>& body) {
  CheckResult out{id, name, false, ""};
  try {
    out.detail = body();
    out.passed = true;
  } catch (const Failure& f) {
    out.detail = f.what;
  } catch (const std::exception& e) {
    out.detail = std::string("exception: ") + e.what();
  }
  return out;
}

// -- check 1: equal characters, linear equivalence, order inequivalence ------

inline std::string check_characters_vs_order() {
  GroupPtr g = klein4_group();
  PosRep pi1 = PosRep::permutation_rep(
      g, {parse_cycles("(1 2)(3 4)", 6), parse_cycles("(1 3)(2 4)", 6)});
  PosRep pi2 = PosRep::permutation_rep(
      g, {parse_cycles("(1 2)(3 4)", 6), parse_cycles("(1 2)(5 6)", 6)});

  expect(character(pi1) == character(pi2), "characters differ");
  expect(linear_equivalent(pi1, pi2), "not linearly equivalent");
  expect(!order_equivalent(pi1, pi2).equivalent, "unexpectedly order equivalent");
  auto d1 = decompose(pi1).dimensions();
  auto d2 = decompose(pi2).dimensions();
  expect(d1 == std::vector<int>({4, 1, 1}), "first splits as " + dims_str(d1));
  expect(d2 == std::vector<int>({2, 2, 2}), "second splits as " + dims_str(d2));
  return "equal characters, linearly equivalent, order inequivalent; dims (4,1,1) vs (2,2,2)";
}

// -- check 2: failure of Frobenius reciprocity for multiplicities ------------

inline std::string check_frobenius_multiplicities() {
  // (a) trivial subgroup: m(theta, rho|_H) = dim rho, m(rho, Ind theta) <= 1
  for (const GroupPtr& g : {cyclic_group(4), symmetric_group(3)}) {
    Subgroup h = trivial_subgroup(*g);
    FrobeniusTable table = frobenius_table(g, h);
    expect(table.cells.size() == 1, "trivial subgroup has one irreducible");
    int ones = 0;
    for (std::size_t c = 0; c < table.cells[0].size(); ++c) {
      const FrobeniusCell& cell = table.cells[0][c];
      expect(cell.m_restricted == table.rho_dims[c],
             "restricted multiplicity is not dim rho");
      expect(cell.m_induced <= 1, "regular representation contains a repeat");
      ones += cell.m_induced;
    }
    expect(ones == 1, "regular representation matched " + std::to_string(ones) + " irreducibles");
  }

  // (b) G = Z/4, H its index-2 subgroup, theta and rho both regular
  GroupPtr g = cyclic_group(4);
  Permutation square = compose(g->generators()[0], g->generators()[0]);
  Subgroup h = subgroup_generated_by(*g, {square});
  expect(h.order() == 2, "index-2 subgroup of Z/4");

  FrobeniusTable table = frobenius_table(g, h);
  // rows/cols are ordered by subgroup order: row 0 = regular theta (2-dim),
  // column 0 = regular rho (4-dim)
  expect(table.theta_dims.front() == 2 && table.rho_dims.front() == 4,
         "unexpected dual ordering");
  const FrobeniusCell& cell = table.cells[0][0];
  expect(cell.m_induced == 1 && cell.m_restricted == 2,
         "cell is (" + std::to_string(cell.m_induced) + "," + std::to_string(cell.m_restricted) +
             "), expected (1,2)");
  expect(!cell.equal, "cell flagged equal");

  GroupPtr h_group = subgroup_as_group(*g, h);
  PosRep theta_reg = PosRep::regular(h_group);
  PosRep ind = induce(theta_reg, h, g).rep;
  expect(order_equivalent(ind, PosRep::regular(g)).equivalent,
         "induced regular is not the regular representation");
  return "trivial-subgroup rows and the (1,2) cell reproduced; induced regular verified";
}

// -- check 3: factorization round trip ---------------------------------------

inline std::string check_factorization_round_trip(int instances = 500, unsigned seed = 20240817) {
  std::mt19937 rng(seed);
  auto pick = [&rng](std::size_t n) { return static_cast<std::size_t>(rng() % n); };

  std::vector<GroupPtr> pool;
  for (int n : {2, 3, 4, 6, 8, 12, 24}) pool.push_back(cyclic_group(n));
  pool.push_back(klein4_group());
  pool.push_back(symmetric_group(3));
  pool.push_back(symmetric_group(4));
  pool.push_back(dihedral_group(4));
  pool.push_back(dihedral_group(6));
  pool.push_back(quaternion8_group());
  pool.push_back(make_group(4, {parse_cycles("(1 2 3)", 4), parse_cycles("(1 2)(3 4)", 4)}));
  std::vector<std::vector<Subgroup>> pool_subs;
  pool_subs.reserve(pool.size());
  for (const auto& g : pool) pool_subs.push_back(all_subgroups(*g));

  const int max_degree = 12;
  for (int inst = 0; inst < instances; ++inst) {
    std::size_t which = pick(pool.size());
    const GroupPtr& g = pool[which];
    const auto& subs = pool_subs[which];

    // random multiset of coset representations with total degree <= 12
    std::vector<PosRep> parts;
    int degree = 0;
    while (true) {
      const Subgroup& h = subs[pick(subs.size())];
      int index = g->order() / h.order();
      if (degree + index > max_degree) {
        if (!parts.empty()) break;
        continue;
      }
      parts.push_back(PosRep::coset_rep(g, h));
      degree += index;
      if (degree == max_degree || (pick(3) == 0 && !parts.empty())) break;
    }
    PosRep pi = parts.size() == 1 ? parts.front() : direct_sum(parts);

    Multiplier m = Multiplier::ones(degree);
    for (auto& e : m.entries) {
      for (long long p : {2LL, 3LL, 5LL}) {
        long long exp = static_cast<long long>(pick(5)) - 2;  // in [-2, 2]
        if (exp != 0) e *= ExactPositive::from_integer(p).pow(Rational(exp));
      }
    }

    Multiplier minv = m.inverse();
    std::vector<PosAut> assignment;
    assignment.reserve(g->order());
    for (int s = 0; s < g->order(); ++s) {
      const Permutation& sigma = pi.at(s).sigma;
      assignment.push_back(PosAut{m * permuted(minv, sigma), sigma});
    }
    PosRep rho(g, std::move(assignment), true);

    Factorization f = factor(rho);
    for (int s = 0; s < g->order(); ++s)
      expect(f.pi[s] == pi.at(s).sigma, "instance " + std::to_string(inst) + ": pi not recovered");
    expect(verify_factorization(rho, f),
           "instance " + std::to_string(inst) + ": rebuilt rho differs");

    // the recovered multiplier differs from the input by a pi-invariant one
    Multiplier ratio = f.m * minv;
    for (const auto& orbit : orbits(rho.coordinate_space()))
      for (int p : orbit)
        expect(ratio.entries[p] == ratio.entries[orbit.front()],
               "instance " + std::to_string(inst) + ": multiplier ratio is not pi-invariant");
  }
  return std::to_string(instances) + " randomized instances recovered exactly";
}

// -- check 4: the order dual --------------------------------------------------

inline std::string check_order_dual() {
  int groups = 0, entries = 0;
  for (const auto& [name, g] : small_group_catalog()) {
    auto dual = order_dual(g);
    expect(static_cast<int>(dual.size()) == conjugacy_class_count_by_subsets(*g),
           name + ": entry count differs from subset-enumeration oracle");
    for (const auto& e : dual) {
      expect(is_irreducible(e.rep), name + ": dual entry not irreducible");
      expect(g->order() % e.rep.degree() == 0, name + ": dimension does not divide group order");
    }
    for (std::size_t i = 0; i < dual.size(); ++i)
      for (std::size_t j = i + 1; j < dual.size(); ++j)
        expect(!order_equivalent(dual[i].rep, dual[j].rep).equivalent,
               name + ": two dual entries are order equivalent");
    ++groups;
    entries += static_cast<int>(dual.size());
  }
  return std::to_string(entries) + " irreducibles over " + std::to_string(groups) +
         " groups: pairwise inequivalent, dimensions divide group orders, counts match the oracle";
}

// -- check 5: induction -------------------------------------------------------

inline std::string check_induction() {
  int induced = 0, chains = 0;
  for (const auto& [name, g] : small_group_catalog()) {
    auto subs = all_subgroups(*g);
    for (const auto& h : subs) {
      GroupPtr h_group = subgroup_as_group(*g, h);
      auto dual_h = order_dual(h_group);
      for (const auto& th : dual_h) {
        InducedRep ind = induce(th.rep, h, g);
        expect(ind.rep.degree() == (g->order() / h.order()) * th.rep.degree(),
               name + ": dimension formula fails");
        ++induced;
      }
      // chains h <= k <= g, every irreducible of h
      for (const auto& k : subs) {
        bool contains = std::all_of(h.members.begin(), h.members.end(),
                                    [&](int m) { return k.contains(m); });
        if (!contains) continue;
        for (const auto& th : dual_h) {
          expect(stages_check(g, k, h, th.rep), name + ": induction in stages fails");
          ++chains;
        }
      }
    }
    // inducing the trivial representation of the trivial subgroup gives the
    // regular representation
    PosRep ind = induce(PosRep::trivial(subgroup_as_group(*g, trivial_subgroup(*g)), 1),
                        trivial_subgroup(*g), g)
                     .rep;
    expect(order_equivalent(ind, PosRep::regular(g)).equivalent,
           name + ": induced trivial is not the regular representation");
  }

  // the index-2 induction isomorphism in Z/4
  GroupPtr z4 = cyclic_group(4);
  Subgroup h = subgroup_generated_by(*z4, {compose(z4->generators()[0], z4->generators()[0])});
  PosRep theta = PosRep::regular(subgroup_as_group(*z4, h));
  expect(order_equivalent(induce(theta, h, z4).rep, PosRep::regular(z4)).equivalent,
         "Z/4 induction isomorphism fails");

  return std::to_string(induced) + " inductions dimension-checked, " + std::to_string(chains) +
         " two-step chains agree with direct induction";
}

// -- check 6: systems of imprimitivity ---------------------------------------

inline std::string check_imprimitivity(BlockConvention convention) {
  int systems_total = 0, extractions = 0;
  for (const auto& [name, g] : small_group_catalog()) {
    auto subs = all_subgroups(*g);
    for (const auto& cls : conjugacy_classes_of_subgroups(*g)) {
      const Subgroup& h = cls.front();
      PosRep rep = PosRep::coset_rep(g, h);

      auto systems = all_block_systems(rep);
      int intermediate = 0;
      for (const auto& k : subs)
        if (std::all_of(h.members.begin(), h.members.end(),
                        [&](int m) { return k.contains(m); }))
          ++intermediate;
      expect(static_cast<int>(systems.size()) == intermediate,
             name + ": block system count " + std::to_string(systems.size()) + " != " +
                 std::to_string(intermediate) + " intermediate subgroups");

      if (rep.degree() <= 8) {
        auto searched = block_systems_by_search(rep);
        expect(searched.size() == systems.size(),
               name + ": partition search found a different system count");
      }

      for (const auto& bs : systems) {
        expect(covariance_check(rep, bs), name + ": covariance identity fails");
        ++systems_total;
        if (!bs.is_one_block() && is_transitive(bs.gamma)) {
          induction_from_imprimitivity(rep, bs);  // throws unless the round trip verifies
          ++extractions;
        }
      }

      auto chain = primitive_chain(rep, convention);  // verifies its own recomposition
      if (convention == BlockConvention::literal)
        expect(chain.empty() == (rep.degree() == 1),
               name + ": literal-convention chain length unexpected");
    }
  }
  return std::to_string(systems_total) + " systems covariance-checked, " +
         std::to_string(extractions) + " inductions extracted and round-tripped";
}

// -- check 7: Dedekind groups --------------------------------------------------

inline std::string check_dedekind() {
  std::vector<std::pair<std::string, GroupPtr>> groups = {
      {"klein4", klein4_group()},
      {"cyclic4", cyclic_group(4)},
      {"cyclic6", cyclic_group(6)},
      {"quaternion8", quaternion8_group()},
  };
  for (const auto& [name, g] : groups) {
    DedekindReport report = verify_dedekind_correspondence(g);
    expect(report.dedekind, name + ": found a non-normal subgroup");
    expect(report.characters_pairwise_distinct, name + ": dual characters collide");
    expect(report.character_formula_holds, name + ": coset character formula fails");
  }
  expect(!dedekind_check(*symmetric_group(3)), "sym3 misclassified as Dedekind");
  return "all subgroups normal, dual characters distinct, coset character formula exact";
}

}  // namespace verify_detail

inline std::vector<CheckResult> run_verification_checks(
    const std::string& filter = "", BlockConvention convention = BlockConvention::literal) {
  using verify_detail::run_one;
  std::vector<std::pair<std::pair<int, std::string>, std::function<std::string()>>> checks = {
      {{1, "characters-vs-order-equivalence"}, [] { return verify_detail::check_characters_vs_order(); }},
      {{2, "frobenius-reciprocity-multiplicities"},
       [] { return verify_detail::check_frobenius_multiplicities(); }},
      {{3, "factorization-round-trip"}, [] { return verify_detail::check_factorization_round_trip(); }},
      {{4, "order-dual"}, [] { return verify_detail::check_order_dual(); }},
      {{5, "induction-suite"}, [] { return verify_detail::check_induction(); }},
      {{6, "imprimitivity-suite"},
       [convention] { return verify_detail::check_imprimitivity(convention); }},
      {{7, "dedekind-groups"}, [] { return verify_detail::check_dedekind(); }},
  };

  std::vector<CheckResult> out;
  for (const auto& [id_name, body] : checks) {
    if (!filter.empty() && id_name.second.find(filter) == std::string::npos) continue;
    out.push_back(run_one(id_name.first, id_name.second, body));
  }
  return out;
}

}  // namespace ordrep
