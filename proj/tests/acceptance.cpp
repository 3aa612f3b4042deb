// Acceptance suite: every criterion below is exact (zero tolerance) and must
// finish inside its stated time budget. One PASS/FAIL line is printed per
// criterion; the process exits nonzero if any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "function_space_oracle.hpp"
#include "ordrep/ordrep.hpp"
#include "test_helpers.hpp"

using namespace ordrep;
using ordrep::testing::FunctionSpaceOracle;
using ordrep::testing::pi1_rep;
using ordrep::testing::pi2_rep;
using ordrep::testing::z4_half;

namespace {

struct Criterion {
  int id;
  std::string description;
  double budget_seconds;  // 0 = no budget
  std::function<void()> body;
};

struct CheckFailure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw CheckFailure{what};
}

// Independent subgroup-class count via subset enumeration (bitmask closure),
// deliberately separate from the library's layered enumeration.
int class_count_oracle(const PermGroup& g) {
  int n = g.order();
  require(n <= 16, "oracle limited to order 16");
  std::vector<std::vector<int>> subgroups;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (!(mask & 1u)) continue;
    std::vector<int> members;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) members.push_back(i);
    bool closed = true;
    for (int a : members) {
      if (!(mask & (1u << g.inv(a)))) closed = false;
      for (int b : members)
        if (!(mask & (1u << g.mul(a, b)))) closed = false;
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
      for (int s : members) conj.push_back(g.mul(g.mul(r, s), g.inv(r)));
      std::sort(conj.begin(), conj.end());
      seen.insert(std::move(conj));
    }
  }
  return classes;
}

// ---------------------------------------------------------------------------

void criterion1_character_counterexample() {
  PosRep p1 = pi1_rep(), p2 = pi2_rep();
  const PermGroup& g = p1.group();
  require(g.order() == 4, "klein four group");

  Character c1 = character(p1), c2 = character(p2);
  for (int s = 0; s < 4; ++s)
    require(c1.values[s] == c2.values[s], "characters differ at element " + std::to_string(s));
  require(linear_equivalent(p1, p2), "expected linear equivalence");
  require(!order_equivalent(p1, p2).equivalent, "expected order inequivalence");
  require(decompose(p1).dimensions() == std::vector<int>({4, 1, 1}), "first decomposition");
  require(decompose(p2).dimensions() == std::vector<int>({2, 2, 2}), "second decomposition");
}

void criterion2_frobenius_counterexamples() {
  // (a) H = {e}: restricted multiplicity is dim rho; induced multiplicity is
  // at most 1 and exactly once 1 across the order dual.
  for (const auto& g : {cyclic_group(4), symmetric_group(3)}) {
    Subgroup e = trivial_subgroup(*g);
    GroupPtr eg = subgroup_as_group(*g, e);
    PosRep theta = PosRep::trivial(eg, 1);
    PosRep ind = induce(theta, e, g).rep;
    int hits = 0;
    for (const auto& entry : order_dual(g)) {
      int restricted = multiplicity(restrict_rep(entry.rep, e).rep, theta);
      require(restricted == entry.rep.degree(), "m(theta, rho|_H) != dim rho");
      int induced = multiplicity(ind, entry.rep);
      require(induced <= 1, "m(rho, Ind theta) > 1");
      hits += induced;
    }
    require(hits == 1, "regular representation should match exactly one irreducible");
  }

  // (b) G = Z/4, H = {0, 2}: cell (1, 2) and the induction isomorphism.
  GroupPtr z4 = cyclic_group(4);
  Subgroup h = z4_half(*z4);
  FrobeniusTable table = frobenius_table(z4, h);
  require(table.theta_dims.at(0) == 2 && table.rho_dims.at(0) == 4, "table ordering");
  require(table.cells[0][0].m_induced == 1, "m(rho, Ind theta) != 1");
  require(table.cells[0][0].m_restricted == 2, "m(theta, rho|_H) != 2");
  PosRep theta_reg = PosRep::regular(subgroup_as_group(*z4, h));
  require(order_equivalent(induce(theta_reg, h, z4).rep, PosRep::regular(z4)).equivalent,
          "Ind theta_reg is not the regular representation");
}

void criterion3_factorization_round_trip() {
  std::mt19937 rng(20240817);
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
  for (const auto& g : pool) pool_subs.push_back(all_subgroups(*g));

  for (int inst = 0; inst < 500; ++inst) {
    std::size_t which = pick(pool.size());
    const GroupPtr& g = pool[which];
    const auto& subs = pool_subs[which];

    std::vector<PosRep> parts;
    int degree = 0;
    while (true) {
      const Subgroup& h = subs[pick(subs.size())];
      int index = g->order() / h.order();
      if (degree + index > 12) {
        if (!parts.empty()) break;
        continue;
      }
      parts.push_back(PosRep::coset_rep(g, h));
      degree += index;
      if (degree == 12 || (pick(3) == 0 && !parts.empty())) break;
    }
    PosRep pi = parts.size() == 1 ? parts.front() : direct_sum(parts);

    Multiplier m = Multiplier::ones(degree);
    for (auto& e : m.entries)
      for (long long p : {2LL, 3LL, 5LL}) {
        long long exp = static_cast<long long>(pick(5)) - 2;
        if (exp) e *= ExactPositive::from_integer(p).pow(Rational(exp));
      }

    Multiplier minv = m.inverse();
    std::vector<PosAut> assignment;
    for (int s = 0; s < g->order(); ++s)
      assignment.push_back(PosAut{m * permuted(minv, pi.at(s).sigma), pi.at(s).sigma});
    PosRep rho(g, std::move(assignment), true);

    Factorization f = factor(rho);
    for (int s = 0; s < g->order(); ++s)
      require(f.pi[s] == pi.at(s).sigma, "pi not recovered exactly");
    require(verify_factorization(rho, f), "rebuilt rho differs from the input");
    Multiplier ratio = f.m * minv;
    for (const auto& orbit : orbits(rho.coordinate_space()))
      for (int p : orbit)
        require(ratio.entries[p] == ratio.entries[orbit.front()],
                "recovered multiplier is not pi-invariant times the input");
  }
}

void criterion4_order_dual() {
  for (const auto& [name, g] : small_group_catalog()) {
    auto dual = order_dual(g);
    require(static_cast<int>(dual.size()) == class_count_oracle(*g),
            name + ": count differs from the subset oracle");
    for (const auto& entry : dual) {
      require(is_irreducible(entry.rep), name + ": entry not irreducible");
      require(g->order() % entry.rep.degree() == 0, name + ": dimension does not divide order");
    }
    for (std::size_t i = 0; i < dual.size(); ++i)
      for (std::size_t j = i + 1; j < dual.size(); ++j)
        require(!order_equivalent(dual[i].rep, dual[j].rep).equivalent,
                name + ": dual entries order equivalent");
  }
}

void criterion5_induction_suite() {
  for (const auto& [name, g] : small_group_catalog()) {
    auto subs = all_subgroups(*g);
    for (const auto& h : subs) {
      GroupPtr hg = subgroup_as_group(*g, h);
      auto dual_h = order_dual(hg);
      for (const auto& th : dual_h) {
        InducedRep ind = induce(th.rep, h, g);
        require(ind.rep.degree() == (g->order() / h.order()) * th.rep.degree(),
                name + ": dimension formula");
        FunctionSpaceOracle oracle(th.rep, h, g);
        require(oracle.matches(ind), name + ": function-space oracle disagrees");
      }
      for (const auto& k : subs) {
        bool chain = std::all_of(h.members.begin(), h.members.end(),
                                 [&](int m) { return k.contains(m); });
        if (!chain) continue;
        for (const auto& th : dual_h)
          require(stages_check(g, k, h, th.rep), name + ": induction in stages");
      }
    }
  }
}

void criterion6_imprimitivity_suite() {
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
      require(static_cast<int>(systems.size()) == intermediate,
              name + ": system count != intermediate subgroup count");

      // independent partition search agrees (degree <= 12 throughout)
      auto searched = block_systems_by_search(rep);
      require(searched.size() == systems.size(), name + ": partition search disagrees");
      for (std::size_t i = 0; i < systems.size(); ++i)
        require(searched[i].blocks == systems[i].blocks, name + ": partition mismatch");

      for (const auto& bs : systems) {
        require(covariance_check(rep, bs), name + ": covariance identity");
        if (!bs.is_one_block() && is_transitive(bs.gamma)) {
          ImprimitivityInduction ext = induction_from_imprimitivity(rep, bs);
          require(order_equivalent(rep, ext.induced).equivalent, name + ": extraction round trip");
        }
      }

      auto chain = primitive_chain(rep, BlockConvention::literal);
      require(chain.empty() == (rep.degree() == 1), name + ": chain shape under D1");
      if (!chain.empty())
        require(chain.back().theta.degree() == 1, name + ": chain does not end primitive");
    }
  }
}

void criterion7_dedekind() {
  std::vector<std::pair<std::string, GroupPtr>> groups = {
      {"klein4", klein4_group()},
      {"cyclic4", cyclic_group(4)},
      {"cyclic6", cyclic_group(6)},
      {"quaternion8", quaternion8_group()},
  };
  for (const auto& [name, g] : groups) {
    require(dedekind_check(*g), name + ": non-normal subgroup found");
    auto dual = order_dual(g);
    std::vector<Character> chars;
    for (const auto& entry : dual) chars.push_back(character(entry.rep));
    for (std::size_t i = 0; i < chars.size(); ++i)
      for (std::size_t j = i + 1; j < chars.size(); ++j)
        require(!(chars[i] == chars[j]), name + ": characters collide");
    for (std::size_t i = 0; i < dual.size(); ++i) {
      const Subgroup& sub = dual[i].subgroup;
      long long index = g->order() / sub.order();
      for (int s = 0; s < g->order(); ++s)
        require(chars[i].values[s] == (sub.contains(s) ? index : 0),
                name + ": character formula fails");
    }
  }
}

void criterion8_cli_verify() {
#ifdef ORDREP_BIN
  std::string cmd = std::string(ORDREP_BIN) + " verify-paper 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  require(pipe != nullptr, "could not launch the CLI");
  std::string output;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) output.append(buf.data(), n);
  int status = pclose(pipe);
  require(WIFEXITED(status) && WEXITSTATUS(status) == 0,
          "verify-paper exited with " + std::to_string(WIFEXITED(status) ? WEXITSTATUS(status) : -1));
  for (int id = 1; id <= 7; ++id)
    require(output.find("check " + std::to_string(id) + " ") != std::string::npos,
            "report does not enumerate check " + std::to_string(id));
  require(output.find("[FAIL]") == std::string::npos, "report contains failures");
#else
  require(false, "ORDREP_BIN not configured");
#endif
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "equal characters, linear equivalence, order inequivalence, splits (4,1,1)/(2,2,2)", 1.0,
       criterion1_character_counterexample},
      {2, "Frobenius reciprocity multiplicity failures and the index-2 induction", 1.0,
       criterion2_frobenius_counterexamples},
      {3, "500 randomized factorization round trips, exact recovery", 30.0,
       criterion3_factorization_round_trip},
      {4, "order dual: inequivalent irreducibles, oracle counts, dimension divides order", 60.0,
       criterion4_order_dual},
      {5, "induction: dimension formula, function-space oracle, induction in stages", 120.0,
       criterion5_induction_suite},
      {6, "imprimitivity: system counts, covariance, extraction, primitive chains", 120.0,
       criterion6_imprimitivity_suite},
      {7, "Dedekind groups: normal subgroups, distinct characters, character formula", 10.0,
       criterion7_dedekind},
      {8, "CLI verify-paper exits 0 and enumerates checks 1-7", 0.0, criterion8_cli_verify},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.body();
    } catch (const CheckFailure& f) {
      error = f.what;
    } catch (const std::exception& e) {
      error = std::string("exception: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_budget = c.budget_seconds <= 0.0 || elapsed <= c.budget_seconds;
    bool passed = error.empty() && in_budget;
    if (!passed) ++failures;

    std::ostringstream line;
    line << (passed ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.description
         << " (" << elapsed << "s";
    if (c.budget_seconds > 0) line << " / budget " << c.budget_seconds << "s";
    line << ")";
    if (!error.empty()) line << " -- " << error;
    if (error.empty() && !in_budget) line << " -- exceeded time budget";
    std::cout << line.str() << std::endl;
  }

  if (failures) {
    std::cout << failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all acceptance criteria passed" << std::endl;
  return 0;
}
