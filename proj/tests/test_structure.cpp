#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ordrep/induction.hpp"
#include "ordrep/structure.hpp"
#include "ordrep/verify.hpp"
#include "test_helpers.hpp"

using namespace ordrep;
using ordrep::testing::pi1_rep;
using ordrep::testing::pi2_rep;
using ordrep::testing::z2_diag_rep;

TEST_CASE("factor: the 2-dimensional example") {
  PosRep rho = z2_diag_rep();
  Factorization f = factor(rho);

  int gen = rho.group().generator_indices()[0];
  CHECK(f.pi[gen] == parse_cycles("(1 2)", 2));
  CHECK(f.pi[rho.group().identity_index()].is_identity());

  // geometric mean of f(e) = (1,1) and f((12)) = (2, 1/2)
  ExactPositive sqrt2 = ExactPositive::from_integer(2).root(2);
  REQUIRE(f.m.degree() == 2);
  CHECK(f.m.entries[0] == sqrt2);
  CHECK(f.m.entries[1] == sqrt2.inverse());
  CHECK(verify_factorization(rho, f));
}

TEST_CASE("factor: permutation representations have trivial multiplier") {
  PosRep pi = pi1_rep();
  Factorization f = factor(pi);
  CHECK(f.m.is_one());
  for (int s = 0; s < pi.group().order(); ++s) CHECK(f.pi[s] == pi.at(s).sigma);

  PosRep triv = PosRep::trivial(trivial_group(), 5);
  Factorization ft = factor(triv);
  CHECK(ft.m.is_one());
  CHECK(ft.pi[0].is_identity());
}

TEST_CASE("verify_factorization rejects a corrupted multiplier") {
  PosRep rho = z2_diag_rep();
  Factorization f = factor(rho);
  REQUIRE(verify_factorization(rho, f));
  Factorization broken = f;
  broken.m.entries[0] *= ExactPositive::from_integer(2);
  CHECK(!verify_factorization(rho, broken));
  Factorization wrong_pi = f;
  wrong_pi.pi[rho.group().generator_indices()[0]] = Permutation::identity(2);
  CHECK(!verify_factorization(rho, wrong_pi));
}

TEST_CASE("factor round trip on randomized multipliers") {
  std::mt19937 rng(99);
  auto groups = {cyclic_group(4), symmetric_group(3), klein4_group()};
  for (const auto& g : groups) {
    auto subs = all_subgroups(*g);
    for (int trial = 0; trial < 20; ++trial) {
      const Subgroup& h = subs[rng() % subs.size()];
      PosRep pi = PosRep::coset_rep(g, h);
      Multiplier m = Multiplier::ones(pi.degree());
      for (auto& e : m.entries)
        for (long long p : {2LL, 3LL, 5LL}) {
          long long exp = static_cast<long long>(rng() % 5) - 2;
          if (exp) e *= ExactPositive::from_integer(p).pow(Rational(exp));
        }
      Multiplier minv = m.inverse();
      std::vector<PosAut> assignment;
      for (int s = 0; s < g->order(); ++s)
        assignment.push_back(PosAut{m * permuted(minv, pi.at(s).sigma), pi.at(s).sigma});
      PosRep rho(g, std::move(assignment), true);

      Factorization f = factor(rho);
      for (int s = 0; s < g->order(); ++s) REQUIRE(f.pi[s] == pi.at(s).sigma);
      REQUIRE(verify_factorization(rho, f));
      // recovered multiplier differs by a pi-invariant factor: constant ratio
      // on every orbit
      Multiplier ratio = f.m * minv;
      for (const auto& orbit : orbits(rho.coordinate_space()))
        for (int p : orbit) REQUIRE(ratio.entries[p] == ratio.entries[orbit.front()]);
    }
  }
}

TEST_CASE("decompose: the two degree-6 representations") {
  Decomposition d1 = decompose(pi1_rep());
  CHECK(d1.total_degree == 6);
  CHECK(d1.dimensions() == std::vector<int>{4, 1, 1});
  REQUIRE(d1.summands.size() == 2);
  CHECK(d1.summands[0].index == 4);
  CHECK(d1.summands[0].multiplicity == 1);
  CHECK(d1.summands[0].class_key.order() == 1);  // free orbit: trivial stabilizer
  CHECK(d1.summands[1].index == 1);
  CHECK(d1.summands[1].multiplicity == 2);
  CHECK(d1.summands[1].class_key.order() == 4);  // fixed points: full stabilizer

  // the second splits into three 2-dim pieces with pairwise distinct
  // stabilizer classes (the group is abelian, so classes are single subgroups)
  Decomposition d2 = decompose(pi2_rep());
  CHECK(d2.dimensions() == std::vector<int>{2, 2, 2});
  REQUIRE(d2.summands.size() == 3);
  for (const auto& s : d2.summands) {
    CHECK(s.index == 2);
    CHECK(s.multiplicity == 1);
    CHECK(s.class_key.order() == 2);
  }
  CHECK(d2.summands[0].class_key.members != d2.summands[1].class_key.members);
  CHECK(d2.summands[1].class_key.members != d2.summands[2].class_key.members);

  PosRep triv = PosRep::trivial(symmetric_group(3), 3);
  Decomposition dt = decompose(triv);
  REQUIRE(dt.summands.size() == 1);
  CHECK(dt.summands[0].index == 1);
  CHECK(dt.summands[0].multiplicity == 3);
  CHECK(dt.summands[0].class_key.order() == 6);
}

TEST_CASE("decomposition bookkeeping: dimensions add up") {
  for (const auto& [name, g] : small_group_catalog()) {
    for (const auto& h : all_subgroups(*g)) {
      PosRep rep = PosRep::coset_rep(g, h);
      Decomposition d = decompose(rep);
      int total = 0;
      for (const auto& s : d.summands) total += s.index * s.multiplicity;
      CHECK(total == rep.degree());
    }
  }
}

TEST_CASE("irreducibility") {
  CHECK(is_irreducible(PosRep::regular(symmetric_group(3))));
  CHECK(!is_irreducible(PosRep::trivial(symmetric_group(3), 2)));

  auto z4 = cyclic_group(4);
  CHECK(is_irreducible(PosRep::coset_rep(z4, ordrep::testing::z4_half(*z4))));
}

TEST_CASE("invariant bands are unions of orbits") {
  auto bands = invariant_bands(pi1_rep());
  CHECK(bands.size() == 8);  // 2^3 for orbits {1..4}, {5}, {6}
  CHECK(bands.front().empty());
  CHECK(bands.back().size() == 6);

  CHECK(invariant_bands(PosRep::regular(cyclic_group(3))).size() == 2);
  CHECK(invariant_bands(PosRep::trivial(cyclic_group(2), 2)).size() == 4);
  CHECK_THROWS_AS(invariant_bands(PosRep::trivial(cyclic_group(2), 21)), TooManyOrbits);
}

TEST_CASE("order equivalence: the degree-6 pair is inequivalent") {
  PosRep p1 = pi1_rep(), p2 = pi2_rep();
  CHECK(!order_equivalent(p1, p2).equivalent);
  CHECK(!order_equivalent(p2, p1).equivalent);

  OrderEquivalence self = order_equivalent(p1, p1);
  REQUIRE(self.equivalent);
  REQUIRE(self.witness.has_value());
  for (int s = 0; s < p1.group().order(); ++s)
    CHECK(semidirect_mul(*self.witness, p1.at(s)) == semidirect_mul(p1.at(s), *self.witness));
}

TEST_CASE("order equivalence: rho is equivalent to its permutation part") {
  PosRep rho = z2_diag_rep();
  Factorization f = factor(rho);
  std::vector<PosAut> perm_assignment;
  for (const auto& p : f.pi) perm_assignment.push_back(PosAut::from_permutation(p));
  PosRep pi(rho.group_ptr(), std::move(perm_assignment), true);

  OrderEquivalence oe = order_equivalent(rho, pi);
  REQUIRE(oe.equivalent);
  REQUIRE(oe.witness.has_value());
  // T rho2 = rho1 T, exactly, and T is itself a lattice automorphism
  for (int s = 0; s < rho.group().order(); ++s)
    CHECK(semidirect_mul(*oe.witness, pi.at(s)) == semidirect_mul(rho.at(s), *oe.witness));

  CHECK_THROWS_AS(order_equivalent(rho, PosRep::trivial(symmetric_group(3), 2)), GroupMismatch);
  // degree mismatch is a negative verdict, not an error
  CHECK(!order_equivalent(rho, PosRep::trivial(rho.group_ptr(), 3)).equivalent);
}

TEST_CASE("characters") {
  PosRep p1 = pi1_rep();
  const PermGroup& g = p1.group();
  CHECK(character(p1).values[g.identity_index()] == 6);
  // the generator mapped to (1 2)(3 4) fixes points 5 and 6
  CHECK(character(p1).values[g.generator_indices()[0]] == 2);

  PosRep reg = PosRep::regular(symmetric_group(3));
  Character chi = character(reg);
  for (int s = 0; s < reg.group().order(); ++s)
    CHECK(chi.values[s] == (s == reg.group().identity_index() ? 6 : 0));

  // conjugation invariance
  for (const auto& rep : {p1, pi2_rep(), PosRep::regular(dihedral_group(4))}) {
    Character c = character(rep);
    const PermGroup& gg = rep.group();
    for (int s = 0; s < gg.order(); ++s)
      for (int t = 0; t < gg.order(); ++t)
        CHECK(c.values[gg.mul(gg.mul(t, s), gg.inv(t))] == c.values[s]);
  }
}

TEST_CASE("character values equal the exact matrix trace") {
  // a conjugated copy of pi1 whose permutation parts have fixed points
  PosRep p1 = pi1_rep();
  Multiplier m = Multiplier::ones(6);
  m.entries[1] = ExactPositive::from_rational(Rational(7, 3));
  m.entries[4] = ExactPositive::from_integer(2).root(2);
  Multiplier minv = m.inverse();
  std::vector<PosAut> conj;
  for (int s = 0; s < p1.group().order(); ++s)
    conj.push_back(PosAut{m * permuted(minv, p1.at(s).sigma), p1.at(s).sigma});
  PosRep conjugated(p1.group_ptr(), std::move(conj), true);

  // conjugation leaves the diagonal of the matrix form at 1 on fixed points,
  // so the exact trace is the fixed-point count
  for (const PosRep& rep : {z2_diag_rep(), pi1_rep(), conjugated}) {
    Character chi = character(rep);
    for (int s = 0; s < rep.group().order(); ++s) {
      auto mat = to_matrix(rep.at(s));
      long long trace = 0;
      for (int i = 0; i < rep.degree(); ++i) {
        if (mat[i][i].is_zero()) continue;
        REQUIRE(mat[i][i] == SignedExact::one());
        ++trace;
      }
      CHECK(trace == chi.values[s]);
    }
  }
}

TEST_CASE("linear equivalence") {
  PosRep p1 = pi1_rep(), p2 = pi2_rep();
  CHECK(linear_equivalent(p1, p2));
  CHECK(linear_equivalent(p1, p1));
  CHECK(!linear_equivalent(p1, PosRep::trivial(p1.group_ptr(), 2)));
}

TEST_CASE("order equivalence is an equivalence relation") {
  // three models of the same representation: a permutation part, a conjugated
  // copy, and a coordinate-shuffled conjugated copy
  auto g = klein4_group();
  PosRep a = pi2_rep();

  Multiplier m = Multiplier::ones(6);
  m.entries[0] = ExactPositive::from_rational(Rational(3, 2));
  m.entries[3] = ExactPositive::from_integer(5);
  Multiplier minv = m.inverse();
  std::vector<PosAut> conj;
  for (int s = 0; s < g->order(); ++s)
    conj.push_back(PosAut{m * permuted(minv, a.at(s).sigma), a.at(s).sigma});
  PosRep b(g, std::move(conj), true);

  PosRep c = PosRep::permutation_rep(
      g, {parse_cycles("(3 4)(5 6)", 6), parse_cycles("(3 4)(1 2)", 6)});

  // reflexive, symmetric, and transitive across the three models
  for (const PosRep* x : {&a, &b, &c}) CHECK(order_equivalent(*x, *x).equivalent);
  CHECK(order_equivalent(a, b).equivalent);
  CHECK(order_equivalent(b, a).equivalent);
  CHECK(order_equivalent(b, c).equivalent);
  CHECK(order_equivalent(c, b).equivalent);
  CHECK(order_equivalent(a, c).equivalent);
  CHECK(order_equivalent(c, a).equivalent);

  // order equivalence implies linear equivalence on the same triple
  CHECK(linear_equivalent(a, b));
  CHECK(linear_equivalent(b, c));
  CHECK(linear_equivalent(a, c));
}

TEST_CASE("order equivalence implies linear equivalence") {
  for (const auto& g : {cyclic_group(6), symmetric_group(3), klein4_group()}) {
    auto dual = order_dual(g);
    for (std::size_t i = 0; i < dual.size(); ++i)
      for (std::size_t j = 0; j < dual.size(); ++j) {
        if (dual[i].rep.degree() != dual[j].rep.degree()) continue;
        if (order_equivalent(dual[i].rep, dual[j].rep).equivalent)
          CHECK(linear_equivalent(dual[i].rep, dual[j].rep));
      }
  }
}

TEST_CASE("every representation rebuilds from its decomposition") {
  // the classification loop: rho is order equivalent to the direct sum of
  // coset representations named by its decomposition, with multiplicities
  std::mt19937 rng(2718);
  for (const auto& g : {cyclic_group(6), symmetric_group(3), klein4_group(), dihedral_group(4)}) {
    auto subs = all_subgroups(*g);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<PosRep> parts;
      int degree = 0;
      while (degree < 8) {
        const Subgroup& h = subs[rng() % subs.size()];
        parts.push_back(PosRep::coset_rep(g, h));
        degree += parts.back().degree();
        if (rng() % 2) break;
      }
      PosRep pi = parts.size() == 1 ? parts.front() : direct_sum(parts);

      Multiplier m = Multiplier::ones(pi.degree());
      for (auto& e : m.entries) {
        long long exp = static_cast<long long>(rng() % 5) - 2;
        if (exp) e = ExactPositive::from_integer(3).pow(Rational(exp));
      }
      Multiplier minv = m.inverse();
      std::vector<PosAut> conj;
      for (int s = 0; s < g->order(); ++s)
        conj.push_back(PosAut{m * permuted(minv, pi.at(s).sigma), pi.at(s).sigma});
      PosRep rho(g, std::move(conj), true);

      std::vector<PosRep> canonical;
      for (const auto& summand : decompose(rho).summands)
        for (int k = 0; k < summand.multiplicity; ++k)
          canonical.push_back(PosRep::coset_rep(g, summand.class_key));
      PosRep rebuilt = canonical.size() == 1 ? canonical.front() : direct_sum(canonical);
      REQUIRE(order_equivalent(rho, rebuilt).equivalent);
    }
  }
}

TEST_CASE("order dual") {
  auto s3_dual = order_dual(symmetric_group(3));
  std::vector<int> dims;
  for (const auto& e : s3_dual) dims.push_back(e.rep.degree());
  CHECK(dims == std::vector<int>{6, 3, 2, 1});

  auto z4_dual = order_dual(cyclic_group(4));
  dims.clear();
  for (const auto& e : z4_dual) dims.push_back(e.rep.degree());
  CHECK(dims == std::vector<int>{4, 2, 1});

  auto triv_dual = order_dual(trivial_group());
  REQUIRE(triv_dual.size() == 1);
  CHECK(triv_dual[0].rep.degree() == 1);

  for (const auto& e : s3_dual) {
    CHECK(is_irreducible(e.rep));
    CHECK(6 % e.rep.degree() == 0);
  }
  for (std::size_t i = 0; i < s3_dual.size(); ++i)
    for (std::size_t j = i + 1; j < s3_dual.size(); ++j)
      CHECK(!order_equivalent(s3_dual[i].rep, s3_dual[j].rep).equivalent);
}

TEST_CASE("dedekind groups") {
  CHECK(dedekind_check(*klein4_group()));
  CHECK(dedekind_check(*quaternion8_group()));
  CHECK(dedekind_check(*cyclic_group(6)));
  CHECK(!dedekind_check(*symmetric_group(3)));

  DedekindReport k4 = verify_dedekind_correspondence(klein4_group());
  CHECK(k4.dedekind);
  CHECK(k4.characters_pairwise_distinct);
  CHECK(k4.character_formula_holds);
  CHECK(order_dual(klein4_group()).size() == 5);

  DedekindReport q8 = verify_dedekind_correspondence(quaternion8_group());
  CHECK(q8.dedekind);
  CHECK(q8.characters_pairwise_distinct);
  CHECK(q8.character_formula_holds);
}
