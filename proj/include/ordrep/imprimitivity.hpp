#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "ordrep/errors.hpp"
#include "ordrep/gspace.hpp"
#include "ordrep/group.hpp"
#include "ordrep/induction.hpp"
#include "ordrep/posrep.hpp"
#include "ordrep/structure.hpp"

namespace ordrep {

// An ordered system of imprimitivity: a partition of the coordinates whose
// blocks are permuted by the permutation parts, together with the action on
// block indices. Blocks are sorted by least element.
struct BlockSystem {
  std::vector<std::vector<int>> blocks;
  GSpace gamma;  // action on block indices

  int block_count() const { return static_cast<int>(blocks.size()); }
  bool is_one_block() const { return blocks.size() == 1; }
  bool is_all_singletons() const {
    return std::all_of(blocks.begin(), blocks.end(),
                       [](const std::vector<int>& b) { return b.size() == 1; });
  }
};

// Which systems count as trivial when testing primitivity.
//   literal: only the one-block system (the partition with a single class).
//   maximal: the one-block system and the all-singletons system.
enum class BlockConvention { literal, maximal };

namespace detail {

inline std::vector<std::vector<int>> sorted_blocks(std::vector<std::vector<int>> blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return blocks;
}

}  // namespace detail

// Validates that the partition is permuted blockwise by every element and
// materializes the block action; nullopt when some block image straddles
// blocks.
inline std::optional<BlockSystem> make_block_system(const PosRep& rho,
                                                    std::vector<std::vector<int>> partition) {
  const PermGroup& g = rho.group();
  int n = rho.degree();

  auto blocks = detail::sorted_blocks(std::move(partition));
  std::vector<int> block_of(n, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int p : blocks[b]) {
      if (p < 0 || p >= n || block_of[p] >= 0) return std::nullopt;
      block_of[p] = static_cast<int>(b);
    }
  for (int p = 0; p < n; ++p)
    if (block_of[p] < 0) return std::nullopt;

  BlockSystem out;
  out.blocks = std::move(blocks);
  out.gamma.group = rho.group_ptr();
  out.gamma.points = out.block_count();
  out.gamma.action.assign(g.order(), std::vector<int>(out.block_count(), -1));
  for (int s = 0; s < g.order(); ++s) {
    const Permutation& sigma = rho.at(s).sigma;
    for (int b = 0; b < out.block_count(); ++b) {
      int target = block_of[sigma[out.blocks[b].front()]];
      for (int p : out.blocks[b])
        if (block_of[sigma[p]] != target) return std::nullopt;
      if (static_cast<int>(out.blocks[target].size()) != static_cast<int>(out.blocks[b].size()))
        return std::nullopt;
      out.gamma.action[s][b] = target;
    }
  }
  return out;
}

// Exhaustive search over all partitions of the coordinates (restricted growth
// strings), keeping those permuted by the generators. Complete for any
// representation, exponential in the degree.
inline std::vector<BlockSystem> block_systems_by_search(const PosRep& rho, int degree_cap = 12) {
  int n = rho.degree();
  if (n > degree_cap)
    throw CapExceeded("block system search: degree " + std::to_string(n) + " exceeds cap " +
                      std::to_string(degree_cap));

  std::vector<Permutation> gen_sigmas;
  for (int gi : rho.group().generator_indices()) gen_sigmas.push_back(rho.at(gi).sigma);

  std::vector<BlockSystem> out;
  std::vector<int> rgs(n, 0);
  std::function<void(int, int)> walk = [&](int pos, int used) {
    if (pos == n) {
      // quick stability screen on the generators before full validation
      for (const auto& sigma : gen_sigmas) {
        std::vector<int> image_class(used, -1);
        for (int p = 0; p < n; ++p) {
          int& ic = image_class[rgs[p]];
          if (ic < 0)
            ic = rgs[sigma[p]];
          else if (ic != rgs[sigma[p]])
            return;
        }
      }
      std::vector<std::vector<int>> blocks(used);
      for (int p = 0; p < n; ++p) blocks[rgs[p]].push_back(p);
      if (auto bs = make_block_system(rho, std::move(blocks))) out.push_back(std::move(*bs));
      return;
    }
    for (int c = 0; c <= used; ++c) {
      rgs[pos] = c;
      walk(pos + 1, c == used ? used + 1 : used);
    }
  };
  walk(0, 0);

  std::sort(out.begin(), out.end(), [](const BlockSystem& a, const BlockSystem& b) {
    if (a.block_count() != b.block_count()) return a.block_count() < b.block_count();
    return a.blocks < b.blocks;
  });
  return out;
}

// For a transitive representation: block systems correspond exactly to the
// subgroups between the base point's stabilizer and G; the block through the
// base point is the K-orbit of the base.
inline std::vector<BlockSystem> block_systems_by_subgroups(const PosRep& rho) {
  const PermGroup& g = rho.group();
  GSpace coords = rho.coordinate_space();
  if (!is_transitive(coords)) throw NotTransitive("block_systems_by_subgroups: intransitive");

  int base = 0;
  Subgroup point_stab = stabilizer(coords, base);

  std::vector<BlockSystem> out;
  std::set<std::vector<std::vector<int>>> seen;
  for (const auto& k : all_subgroups(g)) {
    bool contains_stab = std::all_of(point_stab.members.begin(), point_stab.members.end(),
                                     [&](int m) { return k.contains(m); });
    if (!contains_stab) continue;
    // block through the base: the K-orbit of the base point
    std::set<int> block0;
    for (int m : k.members) block0.insert(coords.act(m, base));
    std::set<std::vector<int>> block_set;
    for (int s = 0; s < g.order(); ++s) {
      std::vector<int> img;
      img.reserve(block0.size());
      for (int p : block0) img.push_back(coords.act(s, p));
      std::sort(img.begin(), img.end());
      block_set.insert(std::move(img));
    }
    std::vector<std::vector<int>> blocks(block_set.begin(), block_set.end());
    auto bs = make_block_system(rho, std::move(blocks));
    if (!bs) throw Error("block_systems_by_subgroups: translate family is not a partition");
    if (seen.insert(bs->blocks).second) out.push_back(std::move(*bs));
  }

  std::sort(out.begin(), out.end(), [](const BlockSystem& a, const BlockSystem& b) {
    if (a.block_count() != b.block_count()) return a.block_count() < b.block_count();
    return a.blocks < b.blocks;
  });
  return out;
}

// All ordered systems of imprimitivity, sorted by block count. Transitive
// representations use the intermediate-subgroup method (complete at any
// degree); intransitive ones fall back to exhaustive partition search.
inline std::vector<BlockSystem> all_block_systems(const PosRep& rho, int search_degree_cap = 12) {
  if (is_transitive(rho.coordinate_space())) return block_systems_by_subgroups(rho);
  return block_systems_by_search(rho, search_degree_cap);
}

inline bool is_trivial_system(const BlockSystem& bs, BlockConvention convention) {
  if (bs.is_one_block()) return true;
  return convention == BlockConvention::maximal && bs.is_all_singletons();
}

inline bool is_primitive(const PosRep& rho, BlockConvention convention = BlockConvention::literal,
                         int search_degree_cap = 12) {
  for (const auto& bs : all_block_systems(rho, search_degree_cap))
    if (!is_trivial_system(bs, convention)) return false;
  return true;
}

// ----------------------------------------------------------------------------
// Band projections

struct BandProjection {
  std::vector<int> diagonal;  // 0/1 per coordinate

  std::vector<SignedExact> apply(const std::vector<SignedExact>& v) const {
    std::vector<SignedExact> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      out[i] = diagonal[i] ? v[i] : SignedExact::zero();
    return out;
  }
};

inline BandProjection band_projection(const BlockSystem& bs, const std::vector<int>& block_ids) {
  int n = 0;
  for (const auto& b : bs.blocks) n += static_cast<int>(b.size());
  BandProjection out;
  out.diagonal.assign(n, 0);
  for (int b : block_ids) {
    if (b < 0 || b >= bs.block_count()) throw Error("band_projection: block index out of range");
    for (int p : bs.blocks[b]) out.diagonal[p] = 1;
  }
  return out;
}

// Verifies P(sA) = rho_s P(A) rho_s^-1 for every element and every singleton
// A, by exact evaluation on all basis vectors.
inline bool covariance_check(const PosRep& rho, const BlockSystem& bs) {
  const PermGroup& g = rho.group();
  int n = rho.degree();
  for (int s = 0; s < g.order(); ++s) {
    PosAut rs = rho.at(s);
    PosAut rs_inv = inverse(rs);
    for (int b = 0; b < bs.block_count(); ++b) {
      BandProjection pa = band_projection(bs, {b});
      BandProjection psa = band_projection(bs, {bs.gamma.act(s, b)});
      for (int i = 0; i < n; ++i) {
        std::vector<SignedExact> e(n);
        e[i] = SignedExact::one();
        auto lhs = psa.apply(e);
        auto rhs = act(rs, pa.apply(act(rs_inv, e)));
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

// ----------------------------------------------------------------------------
// The imprimitivity theorem, constructively

struct ImprimitivityInduction {
  Subgroup h;      // stabilizer of the block through coordinate 0
  PosRep theta;    // rho restricted to h, acting on that block
  PosRep induced;  // Ind_h^G(theta), rebuilt
  PosAut witness;  // intertwiner: witness * induced_s = rho_s * witness
};

namespace detail {

// rho restricted to the subgroup h, cut down to the coordinates in `coords`
// (which h must permute among themselves).
inline PosRep restrict_to_block(const PosRep& rho, const std::vector<int>& coords,
                                const GroupPtr& h_group) {
  const PermGroup& g = rho.group();
  std::vector<int> local(rho.degree(), -1);
  for (std::size_t i = 0; i < coords.size(); ++i) local[coords[i]] = static_cast<int>(i);

  std::vector<PosAut> assignment;
  assignment.reserve(h_group->order());
  for (const auto& perm : h_group->elements()) {
    const PosAut& a = rho.at(g.index_of(perm));
    std::vector<int> sigma(coords.size());
    Multiplier m = Multiplier::ones(static_cast<int>(coords.size()));
    for (std::size_t i = 0; i < coords.size(); ++i) {
      int img = a.sigma[coords[i]];
      if (local[img] < 0) throw Error("restrict_to_block: block is not invariant");
      sigma[i] = local[img];
      m.entries[local[img]] = a.m.entries[img];
    }
    assignment.push_back(PosAut{std::move(m), Permutation(std::move(sigma))});
  }
  return PosRep(h_group, std::move(assignment), false);
}

}  // namespace detail

// Extracts the inducing data of a nontrivial transitive system: the stabilizer
// H of the block through coordinate 0 and the restriction theta of rho to that
// block, then rebuilds Ind_H^G(theta) and verifies the order equivalence.
inline ImprimitivityInduction induction_from_imprimitivity(const PosRep& rho,
                                                           const BlockSystem& bs) {
  if (!is_transitive(bs.gamma)) throw NotTransitive("induction_from_imprimitivity");
  if (bs.is_one_block()) throw TrivialSystem("induction_from_imprimitivity: single block");

  const PermGroup& g = rho.group();
  Subgroup h = stabilizer(bs.gamma, 0);
  GroupPtr h_group = subgroup_as_group(g, h);
  PosRep theta = detail::restrict_to_block(rho, bs.blocks[0], h_group);
  PosRep ind = induce(theta, h, rho.group_ptr()).rep;

  OrderEquivalence oe = order_equivalent(rho, ind);
  if (!oe.equivalent)
    throw Error("induction_from_imprimitivity: rebuilt induced representation is inequivalent");
  return ImprimitivityInduction{std::move(h), std::move(theta), std::move(ind), *oe.witness};
}

// One step of the chain towards a primitive representation.
struct ChainStep {
  GroupPtr parent;
  Subgroup h;
  PosRep theta;
};

// Repeatedly peels a finest nontrivial transitive system off an irreducible
// representation until the result is primitive under the chosen convention.
// Composing the inductions back up recovers a representation order equivalent
// to the input (verified here).
inline std::vector<ChainStep> primitive_chain(const PosRep& rho,
                                              BlockConvention convention = BlockConvention::literal,
                                              int search_degree_cap = 12) {
  if (!is_irreducible(rho)) throw NotIrreducible("primitive_chain: input is reducible");

  std::vector<ChainStep> chain;
  PosRep current = rho;
  while (true) {
    auto systems = all_block_systems(current, search_degree_cap);
    const BlockSystem* finest = nullptr;
    for (const auto& bs : systems) {
      if (is_trivial_system(bs, convention)) continue;
      if (!finest || bs.block_count() > finest->block_count()) finest = &bs;
    }
    if (!finest) break;  // primitive
    ImprimitivityInduction step = induction_from_imprimitivity(current, *finest);
    chain.push_back(ChainStep{current.group_ptr(), step.h, step.theta});
    current = chain.back().theta;
  }

  // recomposition check: folding the inductions back recovers the input
  if (!chain.empty()) {
    PosRep acc = chain.back().theta;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
      acc = induce(acc, it->h, it->parent).rep;
    if (!order_equivalent(acc, rho).equivalent)
      throw Error("primitive_chain: recomposition is not order equivalent to the input");
  }
  return chain;
}

}  // namespace ordrep
