#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ordrep/errors.hpp"
#include "ordrep/group.hpp"
#include "ordrep/posaut.hpp"
#include "ordrep/posrep.hpp"
#include "ordrep/structure.hpp"

namespace ordrep {

// Basis bookkeeping for an induced representation: basis vectors are pairs
// (coset index, inner index), coset-major, with the identity coset first.
struct InducedBasis {
  int coset_count = 0;
  int inner_dim = 0;
  CosetSpace cosets;

  int index(int coset, int inner) const { return coset * inner_dim + inner; }
  std::pair<int, int> pair(int basis) const { return {basis / inner_dim, basis % inner_dim}; }
  int dimension() const { return coset_count * inner_dim; }
};

struct InducedRep {
  PosRep rep;
  InducedBasis basis;
  std::vector<int> embedding;  // inner index j -> basis index of the identity-coset copy
};

namespace detail {

inline void require_same_elements(const PermGroup& theta_group, const PermGroup& h_group,
                                  const std::string& what) {
  if (!(theta_group == h_group))
    throw Error(what + ": representation is not over the given subgroup");
}

}  // namespace detail

// Induced representation of theta from the subgroup h up to g. For s in G and
// a basis vector (r, j): write s*r = r' * t with r' a coset representative and
// t in H; then s maps block r to block r', acting by theta_t inside.
inline InducedRep induce(const PosRep& theta, const Subgroup& h, const GroupPtr& g) {
  require_subgroup(*g, h, "induce");
  GroupPtr h_group = subgroup_as_group(*g, h);
  detail::require_same_elements(theta.group(), *h_group, "induce");

  InducedBasis basis;
  basis.cosets = coset_space(*g, h);
  basis.coset_count = static_cast<int>(basis.cosets.reps.size());
  basis.inner_dim = theta.degree();
  int n = basis.dimension();

  // h member (parent index) -> element index in theta's group
  std::vector<int> theta_index(g->order(), -1);
  for (int m : h.members) theta_index[m] = theta.group().index_of(g->element(m));

  std::vector<PosAut> assignment;
  assignment.reserve(g->order());
  for (int s = 0; s < g->order(); ++s) {
    std::vector<int> sigma(n);
    Multiplier m = Multiplier::ones(n);
    for (int c = 0; c < basis.coset_count; ++c) {
      int u = g->mul(s, basis.cosets.reps[c]);
      int c2 = basis.cosets.coset_of[u];
      int t = g->mul(g->inv(basis.cosets.reps[c2]), u);
      const PosAut& th = theta.at(theta_index[t]);
      for (int j = 0; j < basis.inner_dim; ++j) {
        int from = basis.index(c, j);
        int to = basis.index(c2, th.sigma[j]);
        sigma[from] = to;
        m.entries[to] = th.m.entries[th.sigma[j]];
      }
    }
    assignment.push_back(PosAut{std::move(m), Permutation(std::move(sigma))});
  }

  InducedRep out{PosRep(g, std::move(assignment), true), std::move(basis), {}};
  out.embedding.resize(out.basis.inner_dim);
  for (int j = 0; j < out.basis.inner_dim; ++j) out.embedding[j] = out.basis.index(0, j);
  return out;
}

// Restriction of rho to a subgroup, returned together with the subgroup as a
// standalone group.
struct RestrictedRep {
  GroupPtr subgroup_group;
  PosRep rep;
};

inline RestrictedRep restrict_rep(const PosRep& rho, const Subgroup& h) {
  const PermGroup& g = rho.group();
  require_subgroup(g, h, "restrict_rep");
  GroupPtr h_group = subgroup_as_group(g, h);
  std::vector<PosAut> assignment;
  assignment.reserve(h_group->order());
  for (const auto& p : h_group->elements()) assignment.push_back(rho.at(g.index_of(p)));
  PosRep rep(h_group, std::move(assignment), false);
  return RestrictedRep{std::move(h_group), std::move(rep)};
}

// Number of copies of the irreducible irr in the decomposition of rho.
inline int multiplicity(const PosRep& rho, const PosRep& irr) {
  if (!same_group(rho, irr)) throw GroupMismatch("multiplicity: different groups");
  if (!is_irreducible(irr)) throw IrreducibleRequired("multiplicity: pattern is not irreducible");
  Decomposition dr = decompose(rho);
  Decomposition di = decompose(irr);
  const auto& key = di.summands.front().class_key.members;
  for (const auto& s : dr.summands)
    if (s.class_key.members == key) return s.multiplicity;
  return 0;
}

// Block-diagonal order direct sum.
inline PosRep direct_sum(const std::vector<PosRep>& reps) {
  if (reps.empty()) throw Error("direct_sum: need at least one summand");
  const PermGroup& g = reps.front().group();
  int n = 0;
  for (const auto& r : reps) {
    if (!(r.group() == g)) throw GroupMismatch("direct_sum: different groups");
    n += r.degree();
  }
  std::vector<PosAut> assignment;
  assignment.reserve(g.order());
  for (int s = 0; s < g.order(); ++s) {
    std::vector<int> sigma(n);
    Multiplier m = Multiplier::ones(n);
    int offset = 0;
    for (const auto& r : reps) {
      const PosAut& a = r.at(s);
      for (int i = 0; i < r.degree(); ++i) {
        sigma[offset + i] = offset + a.sigma[i];
        m.entries[offset + a.sigma[i]] = a.m.entries[a.sigma[i]];
      }
      offset += r.degree();
    }
    assignment.push_back(PosAut{std::move(m), Permutation(std::move(sigma))});
  }
  return PosRep(reps.front().group_ptr(), std::move(assignment), false);
}

// The Frobenius multiplicity table over the order duals of H and G: cell
// (theta, rho) holds (m(rho, Ind theta), m(theta, rho|_H)) and whether they
// agree.
struct FrobeniusCell {
  int m_induced = 0;    // multiplicity of rho in Ind_H^G(theta)
  int m_restricted = 0; // multiplicity of theta in rho|_H
  bool equal = false;
};

struct FrobeniusTable {
  std::vector<Subgroup> theta_subgroups;  // classes of H's subgroups (rows)
  std::vector<Subgroup> rho_subgroups;    // classes of G's subgroups (columns)
  std::vector<int> theta_dims;
  std::vector<int> rho_dims;
  std::vector<std::vector<FrobeniusCell>> cells;

  bool all_equal() const {
    for (const auto& row : cells)
      for (const auto& c : row)
        if (!c.equal) return false;
    return true;
  }
};

inline FrobeniusTable frobenius_table(const GroupPtr& g, const Subgroup& h) {
  require_subgroup(*g, h, "frobenius_table");
  GroupPtr h_group = subgroup_as_group(*g, h);
  auto dual_h = order_dual(h_group);
  auto dual_g = order_dual(g);

  FrobeniusTable out;
  for (const auto& e : dual_h) {
    out.theta_subgroups.push_back(e.subgroup);
    out.theta_dims.push_back(e.rep.degree());
  }
  for (const auto& e : dual_g) {
    out.rho_subgroups.push_back(e.subgroup);
    out.rho_dims.push_back(e.rep.degree());
  }

  for (const auto& th : dual_h) {
    PosRep ind = induce(th.rep, h, g).rep;
    std::vector<FrobeniusCell> row;
    for (const auto& rh : dual_g) {
      FrobeniusCell cell;
      cell.m_induced = multiplicity(ind, rh.rep);
      RestrictedRep res = restrict_rep(rh.rep, h);
      cell.m_restricted = multiplicity(res.rep, th.rep);
      cell.equal = cell.m_induced == cell.m_restricted;
      row.push_back(cell);
    }
    out.cells.push_back(std::move(row));
  }
  return out;
}

// Induction in stages: Ind_K^G(Ind_H^K(theta)) is order equivalent to
// Ind_H^G(theta) for every chain H <= K <= G.
inline bool stages_check(const GroupPtr& g, const Subgroup& k, const Subgroup& h,
                         const PosRep& theta) {
  require_subgroup(*g, k, "stages_check");
  require_subgroup(*g, h, "stages_check");
  for (int m : h.members)
    if (!k.contains(m)) throw ChainViolation("stages_check: H is not contained in K");

  GroupPtr k_group = subgroup_as_group(*g, k);
  Subgroup h_in_k;
  for (int m : h.members) h_in_k.members.push_back(k_group->index_of(g->element(m)));
  std::sort(h_in_k.members.begin(), h_in_k.members.end());

  PosRep inner = induce(theta, h_in_k, k_group).rep;
  PosRep staged = induce(inner, k, g).rep;
  PosRep direct = induce(theta, h, g).rep;
  return order_equivalent(staged, direct).equivalent;
}

}  // namespace ordrep
