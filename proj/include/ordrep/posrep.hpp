#pragma once

#include <utility>
#include <vector>

#include "ordrep/errors.hpp"
#include "ordrep/gspace.hpp"
#include "ordrep/group.hpp"
#include "ordrep/posaut.hpp"

namespace ordrep {

// A positive representation: a verified homomorphism from a finite permutation
// group into the lattice automorphisms of R^n, materialized on every element.
class PosRep {
 public:
  // Takes the image of every element, in the group's canonical element order.
  // Verifies the homomorphism property exhaustively unless told otherwise.
  PosRep(GroupPtr group, std::vector<PosAut> assignment, bool verify = true)
      : group_(std::move(group)), assignment_(std::move(assignment)) {
    const PermGroup& g = *group_;
    if (static_cast<int>(assignment_.size()) != g.order())
      throw Error("assignment must cover every group element");
    degree_ = assignment_.empty() ? 0 : assignment_.front().degree();
    for (const auto& a : assignment_)
      if (a.degree() != degree_) throw DegreeMismatch("assignment degrees differ");
    if (degree_ < 1) throw Error("representation degree must be at least 1");
    if (verify) verify_homomorphism();
  }

  // Extends an assignment on the generators to the whole group along the
  // enumeration's closure words, then verifies.
  static PosRep from_generators(GroupPtr group, const std::vector<PosAut>& gen_images) {
    const PermGroup& g = *group;
    if (gen_images.size() != g.generators().size())
      throw Error("need exactly one image per group generator");
    int degree = gen_images.empty() ? 1 : gen_images.front().degree();
    for (const auto& a : gen_images)
      if (a.degree() != degree) throw DegreeMismatch("generator image degrees differ");

    std::vector<PosAut> assignment(g.order(), PosAut::identity(degree));
    for (int idx : g.closure_order()) {
      auto [gen, prev] = g.word(idx);
      if (gen < 0) continue;  // identity
      assignment[idx] = semidirect_mul(gen_images[gen], assignment[prev]);
    }
    return PosRep(std::move(group), std::move(assignment), true);
  }

  static PosRep trivial(GroupPtr group, int degree) {
    const PermGroup& g = *group;
    return PosRep(std::move(group),
                  std::vector<PosAut>(g.order(), PosAut::identity(degree)), false);
  }

  // A permutation representation given by one permutation per generator.
  static PosRep permutation_rep(GroupPtr group, const std::vector<Permutation>& gen_images) {
    std::vector<PosAut> images;
    images.reserve(gen_images.size());
    for (const auto& p : gen_images) images.push_back(PosAut::from_permutation(p));
    return from_generators(std::move(group), images);
  }

  // The permutation representation of a G-space: element s permutes the
  // points by act(s, .).
  static PosRep from_gspace(const GSpace& x) {
    std::vector<PosAut> assignment;
    assignment.reserve(x.action.size());
    for (const auto& row : x.action) assignment.push_back(PosAut::from_permutation(Permutation(row)));
    return PosRep(x.group, std::move(assignment), false);
  }

  // pi^H: the canonical irreducible attached to a subgroup, acting on cosets.
  static PosRep coset_rep(GroupPtr group, const Subgroup& h) {
    return from_gspace(coset_action(std::move(group), h));
  }

  // The left regular representation.
  static PosRep regular(GroupPtr group) {
    return coset_rep(std::move(group), trivial_subgroup(*group));
  }

  const PermGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  int degree() const { return degree_; }
  const PosAut& at(int elem) const { return assignment_[elem]; }
  const std::vector<PosAut>& assignment() const { return assignment_; }

  // The permutation parts, elementwise: p o rho.
  std::vector<Permutation> permutation_parts() const {
    std::vector<Permutation> out;
    out.reserve(assignment_.size());
    for (const auto& a : assignment_) out.push_back(a.sigma);
    return out;
  }

  // The coordinate G-space of the permutation parts.
  GSpace coordinate_space() const {
    return gspace_from_images(group_, degree_, permutation_parts());
  }

  friend bool operator==(const PosRep& a, const PosRep& b) {
    return *a.group_ == *b.group_ && a.assignment_ == b.assignment_;
  }

 private:
  void verify_homomorphism() const {
    const PermGroup& g = *group_;
    if (!assignment_[g.identity_index()].is_identity())
      throw NotAHomomorphism("identity element must map to the identity operator",
                             g.identity_index(), g.identity_index());
    for (int s = 0; s < g.order(); ++s)
      for (int t = 0; t < g.order(); ++t)
        if (!(assignment_[g.mul(s, t)] == semidirect_mul(assignment_[s], assignment_[t])))
          throw NotAHomomorphism("assignment(s)*assignment(t) != assignment(s*t) at s = " +
                                     to_cycle_string(g.element(s)) + ", t = " +
                                     to_cycle_string(g.element(t)),
                                 s, t);
  }

  GroupPtr group_;
  int degree_ = 0;
  std::vector<PosAut> assignment_;
};

inline bool same_group(const PosRep& a, const PosRep& b) { return a.group() == b.group(); }

}  // namespace ordrep
