#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "ordrep/errors.hpp"
#include "ordrep/perm.hpp"

namespace ordrep {

inline constexpr std::size_t kDefaultCap = 5040;  // 7!

// A finite permutation group, fully materialized. Elements are stored in
// canonical (lexicographic-on-image-array) order, which puts the identity at
// index 0. Each element also records one word (generator, previous element)
// from the closure, so maps given on generators extend deterministically.
class PermGroup {
 public:
  static PermGroup enumerate(int degree, std::vector<Permutation> generators,
                             std::size_t cap = kDefaultCap) {
    if (degree < 1) throw Error("group degree must be at least 1");
    for (const auto& g : generators)
      if (g.degree() != degree)
        throw DegreeMismatch("generator degree " + std::to_string(g.degree()) +
                             " does not match group degree " + std::to_string(degree));

    PermGroup out;
    out.degree_ = degree;
    out.generators_ = std::move(generators);

    // breadth-first closure under left multiplication by generators
    std::map<Permutation, int> index;
    std::vector<Permutation> elems;
    std::vector<std::pair<int, int>> word;  // (generator, previous), (-1,-1) for identity
    std::queue<int> todo;

    elems.push_back(Permutation::identity(degree));
    word.emplace_back(-1, -1);
    index.emplace(elems[0], 0);
    todo.push(0);
    while (!todo.empty()) {
      int cur = todo.front();
      todo.pop();
      for (std::size_t gi = 0; gi < out.generators_.size(); ++gi) {
        Permutation next = compose(out.generators_[gi], elems[cur]);
        if (index.contains(next)) continue;
        if (elems.size() >= cap)
          throw ClosureExceedsCap("group closure exceeds cap " + std::to_string(cap));
        int id = static_cast<int>(elems.size());
        index.emplace(next, id);
        elems.push_back(std::move(next));
        word.emplace_back(static_cast<int>(gi), cur);
        todo.push(id);
      }
    }

    // canonical order, then remap the closure words
    std::vector<int> order(elems.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return elems[a] < elems[b]; });
    std::vector<int> old_to_new(elems.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos) old_to_new[order[pos]] = static_cast<int>(pos);

    out.elements_.resize(elems.size());
    out.word_.resize(elems.size());
    out.bfs_order_.resize(elems.size());
    for (std::size_t old = 0; old < elems.size(); ++old) {
      int now = old_to_new[old];
      out.elements_[now] = elems[old];
      auto [g, prev] = word[old];
      out.word_[now] = {g, prev < 0 ? -1 : old_to_new[prev]};
      out.bfs_order_[old] = now;  // discovery order, new indices
    }

    out.inverse_.resize(out.elements_.size());
    for (std::size_t i = 0; i < out.elements_.size(); ++i)
      out.inverse_[i] = out.index_of(out.elements_[i].inverse());

    out.generator_index_.reserve(out.generators_.size());
    for (const auto& g : out.generators_) out.generator_index_.push_back(out.index_of(g));

    if (out.order() <= kMultTableMax) {
      int n = out.order();
      out.mult_.resize(static_cast<std::size_t>(n) * n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          out.mult_[static_cast<std::size_t>(i) * n + j] =
              out.index_of(compose(out.elements_[i], out.elements_[j]));
    }
    return out;
  }

  int degree() const { return degree_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<int>& generator_indices() const { return generator_index_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(int i) const { return elements_[i]; }
  const std::vector<int>& closure_order() const { return bfs_order_; }
  std::pair<int, int> word(int i) const { return word_[i]; }

  int index_of(const Permutation& p) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    if (it == elements_.end() || !(*it == p)) return -1;
    return static_cast<int>(it - elements_.begin());
  }

  bool contains(const Permutation& p) const { return index_of(p) >= 0; }

  // index of element(i) * element(j)
  int mul(int i, int j) const {
    if (!mult_.empty()) return mult_[static_cast<std::size_t>(i) * order() + j];
    return index_of(compose(elements_[i], elements_[j]));
  }

  int inv(int i) const { return inverse_[i]; }
  int identity_index() const { return 0; }  // lexicographic least element is the identity

  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_;
  }

 private:
  static constexpr int kMultTableMax = 512;

  int degree_ = 1;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::vector<int> inverse_;
  std::vector<std::pair<int, int>> word_;
  std::vector<int> bfs_order_;
  std::vector<int> generator_index_;
  std::vector<int> mult_;
};

using GroupPtr = std::shared_ptr<const PermGroup>;

inline GroupPtr make_group(int degree, std::vector<Permutation> generators,
                           std::size_t cap = kDefaultCap) {
  return std::make_shared<const PermGroup>(PermGroup::enumerate(degree, std::move(generators), cap));
}

inline GroupPtr trivial_group(int degree = 1, std::size_t cap = kDefaultCap) {
  return make_group(degree, {}, cap);
}

inline GroupPtr cyclic_group(int n, std::size_t cap = kDefaultCap) {
  if (n < 1) throw Error("cyclic group order must be >= 1");
  if (n == 1) return trivial_group();
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = (i + 1) % n;
  return make_group(n, {Permutation(std::move(im))}, cap);
}

// Symmetry group of the regular n-gon, order 2n, acting on the n vertices.
inline GroupPtr dihedral_group(int n, std::size_t cap = kDefaultCap) {
  if (n < 3) throw Error("dihedral group needs at least 3 vertices");
  std::vector<int> rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return make_group(n, {Permutation(std::move(rot)), Permutation(std::move(refl))}, cap);
}

inline GroupPtr symmetric_group(int n, std::size_t cap = kDefaultCap) {
  if (n < 1) throw Error("symmetric group degree must be >= 1");
  if (n == 1) return trivial_group();
  std::vector<Permutation> gens;
  {
    std::vector<int> t(n);
    for (int i = 0; i < n; ++i) t[i] = i;
    std::swap(t[0], t[1]);
    gens.emplace_back(std::move(t));
  }
  if (n > 2) {
    std::vector<int> c(n);
    for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
    gens.emplace_back(std::move(c));
  }
  return make_group(n, std::move(gens), cap);
}

inline GroupPtr klein4_group(std::size_t cap = kDefaultCap) {
  return make_group(4, {parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)}, cap);
}

// Quaternion group of order 8 in its regular permutation model on the
// elements 1, -1, i, -i, j, -j, k, -k.
inline GroupPtr quaternion8_group(std::size_t cap = kDefaultCap) {
  Permutation left_i(std::vector<int>{2, 3, 1, 0, 6, 7, 5, 4});
  Permutation left_j(std::vector<int>{4, 5, 7, 6, 1, 0, 2, 3});
  return make_group(8, {left_i, left_j}, cap);
}

// Direct product acting on the disjoint union of the factors' point sets.
inline GroupPtr direct_product(const PermGroup& a, const PermGroup& b,
                               std::size_t cap = kDefaultCap) {
  int n = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) {
    std::vector<int> im(n);
    for (int i = 0; i < a.degree(); ++i) im[i] = g[i];
    for (int i = 0; i < b.degree(); ++i) im[a.degree() + i] = a.degree() + i;
    gens.emplace_back(std::move(im));
  }
  for (const auto& g : b.generators()) {
    std::vector<int> im(n);
    for (int i = 0; i < a.degree(); ++i) im[i] = i;
    for (int i = 0; i < b.degree(); ++i) im[a.degree() + i] = a.degree() + g[i];
    gens.emplace_back(std::move(im));
  }
  return make_group(n, std::move(gens), cap);
}

// ----------------------------------------------------------------------------
// Subgroups

// A subgroup given by the sorted indices of its members in the parent group's
// canonical element order.
struct Subgroup {
  std::vector<int> members;

  int order() const { return static_cast<int>(members.size()); }
  bool contains(int elem) const {
    return std::binary_search(members.begin(), members.end(), elem);
  }
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members == b.members; }
  friend auto operator<=>(const Subgroup& a, const Subgroup& b) = default;
};

inline Subgroup trivial_subgroup(const PermGroup& g) {
  return Subgroup{{g.identity_index()}};
}

inline Subgroup full_subgroup(const PermGroup& g) {
  std::vector<int> all(g.order());
  for (int i = 0; i < g.order(); ++i) all[i] = i;
  return Subgroup{std::move(all)};
}

inline bool is_subgroup(const PermGroup& g, const Subgroup& h) {
  if (h.members.empty() || !h.contains(g.identity_index())) return false;
  for (int a : h.members) {
    if (a < 0 || a >= g.order()) return false;
    if (!h.contains(g.inv(a))) return false;
    for (int b : h.members)
      if (!h.contains(g.mul(a, b))) return false;
  }
  return true;
}

inline void require_subgroup(const PermGroup& g, const Subgroup& h, const std::string& what) {
  if (!is_subgroup(g, h)) throw NotASubgroup(what + ": member set is not a subgroup");
}

// Closure of a set of element indices inside g.
inline Subgroup subgroup_closure(const PermGroup& g, std::vector<int> seed) {
  std::set<int> have;
  have.insert(g.identity_index());
  std::queue<int> todo;
  todo.push(g.identity_index());
  for (int s : seed)
    if (have.insert(s).second) todo.push(s);
  std::vector<int> gens = std::move(seed);
  while (!todo.empty()) {
    int cur = todo.front();
    todo.pop();
    for (int s : gens) {
      int nxt = g.mul(s, cur);
      if (have.insert(nxt).second) todo.push(nxt);
    }
  }
  return Subgroup{std::vector<int>(have.begin(), have.end())};
}

inline Subgroup subgroup_generated_by(const PermGroup& g, const std::vector<Permutation>& gens) {
  std::vector<int> seed;
  for (const auto& p : gens) {
    int idx = g.index_of(p);
    if (idx < 0) throw Error("subgroup generator is not an element of the group");
    seed.push_back(idx);
  }
  return subgroup_closure(g, std::move(seed));
}

// Every subgroup, each exactly once, sorted by (order, member list).
// Layered closure: all cyclic subgroups first, then repeatedly extend each
// known subgroup by one outside element and close, until stable.
inline std::vector<Subgroup> all_subgroups(const PermGroup& g) {
  std::set<std::vector<int>> known;
  known.insert(trivial_subgroup(g).members);
  for (int x = 0; x < g.order(); ++x)
    known.insert(subgroup_closure(g, {x}).members);

  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> snapshot(known.begin(), known.end());
    for (const auto& members : snapshot) {
      for (int x = 0; x < g.order(); ++x) {
        if (std::binary_search(members.begin(), members.end(), x)) continue;
        std::vector<int> seed = members;
        seed.push_back(x);
        auto closed = subgroup_closure(g, std::move(seed));
        if (known.insert(closed.members).second) grew = true;
      }
    }
  }

  std::vector<Subgroup> out;
  out.reserve(known.size());
  for (auto& m : known) out.push_back(Subgroup{m});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members < b.members;
  });
  return out;
}

inline Subgroup conjugate_subgroup(const PermGroup& g, const Subgroup& h, int r) {
  std::vector<int> out;
  out.reserve(h.members.size());
  int rinv = g.inv(r);
  for (int s : h.members) out.push_back(g.mul(g.mul(r, s), rinv));
  std::sort(out.begin(), out.end());
  return Subgroup{std::move(out)};
}

inline bool are_conjugate(const PermGroup& g, const Subgroup& h1, const Subgroup& h2) {
  if (h1.order() != h2.order()) return false;
  for (int r = 0; r < g.order(); ++r)
    if (conjugate_subgroup(g, h1, r) == h2) return true;
  return false;
}

// Returns the conjugating element r with r h1 r^-1 == h2, or -1.
inline int conjugating_element(const PermGroup& g, const Subgroup& h1, const Subgroup& h2) {
  if (h1.order() != h2.order()) return -1;
  for (int r = 0; r < g.order(); ++r)
    if (conjugate_subgroup(g, h1, r) == h2) return r;
  return -1;
}

// Lexicographically least member list over the whole conjugacy class: a
// canonical, comparison-ready key for the class of h.
inline Subgroup conjugacy_class_key(const PermGroup& g, const Subgroup& h) {
  Subgroup best = conjugate_subgroup(g, h, 0);
  for (int r = 1; r < g.order(); ++r) {
    Subgroup c = conjugate_subgroup(g, h, r);
    if (c.members < best.members) best = c;
  }
  return best;
}

inline bool is_normal(const PermGroup& g, const Subgroup& h) {
  for (int r = 0; r < g.order(); ++r)
    if (!(conjugate_subgroup(g, h, r) == h)) return false;
  return true;
}

// Partition of all_subgroups(g) into conjugacy classes. Each class is sorted
// by member list; classes are ordered by (order, representative member list),
// the representative being the class's least member.
inline std::vector<std::vector<Subgroup>> conjugacy_classes_of_subgroups(const PermGroup& g) {
  auto subs = all_subgroups(g);
  std::set<std::vector<int>> seen;
  std::vector<std::vector<Subgroup>> classes;
  for (const auto& h : subs) {
    if (seen.contains(h.members)) continue;
    std::set<std::vector<int>> members_of_class;
    for (int r = 0; r < g.order(); ++r) members_of_class.insert(conjugate_subgroup(g, h, r).members);
    std::vector<Subgroup> cls;
    for (auto& m : members_of_class) {
      seen.insert(m);
      cls.push_back(Subgroup{m});
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

// ----------------------------------------------------------------------------
// Cosets

// Left cosets sH. Representative of each coset is its least element, so the
// identity's coset comes first (index 0) with the identity as representative.
struct CosetSpace {
  std::vector<int> reps;      // element index of each coset's representative
  std::vector<int> coset_of;  // element index -> coset index
};

inline CosetSpace coset_space(const PermGroup& g, const Subgroup& h) {
  require_subgroup(g, h, "coset_space");
  CosetSpace out;
  out.coset_of.assign(g.order(), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (out.coset_of[s] >= 0) continue;
    int c = static_cast<int>(out.reps.size());
    out.reps.push_back(s);
    for (int t : h.members) out.coset_of[g.mul(s, t)] = c;
  }
  return out;
}

// Greedy minimal generating sequence, scanning members in canonical order.
inline std::vector<int> small_generating_set(const PermGroup& g, const Subgroup& h) {
  std::vector<int> gens;
  Subgroup have{{g.identity_index()}};
  for (int m : h.members) {
    if (have.contains(m)) continue;
    gens.push_back(m);
    std::vector<int> seed = gens;
    have = subgroup_closure(g, std::move(seed));
    if (have.order() == h.order()) break;
  }
  return gens;
}

// The subgroup as a standalone group on the same points. Elements coincide
// with the member permutations; canonical order is inherited.
inline GroupPtr subgroup_as_group(const PermGroup& g, const Subgroup& h,
                                  std::size_t cap = kDefaultCap) {
  require_subgroup(g, h, "subgroup_as_group");
  std::vector<Permutation> gens;
  for (int idx : small_generating_set(g, h)) gens.push_back(g.element(idx));
  return make_group(g.degree(), std::move(gens), cap);
}

}  // namespace ordrep
