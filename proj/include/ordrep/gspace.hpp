#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <vector>

#include "ordrep/errors.hpp"
#include "ordrep/group.hpp"

namespace ordrep {

// A finite G-space: an action of every group element on {0, ..., points-1},
// materialized as a table.
struct GSpace {
  GroupPtr group;
  int points = 0;
  std::vector<std::vector<int>> action;  // action[element][point]

  int act(int elem, int point) const { return action[elem][point]; }
};

// Checks the action axioms exhaustively: identity acts trivially and
// act(st, x) == act(s, act(t, x)) for all s, t, x.
inline bool is_valid_gspace(const GSpace& x) {
  const PermGroup& g = *x.group;
  if (static_cast<int>(x.action.size()) != g.order()) return false;
  for (const auto& row : x.action) {
    if (static_cast<int>(row.size()) != x.points) return false;
    std::vector<char> seen(x.points, 0);
    for (int v : row) {
      if (v < 0 || v >= x.points || seen[v]) return false;
      seen[v] = 1;
    }
  }
  for (int p = 0; p < x.points; ++p)
    if (x.act(g.identity_index(), p) != p) return false;
  for (int s = 0; s < g.order(); ++s)
    for (int t = 0; t < g.order(); ++t)
      for (int p = 0; p < x.points; ++p)
        if (x.act(g.mul(s, t), p) != x.act(s, x.act(t, p))) return false;
  return true;
}

// The G-space defined by a permutation image for every element (e.g. the
// permutation parts of a representation acting on coordinates).
inline GSpace gspace_from_images(GroupPtr group, int points,
                                 const std::vector<Permutation>& per_element) {
  GSpace out{std::move(group), points, {}};
  out.action.reserve(per_element.size());
  for (const auto& p : per_element) {
    if (p.degree() != points) throw DegreeMismatch("gspace image degree mismatch");
    out.action.push_back(p.images());
  }
  return out;
}

inline std::vector<std::vector<int>> orbits(const GSpace& x) {
  std::vector<std::vector<int>> out;
  std::vector<char> done(x.points, 0);
  const auto& gens = x.group->generator_indices();
  for (int p = 0; p < x.points; ++p) {
    if (done[p]) continue;
    std::vector<int> orbit{p};
    done[p] = 1;
    std::queue<int> todo;
    todo.push(p);
    while (!todo.empty()) {
      int cur = todo.front();
      todo.pop();
      for (int gi : gens) {
        int img = x.act(gi, cur);
        if (!done[img]) {
          done[img] = 1;
          orbit.push_back(img);
          todo.push(img);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  // BFS from ascending base points already yields orbits sorted by least element
  return out;
}

inline bool is_transitive(const GSpace& x) { return orbits(x).size() == 1; }

inline Subgroup stabilizer(const GSpace& x, int point) {
  if (point < 0 || point >= x.points) throw Error("stabilizer: point out of range");
  std::vector<int> members;
  for (int s = 0; s < x.group->order(); ++s)
    if (x.act(s, point) == point) members.push_back(s);
  return Subgroup{std::move(members)};
}

// The natural action of g on the left cosets of h; point 0 is the identity
// coset, whose stabilizer is h itself.
inline GSpace coset_action(GroupPtr group, const Subgroup& h) {
  const PermGroup& g = *group;
  CosetSpace cs = coset_space(g, h);
  GSpace out{std::move(group), static_cast<int>(cs.reps.size()), {}};
  out.action.assign(g.order(), std::vector<int>(out.points));
  for (int s = 0; s < g.order(); ++s)
    for (int c = 0; c < out.points; ++c)
      out.action[s][c] = cs.coset_of[g.mul(s, cs.reps[c])];
  return out;
}

// For each point of a transitive orbit containing base, one element carrying
// base to it (identity for base itself).
inline std::vector<int> orbit_transversal(const GSpace& x, int base) {
  std::vector<int> carrier(x.points, -1);
  carrier[base] = x.group->identity_index();
  std::queue<int> todo;
  todo.push(base);
  const auto& gens = x.group->generator_indices();
  while (!todo.empty()) {
    int cur = todo.front();
    todo.pop();
    for (int gi : gens) {
      int img = x.act(gi, cur);
      if (carrier[img] < 0) {
        carrier[img] = x.group->mul(gi, carrier[cur]);
        todo.push(img);
      }
    }
  }
  return carrier;
}

struct GSpaceIso {
  bool isomorphic = false;
  std::vector<int> witness;  // point of x -> point of y, equivariant, when isomorphic
};

// Equivariant isomorphism test. Transitive spaces are isomorphic iff their
// base-point stabilizers are conjugate; non-transitive spaces are split into
// orbits and matched as multisets of transitive constituents.
inline GSpaceIso gspaces_isomorphic(const GSpace& x, const GSpace& y) {
  if (!(*x.group == *y.group)) throw GroupMismatch("gspaces_isomorphic: different groups");
  const PermGroup& g = *x.group;
  if (x.points != y.points) return {};

  auto xorbs = orbits(x);
  auto yorbs = orbits(y);
  if (xorbs.size() != yorbs.size()) return {};

  // bucket orbits by the canonical conjugacy-class key of their stabilizer
  std::map<std::vector<int>, std::vector<int>> xbuckets, ybuckets;  // key -> orbit ids
  std::vector<Subgroup> xstab(xorbs.size()), ystab(yorbs.size());
  for (std::size_t i = 0; i < xorbs.size(); ++i) {
    xstab[i] = stabilizer(x, xorbs[i].front());
    xbuckets[conjugacy_class_key(g, xstab[i]).members].push_back(static_cast<int>(i));
  }
  for (std::size_t i = 0; i < yorbs.size(); ++i) {
    ystab[i] = stabilizer(y, yorbs[i].front());
    ybuckets[conjugacy_class_key(g, ystab[i]).members].push_back(static_cast<int>(i));
  }
  if (xbuckets.size() != ybuckets.size()) return {};
  for (const auto& [key, ids] : xbuckets) {
    auto it = ybuckets.find(key);
    if (it == ybuckets.end() || it->second.size() != ids.size()) return {};
  }

  GSpaceIso out;
  out.isomorphic = true;
  out.witness.assign(x.points, -1);
  for (const auto& [key, xids] : xbuckets) {
    const auto& yids = ybuckets[key];
    for (std::size_t k = 0; k < xids.size(); ++k) {
      const auto& ox = xorbs[xids[k]];
      const auto& oy = yorbs[yids[k]];
      int x0 = ox.front(), y0 = oy.front();
      // r with stab_x(x0) = r stab_y(y0) r^-1; phi(s*x0) = (s*r)*y0
      int r = conjugating_element(g, ystab[yids[k]], xstab[xids[k]]);
      if (r < 0) return {};  // cannot happen: keys matched
      std::vector<int> carrier = orbit_transversal(x, x0);
      int ry0 = y.act(r, y0);
      for (int p : ox) out.witness[p] = y.act(carrier[p], ry0);
    }
  }
  return out;
}

}  // namespace ordrep
