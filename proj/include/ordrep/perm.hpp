#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "ordrep/errors.hpp"

namespace ordrep {

// A permutation of {0, ..., n-1}, stored as its image array.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
      if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
        throw Error("image array is not a bijection");
      seen[v] = 1;
    }
  }

  static Permutation identity(int degree) {
    std::vector<int> im(degree);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
  }

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
    return Permutation(std::move(inv));
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
};

// result[i] = a[b[i]]: apply b first, then a.
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw DegreeMismatch("compose: degrees " + std::to_string(a.degree()) + " vs " +
                         std::to_string(b.degree()));
  std::vector<int> im(a.degree());
  for (int i = 0; i < a.degree(); ++i) im[i] = a[b[i]];
  return Permutation(std::move(im));
}

// Cycle notation with 1-based points, e.g. "(1 2)(3 4)". "e" and "()" denote
// the identity. Cycles in one string compose right-to-left (rightmost applied
// first); the usual disjoint-cycle strings are unaffected.
inline Permutation parse_cycles(const std::string& text, int degree) {
  auto first = text.find_first_not_of(" \t");
  auto last = text.find_last_not_of(" \t");
  if (first == std::string::npos) throw Error("empty permutation string");
  std::string s = text.substr(first, last - first + 1);

  if (s == "e" || s == "()" || s == "id") return Permutation::identity(degree);

  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  while (i < s.size()) {
    if (isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    if (s[i] != '(') throw Error("expected '(' in permutation: '" + text + "'");
    auto close = s.find(')', i);
    if (close == std::string::npos) throw Error("unbalanced '(' in permutation: '" + text + "'");
    std::istringstream body(s.substr(i + 1, close - i - 1));
    std::vector<int> cycle;
    std::string tok;
    while (body >> tok) {
      // allow comma separators
      std::string digits;
      for (char c : tok)
        if (c != ',') digits += c;
      if (digits.empty()) continue;
      int p;
      try {
        p = std::stoi(digits);
      } catch (const std::logic_error&) {
        throw Error("bad point '" + tok + "' in permutation: '" + text + "'");
      }
      if (p < 1 || p > degree)
        throw Error("point " + std::to_string(p) + " out of range 1.." + std::to_string(degree));
      cycle.push_back(p - 1);
    }
    if (cycle.size() > 1) cycles.push_back(std::move(cycle));
    i = close + 1;
  }

  Permutation out = Permutation::identity(degree);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    std::vector<int> im(degree);
    std::iota(im.begin(), im.end(), 0);
    const auto& cy = *it;
    for (std::size_t k = 0; k < cy.size(); ++k) im[cy[k]] = cy[(k + 1) % cy.size()];
    out = compose(Permutation(std::move(im)), out);
  }
  return out;
}

// Canonical cycle string, 1-based, least point first per cycle, cycles ordered
// by least point; "e" for the identity.
inline std::string to_cycle_string(const Permutation& p) {
  if (p.is_identity()) return "e";
  std::string out;
  std::vector<char> done(p.degree(), 0);
  for (int i = 0; i < p.degree(); ++i) {
    if (done[i] || p[i] == i) continue;
    out += "(";
    int j = i;
    bool head = true;
    do {
      if (!head) out += " ";
      head = false;
      out += std::to_string(j + 1);
      done[j] = 1;
      j = p[j];
    } while (j != i);
    out += ")";
  }
  return out;
}

// 1-based image-array string, e.g. "2 1 4 3 5 6".
inline Permutation parse_image_array(const std::vector<int>& one_based) {
  std::vector<int> im(one_based.size());
  for (std::size_t i = 0; i < one_based.size(); ++i) im[i] = one_based[i] - 1;
  return Permutation(std::move(im));
}

}  // namespace ordrep
