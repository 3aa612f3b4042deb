#pragma once

#include <string>
#include <vector>

#include "ordrep/errors.hpp"
#include "ordrep/exact.hpp"
#include "ordrep/perm.hpp"

namespace ordrep {

// A strictly positive diagonal operator on R^n, entries in factored exact form.
struct Multiplier {
  std::vector<ExactPositive> entries;

  static Multiplier ones(int n) {
    return Multiplier{std::vector<ExactPositive>(static_cast<std::size_t>(n))};
  }

  static Multiplier from_rationals(const std::vector<Rational>& v) {
    Multiplier out;
    out.entries.reserve(v.size());
    for (const auto& r : v) out.entries.push_back(ExactPositive::from_rational(r));
    return out;
  }

  int degree() const { return static_cast<int>(entries.size()); }

  bool is_one() const {
    for (const auto& e : entries)
      if (!e.is_one()) return false;
    return true;
  }

  Multiplier inverse() const {
    Multiplier out;
    out.entries.reserve(entries.size());
    for (const auto& e : entries) out.entries.push_back(e.inverse());
    return out;
  }

  friend Multiplier operator*(const Multiplier& a, const Multiplier& b) {
    if (a.degree() != b.degree()) throw DegreeMismatch("multiplier product degree mismatch");
    Multiplier out;
    out.entries.reserve(a.entries.size());
    for (int i = 0; i < a.degree(); ++i) out.entries.push_back(a.entries[i] * b.entries[i]);
    return out;
  }

  friend bool operator==(const Multiplier& a, const Multiplier& b) {
    return a.entries == b.entries;
  }
};

// The permutation action on multipliers: sigma(m)_i = m_{sigma^-1(i)}.
inline Multiplier permuted(const Multiplier& m, const Permutation& sigma) {
  if (m.degree() != sigma.degree()) throw DegreeMismatch("permuted multiplier degree mismatch");
  Multiplier out;
  out.entries.resize(m.entries.size());
  for (int i = 0; i < m.degree(); ++i) out.entries[sigma[i]] = m.entries[i];
  return out;
}

// A lattice automorphism of R^n in its unique factored form m * sigma:
// e_i -> m_{sigma(i)} e_{sigma(i)}.
struct PosAut {
  Multiplier m;
  Permutation sigma;

  static PosAut identity(int n) {
    return PosAut{Multiplier::ones(n), Permutation::identity(n)};
  }

  static PosAut from_permutation(const Permutation& p) {
    return PosAut{Multiplier::ones(p.degree()), p};
  }

  int degree() const { return sigma.degree(); }

  bool is_identity() const { return sigma.is_identity() && m.is_one(); }

  friend bool operator==(const PosAut& a, const PosAut& b) {
    return a.sigma == b.sigma && a.m == b.m;
  }
};

// Semidirect product law: (m1, s1)(m2, s2) = (m1 * s1(m2), s1 s2).
inline PosAut semidirect_mul(const PosAut& a, const PosAut& b) {
  if (a.degree() != b.degree())
    throw DegreeMismatch("semidirect_mul: degrees " + std::to_string(a.degree()) + " vs " +
                         std::to_string(b.degree()));
  return PosAut{a.m * permuted(b.m, a.sigma), compose(a.sigma, b.sigma)};
}

// (m, s)^-1 = (s^-1(m^-1), s^-1).
inline PosAut inverse(const PosAut& a) {
  Permutation sinv = a.sigma.inverse();
  return PosAut{permuted(a.m.inverse(), sinv), sinv};
}

// The canonical projection onto the permutation part; a homomorphism.
inline Permutation projection_p(const PosAut& a) { return a.sigma; }

// Exact linear action on a vector: w_j = m_j * v_{sigma^-1(j)}.
inline std::vector<SignedExact> act(const PosAut& a, const std::vector<SignedExact>& v) {
  if (static_cast<int>(v.size()) != a.degree())
    throw DegreeMismatch("apply: vector length mismatch");
  std::vector<SignedExact> out(v.size());
  for (int i = 0; i < a.degree(); ++i) {
    int j = a.sigma[i];
    const SignedExact& x = v[i];
    out[j] = x.is_zero() ? SignedExact::zero() : SignedExact(x.sign, a.m.entries[j] * x.mag);
  }
  return out;
}

inline std::vector<SignedExact> act(const PosAut& a, const std::vector<Rational>& v) {
  std::vector<SignedExact> lifted;
  lifted.reserve(v.size());
  for (const auto& r : v) lifted.push_back(SignedExact::from_rational(r));
  return act(a, lifted);
}

// Dense matrix export: column i holds m_{sigma(i)} at row sigma(i). Used for
// display and for cross-checks against plain matrix arithmetic.
inline std::vector<std::vector<SignedExact>> to_matrix(const PosAut& a) {
  int n = a.degree();
  std::vector<std::vector<SignedExact>> mat(n, std::vector<SignedExact>(n));
  for (int i = 0; i < n; ++i) mat[a.sigma[i]][i] = SignedExact(1, a.m.entries[a.sigma[i]]);
  return mat;
}

}  // namespace ordrep
