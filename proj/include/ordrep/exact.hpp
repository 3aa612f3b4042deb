#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "ordrep/errors.hpp"
#include "ordrep/rational.hpp"

namespace ordrep {

// A strictly positive real stored in factored form: the finite product
// prod p^{e_p} with p prime and e_p a nonzero rational exponent. The empty
// product is 1. Multiplication and inversion are exponent addition and
// negation; k-th roots divide every exponent by k, so geometric means of
// positive rationals stay exact and equality is decidable.
class ExactPositive {
 public:
  using Factor = std::pair<long long, Rational>;  // (prime, exponent), primes strictly increasing

  ExactPositive() = default;

  static ExactPositive one() { return ExactPositive(); }

  static ExactPositive from_integer(long long n) {
    if (n <= 0) throw Error("ExactPositive requires a strictly positive value");
    ExactPositive out;
    factor_into(n, Rational(1), out.factors_);
    out.canonicalize();
    return out;
  }

  // Accepts any strictly positive rational.
  static ExactPositive from_rational(const Rational& r) {
    if (r.sign() <= 0) throw Error("ExactPositive requires a strictly positive value");
    ExactPositive out;
    factor_into(r.num(), Rational(1), out.factors_);
    factor_into(r.den(), Rational(-1), out.factors_);
    out.canonicalize();
    return out;
  }

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  ExactPositive inverse() const {
    ExactPositive out = *this;
    for (auto& f : out.factors_) f.second = -f.second;
    return out;
  }

  ExactPositive pow(const Rational& k) const {
    if (k.is_zero()) return one();
    ExactPositive out = *this;
    for (auto& f : out.factors_) f.second *= k;
    return out;
  }

  // Exact k-th root (k >= 1).
  ExactPositive root(long long k) const {
    if (k <= 0) throw Error("root index must be positive");
    return pow(Rational(1, k));
  }

  friend ExactPositive operator*(const ExactPositive& a, const ExactPositive& b) {
    ExactPositive out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    std::size_t i = 0, j = 0;
    while (i < a.factors_.size() && j < b.factors_.size()) {
      if (a.factors_[i].first < b.factors_[j].first) {
        out.factors_.push_back(a.factors_[i++]);
      } else if (b.factors_[j].first < a.factors_[i].first) {
        out.factors_.push_back(b.factors_[j++]);
      } else {
        Rational e = a.factors_[i].second + b.factors_[j].second;
        if (!e.is_zero()) out.factors_.emplace_back(a.factors_[i].first, e);
        ++i;
        ++j;
      }
    }
    while (i < a.factors_.size()) out.factors_.push_back(a.factors_[i++]);
    while (j < b.factors_.size()) out.factors_.push_back(b.factors_[j++]);
    return out;
  }

  friend ExactPositive operator/(const ExactPositive& a, const ExactPositive& b) {
    return a * b.inverse();
  }

  ExactPositive& operator*=(const ExactPositive& o) { return *this = *this * o; }
  ExactPositive& operator/=(const ExactPositive& o) { return *this = *this / o; }

  friend bool operator==(const ExactPositive& a, const ExactPositive& b) {
    return a.factors_ == b.factors_;
  }
  friend bool operator!=(const ExactPositive& a, const ExactPositive& b) { return !(a == b); }

  // True iff every exponent is an integer, i.e. the value is rational.
  bool is_rational() const {
    return std::all_of(factors_.begin(), factors_.end(),
                       [](const Factor& f) { return f.second.is_integer(); });
  }

  // Exact rational value; throws when an exponent is fractional.
  Rational as_rational() const {
    Rational out(1);
    for (const auto& [p, e] : factors_) {
      if (!e.is_integer()) throw Error("value is irrational: " + str());
      long long k = e.num();
      for (long long t = 0; t < (k < 0 ? -k : k); ++t)
        out = (k > 0) ? out * Rational(p) : out / Rational(p);
    }
    return out;
  }

  double to_double() const {
    double out = 1.0;
    for (const auto& [p, e] : factors_)
      out *= std::pow(static_cast<double>(p), e.to_double());
    return out;
  }

  // Symbolic form, e.g. "2^{1/2} * 3^{-1}"; "1" for the empty product.
  std::string str() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& [p, e] : factors_) {
      if (!out.empty()) out += " * ";
      out += std::to_string(p);
      if (e == Rational(1)) continue;
      if (e.is_integer())
        out += "^" + e.str();
      else
        out += "^{" + e.str() + "}";
    }
    return out;
  }

 private:
  static void factor_into(long long n, const Rational& mult, std::vector<Factor>& out) {
    if (n <= 0) throw Error("cannot factor a non-positive integer");
    for (long long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
      long long e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      if (e) out.emplace_back(p, Rational(e) * mult);
    }
    if (n > 1) out.emplace_back(n, mult);
  }

  void canonicalize() {
    std::sort(factors_.begin(), factors_.end(),
              [](const Factor& a, const Factor& b) { return a.first < b.first; });
    std::vector<Factor> merged;
    for (const auto& f : factors_) {
      if (!merged.empty() && merged.back().first == f.first)
        merged.back().second += f.second;
      else
        merged.push_back(f);
    }
    std::erase_if(merged, [](const Factor& f) { return f.second.is_zero(); });
    factors_ = std::move(merged);
  }

  std::vector<Factor> factors_;
};

// An exact real of the form sign * magnitude with magnitude an ExactPositive.
// Closed under multiplication; addition is only defined where a single-term
// result exists (all the monomial-matrix algebra in this library needs).
struct SignedExact {
  int sign = 0;             // -1, 0, +1
  ExactPositive mag;        // ignored when sign == 0

  SignedExact() = default;
  SignedExact(int s, ExactPositive m) : sign(s), mag(std::move(m)) {
    if (sign == 0) mag = ExactPositive::one();
  }

  static SignedExact zero() { return SignedExact(); }
  static SignedExact one() { return SignedExact(1, ExactPositive::one()); }

  static SignedExact from_rational(const Rational& r) {
    if (r.is_zero()) return zero();
    return SignedExact(r.sign(), ExactPositive::from_rational(r.sign() > 0 ? r : -r));
  }

  bool is_zero() const { return sign == 0; }

  friend SignedExact operator*(const SignedExact& a, const SignedExact& b) {
    if (a.sign == 0 || b.sign == 0) return zero();
    return SignedExact(a.sign * b.sign, a.mag * b.mag);
  }

  friend SignedExact operator+(const SignedExact& a, const SignedExact& b) {
    if (a.sign == 0) return b;
    if (b.sign == 0) return a;
    if (a.mag == b.mag && a.sign == -b.sign) return zero();
    throw Error("sum of distinct factored reals is not representable");
  }

  friend bool operator==(const SignedExact& a, const SignedExact& b) {
    if (a.sign != b.sign) return false;
    return a.sign == 0 || a.mag == b.mag;
  }
  friend bool operator!=(const SignedExact& a, const SignedExact& b) { return !(a == b); }

  double to_double() const { return sign == 0 ? 0.0 : sign * mag.to_double(); }

  std::string str() const {
    if (sign == 0) return "0";
    return (sign < 0 ? "-" : "") + mag.str();
  }
};

}  // namespace ordrep
