// Copyright 2026 The ryser-transfer Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RYSER_EXACT_HPP
#define RYSER_EXACT_HPP

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ryser/error.hpp"

namespace ryser {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::strong_ordering to_ordering(int c) {
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

inline std::size_t bit_length(const Integer& x) {
  if (x == 0) return 0;
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

inline Integer pow(const Integer& base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

inline Integer pow(unsigned long base, unsigned long e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, e);
  return out;
}

/// floor(x^(1/n)) for x >= 0.
inline Integer floor_root(const Integer& x, unsigned long n) {
  Integer out;
  mpz_root(out.get_mpz_t(), x.get_mpz_t(), n);
  return out;
}

namespace detail {

// One factor base^exponent of a product of integer powers.
struct PowerFactor {
  const Integer* base;
  unsigned long exponent;
};

// log2 of a positive integer, with the absolute error of the double estimate.
inline std::pair<double, double> log2_estimate(const Integer& a) {
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, a.get_mpz_t());
  double value = static_cast<double>(exp) + std::log2(mant);
  double err = (std::fabs(value) + 1.0) * 1e-14;
  return {value, err};
}

inline Integer materialize(const std::vector<PowerFactor>& fs) {
  Integer out = 1;
  for (const auto& f : fs) out *= pow(*f.base, f.exponent);
  return out;
}

/// Exact ordering of two products of nonnegative integer powers. A floating
/// point log estimate with a rigorous error margin decides the far-apart
/// cases; everything else is decided by materializing both sides.
inline std::strong_ordering compare_products(const std::vector<PowerFactor>& lhs,
                                             const std::vector<PowerFactor>& rhs) {
  auto is_zero = [](const std::vector<PowerFactor>& fs) {
    for (const auto& f : fs)
      if (f.exponent > 0 && *f.base == 0) return true;
    return false;
  };
  bool lz = is_zero(lhs), rz = is_zero(rhs);
  if (lz || rz) return to_ordering(static_cast<int>(!lz) - static_cast<int>(!rz));

  double lv = 0, le = 0, rv = 0, re = 0;
  for (const auto& f : lhs) {
    if (f.exponent == 0) continue;
    auto [v, e] = log2_estimate(*f.base);
    lv += v * static_cast<double>(f.exponent);
    le += (e + 1e-12) * static_cast<double>(f.exponent);
  }
  for (const auto& f : rhs) {
    if (f.exponent == 0) continue;
    auto [v, e] = log2_estimate(*f.base);
    rv += v * static_cast<double>(f.exponent);
    re += (e + 1e-12) * static_cast<double>(f.exponent);
  }
  double margin = le + re + 1e-9;
  if (lv - rv > margin) return std::strong_ordering::greater;
  if (rv - lv > margin) return std::strong_ordering::less;
  return to_ordering(cmp(materialize(lhs), materialize(rhs)));
}

}  // namespace detail

/// Exact ordering of x against y * k^(p/q), decided as x^q against y^q * k^p.
/// All arguments are nonnegative; q >= 1, k >= 1.
inline std::strong_ordering cmp_power(const Integer& x, const Integer& y, const Integer& k,
                                      unsigned long p, unsigned long q) {
  if (q == 0) throw PreconditionError("cmp_power: q must be >= 1");
  if (k < 1) throw PreconditionError("cmp_power: k must be >= 1");
  if (x < 0 || y < 0) throw PreconditionError("cmp_power: operands must be nonnegative");
  return detail::compare_products({{&x, q}}, {{&y, q}, {&k, p}});
}

/// x against k^(p/q).
inline std::strong_ordering cmp_power(const Integer& x, const Integer& k, unsigned long p,
                                      unsigned long q) {
  static const Integer one = 1;
  return cmp_power(x, one, k, p, q);
}

/// An exact threshold of the form coef * k^(p/q). Plain rationals have k = 1.
/// Values like k^(1/4r) * m' are irrational in general, so they are never
/// rounded; comparisons go through cmp_power.
struct Threshold {
  Rational coef{0};
  Integer root_base{1};
  unsigned long num = 0;
  unsigned long den = 1;

  Threshold() = default;
  Threshold(Rational c) : coef(std::move(c)) { coef.canonicalize(); }  // NOLINT
  Threshold(const Integer& c) : coef(c) {}                             // NOLINT
  Threshold(long c) : coef(c) {}                                       // NOLINT
  Threshold(Rational c, Integer k, unsigned long p, unsigned long q)
      : coef(std::move(c)), root_base(std::move(k)), num(p), den(q) {
    coef.canonicalize();
    if (den == 0) throw PreconditionError("Threshold: zero root degree");
    if (root_base < 1) throw PreconditionError("Threshold: root base must be >= 1");
  }

  bool is_rational() const { return num == 0 || root_base == 1; }

  std::string str() const {
    std::string s = coef.get_str();
    if (!is_rational())
      s += "*" + root_base.get_str() + "^(" + std::to_string(num) + "/" + std::to_string(den) + ")";
    return s;
  }
};

/// Ordering of an exact rational against a threshold.
inline std::strong_ordering compare(const Rational& d, const Threshold& t) {
  if (d < 0 || t.coef < 0) throw PreconditionError("compare: negative quantity");
  Integer x = d.get_num() * t.coef.get_den();
  Integer y = t.coef.get_num() * d.get_den();
  if (t.is_rational()) return to_ordering(cmp(x, y));
  return cmp_power(x, y, t.root_base, t.num, t.den);
}

inline std::strong_ordering compare(const Threshold& a, const Threshold& b) {
  if (a.is_rational()) return compare(a.coef, b);
  if (b.is_rational()) return 0 <=> compare(b.coef, a);
  if (a.coef < 0 || b.coef < 0) throw PreconditionError("compare: negative quantity");
  // (na*db)^Q * ka^(pa*qb) against (nb*da)^Q * kb^(pb*qa), Q = qa*qb.
  Integer x = a.coef.get_num() * b.coef.get_den();
  Integer y = b.coef.get_num() * a.coef.get_den();
  unsigned long q = a.den * b.den;
  return detail::compare_products({{&x, q}, {&a.root_base, a.num * b.den}},
                                  {{&y, q}, {&b.root_base, b.num * a.den}});
}

/// Parses an integer or "p/q" into a canonical rational.
inline Rational parse_rational(const std::string& s) {
  Rational out;
  if (s.empty() || out.set_str(s, 10) != 0 || out.get_den() == 0)
    throw InvalidInput("not an exact number: '" + s + "'");
  out.canonicalize();
  return out;
}

inline std::string to_exact_string(const Rational& q) { return q.get_str(); }

}  // namespace ryser

#endif  // RYSER_EXACT_HPP
