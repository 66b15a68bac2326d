#pragma once

// Exact arithmetic in the ground ring R = Z[q^{+-1}] of integer Laurent
// polynomials in q, together with the divisibility and residue machinery
// used by the quotient-module reduction:
//
//   bracket(k)       {k}  = q^{2k} - q^{-2k}
//   qint(k)          [k]  = {k}/{1}
//   bar(a)           the reflection q -> q^{-1}
//   divide_exact     exact division in Z[q^{+-1}], absent when not divisible
//   residue_cyclic   canonical residue mod (q^m - 1), exponent window [0, m)
//   residue_monic    canonical residue mod a monic integer polynomial with
//                    unit constant term (used for the ideals ([n+1]))

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skein {

using BigInt = boost::multiprecision::cpp_int;

class QLaurent {
 public:
  using TermMap = std::map<int, BigInt>;  // exponent -> nonzero coefficient

  QLaurent() = default;
  QLaurent(long long c) {  // NOLINT: implicit int -> constant is intended
    if (c != 0) terms_[0] = c;
  }
  explicit QLaurent(const BigInt& c) {
    if (c != 0) terms_[0] = c;
  }

  static QLaurent monomial(BigInt c, int e) {
    QLaurent r;
    if (c != 0) r.terms_[e] = std::move(c);
    return r;
  }
  // q^e
  static QLaurent q(int e = 1) { return monomial(1, e); }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  BigInt coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }
  int min_exp() const {
    if (is_zero()) throw std::logic_error("min_exp of zero");
    return terms_.begin()->first;
  }
  int max_exp() const {
    if (is_zero()) throw std::logic_error("max_exp of zero");
    return terms_.rbegin()->first;
  }

  // True when the polynomial is a constant (exponent 0 only) or zero.
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
  }

  void add_term(int e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  QLaurent& operator+=(const QLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  QLaurent& operator-=(const QLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  QLaurent operator-() const {
    QLaurent r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b) {
    QLaurent r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  QLaurent& operator*=(const QLaurent& o) { return *this = *this * o; }

  friend bool operator==(const QLaurent& a, const QLaurent& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const QLaurent& a, const QLaurent& b) {
    return !(a == b);
  }
  friend bool operator<(const QLaurent& a, const QLaurent& b) {
    return a.terms_ < b.terms_;
  }

  // Text form: terms by descending exponent, `q^e` with e omitted when 1,
  // e.g. `q^4 - q^-4`, `2*q^2 + 1`.  Parsed back by the CLI grammar.
  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      BigInt abs = c < 0 ? BigInt(-c) : c;
      if (first) {
        if (c < 0) out << "-";
        first = false;
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      if (e == 0) {
        out << abs;
      } else {
        if (abs != 1) out << abs << "*";
        out << "q";
        if (e != 1) out << "^" << e;
      }
    }
    return out.str();
  }

 private:
  TermMap terms_;
};

inline QLaurent qpow(int e) { return QLaurent::q(e); }

// {k} = q^{2k} - q^{-2k}
inline QLaurent bracket(int k) {
  QLaurent r;
  r.add_term(2 * k, 1);
  r.add_term(-2 * k, -1);
  return r;
}

// [k] = {k}/{1}; the quotient is always exact.
inline QLaurent qint(int k) {
  if (k == 0) return QLaurent();
  if (k < 0) return -qint(-k);
  QLaurent r;
  for (int j = 0; j < k; ++j) r.add_term(2 * k - 2 - 4 * j, 1);
  return r;
}

// Reflection q -> q^{-1}; an involutive ring map.
inline QLaurent bar(const QLaurent& a) {
  QLaurent r;
  for (const auto& [e, c] : a.terms()) r.add_term(-e, c);
  return r;
}

namespace detail {

// Dense nonnegative-exponent view, for division routines.
struct ZPoly {
  std::vector<BigInt> c;  // c[i] is the coefficient of q^i

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }
};

inline ZPoly to_zpoly(const QLaurent& a, int shift) {
  ZPoly p;
  if (a.is_zero()) return p;
  p.c.assign(a.max_exp() + shift + 1, BigInt(0));
  for (const auto& [e, co] : a.terms()) p.c[e + shift] = co;
  return p;
}

inline QLaurent from_zpoly(const ZPoly& p, int shift) {
  QLaurent r;
  for (size_t i = 0; i < p.c.size(); ++i)
    r.add_term(static_cast<int>(i) - shift, p.c[i]);
  return r;
}

inline ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  ZPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  return r;
}

// Euclidean remainder by a monic divisor; exact over Z.
inline ZPoly zrem_monic(ZPoly a, const ZPoly& d) {
  a.trim();
  while (a.deg() >= d.deg()) {
    BigInt lead = a.c.back();
    int off = a.deg() - d.deg();
    for (int i = 0; i <= d.deg(); ++i) a.c[i + off] -= lead * d.c[i];
    a.trim();
  }
  return a;
}

inline BigInt content(const ZPoly& p) {
  BigInt g = 0;
  for (const auto& co : p.c) g = boost::multiprecision::gcd(g, co);
  return g;
}

// Primitive-PRS gcd in Z[q]; result primitive with positive leading coeff.
inline ZPoly zgcd(ZPoly a, ZPoly b) {
  a.trim();
  b.trim();
  if (a.is_zero()) std::swap(a, b);
  if (b.is_zero()) {
    BigInt ca = content(a);
    if (ca != 0)
      for (auto& co : a.c) co /= (a.c.back() < 0 ? -ca : ca);
    return a;
  }
  BigInt cont = boost::multiprecision::gcd(content(a), content(b));
  auto make_primitive = [](ZPoly& p) {
    BigInt cp = content(p);
    if (cp != 0) {
      if (p.c.back() < 0) cp = -cp;
      for (auto& co : p.c) co /= cp;
    }
  };
  make_primitive(a);
  make_primitive(b);
  while (!b.is_zero()) {
    if (a.deg() < b.deg()) std::swap(a, b);
    // pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b
    int steps = a.deg() - b.deg() + 1;
    BigInt lb = b.c.back();
    for (int s = 0; s < steps && !a.is_zero() && a.deg() >= b.deg(); ++s) {
      BigInt la = a.c.back();
      int off = a.deg() - b.deg();
      for (auto& co : a.c) co *= lb;
      for (int i = 0; i <= b.deg(); ++i) a.c[i + off] -= la * b.c[i];
      a.trim();
    }
    make_primitive(a);
    std::swap(a, b);
  }
  auto g = a;
  ZPoly cpoly;
  cpoly.c.assign(1, cont);
  g = zmul(g, cpoly);
  if (!g.is_zero() && g.c.back() < 0)
    for (auto& co : g.c) co = -co;
  return g;
}

// Exact quotient a / d in Z[q]; throws if division is not exact.
inline ZPoly zdiv_exact(ZPoly a, const ZPoly& d) {
  a.trim();
  if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
  ZPoly quo;
  if (a.is_zero()) return quo;
  if (a.deg() < d.deg()) throw std::domain_error("inexact polynomial division");
  quo.c.assign(a.deg() - d.deg() + 1, BigInt(0));
  while (!a.is_zero() && a.deg() >= d.deg()) {
    BigInt la = a.c.back();
    const BigInt& ld = d.c.back();
    if (la % ld != 0) throw std::domain_error("inexact polynomial division");
    BigInt f = la / ld;
    int off = a.deg() - d.deg();
    quo.c[off] = f;
    for (int i = 0; i <= d.deg(); ++i) a.c[i + off] -= f * d.c[i];
    a.trim();
  }
  if (!a.is_zero()) throw std::domain_error("inexact polynomial division");
  return quo;
}

}  // namespace detail

// Exact division in Z[q^{+-1}]: returns s with a = s*d, or absent.
inline std::optional<QLaurent> divide_exact(const QLaurent& a,
                                            const QLaurent& d) {
  if (d.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
  if (a.is_zero()) return QLaurent();
  int sa = -a.min_exp();
  int sd = -d.min_exp();
  detail::ZPoly pa = detail::to_zpoly(a, sa);
  detail::ZPoly pd = detail::to_zpoly(d, sd);
  try {
    detail::ZPoly quo = detail::zdiv_exact(pa, pd);
    return detail::from_zpoly(quo, sa - sd);
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
}

// Canonical residue of a mod (q^m - 1): fold every exponent into [0, m).
inline QLaurent residue_cyclic(const QLaurent& a, int m) {
  if (m < 1) throw std::invalid_argument("residue_cyclic: m must be >= 1");
  QLaurent r;
  for (const auto& [e, c] : a.terms()) {
    int f = e % m;
    if (f < 0) f += m;
    r.add_term(f, c);
  }
  return r;
}

// Canonical residue of a mod (d), for d monic of degree >= 1 with constant
// coefficient +-1.  Negative exponents are eliminated through the inverse
// of q mod d before taking the Euclidean remainder; the result has
// exponents in [0, deg d).
inline QLaurent residue_monic(const QLaurent& a, const QLaurent& d) {
  if (d.is_zero() || d.min_exp() < 0 || d.max_exp() < 1 ||
      d.coeff(d.max_exp()) != 1 ||
      (d.coeff(0) != 1 && d.coeff(0) != -1)) {
    throw std::invalid_argument(
        "residue_monic: divisor must be monic of degree >= 1 with unit "
        "constant term");
  }
  detail::ZPoly dp = detail::to_zpoly(d, 0);
  // q * ((d - c0)/q) == -c0 (mod d), so q^{-1} == -c0 * (d - c0)/q.
  BigInt c0 = d.coeff(0);
  detail::ZPoly qinv;
  qinv.c.assign(dp.c.begin() + 1, dp.c.end());
  for (auto& co : qinv.c) co *= -c0;

  detail::ZPoly acc;  // accumulates the image of a
  detail::ZPoly qinv_pow;  // qinv^k mod d, built incrementally
  qinv_pow.c.assign(1, BigInt(1));
  int last_pow = 0;
  // negative exponents, most negative last so powers build in order
  std::vector<std::pair<int, BigInt>> negs;
  for (const auto& [e, c] : a.terms()) {
    if (e >= 0) {
      if (static_cast<int>(acc.c.size()) <= e) acc.c.resize(e + 1, BigInt(0));
      acc.c[e] += c;
    } else {
      negs.emplace_back(-e, c);
    }
  }
  std::sort(negs.begin(), negs.end());
  for (const auto& [k, c] : negs) {
    while (last_pow < k) {
      qinv_pow = detail::zrem_monic(detail::zmul(qinv_pow, qinv), dp);
      ++last_pow;
    }
    for (size_t i = 0; i < qinv_pow.c.size(); ++i) {
      if (static_cast<int>(acc.c.size()) <= static_cast<int>(i))
        acc.c.resize(i + 1, BigInt(0));
      acc.c[i] += c * qinv_pow.c[i];
    }
  }
  acc.trim();
  acc = detail::zrem_monic(acc, dp);
  return detail::from_zpoly(acc, 0);
}

}  // namespace skein
