#pragma once

// Chebyshev polynomials of the second kind S_n and first kind T_n (with the
// modified T-hat family) for all integer indices, in one formal variable,
// plus the identity suite that certifies the negative-index extensions
// against the u-substitution definitions.

#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "skein/ringcore.hpp"

namespace skein {

// Univariate polynomial over QLaurent; index = degree in the formal
// variable, instantiable at x1, x2 or y.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<QLaurent> coeffs) : c_(std::move(coeffs)) {
    trim();
  }
  static UniPoly constant(const QLaurent& c) { return UniPoly({c}); }
  static UniPoly var() { return UniPoly({QLaurent(), QLaurent(1)}); }

  bool is_zero() const { return c_.empty(); }
  int deg() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<QLaurent>& coeffs() const { return c_; }
  QLaurent coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : QLaurent();
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<QLaurent> r(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(int(i)) + b.coeff(int(i));
    return UniPoly(std::move(r));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<QLaurent> r(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(int(i)) - b.coeff(int(i));
    return UniPoly(std::move(r));
  }
  UniPoly operator-() const {
    std::vector<QLaurent> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return UniPoly(std::move(r));
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<QLaurent> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(r));
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) {
    return !(a == b);
  }

  SkeinPoly at_y() const {
    SkeinPoly r;
    for (size_t i = 0; i < c_.size(); ++i)
      r.add_term(static_cast<int>(i), XPoly(c_[i]));
    return r;
  }
  XPoly at_x(int which) const {
    XPoly r;
    for (size_t i = 0; i < c_.size(); ++i)
      r.add_term({which == 1 ? static_cast<int>(i) : 0,
                  which == 2 ? static_cast<int>(i) : 0},
                 c_[i]);
    return r;
  }
  // v -> u_which + u_which^{-1}, into the oracle ring
  TwoVarLaurent at_u(int which) const {
    TwoVarLaurent v;
    v.add_term({which == 1 ? 1 : 0, which == 1 ? 0 : 1}, 1);
    v.add_term({which == 1 ? -1 : 0, which == 1 ? 0 : -1}, 1);
    TwoVarLaurent r, vpow{QLaurent(1)};
    for (size_t i = 0; i < c_.size(); ++i) {
      r += TwoVarLaurent(c_[i]) * vpow;
      vpow = vpow * v;
    }
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<QLaurent> c_;
};

namespace detail {

// Nonnegative-index recurrences, memoized.  Negative indices resolve
// through the extension rules below and never hit the caches.
inline const UniPoly& cheb_cached(std::vector<UniPoly>& cache, std::mutex& mu,
                                  int n, const UniPoly& p0, const UniPoly& p1) {
  std::lock_guard lock(mu);
  if (cache.empty()) {
    cache.push_back(p0);
    cache.push_back(p1);
  }
  while (static_cast<int>(cache.size()) <= n) {
    size_t k = cache.size();
    cache.push_back(UniPoly::var() * cache[k - 1] - cache[k - 2]);
  }
  return cache[n];
}

}  // namespace detail

// S_0 = 1, S_1 = v, S_n = v S_{n-1} - S_{n-2}; negatives by S_{-n-1} = -S_{n-1}.
inline UniPoly cheb_S(int n) {
  static std::vector<UniPoly> cache;
  static std::mutex mu;
  if (n < 0) {
    // S_n with n = -m-1  =>  S_n = -S_{m-1}, m = -n-1
    int m = -n - 1;
    if (m == 0) return UniPoly();  // S_{-1} = 0
    return -cheb_S(m - 1);
  }
  return detail::cheb_cached(cache, mu, n, UniPoly::constant(1),
                             UniPoly::var());
}

// T_0 = 2, T_1 = v, T_n = v T_{n-1} - T_{n-2}; T_{-n} = T_n.
inline UniPoly cheb_T(int n) {
  static std::vector<UniPoly> cache;
  static std::mutex mu;
  if (n < 0) n = -n;
  return detail::cheb_cached(cache, mu, n, UniPoly::constant(2),
                             UniPoly::var());
}

// T-hat: T_n for n != 0, with T-hat_0 = 1.
inline UniPoly cheb_That(int n) {
  return n == 0 ? UniPoly::constant(1) : cheb_T(n);
}

struct ChebFailure {
  std::string identity;
  int n = 0;
};

// Replays the Chebyshev identities for 0 <= n <= max_n as exact polynomial
// equalities, including the u-substitution oracle checks.  Returns the
// first failure, or absent when everything holds.
inline std::optional<ChebFailure> cheb_verify(int max_n) {
  if (max_n < 1) throw std::invalid_argument("cheb_verify: max_n must be >= 1");
  const UniPoly v = UniPoly::var();
  for (int n = 0; n <= max_n; ++n) {
    if (v * cheb_T(n) != cheb_S(n + 1) - cheb_S(n - 3))
      return ChebFailure{"v*T_n = S_{n+1} - S_{n-3}", n};
    if (cheb_S(1) * cheb_S(n) != cheb_S(n + 1) + cheb_S(n - 1))
      return ChebFailure{"S_1*S_n = S_{n+1} + S_{n-1}", n};
    if (cheb_T(-n) != cheb_T(n)) return ChebFailure{"T_{-n} = T_n", n};
    if (cheb_S(-n - 1) != -cheb_S(n - 1))
      return ChebFailure{"S_{-n-1} = -S_{n-1}", n};
    // T_n(u + u^{-1}) = u^n + u^{-n}
    TwoVarLaurent expected_t;
    expected_t.add_term({n, 0}, 1);
    expected_t.add_term({-n, 0}, 1);
    if (cheb_T(n).at_u(1) != expected_t)
      return ChebFailure{"T_n(u+u^-1) = u^n + u^-n", n};
    // (u - u^{-1}) S_n(u + u^{-1}) = u^{n+1} - u^{-n-1}, cross-multiplied
    TwoVarLaurent u_minus_inv;
    u_minus_inv.add_term({1, 0}, 1);
    u_minus_inv.add_term({-1, 0}, QLaurent(-1));
    TwoVarLaurent expected_s;
    expected_s.add_term({n + 1, 0}, 1);
    expected_s.add_term({-n - 1, 0}, QLaurent(-1));
    if (u_minus_inv * cheb_S(n).at_u(1) != expected_s)
      return ChebFailure{"(u-u^-1)S_n(u+u^-1) = u^{n+1} - u^{-n-1}", n};
  }
  return std::nullopt;
}

}  // namespace skein
