#pragma once

// The named element families of the skein algebra R[x1, x2, y]:
//
//   G_n  = {n+1} S_n(y) + (-1)^{n+1} {1} S_n(x1) S_n(x2), all integers n,
//          split as G_n = G'_n + G''_n
//   J_n  = G_n / {1}                                    (n >= 1)
//   Q_n  = sum of G_j, 0 <= j <= n-1, j == n-1 (mod 2)  (0 for n < 1)
//   U_n  = G_n + x1 x2 G_{n-1} - G_{n-2}
//          + (x1^2 + x2^2) Q_{n-1} + 2 x1 x2 Q_{n-2}    (0 for n < 0)
//   sigma_n  the slid element, by its closed S_k(y)-basis expansion (n >= 1)
//   F_n  = q^{4-2n} (sigma_{n-1} - q^{-6} y T-hat_{n-1}(y)), with F_1 = G_1
//   w_n  = y T-hat_n(y) - q^6 sigma_n                   (n >= 1)
//
// Q_n uses the integer-coefficient closed form equivalent to the half-sum
// definition via the symmetry G_{k-1} = G_{-k-1}.

#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "skein/chebyshev.hpp"
#include "skein/ringcore.hpp"

namespace skein {

enum class Family { G, Gp, Gpp, J, Q, U, Up, Upp, Sigma, F, W };

struct GeneratorId {
  Family family;
  int index;
};

namespace detail {

inline const SkeinPoly& memoized(std::unordered_map<int, SkeinPoly>& cache,
                                 std::mutex& mu, int n,
                                 const std::function<SkeinPoly(int)>& make) {
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make(n)).first;
  return it->second;
}

}  // namespace detail

// G'_n = {n+1} S_n(y)
inline SkeinPoly gen_Gp(int n) { return bracket(n + 1) * cheb_S(n).at_y(); }

// G''_n = (-1)^{n+1} {1} S_n(x1) S_n(x2)
inline SkeinPoly gen_Gpp(int n) {
  QLaurent sign = ((n % 2 + 2) % 2 == 0) ? QLaurent(-1) : QLaurent(1);
  XPoly prod = cheb_S(n).at_x(1) * cheb_S(n).at_x(2);
  return SkeinPoly((sign * bracket(1)) * prod);
}

inline SkeinPoly gen_G(int n) { return gen_Gp(n) + gen_Gpp(n); }

// J_n = G_n / {1}; the division is exact by construction.
inline SkeinPoly gen_J(int n) {
  if (n < 1) throw std::invalid_argument("gen_J: index must be >= 1");
  const QLaurent one = bracket(1);
  const SkeinPoly g = gen_G(n);
  SkeinPoly r;
  for (const auto& [d, xc] : g.coeffs()) {
    XPoly quo;
    for (const auto& [k, c] : xc.terms()) {
      auto s = divide_exact(c, one);
      if (!s) throw std::logic_error("gen_J: G_n not divisible by {1}");
      quo.add_term(k, *s);
    }
    r.add_term(d, quo);
  }
  return r;
}

namespace detail {

template <typename GenFn>
SkeinPoly q_closed_form(int n, GenFn gen) {
  SkeinPoly r;
  if (n < 1) return r;
  for (int j = (n - 1) % 2; j <= n - 1; j += 2) r += gen(j);
  return r;
}

}  // namespace detail

inline SkeinPoly gen_Q(int n) {
  static std::unordered_map<int, SkeinPoly> cache;
  static std::mutex mu;
  if (n < 2) return SkeinPoly();
  return detail::memoized(cache, mu, n, [](int n) {
    return detail::q_closed_form(n, [](int j) { return gen_G(j); });
  });
}
inline SkeinPoly gen_Qp(int n) {
  return detail::q_closed_form(n, [](int j) { return gen_Gp(j); });
}
inline SkeinPoly gen_Qpp(int n) {
  return detail::q_closed_form(n, [](int j) { return gen_Gpp(j); });
}

namespace detail {

template <typename GFn, typename QFn>
SkeinPoly u_formula(int n, GFn g, QFn q) {
  if (n < 0) return SkeinPoly();
  const SkeinPoly x1x2 = SkeinPoly::x1() * SkeinPoly::x2();
  const SkeinPoly xsq = SkeinPoly::x1() * SkeinPoly::x1() +
                        SkeinPoly::x2() * SkeinPoly::x2();
  return g(n) + x1x2 * g(n - 1) - g(n - 2) + xsq * q(n - 1) +
         QLaurent(2) * (x1x2 * q(n - 2));
}

}  // namespace detail

inline SkeinPoly gen_U(int n) {
  static std::unordered_map<int, SkeinPoly> cache;
  static std::mutex mu;
  if (n < 0) return SkeinPoly();
  return detail::memoized(cache, mu, n, [](int n) {
    return detail::u_formula(n, [](int j) { return gen_G(j); },
                             [](int j) { return gen_Q(j); });
  });
}
inline SkeinPoly gen_Up(int n) {
  if (n < 0) return SkeinPoly();
  return detail::u_formula(n, [](int j) { return gen_Gp(j); },
                           [](int j) { return gen_Qp(j); });
}
inline SkeinPoly gen_Upp(int n) {
  if (n < 0) return SkeinPoly();
  return detail::u_formula(n, [](int j) { return gen_Gpp(j); },
                           [](int j) { return gen_Qpp(j); });
}

namespace detail {

// The closed S_k(y)-basis expansion of sigma_n, assembled termwise.
// The optional drop flag removes the S_{n-3}(y) summand; it exists for
// mutation-sensitivity tests only.
inline SkeinPoly sigma_formula(int n, bool drop_s_nm3) {
  const SkeinPoly x1x2 = SkeinPoly::x1() * SkeinPoly::x2();
  const SkeinPoly xsq = SkeinPoly::x1() * SkeinPoly::x1() +
                        SkeinPoly::x2() * SkeinPoly::x2();
  SkeinPoly r = qpow(4 * n + 2) * cheb_S(n + 1).at_y();
  r += (qpow(4 * n) - qpow(-4)) * (x1x2 * cheb_S(n).at_y());
  r += (qpow(-4 * n - 2) - qpow(4 * n - 2)) * cheb_S(n - 1).at_y();
  r += (qpow(-4) - qpow(-4 * n)) * (x1x2 * cheb_S(n - 2).at_y());
  if (!drop_s_nm3) r -= qpow(-4 * n + 2) * cheb_S(n - 3).at_y();
  SkeinPoly sum1, sum2;
  for (int k = 0; k < n; ++k) {
    sum1 += qpow(-4 * k) * cheb_S(n - 2 * k - 1).at_y();
    sum2 += qpow(-4 * k) * cheb_S(n - 2 * k - 2).at_y();
  }
  const QLaurent q4n_minus_1 = qpow(4 * n) - QLaurent(1);
  r += (qpow(-2) * q4n_minus_1) * (xsq * sum1);
  r += (QLaurent(2) * qpow(-4) * q4n_minus_1) * (x1x2 * sum2);
  return r;
}

}  // namespace detail

inline SkeinPoly gen_sigma(int n) {
  static std::unordered_map<int, SkeinPoly> cache;
  static std::mutex mu;
  if (n < 1)
    throw std::invalid_argument(
        "gen_sigma: index must be >= 1 (the expansion is inconsistent at "
        "n = 0: it yields twice the value forced by F_1 = G_1)");
  return detail::memoized(cache, mu, n, [](int n) {
    return detail::sigma_formula(n, /*drop_s_nm3=*/false);
  });
}

// F_1 = G_1; for n >= 2, F_n = q^{4-2n} (sigma_{n-1} - q^{-6} y T_{n-1}(y)).
inline SkeinPoly gen_F(int n) {
  static std::unordered_map<int, SkeinPoly> cache;
  static std::mutex mu;
  if (n < 1) throw std::invalid_argument("gen_F: index must be >= 1");
  return detail::memoized(cache, mu, n, [](int n) {
    if (n == 1) return gen_G(1);
    SkeinPoly yT = SkeinPoly::y() * cheb_That(n - 1).at_y();
    return qpow(4 - 2 * n) * (gen_sigma(n - 1) - qpow(-6) * yT);
  });
}

// w_n = y T-hat_n(y) - q^6 sigma_n, the T-hat-basis slide generator;
// a unit multiple of F_{n+1}.
inline SkeinPoly gen_W(int n) {
  if (n < 1) throw std::invalid_argument("gen_W: index must be >= 1");
  return SkeinPoly::y() * cheb_That(n).at_y() - qpow(6) * gen_sigma(n);
}

inline SkeinPoly gen_by_id(const GeneratorId& id) {
  switch (id.family) {
    case Family::G: return gen_G(id.index);
    case Family::Gp: return gen_Gp(id.index);
    case Family::Gpp: return gen_Gpp(id.index);
    case Family::J: return gen_J(id.index);
    case Family::Q: return gen_Q(id.index);
    case Family::U: return gen_U(id.index);
    case Family::Up: return gen_Up(id.index);
    case Family::Upp: return gen_Upp(id.index);
    case Family::Sigma: return gen_sigma(id.index);
    case Family::F: return gen_F(id.index);
    case Family::W: return gen_W(id.index);
  }
  throw std::logic_error("gen_by_id: unknown family");
}

}  // namespace skein
