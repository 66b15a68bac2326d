// Acceptance suite: one exact pass/fail line per criterion.
// Exit status 0 iff every criterion passes.

#include <chrono>
#include <iostream>
#include <random>
#include <string>

#include "skein/verify.hpp"

using namespace skein;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, double seconds) {
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << number << ": "
            << name << " (" << seconds << "s)\n";
  if (!pass) ++failures;
}

template <typename Fn>
void criterion(int number, const std::string& name, Fn body) {
  auto t0 = std::chrono::steady_clock::now();
  bool pass = false;
  try {
    pass = body();
  } catch (const std::exception& e) {
    std::cout << "  exception: " << e.what() << "\n";
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  report(number, name, pass, secs);
}

SkeinPoly random_poly(std::mt19937_64& rng, int max_ey) {
  std::uniform_int_distribution<int> ey(0, max_ey);
  std::uniform_int_distribution<int> ex(0, 3);
  std::uniform_int_distribution<int> qe(-8, 8);
  std::uniform_int_distribution<int> co(-9, 9);
  std::uniform_int_distribution<int> nterms(0, 6);
  SkeinPoly p;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i)
    p += SkeinPoly::monomial(
        XPoly::monomial(QLaurent::monomial(co(rng), qe(rng)), ex(rng), ex(rng)),
        ey(rng));
  return p;
}

}  // namespace

int main() {
  criterion(1, "main lemma replay: F_n = U_n - q^{4-4n} U_{n-2}, 2<=n<=30",
            [] {
              if (gen_F(1) != gen_G(1)) return false;
              for (int n = 2; n <= 30; ++n)
                if (gen_F(n) != gen_U(n) - qpow(4 - 4 * n) * gen_U(n - 2))
                  return false;
              return true;
            });

  criterion(2, "vanishing lemma replay: U''_n = 0 and degree-4 recurrence",
            [] {
              for (int n = 0; n <= 30; ++n)
                if (!gen_Upp(n).is_zero()) return false;
              const SkeinPoly x1x2 = SkeinPoly::x1() * SkeinPoly::x2();
              const SkeinPoly e2 = SkeinPoly::x1() * SkeinPoly::x1() +
                                   SkeinPoly::x2() * SkeinPoly::x2() -
                                   SkeinPoly(2);
              auto b = [](int k) {
                QLaurent sign = (k % 2 == 0) ? QLaurent(-1) : QLaurent(1);
                return SkeinPoly(sign *
                                 (cheb_S(k).at_x(1) * cheb_S(k).at_x(2)));
              };
              for (int n = 0; n <= 26; ++n) {
                SkeinPoly lhs = b(n + 4) + x1x2 * b(n + 3) + e2 * b(n + 2) +
                                x1x2 * b(n + 1) + b(n);
                if (!lhs.is_zero()) return false;
              }
              return true;
            });

  criterion(3,
            "primed-part lemma replay: F_{n+1} = U'_{n+1} - q^{-4n} U'_{n-1}, "
            "1<=n<=30",
            [] {
              for (int n = 1; n <= 30; ++n)
                if (gen_F(n + 1) !=
                    gen_Up(n + 1) - qpow(-4 * n) * gen_Up(n - 1))
                  return false;
              return true;
            });

  criterion(4, "Chebyshev suite through n = 30",
            [] { return !cheb_verify(30).has_value(); });

  criterion(5,
            "quotient property suite (seed 0, 200 cases, y-degree <= 8)",
            [] {
              std::mt19937_64 rng(0);
              for (int i = 0; i < 200; ++i) {
                SkeinPoly p = random_poly(rng, 8);
                SkeinPoly g = random_poly(rng, 0);  // y-free multiplier source
                NormalForm nf = normal_form(p);
                if (normal_form(nf.rep).rep != nf.rep) return false;
                SkeinPoly expanded = nf.rep;
                for (const auto& [n, c] : nf.cert.entries)
                  expanded += c * gen_G(n);
                if (expanded != p) return false;
                SkeinPoly span = g.coeff_y(0) * gen_G(i % 10 + 1);
                if (normal_form(p + span).rep != nf.rep) return false;
                if (membership(p).has_value() != nf.rep.is_zero())
                  return false;
                if (membership(p).has_value() !=
                    membership(tau(p)).has_value())
                  return false;
              }
              return true;
            });

  criterion(6, "torsion reproduction: x1^a x2^b J_n classes, n<=10, a,b<=3",
            [] {
              for (int n = 1; n <= 10; ++n) {
                for (int a = 0; a <= 3; ++a) {
                  for (int b = 0; b <= 3; ++b) {
                    XPoly mono = XPoly::monomial(1, a, b);
                    SkeinPoly el = mono * gen_J(n);
                    if (classify(el) != Classification::Torsion) return false;
                    if (!normal_form(bracket(1) * el).rep.is_zero())
                      return false;
                    TorsionSplit split = torsion_split(el);
                    auto it = split.torsion_coords.find(n);
                    if (it == split.torsion_coords.end()) return false;
                    // coordinate at index n is the monomial, i.e. 1 mod {1}
                    XPoly expect;
                    expect.add_term({a, b}, residue_cyclic(QLaurent(1), 4));
                    if (it->second != expect) return false;
                  }
                }
              }
              return true;
            });

  criterion(7, "localization: y eliminated, G_n -> 0, spot values",
            [] {
              std::mt19937_64 rng(0);
              for (int i = 0; i < 100; ++i) {
                SkeinPoly p = random_poly(rng, 6);
                (void)normal_form_localized(p);  // throws on failure
              }
              for (int n = 1; n <= 10; ++n)
                if (!normal_form_localized(gen_G(n)).numerator.is_zero())
                  return false;
              LocalizedPoly y_loc = normal_form_localized(SkeinPoly::y());
              LocalizedPoly y_expect{-(XPoly::x1() * XPoly::x2()), qint(2)};
              if (!(y_loc == y_expect)) return false;
              LocalizedPoly y2_loc =
                  normal_form_localized(SkeinPoly::y() * SkeinPoly::y());
              XPoly x_part = (XPoly::x1() * XPoly::x1() - XPoly(1)) *
                             (XPoly::x2() * XPoly::x2() - XPoly(1));
              LocalizedPoly y2_expect{qint(3) * XPoly(1) + x_part, qint(3)};
              return y2_loc == y2_expect;
            });

  criterion(8, "mutation sensitivity: corrupted sigma and widened window",
            [] {
              bool sigma_detected = false;
              for (int n = 2; n <= 6; ++n) {
                SkeinPoly mutated =
                    detail::sigma_formula(n - 1, /*drop_s_nm3=*/true);
                SkeinPoly yT = SkeinPoly::y() * cheb_That(n - 1).at_y();
                SkeinPoly f_mut =
                    qpow(4 - 2 * n) * (mutated - qpow(-6) * yT);
                if (f_mut != gen_U(n) - qpow(4 - 4 * n) * gen_U(n - 2))
                  sigma_detected = true;
              }
              SkeinPoly p = SkeinPoly::y();
              SkeinPoly g = qpow(4) * gen_G(1);
              bool window_detected = detail::normal_form_impl(p + g, 1).rep !=
                                     detail::normal_form_impl(p, 1).rep;
              return sigma_detected && window_detected;
            });

  // the localized results must also have y-degree 0 on random inputs
  // (folded into criterion 7 by construction of LocalizedPoly: the
  // numerator is an XPoly, so y elimination is structural)

  std::cout << (failures == 0 ? "ALL CRITERIA PASS"
                              : std::to_string(failures) + " CRITERIA FAILED")
            << "\n";
  return failures == 0 ? 0 : 1;
}
