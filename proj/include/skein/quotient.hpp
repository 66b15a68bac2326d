#pragma once

// Computation in the quotient R[x1, x2, y] / G, where G is the R-hat-span
// of the unitriangular family {G_n}: membership with certificates,
// canonical normal forms, torsion classification and splitting, and
// localized (y-free) normal forms.
//
// Residue convention: the canonical representative keeps, at every
// y-degree d >= 1, only q-exponents in the window [0, 4d+4) — the ideal
// ({d+1}) equals (q^{4d+4} - 1) since q is a unit.  The y-degree-0
// coefficient is untouched: R-hat embeds into the quotient.
//
// Reduction is greedy top-down in the y-degree; one pass costs
// O(deg_y^2 * terms).

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include "skein/generators.hpp"
#include "skein/ringcore.hpp"

namespace skein {

// R-hat-coefficients expressing a combination of the {G_n} basis.
struct Certificate {
  std::map<int, XPoly> entries;  // index n >= 1 -> nonzero coefficient c_n

  bool operator==(const Certificate& o) const { return entries == o.entries; }
};

struct NormalForm {
  SkeinPoly rep;
  Certificate cert;  // the input equals rep + sum_n cert[n] * G_n
};

enum class Classification { Zero, Torsion, HasFreePart };

struct TorsionSplit {
  std::map<int, XPoly> torsion_coords;  // J-coordinates reduced mod {1}
  SkeinPoly free_residue;               // canonical J-reduced representative
};

// Element of the localized module: a y-free numerator over an integer
// polynomial denominator in q (reduced, positive leading coefficient).
struct LocalizedPoly {
  XPoly numerator;      // q-coefficients may be Laurent
  QLaurent denominator;  // integer polynomial, nonzero

  // fraction equality by cross-multiplication
  bool operator==(const LocalizedPoly& o) const {
    return o.denominator * numerator == denominator * o.numerator;
  }
};

// Returns a certificate iff p lies in the R-hat-span of {G_n}: walk the
// y-degree down, dividing the leading coefficient exactly by {d+1}.
// Unitriangularity of {G_n} makes the greedy choice forced.
inline std::optional<Certificate> membership(const SkeinPoly& p) {
  SkeinPoly residual = p;
  Certificate cert;
  for (int d = residual.deg_y(); d >= 1; d = std::min(d - 1, residual.deg_y())) {
    XPoly lead = residual.coeff_y(d);
    if (lead.is_zero()) continue;
    XPoly c;
    for (const auto& [k, qc] : lead.terms()) {
      auto s = divide_exact(qc, bracket(d + 1));
      if (!s) return std::nullopt;
      c.add_term(k, *s);
    }
    residual -= c * gen_G(d);
    cert.entries[d] = std::move(c);
  }
  if (!residual.is_zero()) return std::nullopt;
  return cert;
}

namespace detail {

// Normal-form reduction with an adjustable residue window (the extra
// widening exists only so tests can show the canonical window matters).
inline NormalForm normal_form_impl(const SkeinPoly& p, int window_extra) {
  SkeinPoly rep = p;
  Certificate cert;
  for (int d = rep.deg_y(); d >= 1; --d) {
    XPoly lead = rep.coeff_y(d);
    if (lead.is_zero()) continue;
    const int m = 4 * d + 4 + window_extra;
    const QLaurent modulus = qpow(m) - QLaurent(1);
    XPoly s;
    for (const auto& [k, c] : lead.terms()) {
      QLaurent r = residue_cyclic(c, m);
      QLaurent diff = c - r;
      if (diff.is_zero()) continue;
      auto t = divide_exact(diff, modulus);
      if (!t) throw std::logic_error("normal_form: fold quotient not exact");
      // c = r + {d+1} * s with s = q^{2d+2} * (c - r)/(q^{4d+4} - 1)
      s.add_term(k, qpow(2 * d + 2) * *t);
    }
    if (s.is_zero()) continue;
    rep -= s * gen_G(d);
    cert.entries[d] = std::move(s);
  }
  return NormalForm{std::move(rep), std::move(cert)};
}

}  // namespace detail

inline NormalForm normal_form(const SkeinPoly& p) {
  return detail::normal_form_impl(p, 0);
}

// Zero for members of G; Torsion for nonzero classes annihilated by {1};
// HasFreePart otherwise.
inline Classification classify(const SkeinPoly& p) {
  if (membership(p)) return Classification::Zero;
  if (membership(bracket(1) * p)) return Classification::Torsion;
  return Classification::HasFreePart;
}

// Reduce against the J-basis {J_n} (leading coefficients [n+1], canonical
// residues mod the monic generator of ([n+1])), then reduce the
// J-coordinates mod {1} to get the torsion coordinates.
inline TorsionSplit torsion_split(const SkeinPoly& p) {
  SkeinPoly residual = p;
  TorsionSplit out;
  for (int d = residual.deg_y(); d >= 1; --d) {
    XPoly lead = residual.coeff_y(d);
    if (lead.is_zero()) continue;
    // monic generator of ([d+1]): (q^{4d+4} - 1)/(q^4 - 1)
    QLaurent monic;
    for (int i = 0; i <= d; ++i) monic.add_term(4 * i, 1);
    XPoly s;
    for (const auto& [k, c] : lead.terms()) {
      QLaurent r = residue_monic(c, monic);
      QLaurent diff = c - r;
      if (diff.is_zero()) continue;
      auto t = divide_exact(diff, qint(d + 1));
      if (!t) throw std::logic_error("torsion_split: fold quotient not exact");
      s.add_term(k, *t);
    }
    if (s.is_zero()) continue;
    residual -= s * gen_J(d);
    // coordinate mod {1}*R-hat: ideal ({1}) = (q^4 - 1), window [0, 4)
    XPoly coord;
    for (const auto& [k, c] : s.terms()) coord.add_term(k, residue_cyclic(c, 4));
    if (!coord.is_zero()) out.torsion_coords[d] = std::move(coord);
  }
  out.free_residue = std::move(residual);
  return out;
}

// Eliminate y completely over the localization (every {n} inverted):
// repeatedly clear the top y-degree with a G_d multiple, accumulating the
// denominator, then reduce the fraction over Z[q].
inline LocalizedPoly normal_form_localized(const SkeinPoly& p) {
  SkeinPoly num = p;
  QLaurent den(1);
  for (int d = num.deg_y(); d >= 1; --d) {
    XPoly lead = num.coeff_y(d);
    if (lead.is_zero()) continue;
    // (q^{4d+4} - 1) * num - q^{2d+2} * lead * G_d kills the y^d coefficient
    const QLaurent factor = qpow(4 * d + 4) - QLaurent(1);
    num = factor * num - (qpow(2 * d + 2) * lead) * gen_G(d);
    den *= factor;
  }
  LocalizedPoly out;
  if (num.is_zero()) {
    out.denominator = QLaurent(1);
    return out;
  }
  XPoly flat = num.coeff_y(0);

  // reduce: divide numerator and denominator by their Z[q] gcd
  int min_e = 0;
  for (const auto& [k, c] : flat.terms()) min_e = std::min(min_e, c.min_exp());
  const int shift = -min_e;
  detail::ZPoly g = detail::to_zpoly(den, 0);
  for (const auto& [k, c] : flat.terms())
    g = detail::zgcd(g, detail::to_zpoly(c, shift));
  if (!(g.deg() == 0 && g.c[0] == 1)) {
    detail::ZPoly dq = detail::zdiv_exact(detail::to_zpoly(den, 0), g);
    den = detail::from_zpoly(dq, 0);
    XPoly reduced;
    for (const auto& [k, c] : flat.terms()) {
      detail::ZPoly cq = detail::zdiv_exact(detail::to_zpoly(c, shift), g);
      reduced.add_term(k, detail::from_zpoly(cq, shift));
    }
    flat = std::move(reduced);
  }
  if (den.coeff(den.max_exp()) < 0) {
    den = -den;
    flat = -flat;
  }
  out.numerator = std::move(flat);
  out.denominator = std::move(den);
  return out;
}

// --- JSON forms --------------------------------------------------------

inline nlohmann::json to_json(const Certificate& cert) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [n, coeff] : cert.entries)
    arr.push_back({{"n", n}, {"coeff", xpoly_to_json(coeff)}});
  return {{"cert", arr}};
}

inline nlohmann::json to_json(const TorsionSplit& split) {
  nlohmann::json coords = nlohmann::json::array();
  for (const auto& [n, coeff] : split.torsion_coords)
    coords.push_back({{"n", n}, {"coeff", xpoly_to_json(coeff)}});
  return {{"torsion_coords", coords},
          {"free_residue", to_json(split.free_residue)}};
}

inline nlohmann::json to_json(const LocalizedPoly& loc) {
  return {{"numerator", xpoly_to_json(loc.numerator)},
          {"denominator", qlaurent_to_json(loc.denominator)}};
}

}  // namespace skein
