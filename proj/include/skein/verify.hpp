#pragma once

// One-command symbolic replay of the proof identities, plus a randomized
// structure suite for the quotient module.  Every check is an exact
// polynomial-difference-equals-zero test; failures carry the difference
// polynomial as witness.

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "skein/chebyshev.hpp"
#include "skein/generators.hpp"
#include "skein/quotient.hpp"
#include "skein/ringcore.hpp"

namespace skein {

struct Check {
  std::string name;
  int lo = 0;
  int hi = 0;
  bool pass = true;
  std::optional<SkeinPoly> witness;  // first failing difference
  int witness_index = 0;
};

struct VerifyReport {
  std::vector<Check> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Witness polynomials are truncated to 200 monomials in the JSON form,
// with a count of what was dropped.
inline nlohmann::json to_json(const VerifyReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    nlohmann::json entry = {{"name", c.name},
                            {"range", {c.lo, c.hi}},
                            {"status", c.pass ? "pass" : "fail"}};
    if (c.pass) {
      entry["witness"] = nullptr;
    } else {
      nlohmann::json w = to_json(*c.witness);
      auto& terms = w["terms"];
      if (terms.size() > 200) {
        size_t dropped = terms.size() - 200;
        nlohmann::json trimmed = nlohmann::json::array();
        for (size_t i = 0; i < 200; ++i) trimmed.push_back(terms[i]);
        w["terms"] = std::move(trimmed);
        w["truncated_terms"] = dropped;
      }
      entry["witness"] = std::move(w);
      entry["witness_index"] = c.witness_index;
    }
    checks.push_back(std::move(entry));
  }
  return {{"checks", checks}};
}

namespace detail {

template <typename DiffFn>
Check run_identity(std::string name, int lo, int hi, DiffFn diff) {
  Check c{std::move(name), lo, hi, true, std::nullopt, 0};
  for (int n = lo; n <= hi; ++n) {
    SkeinPoly d = diff(n);
    if (!d.is_zero()) {
      c.pass = false;
      c.witness = std::move(d);
      c.witness_index = n;
      break;
    }
  }
  return c;
}

inline SkeinPoly random_skein_poly(std::mt19937_64& rng, int degree_bound) {
  std::uniform_int_distribution<int> ey(0, degree_bound);
  std::uniform_int_distribution<int> ex(0, 3);
  std::uniform_int_distribution<int> qe(-8, 8);
  std::uniform_int_distribution<int> co(-9, 9);
  std::uniform_int_distribution<int> nterms(0, 6);
  SkeinPoly p;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    QLaurent c = QLaurent::monomial(co(rng), qe(rng));
    p += SkeinPoly::monomial(XPoly::monomial(c, ex(rng), ex(rng)), ey(rng));
  }
  return p;
}

// random element of the R-hat-span of {G_n, n <= 10}
inline SkeinPoly random_span_element(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> idx(1, 10);
  std::uniform_int_distribution<int> ex(0, 2);
  std::uniform_int_distribution<int> qe(-4, 4);
  std::uniform_int_distribution<int> co(-5, 5);
  std::uniform_int_distribution<int> nterms(0, 3);
  SkeinPoly g;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    XPoly c = XPoly::monomial(QLaurent::monomial(co(rng), qe(rng)), ex(rng),
                              ex(rng));
    g += c * gen_G(idx(rng));
  }
  return g;
}

inline SkeinPoly expand_certificate(const Certificate& cert) {
  SkeinPoly sum;
  for (const auto& [n, c] : cert.entries) sum += c * gen_G(n);
  return sum;
}

}  // namespace detail

// Replays each proof identity up to max_n.
inline VerifyReport run_suite(int max_n) {
  if (max_n < 2) throw std::invalid_argument("run_suite: max_n must be >= 2");
  VerifyReport rep;
  const SkeinPoly x1x2 = SkeinPoly::x1() * SkeinPoly::x2();
  const SkeinPoly xsq =
      SkeinPoly::x1() * SkeinPoly::x1() + SkeinPoly::x2() * SkeinPoly::x2();

  // F_n = U_n - q^{4-4n} U_{n-2}, with F_1 = G_1
  rep.checks.push_back(detail::run_identity(
      "lemma_maintech", 1, max_n, [](int n) {
        if (n == 1) return gen_F(1) - gen_G(1);
        return gen_F(n) - gen_U(n) + qpow(4 - 4 * n) * gen_U(n - 2);
      }));
  // F_{n+1} = U'_{n+1} - q^{-4n} U'_{n-1}
  rep.checks.push_back(detail::run_identity(
      "lemma_primed_parts", 1, max_n, [](int n) {
        return gen_F(n + 1) - gen_Up(n + 1) + qpow(-4 * n) * gen_Up(n - 1);
      }));
  // U''_n = 0
  rep.checks.push_back(detail::run_identity(
      "lemma_double_primed_vanishes", 0, max_n,
      [](int n) { return gen_Upp(n); }));
  // Chebyshev identity suite
  {
    Check c{"chebyshev_identities", 0, max_n, true, std::nullopt, 0};
    if (auto fail = cheb_verify(max_n)) {
      c.pass = false;
      c.name += " [" + fail->identity + "]";
      c.witness = SkeinPoly();
      c.witness_index = fail->n;
    }
    rep.checks.push_back(std::move(c));
  }
  // G_{k-1} = G_{-k-1}
  rep.checks.push_back(detail::run_identity(
      "index_symmetry", -max_n, max_n,
      [](int k) { return gen_G(k - 1) - gen_G(-k - 1); }));
  // tau(G_n) = -G_n
  rep.checks.push_back(detail::run_identity(
      "tau_antisymmetry", 1, max_n,
      [](int n) { return tau(gen_G(n)) + gen_G(n); }));
  // 2 Q_n = sum_{k=0}^{n} G_{n-2k-1}
  rep.checks.push_back(detail::run_identity(
      "q_family_doubling", 0, max_n, [](int n) {
        SkeinPoly sum;
        for (int k = 0; k <= n; ++k) sum += gen_G(n - 2 * k - 1);
        return QLaurent(2) * gen_Q(n) - sum;
      }));
  // b_{n+4} = -x1x2 b_{n+3} - (x1^2+x2^2-2) b_{n+2} - x1x2 b_{n+1} - b_n
  // for b_n = (-1)^{n+1} S_n(x1) S_n(x2) = G''_n / {1}
  rep.checks.push_back(detail::run_identity(
      "double_primed_recurrence", 0, max_n - 4 >= 0 ? max_n - 4 : 0,
      [&](int n) {
        auto b = [](int k) {
          QLaurent sign = (k % 2 == 0) ? QLaurent(-1) : QLaurent(1);
          return SkeinPoly(sign * (cheb_S(k).at_x(1) * cheb_S(k).at_x(2)));
        };
        return b(n + 4) + x1x2 * b(n + 3) + (xsq - SkeinPoly(2)) * b(n + 2) +
               x1x2 * b(n + 1) + b(n);
      }));
  // w_n is a unit multiple of F_{n+1}: F_{n+1} + q^{-2n-4} w_n = 0
  rep.checks.push_back(detail::run_identity(
      "slide_generator_rescaling", 1, max_n,
      [](int n) { return gen_F(n + 1) + qpow(-2 * n - 4) * gen_W(n); }));
  return rep;
}

// Randomized quotient-module property checks with a seeded generator.
inline VerifyReport run_structure_suite(unsigned long long seed, int cases,
                                        int degree_bound) {
  if (cases < 1)
    throw std::invalid_argument("run_structure_suite: cases must be >= 1");
  VerifyReport rep;
  struct Prop {
    std::string name;
    bool pass = true;
    SkeinPoly witness;
    int index = 0;
  };
  std::vector<Prop> props = {{"nf_idempotence"}, {"certificate_soundness"},
                             {"stability_under_span"}, {"membership_iff_zero_nf"},
                             {"tau_compatibility"}, {"torsion_annihilator"}};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < cases; ++i) {
    SkeinPoly p = detail::random_skein_poly(rng, degree_bound);
    SkeinPoly g = detail::random_span_element(rng);
    NormalForm nf = normal_form(p);
    auto fail = [&](Prop& prop, SkeinPoly w) {
      if (prop.pass) {
        prop.pass = false;
        prop.witness = std::move(w);
        prop.index = i;
      }
    };
    SkeinPoly renf = normal_form(nf.rep).rep;
    if (renf != nf.rep) fail(props[0], renf - nf.rep);
    SkeinPoly expanded = nf.rep + detail::expand_certificate(nf.cert);
    if (expanded != p) fail(props[1], expanded - p);
    SkeinPoly shifted = normal_form(p + g).rep;
    if (shifted != nf.rep) fail(props[2], shifted - nf.rep);
    bool member = membership(p).has_value();
    if (member != nf.rep.is_zero()) fail(props[3], nf.rep);
    if (member != membership(tau(p)).has_value()) fail(props[4], tau(p));
    // torsion annihilator on the structured inputs J_n + random span
    int n = i % 15 + 1;
    if (!normal_form(bracket(1) * gen_J(n)).rep.is_zero() ||
        normal_form(gen_J(n)).rep.is_zero())
      fail(props[5], gen_J(n));
  }
  for (auto& prop : props) {
    Check c{prop.name, 0, cases - 1, prop.pass, std::nullopt, 0};
    if (!prop.pass) {
      c.witness = std::move(prop.witness);
      c.witness_index = prop.index;  // the offending case index (seeded)
    }
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

}  // namespace skein
