#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skein/quotient.hpp"

using namespace skein;

namespace {

const SkeinPoly kX1 = SkeinPoly::x1();
const SkeinPoly kX2 = SkeinPoly::x2();
const SkeinPoly kY = SkeinPoly::y();

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

SkeinPoly random_span(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> idx(1, 10);
  std::uniform_int_distribution<int> ex(0, 2);
  std::uniform_int_distribution<int> qe(-4, 4);
  std::uniform_int_distribution<int> co(-5, 5);
  std::uniform_int_distribution<int> nterms(0, 3);
  SkeinPoly g;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i)
    g += XPoly::monomial(QLaurent::monomial(co(rng), qe(rng)), ex(rng),
                         ex(rng)) *
         gen_G(idx(rng));
  return g;
}

SkeinPoly expand(const Certificate& cert) {
  SkeinPoly sum;
  for (const auto& [n, c] : cert.entries) sum += c * gen_G(n);
  return sum;
}

}  // namespace

TEST_CASE("membership examples") {
  auto c1 = membership(gen_G(1));
  REQUIRE(c1.has_value());
  CHECK(c1->entries == std::map<int, XPoly>{{1, XPoly(1)}});

  CHECK(!membership(kY).has_value());

  auto c2 = membership(XPoly::x1() * gen_G(2) + gen_G(1));
  REQUIRE(c2.has_value());
  CHECK(c2->entries ==
        std::map<int, XPoly>{{2, XPoly::x1()}, {1, XPoly(1)}});
}

TEST_CASE("normal_form examples") {
  CHECK(normal_form(gen_G(1)).rep.is_zero());
  CHECK(normal_form(kY).rep == kY);
  CHECK(normal_form(bracket(2) * kY).rep == -(bracket(1) * (kX1 * kX2)));
}

TEST_CASE("normal form residue window") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 50; ++i) {
    SkeinPoly rep = normal_form(random_poly(rng, 8)).rep;
    for (const auto& [d, xc] : rep.coeffs()) {
      if (d < 1) continue;
      for (const auto& [k, c] : xc.terms()) {
        CHECK(c.min_exp() >= 0);
        CHECK(c.max_exp() < 4 * d + 4);
      }
    }
  }
}

TEST_CASE("classify") {
  CHECK(classify(gen_J(1)) == Classification::Torsion);
  CHECK(classify(kY) == Classification::HasFreePart);
  CHECK(classify(SkeinPoly()) == Classification::Zero);
  CHECK(classify(gen_G(5)) == Classification::Zero);
}

TEST_CASE("torsion_split examples") {
  auto s1 = torsion_split(gen_J(1));
  CHECK(s1.torsion_coords == std::map<int, XPoly>{{1, XPoly(1)}});
  CHECK(s1.free_residue.is_zero());

  auto s2 = torsion_split(kX1);
  CHECK(s2.torsion_coords.empty());
  CHECK(s2.free_residue == kX1);

  auto s3 = torsion_split(gen_J(1) + kX1);
  CHECK(s3.torsion_coords == std::map<int, XPoly>{{1, XPoly(1)}});
  CHECK(s3.free_residue == kX1);
}

TEST_CASE("normal_form_localized examples") {
  for (int n = 1; n <= 10; ++n) {
    auto loc = normal_form_localized(gen_G(n));
    CHECK(loc.numerator.is_zero());
  }

  // y -> -x1 x2 / [2]
  auto loc_y = normal_form_localized(kY);
  LocalizedPoly expect_y{-(XPoly::x1() * XPoly::x2()), qint(2)};
  CHECK(loc_y == expect_y);

  // y^2 -> 1 + (x1^2 - 1)(x2^2 - 1)/[3]
  auto loc_y2 = normal_form_localized(kY * kY);
  XPoly x_part = (XPoly::x1() * XPoly::x1() - XPoly(1)) *
                 (XPoly::x2() * XPoly::x2() - XPoly(1));
  LocalizedPoly expect_y2{qint(3) * XPoly(1) + x_part, qint(3)};
  CHECK(loc_y2 == expect_y2);

  // y-degree-0 inputs pass through unchanged
  XPoly p0 = XPoly::monomial(bracket(3), 2, 1) + XPoly(qpow(-5));
  auto loc0 = normal_form_localized(SkeinPoly(p0));
  CHECK(loc0.numerator == p0);
  CHECK(loc0.denominator == QLaurent(1));
}

TEST_CASE("quotient property suite") {
  std::mt19937_64 rng(0);
  for (int i = 0; i < 100; ++i) {
    SkeinPoly p = random_poly(rng, 8);
    SkeinPoly r = random_poly(rng, 8);
    SkeinPoly g = random_span(rng);
    NormalForm nf = normal_form(p);

    // idempotence
    CHECK(normal_form(nf.rep).rep == nf.rep);
    // certificate soundness
    CHECK(nf.rep + expand(nf.cert) == p);
    // stability under adding span elements
    CHECK(normal_form(p + g).rep == nf.rep);
    // membership iff zero normal form
    CHECK(membership(p).has_value() == nf.rep.is_zero());
    // quasi-linearity
    CHECK(normal_form(p + r).rep ==
          normal_form(nf.rep + normal_form(r).rep).rep);
    // tau compatibility
    CHECK(membership(p).has_value() == membership(tau(p)).has_value());
  }
}

TEST_CASE("degree-0 embedding") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    SkeinPoly p = random_poly(rng, 0);
    CHECK(normal_form(p).rep == p);
  }
}

TEST_CASE("torsion annihilator") {
  for (int n = 1; n <= 15; ++n) {
    CHECK(normal_form(bracket(1) * gen_J(n)).rep.is_zero());
    CHECK(!normal_form(gen_J(n)).rep.is_zero());
  }
}

TEST_CASE("localized consistency") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 60; ++i) {
    SkeinPoly p = random_poly(rng, 5);
    auto loc = normal_form_localized(p);
    // clearing the denominator, the difference maps to zero in the
    // localized module
    SkeinPoly cleared =
        loc.denominator * p - SkeinPoly(loc.numerator);
    auto back = normal_form_localized(cleared);
    CHECK(back.numerator.is_zero());
    // fraction is reduced: no common Z[q] factor of positive degree,
    // and no common integer factor > 1
    int min_e = 0;
    for (const auto& [k, c] : loc.numerator.terms())
      min_e = std::min(min_e, c.min_exp());
    detail::ZPoly g = detail::to_zpoly(loc.denominator, 0);
    for (const auto& [k, c] : loc.numerator.terms())
      g = detail::zgcd(g, detail::to_zpoly(c, -min_e));
    if (!loc.numerator.is_zero()) {
      CHECK(g.deg() == 0);
      CHECK(g.c[0] == 1);
    }
  }
}

TEST_CASE("json forms") {
  auto cert = membership(XPoly::x1() * gen_G(2) + gen_G(1));
  REQUIRE(cert.has_value());
  nlohmann::json j = to_json(*cert);
  REQUIRE(j.contains("cert"));
  REQUIRE(j["cert"].size() == 2);
  CHECK(j["cert"][0]["n"] == 1);
  CHECK(j["cert"][1]["n"] == 2);
  CHECK(j["cert"][1]["coeff"] == xpoly_to_json(XPoly::x1()));
}
