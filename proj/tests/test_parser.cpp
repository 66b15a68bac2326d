#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skein/parser.hpp"

using namespace skein;

namespace {

SkeinPoly ev(const std::string& text) { return eval(parse(text)); }

SkeinPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> ey(0, 5);
  std::uniform_int_distribution<int> ex(0, 3);
  std::uniform_int_distribution<int> qe(-7, 7);
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

TEST_CASE("expression evaluation") {
  CHECK(ev("bk(2)*y + bk(1)*x1*x2") == gen_G(1));
  CHECK(ev("(q - q^-1)^2") == SkeinPoly(qpow(2) - QLaurent(2) + qpow(-2)));
  CHECK(ev("G(0)").is_zero());
  CHECK(ev("qi(3)") == SkeinPoly(qint(3)));
  CHECK(ev("S(2, x1)") == SkeinPoly(cheb_S(2).at_x(1)));
  CHECK(ev("T(2, y)") == cheb_T(2).at_y());
  CHECK(ev("sigma(1)") == gen_sigma(1));
  CHECK(ev("W(2)") == gen_W(2));
  CHECK(ev("G(-3)") == gen_G(1));
}

TEST_CASE("precedence") {
  // ^ binds tighter than unary -, which binds tighter than *
  CHECK(ev("-2^2") == SkeinPoly(-4));
  CHECK(ev("2*y + 3*y") == QLaurent(5) * SkeinPoly::y());
  CHECK(ev("2 + 3*4") == SkeinPoly(14));
  CHECK(ev("(2 + 3)*4") == SkeinPoly(20));
  CHECK(ev("q^2*y") == qpow(2) * SkeinPoly::y());
  CHECK(ev("-y^2") == -(SkeinPoly::y() * SkeinPoly::y()));
}

TEST_CASE("parse errors carry position") {
  try {
    parse("y + ");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.col == 5);
    CHECK(std::string(e.what()).find("expected") != std::string::npos);
  }
  CHECK_THROWS_AS(parse("y @ 2"), ParseError);
  CHECK_THROWS_AS(parse("foo(3)"), ParseError);
  CHECK_THROWS_AS(parse("G(1"), ParseError);
  CHECK_THROWS_AS(parse("S(2)"), ParseError);
  CHECK_THROWS_AS(parse("q^x1"), ParseError);
}

TEST_CASE("negative exponents only on q") {
  CHECK(ev("q^-3") == SkeinPoly(qpow(-3)));
  CHECK_THROWS_AS(ev("y^-1"), EvalError);
  CHECK_THROWS_AS(ev("x1^-2"), EvalError);
  CHECK_THROWS_AS(ev("(q^2)^-1"), EvalError);
}

TEST_CASE("render") {
  CHECK(render(gen_G(1)) == "(q^4 - q^-4)*y + (q^2 - q^-2)*x1*x2");
  CHECK(render(SkeinPoly()) == "0");
  CHECK(render(SkeinPoly(1)) == "1");
  CHECK(render(-SkeinPoly::y()) == "-y");
  CHECK(render(qpow(-2) * SkeinPoly::x1()) == "q^-2*x1");
}

TEST_CASE("parse after render is the identity") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 200; ++i) {
    SkeinPoly p = random_poly(rng);
    CHECK(ev(render(p)) == p);
  }
  for (int n = 1; n <= 8; ++n) {
    CHECK(ev(render(gen_G(n))) == gen_G(n));
    CHECK(ev(render(gen_F(n))) == gen_F(n));
  }
}
