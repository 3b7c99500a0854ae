#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "detsing/coeff.hpp"
#include "detsing/ratfunc.hpp"
#include "detsing/zpoly.hpp"

using namespace detsing;

TEST_CASE("zpoly basics") {
  ZPoly t = ZPoly::variable();
  ZPoly p = t * t - ZPoly(1);            // t^2 - 1
  ZPoly q = t - ZPoly(1);
  CHECK(p.degree() == 2);
  CHECK(gcd(p, q) == q);
  CHECK(div_exact(p, q) == t + ZPoly(1));
  CHECK((p - p).is_zero());
  CHECK(p.to_string("t") == "t^2 - 1");
}

TEST_CASE("zpoly gcd on random products") {
  std::mt19937_64 rng(7);
  ZPoly t = ZPoly::variable();
  for (int it = 0; it < 50; ++it) {
    auto rnd = [&](int deg) {
      ZPoly p;
      for (int i = 0; i <= deg; ++i)
        p = p + ZPoly(mpz_class(static_cast<long>(rng() % 11) - 5), i);
      return p;
    };
    ZPoly a = rnd(3), b = rnd(2), c = rnd(2);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    ZPoly g = gcd(a * c, b * c);
    // c divides the gcd of a*c and b*c
    CHECK(!g.is_zero());
    ZPoly r = gcd(g, c);
    CHECK(r.degree() == c.primitive_part().degree());
  }
}

TEST_CASE("ratfunc field axioms") {
  RatFunc t = RatFunc::parameter();
  RatFunc a = (t * t - RatFunc(1)) / (t + RatFunc(2));
  RatFunc b = RatFunc(3) / (t - RatFunc(1));
  RatFunc c = t * b;
  CHECK(a + (-a) == RatFunc(0));
  CHECK(a * a.inv() == RatFunc(1));
  CHECK((a + b) * c == a * c + b * c);
  CHECK((a / b) * b == a);
  // reduction happened: (t^2-1)*3/(t-1) = 3t+3 over t+2
  RatFunc d = (t * t - RatFunc(1)) * RatFunc(3) / (t - RatFunc(1));
  CHECK(d == RatFunc(3) * t + RatFunc(3));
}

TEST_CASE("ratfunc canonical form") {
  RatFunc t = RatFunc::parameter();
  RatFunc a = RatFunc(2) / (RatFunc(0) - t);  // -2/t
  CHECK(a.den().lc() > 0);
  CHECK(a.to_string("t") == "-2/(t)");
  CHECK(RatFunc(Rat(4, 6)).to_string("t") == "2/3");
}

TEST_CASE("primitive normalization of term vectors") {
  auto m = Monomial::one(2);
  SUBCASE("rationals") {
    std::vector<Term<Rat>> ts = {{m, make_rat(-4, 6)}, {m, make_rat(2, 9)}};
    FieldOps<Rat>::make_primitive(ts);
    CHECK(ts[0].c == 3);
    CHECK(ts[1].c == -1);
  }
  SUBCASE("rational functions") {
    RatFunc t = RatFunc::parameter();
    std::vector<Term<RatFunc>> ts = {{m, t * RatFunc(2)}, {m, (t * t) / RatFunc(3)}};
    FieldOps<RatFunc>::make_primitive(ts);
    CHECK(ts[0].c == RatFunc(6));
    CHECK(ts[1].c == t);
  }
}
