#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "detsing/groebner.hpp"
#include "detsing/ideal.hpp"
#include "helpers.hpp"

using namespace detsing;
using namespace detsing::testutil;

static std::vector<PolyQ> gb(const RingPtr& r, const std::vector<std::string>& gens) {
  std::vector<PolyQ> g;
  for (const auto& s : gens) g.push_back(P(r, s));
  return groebner_basis(g, r, MonomialOrder::global());
}

TEST_CASE("trivial bases") {
  auto r = ring_xyz();
  auto b1 = gb(r, {"x"});
  REQUIRE(b1.size() == 1);
  CHECK(b1[0] == P(r, "x"));

  auto b2 = gb(r, {"x+y", "x-y"});
  REQUIRE(b2.size() == 2);
  CHECK(b2[0] == P(r, "y"));
  CHECK(b2[1] == P(r, "x"));

  CHECK(gb(r, {"0"}).empty());
  auto b3 = gb(r, {"2", "x"});
  REQUIRE(b3.size() == 1);
  CHECK(b3[0] == P(r, "1"));
}

TEST_CASE("membership via normal form") {
  auto r = ring_xyzw();
  std::vector<PolyQ> gens = {P(r, "x*z-y^2"), P(r, "x*w-y*z"), P(r, "y*w-z^2")};
  auto b = groebner_basis(gens, r, MonomialOrder::global());
  std::mt19937_64 rng(5);
  for (int it = 0; it < 25; ++it) {
    PolyQ combo = PolyQ::zero(r);
    for (const auto& g : gens) combo += rand_poly(rng, r, 3, 2) * g;
    CHECK(reduces_to_zero(combo, b, MonomialOrder::global()));
  }
  CHECK(!reduces_to_zero(P(r, "x"), b, MonomialOrder::global()));
  CHECK(!reduces_to_zero(P(r, "x*z"), b, MonomialOrder::global()));
}

TEST_CASE("reduced basis is unique under generator shuffles") {
  auto r = ring_xyzw();
  std::vector<PolyQ> gens = {P(r, "x*z-y^2"), P(r, "x*w-y*z"), P(r, "y*w-z^2"),
                             P(r, "3*x*z-3*y^2")};
  auto ref = groebner_basis(gens, r, MonomialOrder::global());
  std::mt19937_64 rng(17);
  for (int it = 0; it < 8; ++it) {
    std::shuffle(gens.begin(), gens.end(), rng);
    auto b = groebner_basis(gens, r, MonomialOrder::global());
    REQUIRE(b.size() == ref.size());
    for (size_t i = 0; i < b.size(); ++i) CHECK(b[i] == ref[i]);
  }
}

TEST_CASE("random combinations land in the ideal, leading ideal is stable") {
  auto r = ring_xyz();
  std::mt19937_64 rng(23);
  for (int it = 0; it < 10; ++it) {
    std::vector<PolyQ> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(rand_poly(rng, r, 3, 2));
    Ideal<Rat> I(r, gens);
    for (int k = 0; k < 5; ++k) {
      PolyQ combo = PolyQ::zero(r);
      for (const auto& g : gens) combo += rand_poly(rng, r, 2, 1) * g;
      CHECK(I.contains(combo));
    }
  }
}

TEST_CASE("groebner over rational functions") {
  auto r = make_ring({"x", "y"}, "t");
  RatFunc t = RatFunc::parameter();
  // <x + t y, x - t y> = <x, y> over Q(t)
  PolyQt f = PolyQt::variable(r, 0) + PolyQt::variable(r, 1).scaled(t);
  PolyQt g = PolyQt::variable(r, 0) - PolyQt::variable(r, 1).scaled(t);
  auto b = groebner_basis<RatFunc>({f, g}, r, MonomialOrder::global());
  REQUIRE(b.size() == 2);
  CHECK(b[0] == PolyQt::variable(r, 1));
  CHECK(b[1] == PolyQt::variable(r, 0));
}
