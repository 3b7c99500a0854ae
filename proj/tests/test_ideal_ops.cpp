#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "detsing/ideal_ops.hpp"
#include "helpers.hpp"

using namespace detsing;
using namespace detsing::testutil;

static Ideal<Rat> I(const RingPtr& r, const std::vector<std::string>& gens) {
  std::vector<PolyQ> g;
  for (const auto& s : gens) g.push_back(P(r, s));
  return Ideal<Rat>(r, std::move(g));
}

TEST_CASE("elimination") {
  auto r = make_ring({"x", "y"});
  auto E1 = eliminate(I(r, {"y - x^2", "y"}), 1u << 1);
  CHECK(E1.same_ideal(I(r, {"x^2"})));

  auto E2 = eliminate(I(r, {"x"}), 1u << 1);
  CHECK(E2.same_ideal(I(r, {"x"})));

  auto ru = make_ring({"u", "x"});
  auto E3 = eliminate(I(ru, {"u*x - 1", "x^2"}), 1u << 0);
  CHECK(E3.is_unit());  // Rabinowitsch: x invertible and nilpotent forces 1
}

TEST_CASE("intersection") {
  auto r = make_ring({"x", "y"});
  auto K = intersect(I(r, {"x"}), I(r, {"y"}));
  CHECK(K.same_ideal(I(r, {"x*y"})));
  auto K2 = intersect(I(r, {"x^2", "y"}), I(r, {"x"}));
  CHECK(K2.same_ideal(I(r, {"x^2", "x*y"})));
}

TEST_CASE("colon ideals") {
  auto r = make_ring({"x", "y"});
  auto Q1 = ideal_quotient(I(r, {"x^2", "x*y"}), I(r, {"x"}));
  CHECK(Q1.same_ideal(I(r, {"x", "y"})));
  // brute-force cross-check of the same example: which monomials of degree
  // <= 2 multiply x into <x^2, xy>?
  auto base = I(r, {"x^2", "x*y"});
  for (const auto& mstr : {"x", "y", "x^2", "x*y", "y^2"}) {
    CHECK(base.contains(P(r, mstr) * P(r, "x")));
    CHECK(Q1.contains(P(r, mstr)));
  }
  CHECK(!base.contains(P(r, "x")));
  CHECK(!Q1.contains(P(r, "1")));
}

TEST_CASE("saturation") {
  auto r = make_ring({"x", "y"});
  CHECK(saturation(I(r, {"x*y"}), I(r, {"x"})).same_ideal(I(r, {"y"})));
  CHECK(saturation(I(r, {"x^2"}), I(r, {"x"})).is_unit());
  // idempotence
  auto A = I(r, {"x^3*y", "x*y^2"});
  auto B = I(r, {"x"});
  auto S1 = saturation(A, B);
  auto S2 = saturation(S1, B);
  CHECK(S1.same_ideal(S2));
}

TEST_CASE("variety confined to origin") {
  auto r = ring_xyz();
  CHECK(variety_confined_to_origin(I(r, {"x", "y", "z"})));
  CHECK(variety_confined_to_origin(I(r, {"x^2", "y^3", "z"})));
  CHECK(!variety_confined_to_origin(I(r, {"x", "y"})));           // a line
  CHECK(!variety_confined_to_origin(I(r, {"x", "y", "z - 1"})));  // wrong point
  CHECK(variety_confined_to_origin(I(r, {"1"})));                 // empty germ
  // one component through 0, one far away
  CHECK(!variety_confined_to_origin(I(r, {"x", "y", "z^2 - z"})));
}
