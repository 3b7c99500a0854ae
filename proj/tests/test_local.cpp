#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "detsing/ideal.hpp"
#include "detsing/mora.hpp"
#include "helpers.hpp"

using namespace detsing;
using namespace detsing::testutil;

static Ideal<Rat> I(const RingPtr& r, const std::vector<std::string>& gens) {
  std::vector<PolyQ> g;
  for (const auto& s : gens) g.push_back(P(r, s));
  return Ideal<Rat>(r, std::move(g));
}

TEST_CASE("local leading terms") {
  auto r1 = make_ring({"x"});
  auto lead = I(r1, {"x - x^2"}).leading_monomials(MonomialOrder::local());
  REQUIRE(lead.size() == 1);
  CHECK(lead[0] == Monomial::var(1, 0));  // unit * x locally

  auto r2 = make_ring({"x", "y"});
  auto sb = I(r2, {"x^2", "y"}).basis(MonomialOrder::local());
  REQUIRE(sb.size() == 2);
  CHECK(sb[0] == P(r2, "y"));
  CHECK(sb[1] == P(r2, "x^2"));

  auto lead3 = I(r2, {"y^2 - x^3"}).leading_monomials(MonomialOrder::local());
  REQUIRE(lead3.size() == 1);
  CHECK(lead3[0] == Monomial::var(2, 1, 2));  // y^2
}

TEST_CASE("local quotient dimensions") {
  auto r2 = make_ring({"x", "y"});
  CHECK(local_quotient_dimension(I(r2, {"x", "y"})) == 1);
  CHECK(local_quotient_dimension(I(r2, {"x^2", "y"})) == 2);
  auto r1 = make_ring({"x"});
  CHECK(local_quotient_dimension(I(r1, {"x - x^2"})) == 1);
  CHECK(!local_quotient_dimension(I(r2, {"x^2"})).has_value());  // not 0-dim
  CHECK(local_quotient_dimension(I(r2, {"x^2 - 1", "y"})) == 0);  // misses origin
  CHECK(local_quotient_dimension(I(r2, {"1"})) == 0);
}

TEST_CASE("hilbert-samuel multiplicities") {
  auto r3 = ring_xyz();
  CHECK(hilbert_samuel_multiplicity(I(r3, {"x", "y", "z"})) == 1);
  auto r2 = make_ring({"x", "y"});
  CHECK(hilbert_samuel_multiplicity(I(r2, {"y^2 - x^3"})) == 2);  // cusp
  auto r4 = ring_xyzw();
  CHECK(hilbert_samuel_multiplicity(
            I(r4, {"x*z-y^2", "x*w-y*z", "y*w-z^2"})) == 3);
  // variety missing the origin
  CHECK(hilbert_samuel_multiplicity(I(r2, {"x - 1"})) == 0);
  // smooth point
  CHECK(hilbert_samuel_multiplicity(I(r3, {"x"})) == 1);
}

TEST_CASE("truncated and full local colength agree") {
  auto r2 = make_ring({"x", "y"});
  // A_k staircases (Jacobian-style 0-dim ideals)
  for (int k = 1; k <= 5; ++k) {
    auto J = I(r2, {"x^" + std::to_string(k), "y"});
    CHECK(local_quotient_dimension(J) == static_cast<uint64_t>(k));
  }
  // unit at a distance: x - x^2 = x(1-x) has colength 1 (only the branch at 0)
  auto r1 = make_ring({"x"});
  CHECK(local_quotient_dimension(I(r1, {"x^2 - x^3"})) == 2);
}

TEST_CASE("local vs global counts for ideals containing a power of m") {
  auto r2 = make_ring({"x", "y"});
  std::mt19937_64 rng(9);
  for (int it = 0; it < 10; ++it) {
    std::vector<PolyQ> gens;
    for (int k = 0; k < 2; ++k) {
      PolyQ p = rand_poly(rng, r2, 3, 2);
      gens.push_back(p - PolyQ::constant(r2, p.constant_term()));
    }
    // force a power of the maximal ideal into the ideal
    gens.push_back(P(r2, "x^4"));
    gens.push_back(P(r2, "y^4"));
    gens.push_back(P(r2, "x^3*y^3"));
    Ideal<Rat> J(r2, gens);
    auto loc = local_quotient_dimension(J);
    REQUIRE(loc.has_value());
    auto lm = J.leading_monomials(MonomialOrder::global());
    auto st = staircase_count(minimalize_monomials(std::move(lm)), 2);
    REQUIRE(st.has_value());
    CHECK(*loc == st->count);
  }
}
