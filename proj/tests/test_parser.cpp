#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "detsing/error.hpp"
#include "detsing/parse.hpp"
#include "helpers.hpp"

using namespace detsing;
using namespace detsing::testutil;

static bool throws_code(ErrorCode code, const std::string& text, const RingPtr& r) {
  try {
    parse_polynomial(text, r);
  } catch (const DsError& e) {
    return e.code() == code;
  }
  return false;
}

TEST_CASE("parse examples") {
  auto r = ring_xyzw();
  CHECK(parse_polynomial("x*z - y^2", r).size() == 2);
  CHECK(parse_polynomial("0", r).is_zero());
  CHECK(parse_polynomial("(x+y)^2 - x^2 - 2*x*y", r) == P(r, "y^2"));
  CHECK(parse_polynomial("3/2*x - 1/3", r).to_string() == "3/2*x - 1/3");
  CHECK(parse_polynomial("-x + -2*y", r) == P(r, "0 - x - 2*y"));
  CHECK(parse_polynomial("x^0", r) == P(r, "1"));
}

TEST_CASE("parse errors carry positions") {
  auto r = ring_xyz();
  CHECK(throws_code(ErrorCode::Parse, "x + ", r));
  CHECK(throws_code(ErrorCode::Parse, "x ^ y", r));
  CHECK(throws_code(ErrorCode::Parse, "(x + y", r));
  CHECK(throws_code(ErrorCode::Parse, "x x", r));
  CHECK(throws_code(ErrorCode::Parse, "1/0", r));
  CHECK(throws_code(ErrorCode::Parse, "x^2^3", r));
  CHECK(throws_code(ErrorCode::UnknownVariable, "x + q", r));
  try {
    parse_polynomial("x + q", r);
  } catch (const DsError& e) {
    CHECK(std::string(e.what()).find("position 4") != std::string::npos);
  }
}

TEST_CASE("parse-print-parse is a fixed point") {
  auto r = ring_xyzw();
  std::mt19937_64 rng(11);
  for (int it = 0; it < 60; ++it) {
    PolyQ p = rand_poly(rng, r, 6, 4, 7);
    PolyQ q = parse_polynomial(p.to_string(), r);
    CHECK(p == q);
    CHECK(p.to_string() == q.to_string());
  }
  // and the zero polynomial
  CHECK(parse_polynomial(PolyQ::zero(r).to_string(), r).is_zero());
}
