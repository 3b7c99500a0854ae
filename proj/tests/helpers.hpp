/* Shared test utilities: deterministic random polynomials and rings. */
#pragma once

#include <random>
#include <vector>

#include "detsing/parse.hpp"
#include "detsing/polynomial.hpp"
#include "detsing/ring.hpp"

namespace detsing::testutil {

inline RingPtr ring_xyz() { return make_ring({"x", "y", "z"}); }
inline RingPtr ring_xyzw() { return make_ring({"x", "y", "z", "w"}); }

inline PolyQ P(const RingPtr& r, const std::string& s) {
  return parse_polynomial(s, r);
}

inline Rat rand_rat(std::mt19937_64& rng, int bound) {
  long num = 0;
  while (num == 0) num = static_cast<long>(rng() % (2 * bound + 1)) - bound;
  long den = 1 + static_cast<long>(rng() % bound);
  return make_rat(num, den);
}

inline PolyQ rand_poly(std::mt19937_64& rng, const RingPtr& ring, int max_terms,
                       int max_deg, int bound = 5) {
  std::vector<Term<Rat>> ts;
  int nterms = 1 + static_cast<int>(rng() % max_terms);
  for (int i = 0; i < nterms; ++i) {
    Monomial m = Monomial::one(ring->nvars());
    for (int v = 0; v < ring->nvars(); ++v) {
      int e = static_cast<int>(rng() % (max_deg + 1));
      m.e[static_cast<size_t>(v)] = static_cast<uint16_t>(e);
      m.deg += static_cast<uint32_t>(e);
    }
    ts.push_back({m, rand_rat(rng, bound)});
  }
  return PolyQ::from_terms(ring, std::move(ts));
}

}  // namespace detsing::testutil
