/* Standard bases for local orderings via Mora's tangent-cone algorithm.
 *
 * The weak normal form follows the ecart strategy: reduce by a divisor of
 * minimal ecart, adding the intermediate remainder to the reducer set when
 * its ecart is smaller.  This terminates for any monomial ordering and
 * computes in the localization at the origin.
 *
 * A degree cap > 0 computes a standard basis of I + m^cap instead (every
 * term of degree >= cap is dropped on the fly); dimension.hpp turns that
 * into certified colength counts for zero-dimensional ideals.
 */
#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "detsing/groebner.hpp"

namespace detsing {

namespace moradetail {

template <class C>
uint32_t ecart(const TermVec<C>& v) {
  uint32_t mx = 0;
  for (const auto& t : v) mx = std::max(mx, t.m.deg);
  return mx - v[0].m.deg;
}

}  // namespace moradetail

// Weak normal form of h against G.  Only the head is guaranteed irreducible;
// h is congruent to the result modulo <G> up to a unit of the local ring.
template <class C>
TermVec<C> mora_normal_form(TermVec<C> h, const std::vector<TermVec<C>>& G,
                            const MonomialOrder& ord, uint32_t cap = 0) {
  using moradetail::ecart;
  std::vector<TermVec<C>> owned;     // intermediate remainders added to T
  std::vector<const TermVec<C>*> T;
  std::vector<uint32_t> Tec;
  T.reserve(G.size());
  for (const auto& g : G) {
    if (g.empty()) continue;
    T.push_back(&g);
    Tec.push_back(ecart(g));
  }
  int steps = 0;
  while (!h.empty()) {
    engine::tick();
    int best = -1;
    for (size_t k = 0; k < T.size(); ++k) {
      if (!(*T[k])[0].m.divides(h[0].m)) continue;
      if (best < 0 || Tec[k] < Tec[static_cast<size_t>(best)] ||
          (Tec[k] == Tec[static_cast<size_t>(best)] &&
           T[k]->size() < T[static_cast<size_t>(best)]->size()))
        best = static_cast<int>(k);
    }
    if (best < 0) break;
    uint32_t he = ecart(h);
    if (Tec[static_cast<size_t>(best)] > he) {
      owned.push_back(h);  // copy; h keeps evolving
      T.push_back(nullptr);
      Tec.push_back(he);
      // owned may reallocate; refresh stored pointers
      size_t base = T.size() - owned.size();
      for (size_t k = 0; k < owned.size(); ++k) T[base + k] = &owned[k];
    }
    // fetch the reducer only after T is stable again
    const TermVec<C>& g = *T[static_cast<size_t>(best)];
    Monomial m = g[0].m.div_into(h[0].m);
    C neg = C(0) - h[0].c;
    h = linear_combine(ord, g[0].c, Monomial::one(h[0].m.n), h, neg, m, g, cap);
    if (++steps % 16 == 0 && !h.empty()) strip_content(h);
  }
  if (!h.empty()) strip_content(h);
  return h;
}

// Standard basis of <gens> w.r.t. a (typically local) order.  The result is
// minimal (no leading monomial divides another) but not canonical.
template <class C>
std::vector<TermVec<C>> standard_basis(const std::vector<TermVec<C>>& gens,
                                       const MonomialOrder& ord, uint32_t cap = 0) {
  std::vector<TermVec<C>> basis;
  std::set<gbdetail::Pair, gbdetail::PairLess> pairs;

  auto insert = [&](TermVec<C> h) {
    strip_content(h);
    uint32_t ni = static_cast<uint32_t>(basis.size());
    const Monomial& hm = h[0].m;
    std::vector<gbdetail::Pair> cand;
    for (uint32_t i = 0; i < ni; ++i)
      cand.push_back({i, ni, lcm(basis[i][0].m, hm)});
    std::vector<bool> drop(cand.size(), false);
    for (size_t a = 0; a < cand.size(); ++a) {
      if (drop[a]) continue;
      for (size_t b = 0; b < cand.size(); ++b) {
        if (a == b || drop[b]) continue;
        if (cand[b].l.divides(cand[a].l) && cand[b].l != cand[a].l) {
          drop[a] = true;
          break;
        }
      }
    }
    for (size_t a = 0; a < cand.size(); ++a) {
      if (drop[a]) continue;
      for (size_t b = a + 1; b < cand.size(); ++b)
        if (!drop[b] && cand[b].l == cand[a].l) drop[b] = true;
    }
    for (auto it = pairs.begin(); it != pairs.end();) {
      const gbdetail::Pair& p = *it;
      if (hm.divides(p.l) && lcm(basis[p.i][0].m, hm) != p.l &&
          lcm(basis[p.j][0].m, hm) != p.l)
        it = pairs.erase(it);
      else
        ++it;
    }
    // no product criterion here: it is only justified for well-orders
    for (size_t a = 0; a < cand.size(); ++a)
      if (!drop[a]) pairs.insert(cand[a]);
    basis.push_back(std::move(h));
  };

  for (const auto& g : gens) {
    if (g.empty()) continue;
    TermVec<C> r = mora_normal_form(g, basis, ord, cap);
    if (!r.empty()) insert(std::move(r));
  }
  while (!pairs.empty()) {
    engine::tick();
    gbdetail::Pair p = *pairs.begin();
    pairs.erase(pairs.begin());
    const TermVec<C>& f = basis[p.i];
    const TermVec<C>& g = basis[p.j];
    Monomial mf = f[0].m.div_into(p.l);
    Monomial mg = g[0].m.div_into(p.l);
    C neg = C(0) - f[0].c;
    TermVec<C> s = linear_combine(ord, g[0].c, mf, f, neg, mg, g, cap);
    if (s.empty()) continue;
    strip_content(s);
    TermVec<C> r = mora_normal_form(std::move(s), basis, ord, cap);
    if (!r.empty()) insert(std::move(r));
  }

  // minimalize by leading monomial
  std::vector<size_t> keep;
  for (size_t a = 0; a < basis.size(); ++a) {
    bool dominated = false;
    for (size_t b = 0; b < basis.size() && !dominated; ++b) {
      if (a == b) continue;
      if (basis[b][0].m.divides(basis[a][0].m)) {
        if (basis[b][0].m != basis[a][0].m) dominated = true;
        else dominated = b < a;
      }
    }
    if (!dominated) keep.push_back(a);
  }
  std::vector<TermVec<C>> out;
  out.reserve(keep.size());
  for (size_t k : keep) out.push_back(std::move(basis[k]));
  std::sort(out.begin(), out.end(), [&](const TermVec<C>& a, const TermVec<C>& b) {
    return ord.cmp(a[0].m, b[0].m) < 0;
  });
  return out;
}

template <class C>
std::vector<Polynomial<C>> standard_basis_local(const std::vector<Polynomial<C>>& gens,
                                                const RingPtr& ring, uint32_t cap = 0) {
  MonomialOrder ord = MonomialOrder::local();
  std::vector<TermVec<C>> in;
  in.reserve(gens.size());
  for (const auto& g : gens)
    if (!g.is_zero()) in.push_back(ep_from_poly(g, ord, cap));
  auto out = standard_basis(in, ord, cap);
  std::vector<Polynomial<C>> res;
  res.reserve(out.size());
  for (auto& v : out) res.push_back(ep_to_poly(ring, std::move(v)));
  return res;
}

}  // namespace detsing
