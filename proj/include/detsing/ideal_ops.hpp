/* Ideal-theoretic toolkit: elimination, intersection, colon ideals, and
 * saturation.
 *
 * Intersections go through the classic auxiliary-variable trick
 * (u*I + (1-u)*J, eliminate u); colon ideals divide the intersection with a
 * principal ideal; saturation iterates the colon until the chain
 * stabilizes (bases compared as reduced Groebner bases), with a hard cap
 * that flags pathological inputs.
 */
#pragma once

#include <vector>

#include "detsing/ideal.hpp"

namespace detsing {

// Basis elements of a block-elimination Groebner basis whose leading
// monomial avoids the block are entirely free of the block's variables.
template <class C>
Ideal<C> eliminate(const Ideal<C>& I, uint16_t var_mask) {
  MonomialOrder ord = MonomialOrder::elim(var_mask);
  const auto& gb = I.basis(ord);
  std::vector<Polynomial<C>> kept;
  for (const auto& g : gb) {
    TermVec<C> v = ep_from_poly(g, ord);
    if (v[0].m.deg_masked(var_mask) == 0) kept.push_back(g);
  }
  return Ideal<C>(I.ring(), std::move(kept));
}

template <class C>
Polynomial<C> lift_poly(const Polynomial<C>& p, const RingPtr& target) {
  std::vector<int> perm(static_cast<size_t>(p.ring()->nvars()));
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  return reindex_vars(p, target, perm);
}

// Project back to a smaller ring; all terms must avoid the removed tail.
template <class C>
Polynomial<C> project_poly(const Polynomial<C>& p, const RingPtr& target) {
  int tn = target->nvars();
  for (const auto& t : p.terms())
    for (int i = tn; i < t.m.n; ++i)
      DS_CHECK(t.m.e[static_cast<size_t>(i)] == 0,
               "projection would drop a live variable");
  std::vector<int> perm(static_cast<size_t>(p.ring()->nvars()), 0);
  for (size_t i = 0; i < perm.size(); ++i)
    perm[i] = static_cast<int>(i) < tn ? static_cast<int>(i) : 0;
  return reindex_vars(p, target, perm);
}

template <class C>
Ideal<C> intersect(const Ideal<C>& I, const Ideal<C>& J) {
  const RingPtr& r = I.ring();
  RingPtr ext = extend_ring(r, {"@u"});
  int ui = ext->nvars() - 1;
  Polynomial<C> u = Polynomial<C>::variable(ext, ui);
  Polynomial<C> one_minus_u = Polynomial<C>::constant(ext, C(1)) - u;
  std::vector<Polynomial<C>> gens;
  for (const auto& f : I.gens()) gens.push_back(u * lift_poly(f, ext));
  for (const auto& g : J.gens()) gens.push_back(one_minus_u * lift_poly(g, ext));
  Ideal<C> K(ext, std::move(gens));
  Ideal<C> E = eliminate(K, static_cast<uint16_t>(1u << ui));
  std::vector<Polynomial<C>> out;
  for (const auto& g : E.gens()) out.push_back(project_poly(g, r));
  return Ideal<C>(r, std::move(out));
}

// (I : g) for a single nonzero polynomial.
template <class C>
Ideal<C> ideal_quotient_by_poly(const Ideal<C>& I, const Polynomial<C>& g) {
  DS_CHECK(!g.is_zero(), "colon by the zero polynomial");
  if (I.is_unit()) return I;
  Ideal<C> K = intersect(I, Ideal<C>(I.ring(), {g}));
  std::vector<Polynomial<C>> out;
  for (const auto& f : K.gens()) {
    auto q = try_exact_divide(f, g);
    DS_CHECK(q.has_value(), "member of I ∩ <g> not divisible by g");
    out.push_back(std::move(*q));
  }
  return Ideal<C>(I.ring(), std::move(out));
}

// (I : J) = intersection of (I : g) over the generators of J.
template <class C>
Ideal<C> ideal_quotient(const Ideal<C>& I, const Ideal<C>& J) {
  std::vector<Polynomial<C>> gj;
  for (const auto& g : J.gens()) {
    if (g.is_zero()) continue;
    bool dup = false;
    for (const auto& h : gj)
      if (h == g) {
        dup = true;
        break;
      }
    if (!dup) gj.push_back(g);
  }
  DS_CHECK(!gj.empty(), "colon by the zero ideal");
  Ideal<C> acc = ideal_quotient_by_poly(I, gj[0]);
  for (size_t k = 1; k < gj.size(); ++k) {
    if (acc.same_ideal(I)) break;  // already shrunk to I; I ⊆ (I:J) ⊆ acc
    acc = intersect(acc, ideal_quotient_by_poly(I, gj[k]));
  }
  return acc;
}

// (I : J^inf) by iterated colon with stabilization detection.
template <class C>
Ideal<C> saturation(const Ideal<C>& I, const Ideal<C>& J) {
  Ideal<C> cur = I;
  for (int k = 0; k < 64; ++k) {
    Ideal<C> next = ideal_quotient(cur, J);
    if (next.same_ideal(cur)) return cur;
    cur = next;
  }
  throw DsError(ErrorCode::SaturationDiverged,
                "saturation did not stabilize within 64 colon iterations");
}

template <class C>
Ideal<C> maximal_ideal(const RingPtr& r) {
  std::vector<Polynomial<C>> gens;
  for (int i = 0; i < r->nvars(); ++i)
    gens.push_back(Polynomial<C>::variable(r, i));
  return Ideal<C>(r, std::move(gens));
}

// V(J) contained in the origin: finite local colength (possibly an empty
// germ) and no component away from the origin (saturating by the maximal
// ideal discards the origin; nothing may remain).
template <class C>
bool variety_confined_to_origin(const Ideal<C>& J) {
  auto loc = local_quotient_dimension(J);
  if (!loc) return false;
  Ideal<C> away = saturation(J, maximal_ideal<C>(J.ring()));
  return away.is_unit();
}

}  // namespace detsing
