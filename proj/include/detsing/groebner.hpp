/* Groebner bases for global monomial orderings.
 *
 * Buchberger's algorithm with the Gebauer-Moeller pair criteria, normal
 * selection strategy, fraction-free reduction with periodic content
 * stripping, and a final interreduction producing the unique reduced basis
 * (monic, tails fully reduced, sorted by leading monomial).
 *
 * The term-vector layer here is shared with the local engine (mora.hpp):
 * polynomials are re-sorted under the running order at entry and converted
 * back to canonical form at exit.  A degree cap > 0 makes every operation
 * drop terms of total degree >= cap, which computes bases of I + m^cap; the
 * zero-dimensional machinery in dimension.hpp relies on that.
 */
#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "detsing/engine_limits.hpp"
#include "detsing/error.hpp"
#include "detsing/polynomial.hpp"

namespace detsing {

template <class C>
using TermVec = std::vector<Term<C>>;

template <class C>
TermVec<C> ep_from_poly(const Polynomial<C>& p, const MonomialOrder& ord,
                        uint32_t cap = 0) {
  TermVec<C> v;
  v.reserve(p.size());
  for (const auto& t : p.terms())
    if (cap == 0 || t.m.deg < cap) v.push_back(t);
  std::sort(v.begin(), v.end(),
            [&](const Term<C>& a, const Term<C>& b) { return ord.cmp(a.m, b.m) > 0; });
  return v;
}

template <class C>
Polynomial<C> ep_to_poly(const RingPtr& ring, TermVec<C> v) {
  return Polynomial<C>::from_terms(ring, std::move(v));
}

// ca * ma * A + cb * mb * B, merged under ord; terms of degree >= cap dropped
// when cap > 0.
template <class C>
TermVec<C> linear_combine(const MonomialOrder& ord, const C& ca, const Monomial& ma,
                          const TermVec<C>& A, const C& cb, const Monomial& mb,
                          const TermVec<C>& B, uint32_t cap) {
  using Ops = FieldOps<C>;
  TermVec<C> out;
  out.reserve(A.size() + B.size());
  size_t i = 0, j = 0;
  Monomial am, bm;
  bool have_a = false, have_b = false;
  auto step_a = [&] {
    while (i < A.size()) {
      am = A[i].m * ma;
      if (cap == 0 || am.deg < cap) { have_a = true; return; }
      ++i;
    }
    have_a = false;
  };
  auto step_b = [&] {
    while (j < B.size()) {
      bm = B[j].m * mb;
      if (cap == 0 || bm.deg < cap) { have_b = true; return; }
      ++j;
    }
    have_b = false;
  };
  step_a();
  step_b();
  while (have_a || have_b) {
    int c;
    if (!have_a) c = -1;
    else if (!have_b) c = 1;
    else c = ord.cmp(am, bm);
    if (c > 0) {
      out.push_back({am, ca * A[i].c});
      ++i;
      step_a();
    } else if (c < 0) {
      out.push_back({bm, cb * B[j].c});
      ++j;
      step_b();
    } else {
      C s = ca * A[i].c;
      s = s + cb * B[j].c;
      if (!Ops::is_zero(s)) out.push_back({am, std::move(s)});
      ++i;
      ++j;
      step_a();
      step_b();
    }
  }
  return out;
}

template <class C>
void strip_content(TermVec<C>& v) {
  FieldOps<C>::make_primitive(v);
}

// ---- global normal form ---------------------------------------------------

// Full normal form against `basis` (all of whose members are nonzero, sorted
// under ord).  Reduces head and tail; the result has no term divisible by any
// basis leading monomial.  Global orders only.
template <class C>
TermVec<C> normal_form(TermVec<C> h, const std::vector<TermVec<C>>& basis,
                       const MonomialOrder& ord, uint32_t cap = 0) {
  DS_CHECK(ord.is_global(), "normal form requires a global order");
  TermVec<C> done;
  int steps = 0;
  while (!h.empty()) {
    engine::tick();
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.empty() || !g[0].m.divides(h[0].m)) continue;
      Monomial m = g[0].m.div_into(h[0].m);
      C neg = C(0) - h[0].c;
      // g_lc * h - h_lc * m * g; scale the emitted prefix the same way
      if (!done.empty() && !FieldOps<C>::is_one(g[0].c))
        for (auto& t : done) t.c = t.c * g[0].c;
      h = linear_combine(ord, g[0].c, Monomial::one(h[0].m.n), h, neg, m, g, cap);
      if (++steps % 16 == 0 && !h.empty()) strip_content(h);
      reduced = true;
      break;
    }
    if (!reduced) {
      done.push_back(h.front());
      h.erase(h.begin());
    }
  }
  if (!done.empty()) strip_content(done);
  return done;
}

template <class C>
bool reduces_to_zero(const Polynomial<C>& f, const std::vector<Polynomial<C>>& basis,
                     const MonomialOrder& ord) {
  std::vector<TermVec<C>> b;
  b.reserve(basis.size());
  for (const auto& g : basis) b.push_back(ep_from_poly(g, ord));
  return normal_form(ep_from_poly(f, ord), b, ord).empty();
}

// ---- Buchberger ------------------------------------------------------------

namespace gbdetail {

struct Pair {
  uint32_t i, j;
  Monomial l;
};

struct PairLess {
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.l.deg != b.l.deg) return a.l.deg < b.l.deg;
    int c = MonomialOrder::global().cmp(a.l, b.l);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

}  // namespace gbdetail

template <class C>
class GroebnerRun {
 public:
  GroebnerRun(MonomialOrder ord, uint32_t cap = 0) : ord_(ord), cap_(cap) {
    DS_CHECK(ord.is_global(), "GroebnerRun requires a global order");
  }

  std::vector<TermVec<C>> run(const std::vector<TermVec<C>>& gens) {
    for (const auto& g : gens) {
      if (g.empty()) continue;
      TermVec<C> r = normal_form(g, basis_, ord_, cap_);
      if (!r.empty()) insert(std::move(r));
    }
    while (!pairs_.empty()) {
      engine::tick();
      gbdetail::Pair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      TermVec<C> s = spoly(basis_[p.i], basis_[p.j]);
      if (s.empty()) continue;
      strip_content(s);
      TermVec<C> r = normal_form(std::move(s), basis_, ord_, cap_);
      if (!r.empty()) insert(std::move(r));
    }
    return interreduce();
  }

 private:
  TermVec<C> spoly(const TermVec<C>& f, const TermVec<C>& g) {
    Monomial l = lcm(f[0].m, g[0].m);
    Monomial mf = f[0].m.div_into(l);
    Monomial mg = g[0].m.div_into(l);
    C neg = C(0) - f[0].c;
    return linear_combine(ord_, g[0].c, mf, f, neg, mg, g, cap_);
  }

  // Gebauer-Moeller update with the new element at index `ni`.
  void insert(TermVec<C> h) {
    strip_content(h);
    uint32_t ni = static_cast<uint32_t>(basis_.size());
    const Monomial& hm = h[0].m;

    std::vector<gbdetail::Pair> cand;
    cand.reserve(basis_.size());
    for (uint32_t i = 0; i < ni; ++i)
      cand.push_back({i, ni, lcm(basis_[i][0].m, hm)});

    // criterion M: drop candidates whose lcm is a proper multiple of
    // another candidate's lcm
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
    // criterion F: among equal lcms keep a single representative
    for (size_t a = 0; a < cand.size(); ++a) {
      if (drop[a]) continue;
      for (size_t b = a + 1; b < cand.size(); ++b) {
        if (!drop[b] && cand[b].l == cand[a].l) drop[b] = true;
      }
    }
    // chain criterion against existing pairs
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const gbdetail::Pair& p = *it;
      if (hm.divides(p.l) && lcm(basis_[p.i][0].m, hm) != p.l &&
          lcm(basis_[p.j][0].m, hm) != p.l) {
        it = pairs_.erase(it);
      } else {
        ++it;
      }
    }
    // product criterion (valid for well-orders, which is all we run here)
    for (size_t a = 0; a < cand.size(); ++a) {
      if (!drop[a] && basis_[cand[a].i][0].m.coprime(hm)) drop[a] = true;
    }
    for (size_t a = 0; a < cand.size(); ++a)
      if (!drop[a]) pairs_.insert(cand[a]);
    basis_.push_back(std::move(h));
  }

  std::vector<TermVec<C>> interreduce() {
    // minimalize: drop elements whose leading monomial is divisible by
    // another survivor's
    std::vector<size_t> keep;
    for (size_t a = 0; a < basis_.size(); ++a) {
      bool dominated = false;
      for (size_t b = 0; b < basis_.size() && !dominated; ++b) {
        if (a == b) continue;
        if (basis_[b][0].m.divides(basis_[a][0].m)) {
          if (basis_[b][0].m != basis_[a][0].m) dominated = true;
          else dominated = b < a;  // equal leading monomials: keep the first
        }
      }
      if (!dominated) keep.push_back(a);
    }
    std::vector<TermVec<C>> out;
    out.reserve(keep.size());
    for (size_t k : keep) out.push_back(std::move(basis_[k]));
    std::sort(out.begin(), out.end(), [&](const TermVec<C>& a, const TermVec<C>& b) {
      return ord_.cmp(a[0].m, b[0].m) < 0;
    });
    // tail-reduce each against the others; leading monomials are minimal so
    // they cannot change
    for (size_t a = 0; a < out.size(); ++a) {
      std::vector<TermVec<C>> others;
      others.reserve(out.size() - 1);
      for (size_t b = 0; b < out.size(); ++b)
        if (b != a) others.push_back(out[b]);
      Monomial lead = out[a][0].m;
      out[a] = normal_form(std::move(out[a]), others, ord_, cap_);
      DS_CHECK(!out[a].empty() && out[a][0].m == lead,
               "interreduction must preserve minimal leading monomials");
      FieldOps<C>::make_monic(out[a]);
    }
    return out;
  }

  MonomialOrder ord_;
  uint32_t cap_;
  std::vector<TermVec<C>> basis_;
  std::set<gbdetail::Pair, gbdetail::PairLess> pairs_;
};

// Reduced Groebner basis; unique for (ideal, order).  The unit ideal yields
// the single basis element 1, the zero ideal an empty basis.
template <class C>
std::vector<Polynomial<C>> groebner_basis(const std::vector<Polynomial<C>>& gens,
                                          const RingPtr& ring,
                                          const MonomialOrder& ord) {
  std::vector<TermVec<C>> in;
  in.reserve(gens.size());
  for (const auto& g : gens)
    if (!g.is_zero()) in.push_back(ep_from_poly(g, ord));
  GroebnerRun<C> run(ord);
  auto out = run.run(in);
  std::vector<Polynomial<C>> res;
  res.reserve(out.size());
  for (auto& v : out) res.push_back(ep_to_poly(ring, std::move(v)));
  return res;
}

}  // namespace detsing
