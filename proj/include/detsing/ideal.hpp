/* Ideals with cached bases, plus the dimension and multiplicity queries
 * built on leading-term ideals.
 *
 * Global orders cache the unique reduced Groebner basis; the local order
 * caches a minimal Mora standard basis.  The zero-dimensional local
 * colength uses capped standard bases: a cap-c run computes a basis of
 * I + m^c, and once the observed staircase stays strictly below c-1 the
 * count provably equals the colength of I in the local ring, so the cap
 * escalates geometrically until certified (falling back to an uncapped run
 * for ideals that are not zero-dimensional).
 */
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "detsing/dimension.hpp"
#include "detsing/groebner.hpp"
#include "detsing/mora.hpp"

namespace detsing {

template <class C>
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial<C>> gens)
      : st_(std::make_shared<State>()) {
    st_->ring = std::move(ring);
    for (auto& g : gens)
      if (!g.is_zero()) st_->gens.push_back(std::move(g));
  }

  const RingPtr& ring() const { return st_->ring; }
  const std::vector<Polynomial<C>>& gens() const { return st_->gens; }

  const std::vector<Polynomial<C>>& basis(const MonomialOrder& ord) const {
    auto it = st_->cache.find(ord);
    if (it != st_->cache.end()) return it->second;
    std::vector<Polynomial<C>> b =
        ord.is_global() ? groebner_basis(st_->gens, st_->ring, ord)
                        : standard_basis_local(st_->gens, st_->ring);
    return st_->cache.emplace(ord, std::move(b)).first->second;
  }

  std::vector<Monomial> leading_monomials(const MonomialOrder& ord) const {
    std::vector<Monomial> lm;
    for (const auto& g : basis(ord)) {
      TermVec<C> v = ep_from_poly(g, ord);
      lm.push_back(v[0].m);
    }
    return lm;
  }

  bool contains(const Polynomial<C>& f) const {
    if (f.is_zero()) return true;
    return reduces_to_zero(f, basis(MonomialOrder::global()), MonomialOrder::global());
  }

  bool is_unit() const {
    const auto& b = basis(MonomialOrder::global());
    return b.size() == 1 && b[0].is_constant();
  }

  bool is_zero_ideal() const { return basis(MonomialOrder::global()).empty(); }

  bool same_ideal(const Ideal& o) const {
    // reduced Groebner bases are canonical per (ideal, order)
    return basis(MonomialOrder::global()) == o.basis(MonomialOrder::global());
  }

 private:
  struct State {
    RingPtr ring;
    std::vector<Polynomial<C>> gens;
    mutable std::map<MonomialOrder, std::vector<Polynomial<C>>> cache;
  };
  std::shared_ptr<State> st_;
};

template <class C>
Ideal<C> ideal_sum(const Ideal<C>& a, const Ideal<C>& b) {
  std::vector<Polynomial<C>> gens = a.gens();
  for (const auto& g : b.gens()) gens.push_back(g);
  return Ideal<C>(a.ring(), std::move(gens));
}

// ---- dimension / multiplicity ----------------------------------------------

// Krull dimension of V(I); -1 for the unit ideal, nvars for the zero ideal.
template <class C>
int krull_dimension(const Ideal<C>& I) {
  auto lm = I.leading_monomials(MonomialOrder::global());
  return monomial_ideal_dimension(minimalize_monomials(std::move(lm)),
                                  I.ring()->nvars());
}

namespace localdetail {

// One capped run; returns the staircase of I + m^cap together with the cap
// monomial bounds folded in.
template <class C>
Staircase capped_staircase(const Ideal<C>& I, uint32_t cap) {
  int n = I.ring()->nvars();
  MonomialOrder ord = MonomialOrder::local();
  std::vector<TermVec<C>> in;
  for (const auto& g : I.gens()) {
    TermVec<C> v = ep_from_poly(g, ord, cap);
    if (!v.empty()) in.push_back(std::move(v));
  }
  auto sb = standard_basis(in, ord, cap);
  std::vector<Monomial> lm;
  for (const auto& g : sb) lm.push_back(g[0].m);
  for (int i = 0; i < n; ++i)
    lm.push_back(Monomial::var(n, i, static_cast<int>(cap)));
  auto st = staircase_count(minimalize_monomials(std::move(lm)), n);
  DS_CHECK(st.has_value(), "capped staircase must be finite");
  return *st;
}

}  // namespace localdetail

// Vector-space dimension of (local ring at the origin)/I; nullopt when the
// local quotient is not finite dimensional.
template <class C>
std::optional<uint64_t> local_quotient_dimension(const Ideal<C>& I) {
  int n = I.ring()->nvars();
  if (n == 0) return 0;
  uint32_t maxdeg = 1;
  bool any = false;
  for (const auto& g : I.gens()) {
    any = true;
    maxdeg = std::max(maxdeg, g.total_degree());
  }
  if (any) {
    uint32_t cap = 2 * maxdeg + 2;
    for (; cap <= 600; cap *= 2) {
      Staircase st = localdetail::capped_staircase(I, cap);
      if (st.count == 0) return 0;  // unit locally
      if (st.max_deg + 2 <= cap) return st.count;
    }
  }
  // uncapped run: exact leading ideal, finite or not
  auto lm = I.leading_monomials(MonomialOrder::local());
  auto st = staircase_count(minimalize_monomials(std::move(lm)), n);
  if (!st) return std::nullopt;
  return st->count;
}

// Hilbert-Samuel multiplicity of the local ring at the origin; 0 when the
// variety misses the origin.
template <class C>
long hilbert_samuel_multiplicity(const Ideal<C>& I) {
  auto lm = I.leading_monomials(MonomialOrder::local());
  mpz_class e = hs_multiplicity_of_lead(lm, I.ring()->nvars());
  DS_CHECK(e.fits_slong_p(), "multiplicity overflow");
  return e.get_si();
}

}  // namespace detsing
