/* Sparse multivariate polynomials over an exact coefficient field.
 *
 * Canonical form: terms sorted strictly descending in global degrevlex with
 * no zero coefficients, so equality is structural and printing is stable.
 * Basis engines re-sort working copies under their own orders; this type is
 * the boundary representation.
 */
#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "detsing/coeff.hpp"
#include "detsing/error.hpp"
#include "detsing/monomial.hpp"
#include "detsing/ring.hpp"

namespace detsing {

template <class C>
class Polynomial {
 public:
  using Ops = FieldOps<C>;

  Polynomial() = default;  // zero over a null ring; assign before use

  static Polynomial zero(RingPtr ring) {
    Polynomial p;
    p.ring_ = std::move(ring);
    return p;
  }

  static Polynomial constant(RingPtr ring, C c) {
    Polynomial p = zero(std::move(ring));
    if (!Ops::is_zero(c))
      p.ts_.push_back({Monomial::one(p.ring_->nvars()), std::move(c)});
    return p;
  }

  static Polynomial from_rat(RingPtr ring, const Rat& q) {
    return constant(std::move(ring), Ops::from_rat(q));
  }

  static Polynomial variable(RingPtr ring, int i, int exp = 1) {
    Polynomial p = zero(std::move(ring));
    if (exp == 0) return constant(p.ring_, C(1));
    p.ts_.push_back({Monomial::var(p.ring_->nvars(), i, exp), C(1)});
    return p;
  }

  static Polynomial from_terms(RingPtr ring, std::vector<Term<C>> ts) {
    Polynomial p = zero(std::move(ring));
    p.ts_ = std::move(ts);
    p.normalize();
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term<C>>& terms() const { return ts_; }
  bool is_zero() const { return ts_.empty(); }
  size_t size() const { return ts_.size(); }

  const Term<C>& leading_term() const {
    DS_CHECK(!ts_.empty(), "leading term of zero polynomial");
    return ts_[0];
  }
  const Monomial& leading_monomial() const { return leading_term().m; }

  uint32_t total_degree() const {
    uint32_t d = 0;
    for (const auto& t : ts_) d = std::max(d, t.m.deg);
    return d;
  }

  C constant_term() const {
    if (!ts_.empty() && ts_.back().m.is_one()) return ts_.back().c;
    return C(0);
  }
  bool vanishes_at_origin() const {
    return ts_.empty() || !ts_.back().m.is_one();
  }

  bool is_constant() const {
    return ts_.empty() || (ts_.size() == 1 && ts_[0].m.is_one());
  }

  // Degree of the lowest-degree (initial) form; 0 for the zero polynomial.
  uint32_t min_degree() const {
    uint32_t d = ts_.empty() ? 0 : ts_[0].m.deg;
    for (const auto& t : ts_) d = std::min(d, t.m.deg);
    return d;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    Polynomial r = zero(a.ring_);
    r.ts_.reserve(a.ts_.size() + b.ts_.size());
    merge_into(r.ts_, a.ts_, b.ts_, false);
    return r;
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    Polynomial r = zero(a.ring_);
    r.ts_.reserve(a.ts_.size() + b.ts_.size());
    merge_into(r.ts_, a.ts_, b.ts_, true);
    return r;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.ts_) t.c = C(0) - t.c;
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    Polynomial r = zero(a.ring_);
    if (a.is_zero() || b.is_zero()) return r;
    r.ts_.reserve(a.ts_.size() * b.ts_.size());
    for (const auto& ta : a.ts_)
      for (const auto& tb : b.ts_) r.ts_.push_back({ta.m * tb.m, ta.c * tb.c});
    r.normalize();
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial mul_term(const Monomial& m, const C& c) const {
    Polynomial r = *this;
    if (Ops::is_zero(c)) return zero(ring_);
    for (auto& t : r.ts_) {
      t.m = t.m * m;
      t.c = t.c * c;
    }
    return r;
  }

  Polynomial scaled(const C& c) const { return mul_term(Monomial::one(ring_->nvars()), c); }

  Polynomial pow(unsigned k) const {
    Polynomial r = constant(ring_, C(1));
    Polynomial base = *this;
    while (k) {
      if (k & 1) r = r * base;
      base = (k >>= 1) ? base * base : base;
    }
    return r;
  }

  Polynomial derivative(int var) const {
    Polynomial r = zero(ring_);
    for (const auto& t : ts_) {
      int e = t.m.e[static_cast<size_t>(var)];
      if (e == 0) continue;
      Term<C> u = t;
      u.c = t.c * C(e);
      u.m.e[static_cast<size_t>(var)] = static_cast<uint16_t>(e - 1);
      u.m.deg -= 1;
      r.ts_.push_back(std::move(u));
    }
    // differentiation preserves strict descending order within equal support
    r.normalize();
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.ts_.size() != b.ts_.size()) return false;
    for (size_t i = 0; i < a.ts_.size(); ++i)
      if (a.ts_[i].m != b.ts_[i].m || !(a.ts_[i].c == b.ts_[i].c)) return false;
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  std::string to_string() const {
    if (ts_.empty()) return "0";
    auto names = ring_->name_array();
    std::string out;
    for (const auto& t : ts_) {
      bool neg = Ops::is_negative(t.c);
      C a = neg ? C(0) - t.c : t.c;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      std::string cs = Ops::to_string(a, ring_->param);
      if (t.m.is_one()) {
        out += cs;
      } else if (Ops::is_one(a)) {
        out += t.m.to_string(names);
      } else {
        out += cs + "*" + t.m.to_string(names);
      }
    }
    return out;
  }

 private:
  void check_ring(const Polynomial& o) const {
    DS_CHECK(ring_ && o.ring_ && ring_->nvars() == o.ring_->nvars(),
             "polynomials from different ring contexts");
  }

  static bool canon_less(const Term<C>& a, const Term<C>& b) {
    return MonomialOrder::global().cmp(a.m, b.m) > 0;  // descending
  }

  void normalize() {
    std::sort(ts_.begin(), ts_.end(), canon_less);
    size_t w = 0;
    for (size_t i = 0; i < ts_.size();) {
      size_t j = i + 1;
      C acc = ts_[i].c;
      while (j < ts_.size() && ts_[j].m == ts_[i].m) acc = acc + ts_[j++].c;
      if (!Ops::is_zero(acc)) {
        ts_[w].m = ts_[i].m;
        ts_[w].c = std::move(acc);
        ++w;
      }
      i = j;
    }
    ts_.resize(w);
  }

  static void merge_into(std::vector<Term<C>>& out, const std::vector<Term<C>>& a,
                         const std::vector<Term<C>>& b, bool subtract) {
    auto ord = MonomialOrder::global();
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      int c;
      if (i >= a.size()) c = -1;
      else if (j >= b.size()) c = 1;
      else c = ord.cmp(a[i].m, b[j].m);
      if (c > 0) {
        out.push_back(a[i++]);
      } else if (c < 0) {
        Term<C> t = b[j++];
        if (subtract) t.c = C(0) - t.c;
        out.push_back(std::move(t));
      } else {
        C s = a[i].c;
        if (subtract) s = s - b[j].c;
        else s = s + b[j].c;
        if (!Ops::is_zero(s)) out.push_back({a[i].m, std::move(s)});
        ++i;
        ++j;
      }
    }
  }

  RingPtr ring_;
  std::vector<Term<C>> ts_;
};

using PolyQ = Polynomial<Rat>;
using PolyQt = Polynomial<RatFunc>;

// ---- ring maps -----------------------------------------------------------

// General substitution: variable i of the source ring maps to images[i] (a
// polynomial over the target ring); coefficients pass through cmap.
template <class C1, class C2, class F>
Polynomial<C2> map_polynomial(const Polynomial<C1>& p, const RingPtr& target,
                              const std::vector<Polynomial<C2>>& images, F cmap) {
  Polynomial<C2> acc = Polynomial<C2>::zero(target);
  for (const auto& t : p.terms()) {
    Polynomial<C2> prod = Polynomial<C2>::constant(target, cmap(t.c));
    for (int i = 0; i < t.m.n; ++i)
      if (t.m.e[static_cast<size_t>(i)] != 0)
        prod *= images[static_cast<size_t>(i)].pow(t.m.e[static_cast<size_t>(i)]);
    acc += prod;
  }
  return acc;
}

// Cheap embedding: variable i of the source becomes variable perm[i] of the
// target (same coefficient field, exponents only reshuffled).
template <class C>
Polynomial<C> reindex_vars(const Polynomial<C>& p, const RingPtr& target,
                           const std::vector<int>& perm) {
  std::vector<Term<C>> ts;
  ts.reserve(p.size());
  int tn = target->nvars();
  for (const auto& t : p.terms()) {
    Term<C> u;
    u.m = Monomial::one(tn);
    for (int i = 0; i < t.m.n; ++i) {
      if (t.m.e[static_cast<size_t>(i)] == 0) continue;
      u.m.e[static_cast<size_t>(perm[static_cast<size_t>(i)])] =
          t.m.e[static_cast<size_t>(i)];
    }
    u.m.deg = t.m.deg;
    u.c = t.c;
    ts.push_back(std::move(u));
  }
  return Polynomial<C>::from_terms(target, std::move(ts));
}

// Substitute a constant for one variable, staying in the same ring context.
template <class C>
Polynomial<C> subs_var_const(const Polynomial<C>& p, int var, const C& value) {
  std::vector<Term<C>> ts;
  ts.reserve(p.size());
  for (const auto& t : p.terms()) {
    Term<C> u = t;
    int e = t.m.e[static_cast<size_t>(var)];
    if (e > 0) {
      C f = value;
      C acc = C(1);
      int k = e;
      while (k) {  // value^e
        if (k & 1) acc = acc * f;
        if (k >>= 1) f = f * f;
      }
      u.c = t.c * acc;
      u.m.e[static_cast<size_t>(var)] = 0;
      u.m.deg -= static_cast<uint32_t>(e);
    }
    ts.push_back(std::move(u));
  }
  return Polynomial<C>::from_terms(p.ring(), std::move(ts));
}

// Exact division by a single polynomial under the canonical global order;
// nullopt when the division is not exact.
template <class C>
std::optional<Polynomial<C>> try_exact_divide(const Polynomial<C>& a,
                                              const Polynomial<C>& b) {
  DS_CHECK(!b.is_zero(), "division by zero polynomial");
  Polynomial<C> r = a;
  Polynomial<C> q = Polynomial<C>::zero(a.ring());
  const Monomial& mb = b.leading_monomial();
  while (!r.is_zero()) {
    const Term<C>& lt = r.leading_term();
    if (!mb.divides(lt.m)) return std::nullopt;
    Monomial m = mb.div_into(lt.m);
    C c = lt.c / b.leading_term().c;
    q += Polynomial<C>::from_terms(a.ring(), {{m, c}});
    r -= b.mul_term(m, c);
  }
  return q;
}

}  // namespace detsing
