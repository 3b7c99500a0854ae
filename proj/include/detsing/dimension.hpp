/* Combinatorics of leading-term ideals: Krull dimension via independent
 * variable sets, staircase counts for zero-dimensional quotients, and the
 * Hilbert series numerator used for Hilbert-Samuel multiplicities.
 */
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <vector>

#include "detsing/error.hpp"
#include "detsing/monomial.hpp"

namespace detsing {

// Keep only minimal generators (no generator divides another).
inline std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
  std::vector<Monomial> out;
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.deg < b.deg;
  });
  for (const auto& m : gens) {
    bool dominated = false;
    for (const auto& k : out)
      if (k.divides(m)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(m);
  }
  return out;
}

inline bool monomials_contain_unit(const std::vector<Monomial>& gens) {
  for (const auto& m : gens)
    if (m.is_one()) return true;
  return false;
}

// Dimension of K[x]/L for a monomial ideal L: the largest cardinality of a
// variable subset S such that no generator is supported inside S.  -1 for
// the unit ideal.
inline int monomial_ideal_dimension(const std::vector<Monomial>& gens, int nvars) {
  if (monomials_contain_unit(gens)) return -1;
  int best = 0;
  for (uint32_t mask = 0; mask < (1u << nvars); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool independent = true;
    for (const auto& m : gens) {
      bool inside = true;
      for (int i = 0; i < nvars && inside; ++i)
        if (m.e[static_cast<size_t>(i)] != 0 && !(mask & (1u << i))) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

// Least e with x_var^e in L (as a pure power), if any.
inline std::optional<int> pure_power_bound(const std::vector<Monomial>& gens, int var) {
  std::optional<int> best;
  for (const auto& m : gens) {
    bool pure = m.e[static_cast<size_t>(var)] != 0;
    for (int i = 0; i < m.n && pure; ++i)
      if (i != var && m.e[static_cast<size_t>(i)] != 0) pure = false;
    if (pure) {
      int e = m.e[static_cast<size_t>(var)];
      if (!best || e < *best) best = e;
    }
  }
  return best;
}

struct Staircase {
  uint64_t count = 0;   // number of standard monomials
  uint32_t max_deg = 0; // largest total degree among them
};

// Standard monomials of a zero-dimensional monomial ideal (every variable
// must carry a pure power); nullopt otherwise.
inline std::optional<Staircase> staircase_count(const std::vector<Monomial>& gens,
                                                int nvars) {
  if (monomials_contain_unit(gens)) return Staircase{0, 0};
  std::vector<int> bound(static_cast<size_t>(nvars));
  for (int i = 0; i < nvars; ++i) {
    auto b = pure_power_bound(gens, i);
    if (!b) return std::nullopt;
    bound[static_cast<size_t>(i)] = *b;
  }
  Staircase st;
  // DFS over the exponent box; a partial exponent vector is pruned as soon
  // as it is divisible by a generator whose remaining support is exhausted
  std::vector<int> expo(static_cast<size_t>(nvars), 0);
  auto rec2 = [&](auto&& self, int var) -> void {
    if (var == nvars) {
      ++st.count;
      uint32_t d = 0;
      for (int i = 0; i < nvars; ++i) d += static_cast<uint32_t>(expo[static_cast<size_t>(i)]);
      st.max_deg = std::max(st.max_deg, d);
      return;
    }
    for (int e = 0; e < bound[static_cast<size_t>(var)]; ++e) {
      expo[static_cast<size_t>(var)] = e;
      bool in_ideal = false;
      for (const auto& m : gens) {
        bool div = true;
        for (int i = 0; i <= var && div; ++i)
          if (m.e[static_cast<size_t>(i)] > expo[static_cast<size_t>(i)]) div = false;
        for (int i = var + 1; i < m.n && div; ++i)
          if (m.e[static_cast<size_t>(i)] != 0) div = false;
        if (div) {
          in_ideal = true;
          break;
        }
      }
      if (!in_ideal) self(self, var + 1);
    }
    expo[static_cast<size_t>(var)] = 0;
  };
  rec2(rec2, 0);
  return st;
}

// ---- Hilbert series --------------------------------------------------------

using UPoly = std::vector<mpz_class>;  // polynomial in u, index = degree

inline void upoly_trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline UPoly upoly_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  upoly_trim(r);
  return r;
}

// First Hilbert series numerator N(u) with Hilb_{R/L}(u) = N(u)/(1-u)^nvars,
// by splitting on a pivot variable:  N(L) = N(L + <x>) + u * N(L : x).
inline UPoly hilbert_numerator(std::vector<Monomial> gens, int nvars) {
  gens = minimalize_monomials(std::move(gens));
  if (monomials_contain_unit(gens)) return {};
  if (gens.empty()) return {mpz_class(1)};

  // split generators into connected components of shared support
  std::vector<int> comp(gens.size(), -1);
  int ncomp = 0;
  for (size_t i = 0; i < gens.size(); ++i) {
    if (comp[i] >= 0) continue;
    comp[i] = ncomp;
    std::vector<size_t> stack{i};
    while (!stack.empty()) {
      size_t a = stack.back();
      stack.pop_back();
      for (size_t b = 0; b < gens.size(); ++b) {
        if (comp[b] >= 0) continue;
        if (!gens[a].coprime(gens[b])) {
          comp[b] = ncomp;
          stack.push_back(b);
        }
      }
    }
    ++ncomp;
  }
  if (ncomp > 1) {
    UPoly acc{mpz_class(1)};
    for (int c = 0; c < ncomp; ++c) {
      std::vector<Monomial> part;
      for (size_t i = 0; i < gens.size(); ++i)
        if (comp[i] == c) part.push_back(gens[i]);
      acc = upoly_mul(acc, hilbert_numerator(std::move(part), nvars));
    }
    return acc;
  }

  // single pure power x^a: N = 1 - u^a
  if (gens.size() == 1) {
    UPoly r(static_cast<size_t>(gens[0].deg) + 1, mpz_class(0));
    r[0] = 1;
    r[static_cast<size_t>(gens[0].deg)] -= 1;
    upoly_trim(r);
    return r;
  }

  // pivot: a variable occurring in the most generators
  int pivot = -1, best = -1;
  for (int v = 0; v < nvars; ++v) {
    int cnt = 0;
    for (const auto& m : gens)
      if (m.e[static_cast<size_t>(v)] != 0) ++cnt;
    if (cnt > best) {
      best = cnt;
      pivot = v;
    }
  }
  DS_CHECK(pivot >= 0 && best >= 1, "hilbert pivot selection failed");

  std::vector<Monomial> plus, colon;
  plus.reserve(gens.size());
  colon.reserve(gens.size());
  for (const auto& m : gens) {
    if (m.e[static_cast<size_t>(pivot)] == 0) {
      plus.push_back(m);
      colon.push_back(m);
    } else {
      Monomial q = m;
      q.e[static_cast<size_t>(pivot)] -= 1;
      q.deg -= 1;
      colon.push_back(q);
    }
  }
  plus.push_back(Monomial::var(static_cast<int>(gens[0].n), pivot));

  UPoly a = hilbert_numerator(std::move(plus), nvars);
  UPoly b = hilbert_numerator(std::move(colon), nvars);
  UPoly r(std::max(a.size(), b.size() + 1), mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i + 1] += b[i];
  upoly_trim(r);
  return r;
}

// Exact division by (1-u)^k; checks divisibility.
inline UPoly upoly_div_one_minus_u(UPoly p, int k) {
  for (int round = 0; round < k; ++round) {
    if (p.empty()) return p;
    // p = (1-u) q  =>  q_i = p_i + q_{i-1}
    UPoly q(p.size(), mpz_class(0));
    mpz_class carry = 0;
    for (size_t i = 0; i + 1 < p.size(); ++i) {
      carry += p[i];
      q[i] = carry;
    }
    carry += p.back();
    DS_CHECK(carry == 0, "Hilbert numerator not divisible by (1-u)");
    q.pop_back();
    upoly_trim(q);
    p = std::move(q);
  }
  return p;
}

inline mpz_class upoly_eval_one(const UPoly& p) {
  mpz_class s = 0;
  for (const auto& c : p) s += c;
  return s;
}

// Hilbert-Samuel multiplicity of R/L for a monomial ideal L: write
// N(u) = Q(u) (1-u)^{nvars-dim} and return Q(1).  Unit ideal gives 0.
inline mpz_class hs_multiplicity_of_lead(const std::vector<Monomial>& gens, int nvars) {
  std::vector<Monomial> mg = minimalize_monomials(gens);
  if (monomials_contain_unit(mg)) return 0;
  int dim = monomial_ideal_dimension(mg, nvars);
  UPoly n = hilbert_numerator(mg, nvars);
  UPoly q = upoly_div_one_minus_u(std::move(n), nvars - dim);
  return upoly_eval_one(q);
}

}  // namespace detsing
