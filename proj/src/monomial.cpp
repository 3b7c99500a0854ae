#include "detsing/monomial.hpp"

#include "detsing/error.hpp"

namespace detsing {

Monomial Monomial::one(int nvars) {
  DS_CHECK(nvars >= 0 && nvars <= kMaxVars, "too many variables");
  Monomial m;
  m.n = static_cast<uint8_t>(nvars);
  return m;
}

Monomial Monomial::var(int nvars, int i, int exp) {
  Monomial m = one(nvars);
  DS_CHECK(i >= 0 && i < nvars, "variable index out of range");
  m.e[static_cast<size_t>(i)] = static_cast<uint16_t>(exp);
  m.deg = static_cast<uint32_t>(exp);
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  DS_CHECK(a.n == b.n, "monomials from different ring contexts");
  Monomial r = a;
  for (int i = 0; i < a.n; ++i) {
    uint32_t s = static_cast<uint32_t>(a.e[i]) + b.e[i];
    DS_CHECK(s <= 0xffff, "exponent overflow");
    r.e[i] = static_cast<uint16_t>(s);
  }
  r.deg = a.deg + b.deg;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (deg > o.deg) return false;
  for (int i = 0; i < n; ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

Monomial Monomial::div_into(const Monomial& o) const {
  Monomial r = o;
  for (int i = 0; i < n; ++i) {
    DS_CHECK(o.e[i] >= e[i], "monomial division not exact");
    r.e[i] = static_cast<uint16_t>(o.e[i] - e[i]);
  }
  r.deg = o.deg - deg;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  r.deg = 0;
  for (int i = 0; i < a.n; ++i) {
    r.e[i] = std::max(a.e[i], b.e[i]);
    r.deg += r.e[i];
  }
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (int i = 0; i < n; ++i)
    if (e[i] != 0 && o.e[i] != 0) return false;
  return true;
}

uint32_t Monomial::deg_masked(uint16_t mask) const {
  uint32_t d = 0;
  for (int i = 0; i < n; ++i)
    if (mask & (1u << i)) d += e[i];
  return d;
}

std::string Monomial::to_string(const std::array<std::string, kMaxVars>& names) const {
  if (is_one()) return "1";
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[static_cast<size_t>(i)];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

namespace {

// Reverse-lex tie break shared by all orders: with equal degrees, the
// monomial whose last differing exponent is smaller is the larger one.
inline int revlex_tail(const Monomial& a, const Monomial& b) {
  for (int i = a.n - 1; i >= 0; --i) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  }
  return 0;
}

inline int revlex_tail_masked(const Monomial& a, const Monomial& b, uint16_t mask) {
  for (int i = a.n - 1; i >= 0; --i) {
    if (!(mask & (1u << i))) continue;
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
  switch (kind) {
    case OrderKind::GlobalDegRevLex:
      if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
      return revlex_tail(a, b);
    case OrderKind::LocalNegDegRevLex:
      if (a.deg != b.deg) return a.deg < b.deg ? 1 : -1;
      return revlex_tail(a, b);
    case OrderKind::BlockElim: {
      uint32_t da = a.deg_masked(elim_mask), db = b.deg_masked(elim_mask);
      if (da != db) return da > db ? 1 : -1;
      if (int c = revlex_tail_masked(a, b, elim_mask)) return c;
      uint16_t rest = static_cast<uint16_t>(~elim_mask);
      da = a.deg_masked(rest);
      db = b.deg_masked(rest);
      if (da != db) return da > db ? 1 : -1;
      return revlex_tail_masked(a, b, rest);
    }
  }
  return 0;
}

}  // namespace detsing
