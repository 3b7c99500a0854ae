#include "detsing/zpoly.hpp"

#include "detsing/error.hpp"

namespace detsing {

namespace {
const mpz_class kZero = 0;
}

ZPoly::ZPoly(long c) {
  if (c != 0) c_.push_back(mpz_class(c));
}

ZPoly::ZPoly(mpz_class c) {
  if (c != 0) c_.push_back(std::move(c));
}

ZPoly::ZPoly(mpz_class c, int k) {
  if (c != 0) {
    c_.assign(static_cast<size_t>(k) + 1, kZero);
    c_[static_cast<size_t>(k)] = std::move(c);
  }
}

ZPoly ZPoly::variable() { return ZPoly(mpz_class(1), 1); }

const mpz_class& ZPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<size_t>(i)];
}

const mpz_class& ZPoly::lc() const {
  DS_CHECK(!c_.empty(), "lc of zero polynomial");
  return c_.back();
}

bool ZPoly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

void ZPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
  ZPoly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), kZero);
  for (size_t i = 0; i < r.c_.size(); ++i) {
    if (i < a.c_.size()) r.c_[i] += a.c_[i];
    if (i < b.c_.size()) r.c_[i] += b.c_[i];
  }
  r.trim();
  return r;
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) {
  ZPoly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), kZero);
  for (size_t i = 0; i < r.c_.size(); ++i) {
    if (i < a.c_.size()) r.c_[i] += a.c_[i];
    if (i < b.c_.size()) r.c_[i] -= b.c_[i];
  }
  r.trim();
  return r;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return ZPoly();
  ZPoly r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, kZero);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  r.trim();
  return r;
}

ZPoly ZPoly::operator-() const {
  ZPoly r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

mpz_class ZPoly::content() const {
  mpz_class g = 0;
  for (const auto& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly ZPoly::primitive_part() const {
  if (is_zero()) return ZPoly();
  mpz_class g = content();
  if (lc() < 0) g = -g;
  return div_mpz_exact(g);
}

ZPoly ZPoly::mul_mpz(const mpz_class& k) const {
  if (k == 0) return ZPoly();
  ZPoly r(*this);
  for (auto& c : r.c_) c *= k;
  return r;
}

ZPoly ZPoly::div_mpz_exact(const mpz_class& k) const {
  DS_CHECK(k != 0, "division by zero integer");
  ZPoly r(*this);
  for (auto& c : r.c_) {
    mpz_class q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(), k.get_mpz_t());
    DS_CHECK(rem == 0, "inexact integer division of coefficients");
    c = q;
  }
  return r;
}

ZPoly div_exact(const ZPoly& a, const ZPoly& b) {
  DS_CHECK(!b.is_zero(), "division by zero polynomial");
  if (a.is_zero()) return ZPoly();
  ZPoly rem = a;
  ZPoly quot;
  quot.c_.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, mpz_class(0));
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.lc().get_mpz_t(),
                b.lc().get_mpz_t());
    DS_CHECK(r == 0, "inexact polynomial division (leading coefficient)");
    int shift = rem.degree() - b.degree();
    quot.c_[static_cast<size_t>(shift)] = q;
    rem = rem - b.mul_mpz(q) * ZPoly(mpz_class(1), shift);
  }
  DS_CHECK(rem.is_zero(), "inexact polynomial division (remainder)");
  quot.trim();
  return quot;
}

// Primitive PRS gcd.
ZPoly gcd(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero()) return b.is_zero() ? ZPoly() : b.primitive_part().mul_mpz(abs(b.content()));
  if (b.is_zero()) return a.primitive_part().mul_mpz(abs(a.content()));
  mpz_class cont;
  mpz_gcd(cont.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
  ZPoly f = a.primitive_part();
  ZPoly g = b.primitive_part();
  if (f.degree() < g.degree()) std::swap(f, g);
  while (!g.is_zero()) {
    // pseudo-remainder of f by g
    ZPoly r = f;
    while (!r.is_zero() && r.degree() >= g.degree()) {
      int shift = r.degree() - g.degree();
      r = r.mul_mpz(g.lc()) - g.mul_mpz(r.lc()) * ZPoly(mpz_class(1), shift);
    }
    f = g;
    g = r.is_zero() ? ZPoly() : r.primitive_part();
  }
  return f.primitive_part().mul_mpz(cont);
}

mpq_class ZPoly::eval(const mpq_class& x) const {
  mpq_class r = 0;
  for (size_t i = c_.size(); i-- > 0;) r = r * x + mpq_class(c_[i]);
  return r;
}

std::string ZPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t i = c_.size(); i-- > 0;) {
    const mpz_class& c = c_[i];
    if (c == 0) continue;
    mpz_class a = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    bool coeff_shown = (a != 1 || i == 0);
    if (coeff_shown) out += a.get_str();
    if (i > 0) {
      if (coeff_shown) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace detsing
