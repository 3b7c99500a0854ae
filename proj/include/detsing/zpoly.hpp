/* Dense univariate polynomials over Z, used as the building block of the
 * rational-function coefficient field Q(t).
 *
 * Coefficient growth is controlled with primitive-part normalization and a
 * primitive pseudo-remainder sequence for gcd.
 */
#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace detsing {

class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(long c);
  explicit ZPoly(mpz_class c);
  // c * t^k
  ZPoly(mpz_class c, int k);

  static ZPoly variable();  // t

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  const mpz_class& coeff(int i) const;
  const mpz_class& lc() const;  // leading coefficient; poly must be nonzero
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const;

  friend ZPoly operator+(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator-(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  ZPoly operator-() const;
  friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }

  mpz_class content() const;           // gcd of coefficients, >= 0 (0 for 0)
  ZPoly primitive_part() const;        // sign normalized: lc > 0
  ZPoly mul_mpz(const mpz_class& k) const;
  ZPoly div_mpz_exact(const mpz_class& k) const;

  // Exact division; throws on inexact input.
  friend ZPoly div_exact(const ZPoly& a, const ZPoly& b);
  // gcd, sign-normalized (lc > 0); gcd(0,0) = 0.
  friend ZPoly gcd(const ZPoly& a, const ZPoly& b);

  mpq_class eval(const mpq_class& x) const;

  std::string to_string(const std::string& var) const;

 private:
  void trim();
  std::vector<mpz_class> c_;  // c_[i] is the coefficient of t^i; no trailing 0
};

}  // namespace detsing
