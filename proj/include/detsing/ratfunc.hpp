/* Elements of Q(t): reduced fractions of integer polynomials in one
 * parameter.  Canonical form: denominator nonzero with positive leading
 * coefficient, numerator/denominator with coprime primitive parts and
 * coprime integer contents.  Field operations are exact.
 */
#pragma once

#include <gmpxx.h>

#include <string>

#include "detsing/zpoly.hpp"

namespace detsing {

class RatFunc {
 public:
  RatFunc() = default;  // zero
  RatFunc(long c) : num_(c), den_(1) { if (c == 0) den_ = ZPoly(1); }
  explicit RatFunc(const mpq_class& q);
  explicit RatFunc(ZPoly num) : num_(std::move(num)), den_(1) {}
  RatFunc(ZPoly num, ZPoly den);

  static RatFunc parameter() { return RatFunc(ZPoly::variable()); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }
  const ZPoly& num() const { return num_; }
  const ZPoly& den() const { return den_; }
  bool den_is_one() const { return den_.is_one(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc inv() const;

  std::string to_string(const std::string& var) const;

 private:
  void reduce();
  ZPoly num_;           // zero has num_ = 0, den_ = 1
  ZPoly den_ = ZPoly(1);
};

}  // namespace detsing
