#include "detsing/ratfunc.hpp"

#include "detsing/error.hpp"

namespace detsing {

RatFunc::RatFunc(const mpq_class& q)
    : num_(mpz_class(q.get_num())), den_(mpz_class(q.get_den())) {
  reduce();  // the caller's mpq need not be canonical
}

RatFunc::RatFunc(ZPoly num, ZPoly den) : num_(std::move(num)), den_(std::move(den)) {
  DS_CHECK(!den_.is_zero(), "rational function with zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = ZPoly(1);
    return;
  }
  ZPoly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = div_exact(num_, g);
    den_ = div_exact(den_, g);
  }
  if (den_.lc() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_is_one() && b.den_is_one()) {
    RatFunc r;
    r.num_ = a.num_ + b.num_;
    if (r.num_.is_zero()) r.den_ = ZPoly(1);
    return r;
  }
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  if (a.den_is_one() && b.den_is_one()) {
    RatFunc r;
    r.num_ = a.num_ * b.num_;
    return r;
  }
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  DS_CHECK(!b.is_zero(), "division by zero rational function");
  if (a.is_zero()) return RatFunc();
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::operator-() const {
  RatFunc r(*this);
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::inv() const {
  DS_CHECK(!is_zero(), "inverse of zero rational function");
  return RatFunc(den_, num_);
}

std::string RatFunc::to_string(const std::string& var) const {
  if (den_.is_one()) {
    if (num_.is_constant()) return num_.is_zero() ? "0" : num_.coeff(0).get_str();
    return "(" + num_.to_string(var) + ")";
  }
  std::string n = num_.is_constant() ? num_.coeff(0).get_str()
                                     : "(" + num_.to_string(var) + ")";
  std::string d = den_.is_constant() ? den_.coeff(0).get_str()
                                     : "(" + den_.to_string(var) + ")";
  return n + "/" + d;
}

}  // namespace detsing
