/* Field operations the generic polynomial layer needs, specialized for the
 * two coefficient fields: Q (GMP rationals) and Q(t) (RatFunc).
 */
#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "detsing/error.hpp"
#include "detsing/monomial.hpp"
#include "detsing/rat.hpp"
#include "detsing/ratfunc.hpp"

namespace detsing {

template <class C>
struct Term {
  Monomial m;
  C c;
};

template <class C>
struct FieldOps;

template <>
struct FieldOps<Rat> {
  static constexpr const char* name() { return "QQ"; }
  static bool is_zero(const Rat& c) { return c == 0; }
  static bool is_one(const Rat& c) { return c == 1; }
  static bool is_negative(const Rat& c) { return c < 0; }
  static Rat from_rat(const Rat& q) { return q; }

  static std::string to_string(const Rat& c, const std::string& /*param*/) {
    return c.get_str();
  }

  // Scale the term vector so all coefficients are coprime integers and the
  // first (leading) one is positive.  Pure rescaling: term order preserved.
  static void make_primitive(std::vector<Term<Rat>>& ts) {
    if (ts.empty()) return;
    mpz_class den_lcm = 1;
    for (const auto& t : ts)
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den_mpz_t());
    mpz_class num_gcd = 0;
    for (const auto& t : ts) {
      mpz_class n = t.c.get_num() * (den_lcm / t.c.get_den());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    if (ts[0].c < 0) num_gcd = -num_gcd;
    Rat scale(den_lcm, num_gcd);
    scale.canonicalize();
    for (auto& t : ts) t.c *= scale;
  }

  static void make_monic(std::vector<Term<Rat>>& ts) {
    if (ts.empty()) return;
    Rat lc = ts[0].c;
    for (auto& t : ts) t.c /= lc;
  }
};

template <>
struct FieldOps<RatFunc> {
  static constexpr const char* name() { return "QQ(t)"; }
  static bool is_zero(const RatFunc& c) { return c.is_zero(); }
  static bool is_one(const RatFunc& c) { return c.is_one(); }
  static bool is_negative(const RatFunc& c) {
    return !c.is_zero() && c.num().lc() < 0;
  }
  static RatFunc from_rat(const Rat& q) { return RatFunc(q); }

  static std::string to_string(const RatFunc& c, const std::string& param) {
    return c.to_string(param);
  }

  static void make_primitive(std::vector<Term<RatFunc>>& ts) {
    if (ts.empty()) return;
    ZPoly den_lcm(1);
    for (const auto& t : ts) {
      if (t.c.den_is_one()) continue;
      ZPoly g = gcd(den_lcm, t.c.den());
      den_lcm = den_lcm * div_exact(t.c.den(), g);
    }
    std::vector<ZPoly> nums;
    nums.reserve(ts.size());
    for (const auto& t : ts)
      nums.push_back(t.c.num() * div_exact(den_lcm, t.c.den()));
    ZPoly g;
    for (const auto& n : nums) {
      g = gcd(g, n);
      if (g.is_one()) break;
    }
    if (nums[0].lc() < 0) g = -g;
    for (size_t i = 0; i < ts.size(); ++i)
      ts[i].c = RatFunc(div_exact(nums[i], g));
  }

  static void make_monic(std::vector<Term<RatFunc>>& ts) {
    if (ts.empty()) return;
    RatFunc inv = ts[0].c.inv();
    for (auto& t : ts) t.c *= inv;
  }
};

}  // namespace detsing
