/* Exponent vectors and monomial orderings.
 *
 * Monomials are fixed-capacity exponent arrays (at most kMaxVars variables:
 * ambient coordinates plus the deformation parameter and the auxiliary
 * variables the engine introduces).  Three ordering families are supported:
 *
 *   GlobalDegRevLex   degree, then reverse lexicographic; 1 is smallest
 *   LocalNegDegRevLex negative degree, same tie break; 1 is largest
 *   BlockElim         degrevlex on a chosen variable block, then degrevlex
 *                     on the rest; eliminates the block
 */
#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace detsing {

inline constexpr int kMaxVars = 10;

struct Monomial {
  std::array<uint16_t, kMaxVars> e{};
  uint32_t deg = 0;
  uint8_t n = 0;  // number of variables in the ring context

  static Monomial one(int nvars);
  static Monomial var(int nvars, int i, int exp = 1);

  bool is_one() const { return deg == 0; }
  bool operator==(const Monomial& o) const { return n == o.n && deg == o.deg && e == o.e; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  bool divides(const Monomial& o) const;
  // quotient o / this; requires divisibility
  Monomial div_into(const Monomial& o) const;
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& o) const;
  // degree restricted to a variable bitmask
  uint32_t deg_masked(uint16_t mask) const;

  std::string to_string(const std::array<std::string, kMaxVars>& names) const;
};

enum class OrderKind : uint8_t { GlobalDegRevLex, LocalNegDegRevLex, BlockElim };

struct MonomialOrder {
  OrderKind kind = OrderKind::GlobalDegRevLex;
  uint16_t elim_mask = 0;  // BlockElim only: variables in the leading block

  static MonomialOrder global() { return {OrderKind::GlobalDegRevLex, 0}; }
  static MonomialOrder local() { return {OrderKind::LocalNegDegRevLex, 0}; }
  static MonomialOrder elim(uint16_t mask) { return {OrderKind::BlockElim, mask}; }

  bool is_global() const { return kind != OrderKind::LocalNegDegRevLex; }

  // >0 iff a is larger, 0 iff equal, <0 iff smaller.
  int cmp(const Monomial& a, const Monomial& b) const;

  bool operator<(const MonomialOrder& o) const {
    return kind != o.kind ? kind < o.kind : elim_mask < o.elim_mask;
  }
  bool operator==(const MonomialOrder& o) const {
    return kind == o.kind && elim_mask == o.elim_mask;
  }
};

}  // namespace detsing
