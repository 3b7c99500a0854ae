/* Small helpers around GMP rationals. */
#pragma once

#include <gmpxx.h>

#include <string>

namespace detsing {

using Rat = mpq_class;

inline Rat make_rat(long num, long den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat rat_from_strings(const std::string& num, const std::string& den) {
  Rat q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return q;
}

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

}  // namespace detsing
