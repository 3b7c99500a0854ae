/* Ring context: ordered variable names, plus the name of the coefficient
 * parameter when the field is Q(t).  Immutable and shared.
 */
#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "detsing/error.hpp"
#include "detsing/monomial.hpp"

namespace detsing {

struct Ring {
  std::vector<std::string> vars;
  std::string param;  // empty when the field is plain Q

  int nvars() const { return static_cast<int>(vars.size()); }

  std::optional<int> index_of(const std::string& name) const {
    for (size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return static_cast<int>(i);
    return std::nullopt;
  }

  std::array<std::string, kMaxVars> name_array() const {
    std::array<std::string, kMaxVars> a;
    for (size_t i = 0; i < vars.size(); ++i) a[i] = vars[i];
    return a;
  }

  bool same_vars(const Ring& o) const { return vars == o.vars; }
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> vars, std::string param = "") {
  DS_CHECK(static_cast<int>(vars.size()) <= kMaxVars,
           "ring exceeds the supported number of variables");
  auto r = std::make_shared<Ring>();
  r->vars = std::move(vars);
  r->param = std::move(param);
  return r;
}

// New ring with extra variables appended (engine auxiliaries).
inline RingPtr extend_ring(const RingPtr& r, const std::vector<std::string>& extra) {
  std::vector<std::string> vars = r->vars;
  for (const auto& v : extra) vars.push_back(v);
  return make_ring(std::move(vars), r->param);
}

}  // namespace detsing
