/* Cooperative cancellation for long-running basis computations.
 *
 * The CLI arms a per-task deadline; basis loops call tick() periodically and
 * bail out with ErrorCode::Timeout once the deadline passes.  Scope-based so
 * nothing leaks across tasks; thread_local so concurrent analyses do not
 * interfere.
 */
#pragma once

#include <chrono>
#include <cstdint>

namespace detsing {

class DeadlineGuard {
 public:
  // seconds <= 0 means "no deadline".
  explicit DeadlineGuard(double seconds);
  ~DeadlineGuard();
  DeadlineGuard(const DeadlineGuard&) = delete;
  DeadlineGuard& operator=(const DeadlineGuard&) = delete;
};

namespace engine {
// Called from inner loops; throws DsError(Timeout) when expired.
void tick();
}  // namespace engine

}  // namespace detsing
