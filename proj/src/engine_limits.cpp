#include "detsing/engine_limits.hpp"

#include "detsing/error.hpp"

namespace detsing {

namespace {
thread_local bool t_armed = false;
thread_local std::chrono::steady_clock::time_point t_deadline;
thread_local uint32_t t_counter = 0;
}  // namespace

DeadlineGuard::DeadlineGuard(double seconds) {
  if (seconds > 0) {
    t_armed = true;
    t_deadline = std::chrono::steady_clock::now() +
                 std::chrono::microseconds(static_cast<int64_t>(seconds * 1e6));
  } else {
    t_armed = false;
  }
  t_counter = 0;
}

DeadlineGuard::~DeadlineGuard() { t_armed = false; }

namespace engine {

void tick() {
  if (!t_armed) return;
  // Check the clock only every 256 calls; tick() sits in hot loops.
  if ((++t_counter & 0xff) != 0) return;
  if (std::chrono::steady_clock::now() > t_deadline)
    throw DsError(ErrorCode::Timeout, "computation exceeded the task deadline");
}

}  // namespace engine
}  // namespace detsing
