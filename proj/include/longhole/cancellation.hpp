#pragma once

#include <atomic>
#include <chrono>
#include <optional>

namespace longhole {

// Cooperative cancellation. Long-running loops call checkpoint(), which throws Cancelled
// when the deadline installed on the current thread has passed or its stop flag is set.
// Every detector is a pure function of its arguments, so unwinding leaves nothing half-updated.
class ScopedDeadline {
  public:
    using clock = std::chrono::steady_clock;

    explicit ScopedDeadline(std::optional<clock::time_point> deadline,
                            const std::atomic<bool> * stop = nullptr);
    static auto after(std::chrono::milliseconds budget) -> ScopedDeadline;
    ~ScopedDeadline();

    ScopedDeadline(const ScopedDeadline &) = delete;
    auto operator=(const ScopedDeadline &) -> ScopedDeadline & = delete;

  private:
    std::optional<clock::time_point> previous_deadline_;
    const std::atomic<bool> * previous_stop_;
};

// Throws Cancelled if the current thread's deadline is exceeded. Cheap: the clock is read
// once every few hundred calls.
void checkpoint();

} // namespace longhole
