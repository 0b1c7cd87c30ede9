#include "longhole/cancellation.hpp"

#include "longhole/errors.hpp"

namespace longhole {

namespace {
    thread_local std::optional<ScopedDeadline::clock::time_point> active_deadline;
    thread_local const std::atomic<bool> * active_stop = nullptr;
    thread_local unsigned ticks = 0;
} // namespace

ScopedDeadline::ScopedDeadline(std::optional<clock::time_point> deadline, const std::atomic<bool> * stop)
    : previous_deadline_(active_deadline), previous_stop_(active_stop)
{
    if (deadline && (!active_deadline || *deadline < *active_deadline))
        active_deadline = deadline;
    if (stop)
        active_stop = stop;
}

auto ScopedDeadline::after(std::chrono::milliseconds budget) -> ScopedDeadline
{
    return ScopedDeadline(clock::now() + budget);
}

ScopedDeadline::~ScopedDeadline()
{
    active_deadline = previous_deadline_;
    active_stop = previous_stop_;
}

void checkpoint()
{
    if ((++ticks & 255u) != 0)
        return;
    if (active_stop && active_stop->load(std::memory_order_relaxed))
        throw Cancelled();
    if (active_deadline && ScopedDeadline::clock::now() >= *active_deadline)
        throw Cancelled();
}

} // namespace longhole
