#pragma once

#include <optional>
#include <string>

#include "normcheck/constraint.hpp"
#include "normcheck/time.hpp"

namespace normcheck {

/// Latest instant by which any action satisfying a TC has started and
/// occupied its first tick, i.e. an upper bound on begin(j) + 1. Once the
/// horizon is past it, the absence of a satisfying action is final.
class WindowBound {
public:
    static WindowBound finite(Instant upper) { return WindowBound(upper); }
    static WindowBound unbounded() { return WindowBound(std::nullopt); }

    bool bounded() const { return upper_.has_value(); }
    /// Only meaningful when bounded().
    Instant upper() const { return *upper_; }

    /// True when the horizon lies strictly past a finite bound.
    bool closed_at(Instant horizon) const { return upper_ && horizon > *upper_; }

    friend bool operator==(const WindowBound&, const WindowBound&) = default;

private:
    explicit WindowBound(std::optional<Instant> u) : upper_(u) {}
    std::optional<Instant> upper_;
};

std::string to_string(const WindowBound& w);

/// The window of `tc` against the situation interval. Works on the
/// disjunctive normal form: each disjunct bounds begin(j) and end(j) by
/// constants, infeasible disjuncts are dropped, and the bound is the largest
/// min(begin_hi + 1, end_hi) over what remains. A TC no interval can satisfy
/// gets the situation's begin.
WindowBound window_upper_bound(const TemporalConstraint& tc, const Interval& situation);

} // namespace normcheck
