#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace normcheck {

/// A point on the discrete time line. The unit of a tick is chosen by whoever
/// writes the facts (minutes, days, years).
struct Instant {
    std::int64_t tick = 0;

    constexpr Instant() = default;
    constexpr explicit Instant(std::int64_t t) : tick(t) {}

    constexpr Instant operator+(std::int64_t d) const { return Instant{tick + d}; }
    constexpr Instant operator-(std::int64_t d) const { return Instant{tick - d}; }

    friend constexpr auto operator<=>(Instant, Instant) = default;
};

inline std::ostream& operator<<(std::ostream& os, Instant t) { return os << t.tick; }
inline std::string to_string(Instant t) { return std::to_string(t.tick); }

/// A proper interval: begin < end. Instantaneous happenings are 1-tick intervals.
class Interval {
public:
    /// Throws ImproperInterval unless begin < end.
    Interval(Instant begin, Instant end);
    Interval(std::int64_t begin, std::int64_t end) : Interval(Instant{begin}, Instant{end}) {}

    constexpr Instant begin() const { return begin_; }
    constexpr Instant end() const { return end_; }
    constexpr std::int64_t length() const { return end_.tick - begin_.tick; }

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    Instant begin_;
    Instant end_;
};

std::ostream& operator<<(std::ostream& os, const Interval& iv);
std::string to_string(const Interval& iv);

} // namespace normcheck
