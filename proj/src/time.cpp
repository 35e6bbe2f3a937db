#include "normcheck/time.hpp"

#include "normcheck/errors.hpp"

namespace normcheck {

Interval::Interval(Instant begin, Instant end) : begin_(begin), end_(end) {
    if (!(begin < end)) {
        throw ImproperInterval("improper interval [" + to_string(begin) + "," + to_string(end) +
                               "]: begin must be strictly before end");
    }
}

std::ostream& operator<<(std::ostream& os, const Interval& iv) {
    return os << '[' << iv.begin() << ',' << iv.end() << ']';
}

std::string to_string(const Interval& iv) {
    return "[" + to_string(iv.begin()) + "," + to_string(iv.end()) + "]";
}

} // namespace normcheck
