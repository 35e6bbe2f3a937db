#include "normcheck/window.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace normcheck {
namespace {

using Tick = std::int64_t;
constexpr Tick kNegInf = std::numeric_limits<Tick>::min();
constexpr Tick kPosInf = std::numeric_limits<Tick>::max();

struct Atom {
    Comparison rel;
    Anchor anchor;  // which endpoint of the action
    Tick bound;     // endpoint REL bound
};

using Conjunction = std::vector<Atom>;
using Dnf = std::vector<Conjunction>;

Dnf product(const Dnf& a, const Dnf& b) {
    Dnf out;
    for (const auto& x : a) {
        for (const auto& y : b) {
            Conjunction c = x;
            c.insert(c.end(), y.begin(), y.end());
            out.push_back(std::move(c));
        }
    }
    return out;
}

// An action-side image tdisp(X, o) REL v is the same as X REL v - o.
Dnf basic_dnf(Comparison rel, const TimePointImage& action, Tick resolved, bool negated) {
    const Tick bound = resolved - action.offset;
    if (!negated) return {{Atom{rel, action.base, bound}}};
    if (rel == Comparison::Eq) {
        return {{Atom{Comparison::Lt, action.base, bound}}, {Atom{Comparison::Gt, action.base, bound}}};
    }
    return {{Atom{negate(rel), action.base, bound}}};
}

Dnf to_dnf(const TemporalConstraint& tc, const Interval& k, bool negated) {
    using Kind = TemporalConstraint::Kind;
    switch (tc.kind()) {
    case Kind::Basic:
        return basic_dnf(tc.comparison(), tc.action_point(), resolve_tpi(tc.situation_point(), k).tick, negated);
    case Kind::Not: return to_dnf(tc.lhs(), k, !negated);
    case Kind::And:
    case Kind::Or: {
        const bool conjunctive = (tc.kind() == Kind::And) != negated;
        auto l = to_dnf(tc.lhs(), k, negated);
        auto r = to_dnf(tc.rhs(), k, negated);
        if (conjunctive) return product(l, r);
        l.insert(l.end(), r.begin(), r.end());
        return l;
    }
    }
    return {};
}

struct Range {
    Tick lo = kNegInf;
    Tick hi = kPosInf;

    void apply(Comparison rel, Tick v) {
        switch (rel) {
        case Comparison::Eq: lo = std::max(lo, v); hi = std::min(hi, v); break;
        case Comparison::Ge: lo = std::max(lo, v); break;
        case Comparison::Gt: lo = std::max(lo, v + 1); break;
        case Comparison::Le: hi = std::min(hi, v); break;
        case Comparison::Lt: hi = std::min(hi, v - 1); break;
        }
    }
};

// Latest begin+1 admitted by a conjunction, or nullopt when it is infeasible.
// kPosInf means no upper bound.
std::optional<Tick> latest_start(const Conjunction& c) {
    Range b, e;
    for (const auto& a : c) (a.anchor == Anchor::Begin ? b : e).apply(a.rel, a.bound);
    // Feasible iff some b in range has an e in range with b < e; the
    // smallest b is the best witness.
    if (b.lo > b.hi || e.lo > e.hi) return std::nullopt;
    if (b.lo != kNegInf && e.hi != kPosInf && b.lo + 1 > e.hi) return std::nullopt;
    const Tick from_begin = b.hi == kPosInf ? kPosInf : b.hi + 1;
    return std::min(from_begin, e.hi);
}

} // namespace

std::string to_string(const WindowBound& w) { return w.bounded() ? to_string(w.upper()) : "unbounded"; }

WindowBound window_upper_bound(const TemporalConstraint& tc, const Interval& situation) {
    std::optional<Tick> best;
    for (const auto& conj : to_dnf(tc, situation, false)) {
        auto u = latest_start(conj);
        if (!u) continue;
        if (*u == kPosInf) return WindowBound::unbounded();
        best = best ? std::max(*best, *u) : *u;
    }
    if (!best) return WindowBound::finite(situation.begin());
    return WindowBound::finite(Instant{*best});
}

} // namespace normcheck
