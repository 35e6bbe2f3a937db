#pragma once

#include <cstdint>
#include <memory>

#include "normcheck/time.hpp"

namespace normcheck {

enum class Anchor { Begin, End };

/// A point relative to an interval: its begin or end, displaced by a whole
/// number of ticks. Displacements compose additively, so a nested tdisp is
/// always stored in flattened form.
struct TimePointImage {
    Anchor base = Anchor::Begin;
    std::int64_t offset = 0;

    constexpr TimePointImage displaced(std::int64_t by) const { return {base, offset + by}; }

    friend constexpr bool operator==(const TimePointImage&, const TimePointImage&) = default;
};

/// Resolves a time point image against a concrete interval.
Instant resolve_tpi(const TimePointImage& tpi, const Interval& iv);

enum class Comparison { Eq, Ge, Gt, Le, Lt };

bool compare(Comparison rel, Instant lhs, Instant rhs);
Comparison negate(Comparison rel);

/// A reified temporal constraint between an action interval and a situation
/// interval. The left image of every basic comparison is read against the
/// action, the right one against the situation.
///
/// Values are immutable and share structure, so copies are cheap.
class TemporalConstraint {
public:
    enum class Kind { Basic, And, Or, Not };

    static TemporalConstraint basic(Comparison rel, TimePointImage action, TimePointImage situation);
    static TemporalConstraint conj(TemporalConstraint lhs, TemporalConstraint rhs);
    static TemporalConstraint disj(TemporalConstraint lhs, TemporalConstraint rhs);
    static TemporalConstraint negation(TemporalConstraint operand);

    Kind kind() const;

    // Basic only.
    Comparison comparison() const;
    const TimePointImage& action_point() const;
    const TimePointImage& situation_point() const;

    // And/Or: lhs and rhs. Not: lhs is the operand.
    const TemporalConstraint& lhs() const;
    const TemporalConstraint& rhs() const;

    std::size_t size() const;

    friend bool operator==(const TemporalConstraint& a, const TemporalConstraint& b);

private:
    struct Node;
    explicit TemporalConstraint(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

/// Satisfy-Cons: does the ordered pair (action, situation) satisfy tc?
bool eval_constraint(const Interval& action, const Interval& situation, const TemporalConstraint& tc);

/// Terse constructors, mostly for tests and built-in tables.
namespace tc {

inline constexpr TimePointImage B{Anchor::Begin, 0};
inline constexpr TimePointImage E{Anchor::End, 0};

constexpr TimePointImage tdisp(TimePointImage p, std::int64_t by) { return p.displaced(by); }

inline TemporalConstraint eq(TimePointImage a, TimePointImage s) { return TemporalConstraint::basic(Comparison::Eq, a, s); }
inline TemporalConstraint ge(TimePointImage a, TimePointImage s) { return TemporalConstraint::basic(Comparison::Ge, a, s); }
inline TemporalConstraint gt(TimePointImage a, TimePointImage s) { return TemporalConstraint::basic(Comparison::Gt, a, s); }
inline TemporalConstraint le(TimePointImage a, TimePointImage s) { return TemporalConstraint::basic(Comparison::Le, a, s); }
inline TemporalConstraint lt(TimePointImage a, TimePointImage s) { return TemporalConstraint::basic(Comparison::Lt, a, s); }

inline TemporalConstraint all(TemporalConstraint a, TemporalConstraint b) { return TemporalConstraint::conj(std::move(a), std::move(b)); }
inline TemporalConstraint any(TemporalConstraint a, TemporalConstraint b) { return TemporalConstraint::disj(std::move(a), std::move(b)); }
inline TemporalConstraint no(TemporalConstraint a) { return TemporalConstraint::negation(std::move(a)); }

} // namespace tc

} // namespace normcheck
