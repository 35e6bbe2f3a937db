#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "normcheck/constraint.hpp"
#include "normcheck/time.hpp"

namespace normcheck {

/// Allen's thirteen interval relations: seven base relations and the inverses
/// of the six asymmetric ones.
enum class AllenRelation {
    Before,
    Meets,
    Overlaps,
    Starts,
    During,
    Finishes,
    Equals,
    After,
    MetBy,
    OverlappedBy,
    StartedBy,
    Contains,
    FinishedBy,
};

inline constexpr AllenRelation kAllAllenRelations[] = {
    AllenRelation::Before,   AllenRelation::Meets,       AllenRelation::Overlaps,     AllenRelation::Starts,
    AllenRelation::During,   AllenRelation::Finishes,    AllenRelation::Equals,       AllenRelation::After,
    AllenRelation::MetBy,    AllenRelation::OverlappedBy, AllenRelation::StartedBy,   AllenRelation::Contains,
    AllenRelation::FinishedBy,
};

/// Lowercase DSL spelling, e.g. "met-by".
std::string_view to_string(AllenRelation rel);
std::optional<AllenRelation> allen_from_name(std::string_view name);

AllenRelation inverse(AllenRelation rel);

/// The unique relation that holds between j and k.
AllenRelation allen_relation(const Interval& j, const Interval& k);

/// TC equivalent of a relation, with j as the action interval and k as the
/// situation interval. Only Before, Meets, Overlaps, Starts, Finishes,
/// Contains and Equals have an entry; anything else throws
/// UnsupportedRelation.
TemporalConstraint allen_to_tc(AllenRelation rel);

enum class IntervalPredicate { Within, Subinterval, Cover };

std::string_view to_string(IntervalPredicate pred);
std::optional<IntervalPredicate> interval_predicate_from_name(std::string_view name);

/// Within/Subinterval take (j, k); Cover takes (j, k, m). Throws ArityError
/// on any other argument count.
bool interval_pred(IntervalPredicate pred, std::span<const Interval> args);

} // namespace normcheck
