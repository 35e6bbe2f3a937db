#include "normcheck/allen.hpp"

#include <array>
#include <utility>

#include "normcheck/errors.hpp"

namespace normcheck {
namespace {

constexpr std::array<std::pair<AllenRelation, std::string_view>, 13> kNames{{
    {AllenRelation::Before, "before"},
    {AllenRelation::Meets, "meets"},
    {AllenRelation::Overlaps, "overlaps"},
    {AllenRelation::Starts, "starts"},
    {AllenRelation::During, "during"},
    {AllenRelation::Finishes, "finishes"},
    {AllenRelation::Equals, "equals"},
    {AllenRelation::After, "after"},
    {AllenRelation::MetBy, "met-by"},
    {AllenRelation::OverlappedBy, "overlapped-by"},
    {AllenRelation::StartedBy, "started-by"},
    {AllenRelation::Contains, "contains"},
    {AllenRelation::FinishedBy, "finished-by"},
}};

} // namespace

std::string_view to_string(AllenRelation rel) {
    for (const auto& [r, name] : kNames) {
        if (r == rel) return name;
    }
    return "?";
}

std::optional<AllenRelation> allen_from_name(std::string_view name) {
    for (const auto& [r, n] : kNames) {
        if (n == name) return r;
    }
    return std::nullopt;
}

AllenRelation inverse(AllenRelation rel) {
    switch (rel) {
    case AllenRelation::Before: return AllenRelation::After;
    case AllenRelation::Meets: return AllenRelation::MetBy;
    case AllenRelation::Overlaps: return AllenRelation::OverlappedBy;
    case AllenRelation::Starts: return AllenRelation::StartedBy;
    case AllenRelation::During: return AllenRelation::Contains;
    case AllenRelation::Finishes: return AllenRelation::FinishedBy;
    case AllenRelation::Equals: return AllenRelation::Equals;
    case AllenRelation::After: return AllenRelation::Before;
    case AllenRelation::MetBy: return AllenRelation::Meets;
    case AllenRelation::OverlappedBy: return AllenRelation::Overlaps;
    case AllenRelation::StartedBy: return AllenRelation::Starts;
    case AllenRelation::Contains: return AllenRelation::During;
    case AllenRelation::FinishedBy: return AllenRelation::Finishes;
    }
    return rel;
}

AllenRelation allen_relation(const Interval& j, const Interval& k) {
    const auto jb = j.begin(), je = j.end(), kb = k.begin(), ke = k.end();
    if (je < kb) return AllenRelation::Before;
    if (je == kb) return AllenRelation::Meets;
    if (ke < jb) return AllenRelation::After;
    if (ke == jb) return AllenRelation::MetBy;
    // The intervals now share at least one tick.
    if (jb == kb) {
        if (je == ke) return AllenRelation::Equals;
        return je < ke ? AllenRelation::Starts : AllenRelation::StartedBy;
    }
    if (je == ke) return jb > kb ? AllenRelation::Finishes : AllenRelation::FinishedBy;
    if (jb < kb) return je < ke ? AllenRelation::Overlaps : AllenRelation::Contains;
    return je < ke ? AllenRelation::During : AllenRelation::OverlappedBy;
}

TemporalConstraint allen_to_tc(AllenRelation rel) {
    using namespace tc;
    switch (rel) {
    case AllenRelation::Before: return lt(E, B);
    case AllenRelation::Meets: return eq(E, B);
    // lt(B,B) and lt(E,E) alone also admit Before and Meets; overlapping
    // additionally needs the action to end after the situation begins.
    case AllenRelation::Overlaps: return all(all(lt(B, B), lt(E, E)), gt(E, B));
    case AllenRelation::Contains: return all(lt(B, B), gt(E, E));
    case AllenRelation::Starts: return all(eq(B, B), lt(E, E));
    case AllenRelation::Finishes: return all(gt(B, B), eq(E, E));
    case AllenRelation::Equals: return all(eq(B, B), eq(E, E));
    default: break;
    }
    throw UnsupportedRelation("no temporal-constraint equivalent for Allen relation '" +
                              std::string(to_string(rel)) + "'");
}

std::string_view to_string(IntervalPredicate pred) {
    switch (pred) {
    case IntervalPredicate::Within: return "within";
    case IntervalPredicate::Subinterval: return "subinterval";
    case IntervalPredicate::Cover: return "cover";
    }
    return "?";
}

std::optional<IntervalPredicate> interval_predicate_from_name(std::string_view name) {
    if (name == "within") return IntervalPredicate::Within;
    if (name == "subinterval") return IntervalPredicate::Subinterval;
    if (name == "cover") return IntervalPredicate::Cover;
    return std::nullopt;
}

bool interval_pred(IntervalPredicate pred, std::span<const Interval> args) {
    const std::size_t want = pred == IntervalPredicate::Cover ? 3 : 2;
    if (args.size() != want) {
        throw ArityError(std::string(to_string(pred)) + " takes " + std::to_string(want) + " intervals, got " +
                         std::to_string(args.size()));
    }
    const auto rel = allen_relation(args[0], args[1]);
    const bool within =
        rel == AllenRelation::Starts || rel == AllenRelation::During || rel == AllenRelation::Finishes;
    switch (pred) {
    case IntervalPredicate::Within: return within;
    case IntervalPredicate::Subinterval: return within || rel == AllenRelation::Equals;
    case IntervalPredicate::Cover:
        return allen_relation(args[0], args[2]) == AllenRelation::Starts &&
               allen_relation(args[1], args[2]) == AllenRelation::Finishes && rel == AllenRelation::Meets;
    }
    return false;
}

} // namespace normcheck
