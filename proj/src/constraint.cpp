#include "normcheck/constraint.hpp"

#include <cassert>
#include <vector>

namespace normcheck {

struct TemporalConstraint::Node {
    Kind kind;
    Comparison rel = Comparison::Eq;
    TimePointImage action{};
    TimePointImage situation{};
    std::vector<TemporalConstraint> children;
};

Instant resolve_tpi(const TimePointImage& tpi, const Interval& iv) {
    const Instant anchor = tpi.base == Anchor::Begin ? iv.begin() : iv.end();
    return anchor + tpi.offset;
}

bool compare(Comparison rel, Instant lhs, Instant rhs) {
    switch (rel) {
    case Comparison::Eq: return lhs == rhs;
    case Comparison::Ge: return lhs >= rhs;
    case Comparison::Gt: return lhs > rhs;
    case Comparison::Le: return lhs <= rhs;
    case Comparison::Lt: return lhs < rhs;
    }
    return false;
}

// Complement of a comparison; Eq has none as a single comparison.
Comparison negate(Comparison rel) {
    switch (rel) {
    case Comparison::Ge: return Comparison::Lt;
    case Comparison::Gt: return Comparison::Le;
    case Comparison::Le: return Comparison::Gt;
    case Comparison::Lt: return Comparison::Ge;
    case Comparison::Eq: break;
    }
    assert(false && "eq has no single-comparison complement");
    return Comparison::Eq;
}

TemporalConstraint TemporalConstraint::basic(Comparison rel, TimePointImage action, TimePointImage situation) {
    return TemporalConstraint(std::make_shared<const Node>(Node{Kind::Basic, rel, action, situation, {}}));
}

TemporalConstraint TemporalConstraint::conj(TemporalConstraint lhs, TemporalConstraint rhs) {
    return TemporalConstraint(
        std::make_shared<const Node>(Node{Kind::And, Comparison::Eq, {}, {}, {std::move(lhs), std::move(rhs)}}));
}

TemporalConstraint TemporalConstraint::disj(TemporalConstraint lhs, TemporalConstraint rhs) {
    return TemporalConstraint(
        std::make_shared<const Node>(Node{Kind::Or, Comparison::Eq, {}, {}, {std::move(lhs), std::move(rhs)}}));
}

TemporalConstraint TemporalConstraint::negation(TemporalConstraint operand) {
    return TemporalConstraint(
        std::make_shared<const Node>(Node{Kind::Not, Comparison::Eq, {}, {}, {std::move(operand)}}));
}

TemporalConstraint::Kind TemporalConstraint::kind() const { return node_->kind; }
Comparison TemporalConstraint::comparison() const { return node_->rel; }
const TimePointImage& TemporalConstraint::action_point() const { return node_->action; }
const TimePointImage& TemporalConstraint::situation_point() const { return node_->situation; }

const TemporalConstraint& TemporalConstraint::lhs() const { return node_->children.front(); }
const TemporalConstraint& TemporalConstraint::rhs() const { return node_->children.back(); }

std::size_t TemporalConstraint::size() const {
    switch (kind()) {
    case Kind::Basic: return 1;
    case Kind::Not: return 1 + lhs().size();
    case Kind::And:
    case Kind::Or: return 1 + lhs().size() + rhs().size();
    }
    return 0;
}

bool operator==(const TemporalConstraint& a, const TemporalConstraint& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
    case TemporalConstraint::Kind::Basic:
        return a.comparison() == b.comparison() && a.action_point() == b.action_point() &&
               a.situation_point() == b.situation_point();
    case TemporalConstraint::Kind::Not: return a.lhs() == b.lhs();
    case TemporalConstraint::Kind::And:
    case TemporalConstraint::Kind::Or: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    }
    return false;
}

bool eval_constraint(const Interval& action, const Interval& situation, const TemporalConstraint& tc) {
    using Kind = TemporalConstraint::Kind;
    switch (tc.kind()) {
    case Kind::Basic:
        return compare(tc.comparison(), resolve_tpi(tc.action_point(), action),
                       resolve_tpi(tc.situation_point(), situation));
    case Kind::And:
        return eval_constraint(action, situation, tc.lhs()) && eval_constraint(action, situation, tc.rhs());
    case Kind::Or:
        // Either disjunct alone licenses the pair.
        return eval_constraint(action, situation, tc.lhs()) || eval_constraint(action, situation, tc.rhs());
    case Kind::Not: return !eval_constraint(action, situation, tc.lhs());
    }
    return false;
}

} // namespace normcheck
