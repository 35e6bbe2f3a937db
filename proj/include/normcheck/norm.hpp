#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "normcheck/allen.hpp"
#include "normcheck/constraint.hpp"
#include "normcheck/knowledge_base.hpp"
#include "normcheck/term.hpp"

namespace normcheck {

enum class Deontic { Obligation, Prohibition };

/// obl(a), pro(a), or a negated one. A negated fluent is a permission:
/// ~pro(a) permits doing a, ~obl(a) permits not doing it.
struct NormativeFluent {
    Deontic kind = Deontic::Obligation;
    Term action;
    bool negated = false;

    NormativeFluent operator~() const { return {kind, action, !negated}; }
    bool is_permission() const { return negated; }

    friend bool operator==(const NormativeFluent&, const NormativeFluent&) = default;
    friend bool operator<(const NormativeFluent& a, const NormativeFluent& b);
};

std::string to_string(const NormativeFluent& f);

struct SourceSpan {
    std::string file;
    int line = 0;
    int column = 0;
    int end_column = 0;

    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

enum class TimeFunction { Situation, Event, Process, Action };

std::string_view to_string(TimeFunction fn);

/// timeS(s), timeE(e), timeP(p) or timeA(act).
struct TimeTerm {
    TimeFunction fn = TimeFunction::Situation;
    Term arg;

    friend bool operator==(const TimeTerm&, const TimeTerm&) = default;
};

struct HoldsAtom {
    Term fluent;
    Term situation;
    bool fully = false;

    friend bool operator==(const HoldsAtom&, const HoldsAtom&) = default;
};

/// event-type(e, T) or process-type(p, T).
struct TypeAtom {
    Term subject;
    std::string type;
    bool process = false;

    friend bool operator==(const TypeAtom&, const TypeAtom&) = default;
};

struct IntervalAtom {
    std::variant<IntervalPredicate, AllenRelation> predicate;
    std::vector<TimeTerm> args;

    friend bool operator==(const IntervalAtom&, const IntervalAtom&) = default;
};

struct DomainAtom {
    Term atom;

    friend bool operator==(const DomainAtom&, const DomainAtom&) = default;
};

using Atom = std::variant<HoldsAtom, TypeAtom, IntervalAtom, DomainAtom>;

struct BodyLiteral {
    Atom atom;
    bool negated = false;
    SourceSpan span;

    // Spans are provenance, not meaning.
    friend bool operator==(const BodyLiteral& a, const BodyLiteral& b) {
        return a.negated == b.negated && a.atom == b.atom;
    }
};

/// Variables an atom mentions.
std::set<std::string> variables_of(const Atom& atom);

/// Whether the atom can produce bindings (as opposed to only testing them).
bool is_generator(const Atom& atom);

/// An identified norm: every token it produces carries `id`.
struct NormRule {
    std::string id;
    Term agent;  // variable or constant
    NormativeFluent effect;
    std::string situation_var;
    TemporalConstraint tc = tc::eq(tc::B, tc::B);
    std::vector<BodyLiteral> body;
    SourceSpan span;

    friend bool operator==(const NormRule& a, const NormRule& b) {
        return a.id == b.id && a.agent == b.agent && a.effect == b.effect && a.situation_var == b.situation_var &&
               a.tc == b.tc && a.body == b.body;
    }
};

/// A ground normative position: (agent, fluent, situation, tc, norm id).
struct NormToken {
    Term agent;
    NormativeFluent fluent;
    std::string situation;
    TemporalConstraint tc = tc::eq(tc::B, tc::B);
    std::string norm_id;

    friend bool operator==(const NormToken&, const NormToken&) = default;
};

bool operator<(const NormToken& a, const NormToken& b);

struct RuleIssue {
    enum class Kind { UnboundHeadVariable, UnsafeNegation, UnboundTimeArgument };
    Kind kind;
    std::string variable;
    std::optional<std::size_t> literal;  // body index, when the issue sits in the body
    std::string message;
};

/// Load-time safety: head variables must be bound by the body, negated
/// literals and interval predicates may only use variables bound by earlier
/// positive literals.
std::vector<RuleIssue> check_rule_safety(const NormRule& rule);

struct Validity {
    bool valid = false;
    std::string reason;

    explicit operator bool() const { return valid; }
};

/// The norm is valid for s iff it was enacted no later than s begins and no
/// repeal falls between the enactment and the end of s. Unknown norms are
/// invalid, with the reason saying so.
Validity valid_wrt(const KnowledgeBase& kb, std::string_view norm_id, std::string_view situation);

/// Every distinct token the rule yields over the KB, sorted. Throws
/// UnsafeRule / UnboundHeadVariable for rules that fail the safety check.
std::vector<NormToken> instantiate(const KnowledgeBase& kb, const NormRule& rule);

} // namespace normcheck
