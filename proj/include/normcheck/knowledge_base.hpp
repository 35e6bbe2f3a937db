#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "normcheck/term.hpp"
#include "normcheck/time.hpp"

namespace normcheck {

struct Situation {
    std::string id;
    Interval time;

    friend bool operator==(const Situation&, const Situation&) = default;
};

struct EventToken {
    std::string id;
    Interval time;
    std::string type;

    friend bool operator==(const EventToken&, const EventToken&) = default;
};

/// A process with an optional decomposition into a chain of situations.
struct ProcessToken {
    std::string id;
    Interval time;
    std::string type;
    std::vector<std::string> steps;

    friend bool operator==(const ProcessToken&, const ProcessToken&) = default;
};

using ActionType = Term;

struct ActionToken {
    std::string id;
    std::string actor;
    ActionType type;
    Interval time;

    friend bool operator==(const ActionToken&, const ActionToken&) = default;
};

/// holds(f, s), or holds**(f, s) when `fully` is set.
struct HoldsFact {
    Term fluent;
    std::string situation;
    bool fully = false;

    friend bool operator==(const HoldsFact&, const HoldsFact&) = default;
};

/// imply(f, g): whenever f holds in a situation, so does g.
struct ImplyFact {
    Term from;
    Term to;

    friend bool operator==(const ImplyFact&, const ImplyFact&) = default;
};

/// A ground atom for a domain predicate such as university(u1).
struct DomainFact {
    Term atom;

    friend bool operator==(const DomainFact&, const DomainFact&) = default;
};

using Fact = std::variant<Situation, EventToken, ProcessToken, ActionToken, HoldsFact, ImplyFact, DomainFact>;

/// Enactment and repeals of one norm.
struct ValidityRecord {
    std::string norm_id;
    Instant enact;
    std::set<Instant> repeals;

    friend bool operator==(const ValidityRecord&, const ValidityRecord&) = default;
};

/// The assertion store. Built by a single writer, then queried read-only.
class KnowledgeBase {
public:
    /// Adds one fact. Duplicates are no-ops. Throws DanglingReference,
    /// Redeclaration or NonGroundFact.
    void assert_fact(const Fact& fact);

    /// Throws DuplicateEnactment if the norm already has a record, and
    /// PreconditionViolated if a repeal does not come after the enactment.
    void add_validity(ValidityRecord record);

    const Situation* find_situation(std::string_view id) const;
    const EventToken* find_event(std::string_view id) const;
    const ProcessToken* find_process(std::string_view id) const;
    const ActionToken* find_action(std::string_view id) const;
    const ValidityRecord* find_validity(std::string_view norm_id) const;

    /// Throws UnknownSituation.
    const Situation& situation(std::string_view id) const;

    const std::map<std::string, Situation, std::less<>>& situations() const { return situations_; }
    const std::map<std::string, EventToken, std::less<>>& events() const { return events_; }
    const std::map<std::string, ProcessToken, std::less<>>& processes() const { return processes_; }
    const std::map<std::string, ActionToken, std::less<>>& actions() const { return actions_; }
    const std::set<Term>& domain_facts() const { return domain_; }
    const std::map<Term, std::set<Term>>& implications() const { return implies_; }

    /// Explicitly asserted fluents of a situation (empty set if none).
    const std::set<Term>& asserted_holds(std::string_view situation) const;
    const std::set<Term>& asserted_holds_fully(std::string_view situation) const;

    /// Reflexive-transitive closure of the declared implications from f.
    std::set<Term> imply_closure(const Term& f) const;

    /// Every fluent that holds in s: asserted ones plus everything they imply.
    /// Throws UnknownSituation.
    std::set<Term> holding(std::string_view situation) const;

    /// Throws UnknownSituation.
    bool query_holds(const Term& f, std::string_view situation) const;
    bool query_holds_fully(const Term& f, std::string_view situation) const;

    bool empty() const;

private:
    void check_entity_refs(const Term& fluent) const;

    std::map<std::string, Situation, std::less<>> situations_;
    std::map<std::string, EventToken, std::less<>> events_;
    std::map<std::string, ProcessToken, std::less<>> processes_;
    std::map<std::string, ActionToken, std::less<>> actions_;
    std::map<std::string, std::set<Term>, std::less<>> holds_;
    std::map<std::string, std::set<Term>, std::less<>> holds_fully_;
    std::map<Term, std::set<Term>> implies_;
    std::set<Term> domain_;
    std::map<std::string, ValidityRecord, std::less<>> validity_;
};

/// One consistency breach.
struct AxiomViolation {
    std::string axiom;  // "3.2.4", "3.2.5", "integrity" or "process"
    std::vector<std::string> ids;
    std::string message;

    friend bool operator==(const AxiomViolation&, const AxiomViolation&) = default;
};

/// Checks event/process time agreement, closed descriptions of fully
/// described situations, and process decompositions. Empty means consistent.
std::vector<AxiomViolation> check_consistency(const KnowledgeBase& kb);

/// Whether process p fully characterizes situation s: either s is fully
/// described by one event occurrence, or p's recorded decomposition splits s
/// into a described head and a tail that covers the rest, recursively.
///
/// Requires holds**(prog(p), s). Throws MissingDecomposition when neither an
/// event description nor a decomposition is available.
bool check_process(const KnowledgeBase& kb, std::string_view process, std::string_view situation);

/// Fluent helpers for the two special forms.
Term occurring(std::string event_id);
Term prog(std::string process_id);

} // namespace normcheck
