#include "normcheck/knowledge_base.hpp"

#include <array>
#include <deque>

#include "normcheck/allen.hpp"
#include "normcheck/errors.hpp"

namespace normcheck {
namespace {

const std::set<Term> kNoFluents;

template <typename Map, typename Value>
bool insert_once(Map& map, const Value& value, std::string_view kind) {
    auto [it, inserted] = map.emplace(value.id, value);
    if (!inserted && !(it->second == value)) {
        throw Redeclaration(std::string(kind) + " '" + value.id + "' is already declared with different attributes");
    }
    return inserted;
}

void require_ground(const Term& t, std::string_view what) {
    if (!t.is_ground()) {
        throw NonGroundFact(std::string(what) + " '" + to_string(t) + "' contains variables");
    }
}

// occurring(e) / prog(p) with exactly one constant argument.
std::optional<std::string> special_arg(const Term& f, std::string_view functor) {
    if (f.name() == functor && f.arity() == 1 && f.args()[0].is_constant()) return f.args()[0].name();
    return std::nullopt;
}

} // namespace

Term occurring(std::string event_id) { return Term::compound("occurring", {Term::constant(std::move(event_id))}); }
Term prog(std::string process_id) { return Term::compound("prog", {Term::constant(std::move(process_id))}); }

void KnowledgeBase::check_entity_refs(const Term& fluent) const {
    if (auto e = special_arg(fluent, "occurring"); e && !find_event(*e)) {
        throw DanglingReference("unknown event '" + *e + "' in " + to_string(fluent));
    }
    if (auto p = special_arg(fluent, "prog"); p && !find_process(*p)) {
        throw DanglingReference("unknown process '" + *p + "' in " + to_string(fluent));
    }
}

void KnowledgeBase::assert_fact(const Fact& fact) {
    std::visit(
        [this](const auto& f) {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Situation>) {
                insert_once(situations_, f, "situation");
            } else if constexpr (std::is_same_v<T, EventToken>) {
                insert_once(events_, f, "event");
            } else if constexpr (std::is_same_v<T, ProcessToken>) {
                for (const auto& step : f.steps) {
                    if (!find_situation(step)) {
                        throw DanglingReference("process '" + f.id + "' step refers to unknown situation '" + step + "'");
                    }
                }
                insert_once(processes_, f, "process");
            } else if constexpr (std::is_same_v<T, ActionToken>) {
                require_ground(f.type, "action type");
                insert_once(actions_, f, "action");
            } else if constexpr (std::is_same_v<T, HoldsFact>) {
                require_ground(f.fluent, "fluent");
                if (!find_situation(f.situation)) {
                    throw DanglingReference("unknown situation '" + f.situation + "'");
                }
                check_entity_refs(f.fluent);
                auto& table = f.fully ? holds_fully_ : holds_;
                table[f.situation].insert(f.fluent);
            } else if constexpr (std::is_same_v<T, ImplyFact>) {
                require_ground(f.from, "fluent");
                require_ground(f.to, "fluent");
                check_entity_refs(f.from);
                check_entity_refs(f.to);
                implies_[f.from].insert(f.to);
            } else if constexpr (std::is_same_v<T, DomainFact>) {
                require_ground(f.atom, "domain fact");
                domain_.insert(f.atom);
            }
        },
        fact);
}

void KnowledgeBase::add_validity(ValidityRecord record) {
    for (const auto& r : record.repeals) {
        if (!(record.enact < r)) {
            throw PreconditionViolated("repeal of " + record.norm_id + " at " + to_string(r) +
                                       " does not come after its enactment at " + to_string(record.enact));
        }
    }
    if (validity_.count(record.norm_id)) {
        throw DuplicateEnactment("norm " + record.norm_id + " is enacted more than once");
    }
    auto id = record.norm_id;
    validity_.emplace(std::move(id), std::move(record));
}

const Situation* KnowledgeBase::find_situation(std::string_view id) const {
    auto it = situations_.find(id);
    return it == situations_.end() ? nullptr : &it->second;
}

const EventToken* KnowledgeBase::find_event(std::string_view id) const {
    auto it = events_.find(id);
    return it == events_.end() ? nullptr : &it->second;
}

const ProcessToken* KnowledgeBase::find_process(std::string_view id) const {
    auto it = processes_.find(id);
    return it == processes_.end() ? nullptr : &it->second;
}

const ActionToken* KnowledgeBase::find_action(std::string_view id) const {
    auto it = actions_.find(id);
    return it == actions_.end() ? nullptr : &it->second;
}

const ValidityRecord* KnowledgeBase::find_validity(std::string_view norm_id) const {
    auto it = validity_.find(norm_id);
    return it == validity_.end() ? nullptr : &it->second;
}

const Situation& KnowledgeBase::situation(std::string_view id) const {
    if (const auto* s = find_situation(id)) return *s;
    throw UnknownSituation("unknown situation '" + std::string(id) + "'");
}

const std::set<Term>& KnowledgeBase::asserted_holds(std::string_view situation) const {
    auto it = holds_.find(situation);
    return it == holds_.end() ? kNoFluents : it->second;
}

const std::set<Term>& KnowledgeBase::asserted_holds_fully(std::string_view situation) const {
    auto it = holds_fully_.find(situation);
    return it == holds_fully_.end() ? kNoFluents : it->second;
}

std::set<Term> KnowledgeBase::imply_closure(const Term& f) const {
    std::set<Term> seen{f};
    std::deque<Term> frontier{f};
    while (!frontier.empty()) {
        Term cur = std::move(frontier.front());
        frontier.pop_front();
        auto it = implies_.find(cur);
        if (it == implies_.end()) continue;
        for (const auto& next : it->second) {
            if (seen.insert(next).second) frontier.push_back(next);
        }
    }
    return seen;
}

std::set<Term> KnowledgeBase::holding(std::string_view situation) const {
    (void)this->situation(situation);
    std::set<Term> out;
    for (const auto* table : {&asserted_holds(situation), &asserted_holds_fully(situation)}) {
        for (const auto& f : *table) {
            if (out.count(f)) continue;
            auto closure = imply_closure(f);
            out.insert(closure.begin(), closure.end());
        }
    }
    return out;
}

bool KnowledgeBase::query_holds(const Term& f, std::string_view situation) const {
    (void)this->situation(situation);
    if (asserted_holds(situation).count(f) || asserted_holds_fully(situation).count(f)) return true;
    return holding(situation).count(f) > 0;
}

bool KnowledgeBase::query_holds_fully(const Term& f, std::string_view situation) const {
    (void)this->situation(situation);
    return asserted_holds_fully(situation).count(f) > 0;
}

bool KnowledgeBase::empty() const {
    return situations_.empty() && events_.empty() && processes_.empty() && actions_.empty() && holds_.empty() &&
           holds_fully_.empty() && implies_.empty() && domain_.empty() && validity_.empty();
}

// ---------------------------------------------------------------------------
// Consistency

namespace {

void check_time_agreement(const KnowledgeBase& kb, const Situation& s, const Term& f,
                          std::vector<AxiomViolation>& out) {
    if (auto e = special_arg(f, "occurring")) {
        const auto* ev = kb.find_event(*e);
        if (!ev) {
            out.push_back({"integrity", {*e, s.id}, "occurring(" + *e + ") refers to an unknown event"});
        } else if (!(ev->time == s.time)) {
            out.push_back({"3.2.5", {*e, s.id},
                           "timeE(" + *e + ")=" + to_string(ev->time) + " differs from timeS(" + s.id +
                               ")=" + to_string(s.time)});
        }
    }
    if (auto p = special_arg(f, "prog")) {
        const auto* pr = kb.find_process(*p);
        if (!pr) {
            out.push_back({"integrity", {*p, s.id}, "prog(" + *p + ") refers to an unknown process"});
        } else if (!(pr->time == s.time)) {
            out.push_back({"3.2.5", {*p, s.id},
                           "timeP(" + *p + ")=" + to_string(pr->time) + " differs from timeS(" + s.id +
                               ")=" + to_string(s.time)});
        }
    }
}

void check_decomposition(const KnowledgeBase& kb, const ProcessToken& p, std::vector<AxiomViolation>& out) {
    if (p.steps.empty()) return;
    std::vector<const Situation*> steps;
    for (const auto& id : p.steps) {
        const auto* s = kb.find_situation(id);
        if (!s) {
            out.push_back({"integrity", {p.id, id}, "decomposition step '" + id + "' is not a situation"});
            return;
        }
        steps.push_back(s);
    }
    for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
        if (allen_relation(steps[i]->time, steps[i + 1]->time) != AllenRelation::Meets) {
            out.push_back({"process", {p.id, steps[i]->id, steps[i + 1]->id},
                           "consecutive steps " + steps[i]->id + " and " + steps[i + 1]->id + " of " + p.id +
                               " do not meet"});
        }
    }
    if (steps.front()->time.begin() != p.time.begin() || steps.back()->time.end() != p.time.end()) {
        out.push_back({"process", {p.id}, "decomposition of " + p.id + " does not cover " + to_string(p.time)});
    }
}

} // namespace

std::vector<AxiomViolation> check_consistency(const KnowledgeBase& kb) {
    std::vector<AxiomViolation> out;
    for (const auto& [sid, s] : kb.situations()) {
        const auto& partial = kb.asserted_holds(sid);
        const auto& full = kb.asserted_holds_fully(sid);
        for (const auto* table : {&partial, &full}) {
            for (const auto& f : *table) check_time_agreement(kb, s, f, out);
        }
        for (const auto& f : full) {
            const auto closure = kb.imply_closure(f);
            for (const auto* table : {&partial, &full}) {
                for (const auto& g : *table) {
                    if (g == f || closure.count(g)) continue;
                    out.push_back({"3.2.4", {sid},
                                   "holds**(" + to_string(f) + ", " + sid + ") but " + to_string(g) +
                                       " also holds there and is not implied by it"});
                }
            }
        }
    }
    for (const auto& [pid, p] : kb.processes()) check_decomposition(kb, p, out);
    return out;
}

// ---------------------------------------------------------------------------
// Processes

namespace {

bool described_by_event(const KnowledgeBase& kb, const std::string& sid) {
    for (const auto& f : kb.asserted_holds_fully(sid)) {
        if (special_arg(f, "occurring")) return true;
    }
    return false;
}

bool characterizes(const KnowledgeBase& kb, const ProcessToken& p, const Situation& s);

// The last step of a chain: an event occurrence or a sub-process that is
// itself characterized over exactly the remaining span.
bool tail_ok(const KnowledgeBase& kb, const Situation& step, const Interval& span) {
    if (!(step.time == span)) return false;
    if (described_by_event(kb, step.id)) return true;
    for (const auto& f : kb.holding(step.id)) {
        auto pid = special_arg(f, "prog");
        if (!pid) continue;
        const auto* sub = kb.find_process(*pid);
        if (sub && characterizes(kb, *sub, step)) return true;
    }
    return false;
}

bool chain_ok(const KnowledgeBase& kb, const std::vector<std::string>& steps, std::size_t i, const Interval& span) {
    const auto remaining = steps.size() - i;
    if (remaining == 0) return false;
    const auto& head = kb.situation(steps[i]);
    if (remaining == 1) return tail_ok(kb, head, span);
    if (kb.asserted_holds_fully(head.id).empty()) return false;
    if (!(head.time.end() < span.end())) return false;
    const Interval tail{head.time.end(), span.end()};
    const std::array<Interval, 3> cover{head.time, tail, span};
    if (!interval_pred(IntervalPredicate::Cover, cover)) return false;
    return chain_ok(kb, steps, i + 1, tail);
}

// Spans strictly shrink on every nested call, so this terminates.
bool characterizes(const KnowledgeBase& kb, const ProcessToken& p, const Situation& s) {
    if (described_by_event(kb, s.id)) return true;
    return p.steps.size() >= 2 && chain_ok(kb, p.steps, 0, s.time);
}

} // namespace

bool check_process(const KnowledgeBase& kb, std::string_view process, std::string_view situation) {
    const auto& s = kb.situation(situation);
    const auto* p = kb.find_process(process);
    if (!p) throw DanglingReference("unknown process '" + std::string(process) + "'");
    if (!kb.query_holds_fully(prog(p->id), s.id)) {
        throw PreconditionViolated("holds**(prog(" + p->id + "), " + s.id + ") is not asserted");
    }
    if (described_by_event(kb, s.id)) return true;
    if (p->steps.empty()) {
        throw MissingDecomposition("process '" + p->id + "' has no decomposition and " + s.id +
                                   " is not described by a single event");
    }
    return characterizes(kb, *p, s);
}

} // namespace normcheck
