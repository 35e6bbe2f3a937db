#include "normcheck/matcher.hpp"

#include <algorithm>

#include "normcheck/errors.hpp"

namespace normcheck {
namespace {

const Term* lookup(const Binding& b, const Term& t) {
    if (!t.is_variable()) return &t;
    auto it = b.find(t.name());
    return it == b.end() ? nullptr : &it->second;
}

void extend_holds(const KnowledgeBase& kb, const HoldsAtom& atom, const Binding& b, std::vector<Binding>& out) {
    auto try_situation = [&](const std::string& sid) {
        Binding with_sit = b;
        if (!match(atom.situation, Term::constant(sid), with_sit)) return;
        const auto fluents = atom.fully ? kb.asserted_holds_fully(sid) : kb.holding(sid);
        for (const auto& f : fluents) {
            Binding next = with_sit;
            if (match(atom.fluent, f, next)) out.push_back(std::move(next));
        }
    };
    if (const Term* s = lookup(b, atom.situation)) {
        if (s->is_constant() && kb.find_situation(s->name())) try_situation(s->name());
        return;
    }
    for (const auto& [sid, _] : kb.situations()) try_situation(sid);
}

void extend_type(const KnowledgeBase& kb, const TypeAtom& atom, const Binding& b, std::vector<Binding>& out) {
    auto consider = [&](const std::string& id, const std::string& type) {
        if (type != atom.type) return;
        Binding next = b;
        if (match(atom.subject, Term::constant(id), next)) out.push_back(std::move(next));
    };
    if (atom.process) {
        for (const auto& [id, p] : kb.processes()) consider(id, p.type);
    } else {
        for (const auto& [id, e] : kb.events()) consider(id, e.type);
    }
}

void extend_domain(const KnowledgeBase& kb, const DomainAtom& atom, const Binding& b, std::vector<Binding>& out) {
    for (const auto& fact : kb.domain_facts()) {
        Binding next = b;
        if (match(atom.atom, fact, next)) out.push_back(std::move(next));
    }
}

bool interval_atom_holds(const KnowledgeBase& kb, const IntervalAtom& atom, const Binding& b) {
    std::vector<Interval> args;
    for (const auto& t : atom.args) {
        auto iv = resolve_time_term(kb, t, b);
        if (!iv) return false;
        args.push_back(*iv);
    }
    if (const auto* pred = std::get_if<IntervalPredicate>(&atom.predicate)) return interval_pred(*pred, args);
    const auto rel = std::get<AllenRelation>(atom.predicate);
    if (args.size() != 2) {
        throw ArityError(std::string(to_string(rel)) + " takes 2 intervals, got " + std::to_string(args.size()));
    }
    return allen_relation(args[0], args[1]) == rel;
}

void require_bound(const Atom& atom, const Binding& b, bool negated) {
    for (const auto& v : variables_of(atom)) {
        if (!b.count(v)) {
            throw UnsafeRule(std::string(negated ? "negated literal" : "interval predicate") + " uses unbound variable " +
                             v);
        }
    }
}

void extend(const KnowledgeBase& kb, const Atom& atom, const Binding& b, std::vector<Binding>& out) {
    std::visit(
        [&](const auto& a) {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, HoldsAtom>) {
                extend_holds(kb, a, b, out);
            } else if constexpr (std::is_same_v<T, TypeAtom>) {
                extend_type(kb, a, b, out);
            } else if constexpr (std::is_same_v<T, DomainAtom>) {
                extend_domain(kb, a, b, out);
            } else {
                require_bound(atom, b, false);
                if (interval_atom_holds(kb, a, b)) out.push_back(b);
            }
        },
        atom);
}

} // namespace

std::optional<Interval> resolve_time_term(const KnowledgeBase& kb, const TimeTerm& term, const Binding& binding) {
    const Term* arg = lookup(binding, term.arg);
    if (!arg || !arg->is_constant()) return std::nullopt;
    const auto& id = arg->name();
    switch (term.fn) {
    case TimeFunction::Situation:
        if (const auto* s = kb.find_situation(id)) return s->time;
        break;
    case TimeFunction::Event:
        if (const auto* e = kb.find_event(id)) return e->time;
        break;
    case TimeFunction::Process:
        if (const auto* p = kb.find_process(id)) return p->time;
        break;
    case TimeFunction::Action:
        if (const auto* a = kb.find_action(id)) return a->time;
        break;
    }
    return std::nullopt;
}

bool literal_holds(const KnowledgeBase& kb, const BodyLiteral& literal, const Binding& binding) {
    std::vector<Binding> ext;
    extend(kb, literal.atom, binding, ext);
    return ext.empty() == literal.negated;
}

std::vector<Binding> match_body(const KnowledgeBase& kb, std::span<const BodyLiteral> body, const Binding& seed) {
    std::vector<Binding> frontier{seed};
    for (const auto& lit : body) {
        std::vector<Binding> next;
        for (const auto& b : frontier) {
            if (lit.negated) {
                require_bound(lit.atom, b, true);
                std::vector<Binding> witnesses;
                extend(kb, lit.atom, b, witnesses);
                if (witnesses.empty()) next.push_back(b);
            } else {
                extend(kb, lit.atom, b, next);
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return frontier;
}

} // namespace normcheck
