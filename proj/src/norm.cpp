#include "normcheck/norm.hpp"

#include <algorithm>
#include <tuple>

#include "normcheck/errors.hpp"
#include "normcheck/matcher.hpp"

namespace normcheck {

bool operator<(const NormativeFluent& a, const NormativeFluent& b) {
    return std::tie(a.kind, a.negated, a.action) < std::tie(b.kind, b.negated, b.action);
}

std::string to_string(const NormativeFluent& f) {
    std::string out = f.negated ? "~" : "";
    out += f.kind == Deontic::Obligation ? "obl(" : "pro(";
    out += to_string(f.action);
    out += ')';
    return out;
}

std::string_view to_string(TimeFunction fn) {
    switch (fn) {
    case TimeFunction::Situation: return "timeS";
    case TimeFunction::Event: return "timeE";
    case TimeFunction::Process: return "timeP";
    case TimeFunction::Action: return "timeA";
    }
    return "?";
}

bool operator<(const NormToken& a, const NormToken& b) {
    return std::tie(a.norm_id, a.agent, a.situation, a.fluent) < std::tie(b.norm_id, b.agent, b.situation, b.fluent);
}

std::set<std::string> variables_of(const Atom& atom) {
    std::set<std::string> out;
    std::visit(
        [&](const auto& a) {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, HoldsAtom>) {
                a.fluent.collect_variables(out);
                a.situation.collect_variables(out);
            } else if constexpr (std::is_same_v<T, TypeAtom>) {
                a.subject.collect_variables(out);
            } else if constexpr (std::is_same_v<T, IntervalAtom>) {
                for (const auto& t : a.args) t.arg.collect_variables(out);
            } else {
                a.atom.collect_variables(out);
            }
        },
        atom);
    return out;
}

bool is_generator(const Atom& atom) { return !std::holds_alternative<IntervalAtom>(atom); }

std::vector<RuleIssue> check_rule_safety(const NormRule& rule) {
    std::vector<RuleIssue> issues;
    std::set<std::string> bound;
    for (std::size_t i = 0; i < rule.body.size(); ++i) {
        const auto& lit = rule.body[i];
        const auto vars = variables_of(lit.atom);
        if (lit.negated || !is_generator(lit.atom)) {
            for (const auto& v : vars) {
                if (bound.count(v)) continue;
                if (lit.negated) {
                    issues.push_back({RuleIssue::Kind::UnsafeNegation, v, i,
                                      "negated literal uses " + v + " before any positive literal binds it"});
                } else {
                    issues.push_back({RuleIssue::Kind::UnboundTimeArgument, v, i,
                                      "interval predicate uses " + v + " before any positive literal binds it"});
                }
            }
            continue;
        }
        bound.insert(vars.begin(), vars.end());
    }

    std::set<std::string> head;
    rule.agent.collect_variables(head);
    rule.effect.action.collect_variables(head);
    head.insert(rule.situation_var);
    for (const auto& v : head) {
        if (!bound.count(v)) {
            issues.push_back({RuleIssue::Kind::UnboundHeadVariable, v, std::nullopt,
                              "head variable " + v + " is not bound by the body"});
        }
    }
    return issues;
}

Validity valid_wrt(const KnowledgeBase& kb, std::string_view norm_id, std::string_view situation) {
    const auto& s = kb.situation(situation);
    const auto* rec = kb.find_validity(norm_id);
    if (!rec) return {false, "no enactment recorded for " + std::string(norm_id)};
    if (s.time.begin() < rec->enact) {
        return {false, std::string(norm_id) + " enacted at " + to_string(rec->enact) + ", after " + s.id + " began at " +
                           to_string(s.time.begin())};
    }
    for (const auto& r : rec->repeals) {
        if (rec->enact <= r && r <= s.time.end()) {
            return {false, std::string(norm_id) + " repealed at " + to_string(r) + ", no later than the end of " +
                               s.id + " at " + to_string(s.time.end())};
        }
    }
    return {true, std::string(norm_id) + " in force from " + to_string(rec->enact) + " throughout " + s.id};
}

std::vector<NormToken> instantiate(const KnowledgeBase& kb, const NormRule& rule) {
    for (const auto& issue : check_rule_safety(rule)) {
        if (issue.kind == RuleIssue::Kind::UnboundHeadVariable) {
            throw UnboundHeadVariable("rule " + rule.id + ": " + issue.message);
        }
        throw UnsafeRule("rule " + rule.id + ": " + issue.message);
    }

    std::vector<NormToken> tokens;
    for (const auto& b : match_body(kb, rule.body)) {
        NormToken tok;
        tok.agent = substitute(rule.agent, b);
        tok.fluent = rule.effect;
        tok.fluent.action = substitute(rule.effect.action, b);
        auto sit = b.find(rule.situation_var);
        if (!tok.agent.is_ground() || !tok.fluent.action.is_ground() || sit == b.end()) {
            throw UnboundHeadVariable("rule " + rule.id + " emitted a non-ground token");
        }
        if (!sit->second.is_constant() || !kb.find_situation(sit->second.name())) {
            throw PreconditionViolated("rule " + rule.id + " binds its situation variable to " +
                                       to_string(sit->second) + ", which is not a situation");
        }
        tok.situation = sit->second.name();
        tok.tc = rule.tc;
        tok.norm_id = rule.id;
        tokens.push_back(std::move(tok));
    }
    std::sort(tokens.begin(), tokens.end());
    tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
    return tokens;
}

} // namespace normcheck
