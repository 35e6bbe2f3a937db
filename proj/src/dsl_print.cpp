#include <sstream>

#include "normcheck/dsl.hpp"

namespace normcheck {

namespace {

std::string_view comparison_name(Comparison c) {
    switch (c) {
        case Comparison::Eq: return "eq";
        case Comparison::Ge: return "ge";
        case Comparison::Gt: return "gt";
        case Comparison::Le: return "le";
        case Comparison::Lt: return "lt";
    }
    return "?";
}

std::string print_time_term(const TimeTerm& t) {
    return std::string(to_string(t.fn)) + "(" + to_string(t.arg) + ")";
}

struct AtomPrinter {
    std::string operator()(const HoldsAtom& a) const {
        return std::string(a.fully ? "holds**" : "holds") + "(" + to_string(a.fluent) + "," + to_string(a.situation) + ")";
    }
    std::string operator()(const TypeAtom& a) const {
        return std::string(a.process ? "process-type" : "event-type") + "(" + to_string(a.subject) + "," + a.type + ")";
    }
    std::string operator()(const IntervalAtom& a) const {
        std::string out(std::visit([](auto p) { return to_string(p); }, a.predicate));
        out += "(";
        for (std::size_t i = 0; i < a.args.size(); ++i) {
            if (i) out += ",";
            out += print_time_term(a.args[i]);
        }
        return out + ")";
    }
    std::string operator()(const DomainAtom& a) const { return to_string(a.atom); }
};

struct FactPrinter {
    std::string operator()(const Situation& s) const { return "situation " + s.id + " " + to_string(s.time); }
    std::string operator()(const EventToken& e) const {
        return "event " + e.id + " " + to_string(e.time) + " type " + e.type;
    }
    std::string operator()(const ProcessToken& p) const {
        std::string out = "process " + p.id + " " + to_string(p.time) + " type " + p.type;
        if (!p.steps.empty()) {
            out += " steps";
            for (const auto& s : p.steps) out += " " + s;
        }
        return out;
    }
    std::string operator()(const ActionToken& a) const {
        return "action " + a.id + " actor " + a.actor + " type " + to_string(a.type) + " " + to_string(a.time);
    }
    std::string operator()(const HoldsFact& h) const {
        return std::string(h.fully ? "holds** " : "holds ") + to_string(h.fluent) + " " + h.situation;
    }
    std::string operator()(const ImplyFact& i) const { return "imply " + to_string(i.from) + " " + to_string(i.to); }
    std::string operator()(const DomainFact& d) const { return "fact " + to_string(d.atom); }
};

} // namespace

std::string print_tpi(const TimePointImage& p) {
    const std::string base = p.base == Anchor::Begin ? "B" : "E";
    if (p.offset == 0) return base;
    return "tdisp(" + base + "," + std::to_string(p.offset) + ")";
}

std::string print_tc(const TemporalConstraint& tc) {
    switch (tc.kind()) {
        case TemporalConstraint::Kind::Basic:
            return std::string(comparison_name(tc.comparison())) + "(" + print_tpi(tc.action_point()) + "," +
                   print_tpi(tc.situation_point()) + ")";
        case TemporalConstraint::Kind::And:
            return "and(" + print_tc(tc.lhs()) + "," + print_tc(tc.rhs()) + ")";
        case TemporalConstraint::Kind::Or:
            return "or(" + print_tc(tc.lhs()) + "," + print_tc(tc.rhs()) + ")";
        case TemporalConstraint::Kind::Not:
            return "not(" + print_tc(tc.lhs()) + ")";
    }
    return {};
}

std::string print_fluent(const NormativeFluent& f) { return to_string(f); }

std::string print_literal(const BodyLiteral& lit) {
    return (lit.negated ? "not " : "") + std::visit(AtomPrinter{}, lit.atom);
}

std::string print_rule(const NormRule& rule) {
    std::ostringstream os;
    os << "norm " << rule.id << " {\n";
    os << "  agent " << to_string(rule.agent) << ";\n";
    os << "  effect " << print_fluent(rule.effect) << ";\n";
    os << "  situation " << rule.situation_var << ";\n";
    os << "  tc " << print_tc(rule.tc) << ";\n";
    os << "  when {\n";
    for (const auto& lit : rule.body) os << "    " << print_literal(lit) << ";\n";
    os << "  }\n}\n";
    return os.str();
}

std::string print_validity(const ValidityRecord& rec) {
    std::string out = "enact " + rec.norm_id + " " + to_string(rec.enact) + ";\n";
    for (const auto& r : rec.repeals) out += "repeal " + rec.norm_id + " " + to_string(r) + ";\n";
    return out;
}

std::string print_fact(const Fact& fact) { return std::visit(FactPrinter{}, fact); }

} // namespace normcheck
