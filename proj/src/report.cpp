#include "normcheck/report.hpp"

#include <algorithm>

#include "normcheck/dsl.hpp"

namespace normcheck {

std::size_t ComplianceReport::count(Verdict v) const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [v](const ReportEntry& e) { return e.outcome.verdict == v; }));
}

ComplianceReport run_report(const KnowledgeBase& kb, std::span<const NormRule> rules, Instant horizon) {
    ComplianceReport report;
    report.horizon = horizon;
    for (const auto& rule : rules) {
        for (auto& tok : instantiate(kb, rule)) {
            auto outcome = judge(kb, tok, horizon);
            report.entries.push_back({std::move(tok), std::move(outcome)});
        }
    }
    report.findings = check_consistency(kb);
    return report;
}

std::string format_record(const ReportEntry& entry, Instant horizon) {
    const auto& t = entry.token;
    const auto& o = entry.outcome;
    std::string out = "outcome=";
    out += to_string(o.verdict);
    out += " agent=" + to_string(t.agent);
    out += " norm=" + t.norm_id;
    out += " situation=" + t.situation;
    out += " tc=\"" + print_tc(t.tc) + "\"";
    out += " evidence=" + o.action.value_or("none");
    out += " window=" + to_string(o.window);
    out += " horizon=" + to_string(horizon);
    return out;
}

std::string format_summary_record(const ComplianceReport& r) {
    return "summary conformed=" + std::to_string(r.count(Verdict::Conformed)) +
           " violated=" + std::to_string(r.count(Verdict::Violated)) +
           " pending=" + std::to_string(r.count(Verdict::Pending)) +
           " inapplicable=" + std::to_string(r.count(Verdict::Inapplicable)) +
           " total=" + std::to_string(r.entries.size());
}

std::string format_human(const ReportEntry& entry, Instant horizon) {
    const auto& t = entry.token;
    const auto& o = entry.outcome;
    const std::string agent = to_string(t.agent);
    const std::string regard = " with regard to situation " + t.situation;
    switch (o.verdict) {
    case Verdict::Conformed:
        if (t.fluent.negated) return agent + " conformed to " + t.norm_id + regard + " (permission, nothing required)";
        if (o.action) return agent + " conformed to " + t.norm_id + regard + " (action " + *o.action + ")";
        return agent + " conformed to " + t.norm_id + regard + " (no forbidden action; window closed at " +
               (o.window.bounded() ? to_string(o.window) : "end of " + t.situation) + ")";
    case Verdict::Violated:
        if (o.action) return agent + " violated " + t.norm_id + regard + " (forbidden action " + *o.action + ")";
        return agent + " violated " + t.norm_id + regard + " (no conforming action; window closed at " +
               to_string(o.window) + ", horizon " + to_string(horizon) + ")";
    case Verdict::Pending:
        return agent + " is pending on " + t.norm_id + regard + " (window " +
               (o.window.bounded() ? "open until " + to_string(o.window) : std::string("unbounded")) + ", horizon " +
               to_string(horizon) + (o.provisional_conform ? ", provisionally conforming" : "") + ")";
    case Verdict::Inapplicable:
        return t.norm_id + " does not apply to " + agent + regard + " (norm not valid)";
    }
    return {};
}

std::string format_summary_human(const ComplianceReport& r) {
    return std::to_string(r.count(Verdict::Violated)) + " violated, " + std::to_string(r.count(Verdict::Conformed)) +
           " conformed, " + std::to_string(r.count(Verdict::Pending)) + " pending, " +
           std::to_string(r.count(Verdict::Inapplicable)) + " inapplicable (" + std::to_string(r.entries.size()) +
           (r.entries.size() == 1 ? " token, horizon " : " tokens, horizon ") + to_string(r.horizon) + ")";
}

} // namespace normcheck
