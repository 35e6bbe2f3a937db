#include "normcheck/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "normcheck/dsl.hpp"
#include "normcheck/errors.hpp"
#include "normcheck/judge.hpp"
#include "normcheck/matcher.hpp"
#include "normcheck/report.hpp"

namespace normcheck {

std::optional<ExplainTarget> parse_explain_target(const std::string& text) {
    const auto first = text.find(':');
    if (first == std::string::npos) return std::nullopt;
    const auto second = text.find(':', first + 1);
    if (second == std::string::npos || text.find(':', second + 1) != std::string::npos) return std::nullopt;
    ExplainTarget t{text.substr(0, first), text.substr(first + 1, second - first - 1), text.substr(second + 1)};
    if (t.agent.empty() || t.norm_id.empty() || t.situation.empty()) return std::nullopt;
    return t;
}

namespace {

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ParseDiagnostic file_error(const std::string& file, std::string message) {
    return {Severity::Error, {file, 0, 0, 0}, std::move(message), {}, {}};
}

struct Loaded {
    Workspace ws;
    std::size_t errors = 0;
};

Loaded load(const RunConfig& cfg, std::ostream& err) {
    Loaded l;
    if (cfg.norm_files.empty()) l.ws.diagnostics.push_back(file_error("<config>", "at least one norm file is required"));
    if (cfg.fact_files.empty()) l.ws.diagnostics.push_back(file_error("<config>", "at least one fact file is required"));
    Workspace loaded = load_workspace(cfg.norm_files, cfg.fact_files);
    l.ws.rules = std::move(loaded.rules);
    l.ws.kb = std::move(loaded.kb);
    std::move(loaded.diagnostics.begin(), loaded.diagnostics.end(), std::back_inserter(l.ws.diagnostics));
    for (const auto& d : l.ws.diagnostics) err << format_diagnostic(d) << "\n";
    l.errors = l.ws.errors();
    return l;
}

std::string format_finding(const AxiomViolation& v) {
    std::string ids;
    for (const auto& id : v.ids) ids += (ids.empty() ? "" : ",") + id;
    const bool numbered = !v.axiom.empty() && std::isdigit(static_cast<unsigned char>(v.axiom.front()));
    return std::string("finding: ") + (numbered ? "axiom " : "") + v.axiom + " [" + ids + "] " + v.message;
}

const ReportEntry* find_entry(const ComplianceReport& r, const ExplainTarget& t) {
    for (const auto& e : r.entries) {
        if (to_string(e.token.agent) == t.agent && e.token.norm_id == t.norm_id && e.token.situation == t.situation) {
            return &e;
        }
    }
    return nullptr;
}

std::string_view comparison_symbol(Comparison c) {
    switch (c) {
        case Comparison::Eq: return "=";
        case Comparison::Ge: return ">=";
        case Comparison::Gt: return ">";
        case Comparison::Le: return "<=";
        case Comparison::Lt: return "<";
    }
    return "?";
}

void basic_leaves(const TemporalConstraint& tc, std::vector<TemporalConstraint>& out) {
    if (tc.kind() == TemporalConstraint::Kind::Basic) {
        out.push_back(tc);
        return;
    }
    basic_leaves(tc.lhs(), out);
    if (tc.kind() != TemporalConstraint::Kind::Not) basic_leaves(tc.rhs(), out);
}

std::string anchor_name(const TimePointImage& p, std::string_view of) {
    std::string out = std::string(p.base == Anchor::Begin ? "begin" : "end") + "(" + std::string(of) + ")";
    if (p.offset > 0) out += "+" + std::to_string(p.offset);
    if (p.offset < 0) out += std::to_string(p.offset);
    return out;
}

std::string conclusion(const ReportEntry& e) {
    const auto& o = e.outcome;
    const std::string code(axiom_code(o.ground));
    switch (o.ground) {
        case Ground::NotValid: return "Inapplicable by Axiom " + code + ": norm not valid for " + e.token.situation;
        case Ground::ObligationMet: return "Conformed by Axiom " + code + ": action " + *o.action + " satisfies the tc";
        case Ground::ObligationMissed:
            return "Violated by Axiom " + code + ": no conforming action; window closed at " + to_string(o.window);
        case Ground::ProhibitionBreached:
            return "Violated by Axiom " + code + ": forbidden action " + *o.action + " satisfies the tc";
        case Ground::ProhibitionRespected:
            return "Conformed by Axiom " + code + ": no forbidden action; window closed at " +
                   (o.window.bounded() ? to_string(o.window) : "end of " + e.token.situation + " (provisional)");
        case Ground::PermissionToAct:
        case Ground::PermissionToRefrain: return "Conformed by Axiom " + code;
        case Ground::WindowOpen:
            return "Pending: window " + (o.window.bounded() ? "open until " + to_string(o.window) : std::string("unbounded"));
    }
    return {};
}

void explain_entry(const Loaded& l, const ReportEntry& e, Instant horizon, std::ostream& out) {
    const auto& tok = e.token;
    const auto rule = std::find_if(l.ws.rules.begin(), l.ws.rules.end(), [&](const NormRule& r) { return r.id == tok.norm_id; });
    out << "rule:\n" << print_rule(*rule);

    out << "bindings:\n";
    for (const auto& b : match_body(l.ws.kb, rule->body)) {
        if (substitute(rule->agent, b) != tok.agent) continue;
        auto sit = b.find(rule->situation_var);
        if (sit == b.end() || sit->second != Term::constant(tok.situation)) continue;
        if (substitute(rule->effect.action, b) != tok.fluent.action) continue;
        std::string line;
        for (const auto& [var, val] : b) line += (line.empty() ? "" : " ") + var + "=" + to_string(val);
        out << "  " << line << "\n";
        for (const auto& lit : rule->body) {
            out << "    " << (literal_holds(l.ws.kb, lit, b) ? "true  " : "false ") << print_literal(lit) << "\n";
        }
    }

    out << "validity: " << valid_wrt(l.ws.kb, tok.norm_id, tok.situation).reason << "\n";
    const Interval sit = l.ws.kb.situation(tok.situation).time;
    out << "situation " << tok.situation << " " << to_string(sit) << "\n";
    out << "tc " << print_tc(tok.tc) << "\n";
    std::vector<TemporalConstraint> leaves;
    basic_leaves(tok.tc, leaves);
    for (const auto& leaf : leaves) {
        out << "  " << print_tc(leaf) << ": " << anchor_name(leaf.action_point(), "action") << " "
            << comparison_symbol(leaf.comparison()) << " " << to_string(resolve_tpi(leaf.situation_point(), sit)) << "\n";
    }
    out << "window: " << to_string(e.outcome.window) << "\n";
    out << "horizon: " << to_string(horizon) << "\n";

    const auto candidates = candidate_actions(l.ws.kb, tok);
    if (candidates.empty()) out << "actions: none of type " << to_string(tok.fluent.action) << " by " << to_string(tok.agent) << "\n";
    for (const auto* a : candidates) {
        out << "action " << a->id << " " << to_string(a->time) << ":";
        for (const auto& leaf : leaves) {
            const Instant lhs = resolve_tpi(leaf.action_point(), a->time);
            const Instant rhs = resolve_tpi(leaf.situation_point(), sit);
            out << " " << to_string(lhs) << comparison_symbol(leaf.comparison()) << to_string(rhs)
                << (compare(leaf.comparison(), lhs, rhs) ? " yes;" : " no;");
        }
        out << (eval_constraint(a->time, sit, tok.tc) ? " satisfies the tc" : " does not satisfy the tc") << "\n";
    }
    if (e.outcome.action) out << "matched action: " << *e.outcome.action << "\n";
    else out << "matched action: none\n";
    out << conclusion(e) << "\n";
}

} // namespace

std::size_t Workspace::errors() const {
    return static_cast<std::size_t>(std::count_if(diagnostics.begin(), diagnostics.end(),
                                                  [](const ParseDiagnostic& d) { return d.severity == Severity::Error; }));
}

Workspace load_workspace(const std::vector<std::string>& norm_files, const std::vector<std::string>& fact_files) {
    Workspace ws;
    std::vector<ValidityRecord> validity;
    for (const auto& path : norm_files) {
        auto text = read_file(path);
        if (!text) {
            ws.diagnostics.push_back(file_error(path, "cannot read norm file"));
            continue;
        }
        NormFile nf = parse_norms(*text, path);
        std::move(nf.diagnostics.begin(), nf.diagnostics.end(), std::back_inserter(ws.diagnostics));
        std::move(nf.rules.begin(), nf.rules.end(), std::back_inserter(ws.rules));
        std::move(nf.validity.begin(), nf.validity.end(), std::back_inserter(validity));
    }

    struct Located {
        Fact fact;
        SourceSpan span;
    };
    std::vector<Located> facts;
    for (const auto& path : fact_files) {
        auto text = read_file(path);
        if (!text) {
            ws.diagnostics.push_back(file_error(path, "cannot read fact file"));
            continue;
        }
        FactFile ff = parse_facts(*text, path);
        std::move(ff.diagnostics.begin(), ff.diagnostics.end(), std::back_inserter(ws.diagnostics));
        for (std::size_t i = 0; i < ff.facts.size(); ++i) facts.push_back({ff.facts[i], ff.spans[i]});
    }
    std::stable_sort(facts.begin(), facts.end(),
                     [](const Located& a, const Located& b) { return a.fact.index() < b.fact.index(); });
    for (const auto& f : facts) {
        try {
            ws.kb.assert_fact(f.fact);
        } catch (const Error& e) {
            ws.diagnostics.push_back({Severity::Error, f.span, e.what(), {}, {}});
        }
    }
    for (auto& rec : validity) {
        try {
            ws.kb.add_validity(rec);
        } catch (const Error& e) {
            ws.diagnostics.push_back(file_error(rec.norm_id, e.what()));
        }
    }
    std::map<std::string, const NormRule*> seen;
    for (const auto& r : ws.rules) {
        if (auto [it, fresh] = seen.emplace(r.id, &r); !fresh) {
            ws.diagnostics.push_back({Severity::Error, r.span, "duplicate norm id " + r.id, {}, it->second->span});
        }
    }
    return ws;
}

int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (!cfg.horizon) {
        err << "error: --horizon is required\n";
        return kExitLoadError;
    }
    Loaded l = load(cfg, err);
    if (l.errors) return kExitLoadError;
    ComplianceReport report;
    try {
        report = run_report(l.ws.kb, l.ws.rules, *cfg.horizon);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitLoadError;
    }
    for (const auto& f : report.findings) err << format_finding(f) << "\n";
    for (const auto& e : report.entries) {
        out << (cfg.mode == OutputMode::Records ? format_record(e, *cfg.horizon) : format_human(e, *cfg.horizon)) << "\n";
    }
    out << (cfg.mode == OutputMode::Records ? format_summary_record(report) : format_summary_human(report)) << "\n";
    return report.count(Verdict::Violated) ? kExitViolations : kExitOk;
}

int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    Loaded l = load(cfg, err);
    const auto findings = check_consistency(l.ws.kb);
    for (const auto& f : findings) out << format_finding(f) << "\n";
    const std::size_t total = findings.size() + l.errors;
    out << total << (total == 1 ? " finding" : " findings") << "\n";
    return total == 0 ? kExitOk : kExitViolations;
}

int cmd_explain(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (!cfg.horizon || !cfg.explain) {
        err << "error: explain needs --horizon and --explain agent:norm:situation\n";
        return kExitLoadError;
    }
    Loaded l = load(cfg, err);
    if (l.errors) return kExitLoadError;
    ComplianceReport report;
    try {
        report = run_report(l.ws.kb, l.ws.rules, *cfg.horizon);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitLoadError;
    }
    const auto& target = *cfg.explain;
    if (const auto* e = find_entry(report, target)) {
        explain_entry(l, *e, *cfg.horizon, out);
        return kExitOk;
    }
    out << "no token " << target.agent << ":" << target.norm_id << ":" << target.situation << "\n";
    std::vector<std::string> near;
    for (const auto& e : report.entries) {
        if (to_string(e.token.agent) == target.agent) {
            near.push_back(to_string(e.token.agent) + ":" + e.token.norm_id + ":" + e.token.situation);
        }
    }
    if (near.empty()) {
        out << "no tokens for agent " << target.agent << "\n";
    } else {
        out << "tokens for agent " << target.agent << ":\n";
        for (const auto& n : near) out << "  " << n << "\n";
    }
    return kExitViolations;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Norm compliance checker over situations and actions"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::int64_t horizon = 0;
    std::string format = "human";
    std::string explain;

    auto common = [&](CLI::App* sub, bool needs_horizon) {
        sub->add_option("--norms", cfg.norm_files, "norm files")->required()->expected(1, -1);
        sub->add_option("--facts", cfg.fact_files, "fact files")->required()->expected(1, -1);
        auto* h = sub->add_option("--horizon", horizon, "evaluation horizon (tick)");
        if (needs_horizon) h->required();
        sub->add_option("--format", format, "human or records")->check(CLI::IsMember({"human", "records"}));
    };
    auto* check = app.add_subcommand("check", "judge every token at the horizon");
    common(check, true);
    check->add_option("--explain", explain, "agent:norm:situation");
    auto* validate = app.add_subcommand("validate", "report parse diagnostics and consistency findings");
    common(validate, false);
    auto* explain_cmd = app.add_subcommand("explain", "trace one judgment");
    common(explain_cmd, true);
    explain_cmd->add_option("--explain,target", explain, "agent:norm:situation")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitLoadError;
    }

    cfg.mode = format == "records" ? OutputMode::Records : OutputMode::Human;
    for (const auto* sub : {check, explain_cmd}) {
        if (sub->parsed() || sub->count("--horizon")) cfg.horizon = Instant{horizon};
    }
    if (validate->parsed() && validate->count("--horizon")) cfg.horizon = Instant{horizon};
    if (!explain.empty()) {
        cfg.explain = parse_explain_target(explain);
        if (!cfg.explain) {
            err << "error: --explain expects agent:norm:situation, got '" << explain << "'\n";
            return kExitLoadError;
        }
    }

    if (validate->parsed()) return cmd_validate(cfg, out, err);
    if (explain_cmd->parsed() || cfg.explain) return cmd_explain(cfg, out, err);
    return cmd_check(cfg, out, err);
}

} // namespace normcheck
