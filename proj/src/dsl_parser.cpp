#include <algorithm>
#include <charconv>
#include <map>

#include "dsl_lexer.hpp"
#include "normcheck/dsl.hpp"
#include "normcheck/errors.hpp"

namespace normcheck {

using detail::Tok;
using detail::Token;

std::string format_diagnostic(const ParseDiagnostic& d) {
    std::string out = d.span.file + ":" + std::to_string(d.span.line) + ":" + std::to_string(d.span.column) + ": ";
    out += d.severity == Severity::Error ? "error: " : "warning: ";
    out += d.message;
    if (!d.expected.empty()) out += " (expected " + d.expected + ")";
    if (d.related) {
        out += " [see " + d.related->file + ":" + std::to_string(d.related->line) + ":" +
               std::to_string(d.related->column) + "]";
    }
    return out;
}

bool NormFile::ok() const {
    return std::none_of(diagnostics.begin(), diagnostics.end(),
                        [](const ParseDiagnostic& d) { return d.severity == Severity::Error; });
}

bool FactFile::ok() const {
    return std::none_of(diagnostics.begin(), diagnostics.end(),
                        [](const ParseDiagnostic& d) { return d.severity == Severity::Error; });
}

namespace {

// Thrown after a diagnostic has been recorded; caught at a sync point.
struct Abort {};

class Cursor {
public:
    Cursor(std::vector<Token> toks, std::string file, std::vector<ParseDiagnostic>& diags)
        : toks_(std::move(toks)), file_(std::move(file)), diags_(diags) {}

    const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
    bool at(Tok k) const { return peek().kind == k; }
    bool at_ident(std::string_view text) const { return at(Tok::Ident) && peek().text == text; }
    bool at_end() const { return at(Tok::End); }

    const Token& advance() {
        const Token& t = peek();
        if (pos_ + 1 < toks_.size()) ++pos_;
        return t;
    }

    const Token& expect(Tok k, std::string_view context = {}) {
        if (!at(k)) fail(peek(), "unexpected " + shown(peek()) + (context.empty() ? "" : " " + std::string(context)),
                         std::string(detail::describe(k)));
        return advance();
    }

    const Token& expect_ident(std::string_view text) {
        if (!at_ident(text)) fail(peek(), "unexpected " + shown(peek()), "'" + std::string(text) + "'");
        return advance();
    }

    SourceSpan span(const Token& t) const { return {file_, t.line, t.column, t.end_column}; }

    SourceSpan span_from(const Token& first) const {
        const Token& last = toks_[pos_ == 0 ? 0 : pos_ - 1];
        return {file_, first.line, first.column, last.line == first.line ? last.end_column : first.end_column};
    }

    [[noreturn]] void fail(const Token& at, std::string message, std::string expected = {}) {
        diags_.push_back({Severity::Error, span(at), std::move(message), std::move(expected), {}});
        throw Abort{};
    }

    void warn(const Token& at, std::string message) {
        diags_.push_back({Severity::Warning, span(at), std::move(message), {}, {}});
    }

    static std::string shown(const Token& t) {
        if (t.kind == Tok::End) return "end of input";
        return "'" + t.text + "'";
    }

    // Skips to just past the next ';' or to (not past) the next '}' at the
    // current nesting depth.
    void sync_statement() {
        int depth = 0;
        while (!at_end()) {
            if (at(Tok::LBrace)) ++depth;
            if (at(Tok::RBrace)) {
                if (depth == 0) return;
                --depth;
            }
            if (at(Tok::Semi) && depth == 0) {
                advance();
                return;
            }
            advance();
        }
    }

    std::int64_t integer(const Token& t) {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc{} || ptr != t.text.data() + t.text.size()) fail(t, "integer out of range: " + t.text);
        return v;
    }

    const std::string& file() const { return file_; }
    std::vector<ParseDiagnostic>& diags() { return diags_; }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::string file_;
    std::vector<ParseDiagnostic>& diags_;
};

// ---------------------------------------------------------------------------
// Shared grammar pieces

Term parse_term(Cursor& c, bool allow_variables) {
    if (c.at(Tok::Int)) return Term::constant(c.advance().text);
    const Token& name = c.expect(Tok::Ident, "where a term was expected");
    if (!c.at(Tok::LParen)) {
        if (allow_variables && detail::is_variable_name(name.text)) return Term::variable(name.text);
        return Term::constant(name.text);
    }
    c.advance();
    std::vector<Term> args;
    args.push_back(parse_term(c, allow_variables));
    while (c.at(Tok::Comma)) {
        c.advance();
        args.push_back(parse_term(c, allow_variables));
    }
    c.expect(Tok::RParen, "in argument list");
    return Term::compound(name.text, std::move(args));
}

TimePointImage parse_tpi(Cursor& c) {
    const Token& t = c.expect(Tok::Ident, "where a time point image was expected");
    if (t.text == "B") return tc::B;
    if (t.text == "E") return tc::E;
    if (t.text == "tdisp" || t.text == "disp" || t.text == "tplus") {
        c.expect(Tok::LParen);
        const TimePointImage inner = parse_tpi(c);
        c.expect(Tok::Comma, "in tdisp(point, offset)");
        const std::int64_t by = c.integer(c.expect(Tok::Int, "as tdisp offset"));
        c.expect(Tok::RParen);
        return inner.displaced(by);
    }
    c.fail(t, "unknown time point image '" + t.text + "'", "B, E or tdisp(...)");
}

TemporalConstraint parse_tc_expr(Cursor& c) {
    const Token& t = c.expect(Tok::Ident, "where a temporal constraint was expected");
    static const std::map<std::string, Comparison, std::less<>> kBasic{
        {"eq", Comparison::Eq}, {"ge", Comparison::Ge}, {"gt", Comparison::Gt},
        {"le", Comparison::Le}, {"lt", Comparison::Lt}};
    if (auto it = kBasic.find(t.text); it != kBasic.end()) {
        c.expect(Tok::LParen);
        const auto action = parse_tpi(c);
        c.expect(Tok::Comma, "between the two time point images");
        const auto situation = parse_tpi(c);
        c.expect(Tok::RParen, "after the second time point image");
        return TemporalConstraint::basic(it->second, action, situation);
    }
    if (t.text == "and" || t.text == "or") {
        c.expect(Tok::LParen);
        auto lhs = parse_tc_expr(c);
        c.expect(Tok::Comma);
        auto rhs = parse_tc_expr(c);
        c.expect(Tok::RParen);
        return t.text == "and" ? TemporalConstraint::conj(std::move(lhs), std::move(rhs))
                               : TemporalConstraint::disj(std::move(lhs), std::move(rhs));
    }
    if (t.text == "not" || t.text == "neg") {
        c.expect(Tok::LParen);
        auto operand = parse_tc_expr(c);
        c.expect(Tok::RParen);
        return TemporalConstraint::negation(std::move(operand));
    }
    c.fail(t, "unknown temporal constraint '" + t.text + "'", "eq, ge, gt, le, lt, and, or or not");
}

// ---------------------------------------------------------------------------
// Norm files

NormativeFluent parse_fluent(Cursor& c) {
    bool negated = false;
    while (c.at(Tok::Tilde)) {
        c.advance();
        negated = !negated;
    }
    const Token& k = c.expect(Tok::Ident, "where obl(...) or pro(...) was expected");
    NormativeFluent f;
    if (k.text == "obl") {
        f.kind = Deontic::Obligation;
    } else if (k.text == "pro") {
        f.kind = Deontic::Prohibition;
    } else {
        c.fail(k, "unknown normative fluent '" + k.text + "'", "obl or pro");
    }
    c.expect(Tok::LParen);
    f.action = parse_term(c, true);
    c.expect(Tok::RParen);
    f.negated = negated;
    return f;
}

std::optional<TimeFunction> time_function(std::string_view name) {
    if (name == "timeS") return TimeFunction::Situation;
    if (name == "timeE") return TimeFunction::Event;
    if (name == "timeP") return TimeFunction::Process;
    if (name == "timeA") return TimeFunction::Action;
    return std::nullopt;
}

TimeTerm parse_time_term(Cursor& c) {
    const Token& t = c.expect(Tok::Ident, "where a time term was expected");
    auto fn = time_function(t.text);
    if (!fn) c.fail(t, "unknown time function '" + t.text + "'", "timeS, timeE, timeP or timeA");
    c.expect(Tok::LParen);
    Term arg = parse_term(c, true);
    c.expect(Tok::RParen);
    return {*fn, std::move(arg)};
}

Atom parse_atom(Cursor& c) {
    if (c.at(Tok::HoldsStar) || c.at_ident("holds")) {
        const bool fully = c.advance().kind == Tok::HoldsStar;
        c.expect(Tok::LParen);
        Term fluent = parse_term(c, true);
        c.expect(Tok::Comma, "between fluent and situation");
        Term sit = parse_term(c, true);
        c.expect(Tok::RParen);
        return HoldsAtom{std::move(fluent), std::move(sit), fully};
    }
    if (c.at_ident("event-type") || c.at_ident("process-type")) {
        const bool process = c.advance().text == "process-type";
        c.expect(Tok::LParen);
        Term subject = parse_term(c, true);
        c.expect(Tok::Comma);
        std::string type = c.expect(Tok::Ident, "as type name").text;
        c.expect(Tok::RParen);
        return TypeAtom{std::move(subject), std::move(type), process};
    }
    if (c.at(Tok::Ident) && c.peek(1).kind == Tok::LParen) {
        const std::string& name = c.peek().text;
        std::optional<std::variant<IntervalPredicate, AllenRelation>> pred;
        if (auto p = interval_predicate_from_name(name)) pred = *p;
        if (auto r = allen_from_name(name)) pred = *r;
        const bool time_args = c.peek(2).kind == Tok::Ident && time_function(c.peek(2).text).has_value();
        if (pred) {
            c.advance();
            c.advance();
            IntervalAtom atom{*pred, {}};
            atom.args.push_back(parse_time_term(c));
            while (c.at(Tok::Comma)) {
                c.advance();
                atom.args.push_back(parse_time_term(c));
            }
            c.expect(Tok::RParen);
            return atom;
        }
        if (time_args) c.fail(c.peek(), "unknown interval predicate '" + name + "'", "within, subinterval, cover or an Allen relation");
    }
    return DomainAtom{parse_term(c, true)};
}

BodyLiteral parse_literal(Cursor& c) {
    const Token& first = c.peek();
    BodyLiteral lit;
    if (c.at_ident("not") && c.peek(1).kind != Tok::LParen) {
        c.advance();
        lit.negated = true;
    }
    lit.atom = parse_atom(c);
    lit.span = c.span_from(first);
    c.expect(Tok::Semi, "after body literal");
    return lit;
}

struct RuleDraft {
    NormRule rule;
    bool broken = false;
};

void parse_when(Cursor& c, RuleDraft& d) {
    c.expect(Tok::LBrace, "after 'when'");
    while (!c.at(Tok::RBrace) && !c.at_end()) {
        try {
            d.rule.body.push_back(parse_literal(c));
        } catch (const Abort&) {
            d.broken = true;
            c.sync_statement();
        }
    }
    c.expect(Tok::RBrace, "to close 'when'");
}

void parse_clause(Cursor& c, RuleDraft& d, std::map<std::string, bool>& seen) {
    const Token& kw = c.expect(Tok::Ident, "where a clause keyword was expected");
    static const char* const kClauses[] = {"agent", "effect", "situation", "tc", "when"};
    if (std::find(std::begin(kClauses), std::end(kClauses), kw.text) == std::end(kClauses)) {
        c.fail(kw, "unknown clause '" + kw.text + "'", "agent, effect, situation, tc or when");
    }
    if (seen[kw.text]) c.fail(kw, "duplicate '" + kw.text + "' clause");
    seen[kw.text] = true;

    if (kw.text == "agent") {
        const Token& at = c.peek();
        d.rule.agent = parse_term(c, true);
        if (d.rule.agent.arity() > 0) c.fail(at, "agent must be a variable or a constant");
    } else if (kw.text == "effect") {
        d.rule.effect = parse_fluent(c);
    } else if (kw.text == "situation") {
        const Token& v = c.expect(Tok::Ident, "as situation variable");
        if (!detail::is_variable_name(v.text)) c.fail(v, "situation must be a variable, got '" + v.text + "'", "variable");
        d.rule.situation_var = v.text;
    } else if (kw.text == "tc") {
        d.rule.tc = parse_tc_expr(c);
    } else {
        parse_when(c, d);
        return;
    }
    c.expect(Tok::Semi, "after '" + kw.text + "' clause");
}

std::optional<NormRule> parse_rule(Cursor& c) {
    c.expect_ident("norm");
    const Token& id = c.expect(Tok::Ident, "as norm id");
    RuleDraft d;
    d.rule.id = id.text;
    d.rule.span = c.span(id);
    c.expect(Tok::LBrace, "after norm id");
    std::map<std::string, bool> seen;
    while (!c.at(Tok::RBrace) && !c.at_end()) {
        try {
            parse_clause(c, d, seen);
        } catch (const Abort&) {
            d.broken = true;
            c.sync_statement();
        }
    }
    c.expect(Tok::RBrace, "to close norm " + id.text);
    for (const char* required : {"agent", "effect", "situation", "tc", "when"}) {
        if (!seen[required]) {
            d.broken = true;
            c.diags().push_back({Severity::Error, d.rule.span,
                                 "norm " + id.text + " has no '" + required + "' clause", "", {}});
        }
    }
    if (d.broken) return std::nullopt;
    return d.rule;
}

struct Directive {
    std::string id;
    std::int64_t tick;
    SourceSpan span;
};

void skip_top_level(Cursor& c) {
    int depth = 0;
    while (!c.at_end()) {
        if (depth == 0 && (c.at_ident("norm") || c.at_ident("enact") || c.at_ident("repeal"))) return;
        if (c.at(Tok::LBrace)) ++depth;
        if (c.at(Tok::RBrace)) {
            c.advance();
            if (depth > 0 && --depth == 0) return;
            continue;
        }
        if (c.at(Tok::Semi) && depth == 0) {
            c.advance();
            return;
        }
        c.advance();
    }
}

void check_rules(NormFile& out) {
    std::map<std::string, const NormRule*> first;
    std::vector<NormRule> kept;
    for (auto& rule : out.rules) {
        bool ok = true;
        if (auto [it, inserted] = first.emplace(rule.id, &rule); !inserted) {
            out.diagnostics.push_back({Severity::Error, rule.span, "duplicate norm id " + rule.id, "", it->second->span});
            ok = false;
        }
        for (const auto& issue : check_rule_safety(rule)) {
            SourceSpan where = issue.literal ? rule.body[*issue.literal].span : rule.span;
            std::string msg = "norm " + rule.id + ": " + issue.message;
            out.diagnostics.push_back({Severity::Error, where, std::move(msg), "", {}});
            ok = false;
        }
        if (ok) kept.push_back(rule);
    }
    out.rules = std::move(kept);
}

void collect_validity(NormFile& out, const std::vector<Directive>& enacts, const std::vector<Directive>& repeals) {
    std::map<std::string, ValidityRecord> records;
    std::map<std::string, SourceSpan> enact_at;
    for (const auto& e : enacts) {
        if (auto it = enact_at.find(e.id); it != enact_at.end()) {
            out.diagnostics.push_back({Severity::Error, e.span, "norm " + e.id + " is enacted more than once", "", it->second});
            continue;
        }
        enact_at.emplace(e.id, e.span);
        records[e.id] = ValidityRecord{e.id, Instant{e.tick}, {}};
    }
    for (const auto& r : repeals) {
        auto it = records.find(r.id);
        if (it == records.end()) {
            out.diagnostics.push_back({Severity::Error, r.span, "repeal of " + r.id + " without an enactment", "", {}});
            continue;
        }
        if (!(it->second.enact < Instant{r.tick})) {
            out.diagnostics.push_back({Severity::Error, r.span,
                                       "repeal of " + r.id + " at " + std::to_string(r.tick) +
                                           " does not come after its enactment at " + to_string(it->second.enact),
                                       "", enact_at[r.id]});
            continue;
        }
        it->second.repeals.insert(Instant{r.tick});
    }
    for (auto& [_, rec] : records) out.validity.push_back(std::move(rec));
}

void sort_diagnostics(std::vector<ParseDiagnostic>& diags) {
    std::stable_sort(diags.begin(), diags.end(), [](const ParseDiagnostic& a, const ParseDiagnostic& b) {
        return std::tie(a.span.line, a.span.column) < std::tie(b.span.line, b.span.column);
    });
}

// ---------------------------------------------------------------------------
// Fact files

Interval parse_interval(Cursor& c) {
    const Token& open = c.expect(Tok::LBracket, "to start an interval");
    const auto b = c.integer(c.expect(Tok::Int, "as interval begin"));
    c.expect(Tok::Comma, "between interval bounds");
    const auto e = c.integer(c.expect(Tok::Int, "as interval end"));
    c.expect(Tok::RBracket, "to close the interval");
    if (!(b < e)) {
        c.fail(open, "improper interval [" + std::to_string(b) + "," + std::to_string(e) + "]: begin must precede end");
    }
    return Interval{b, e};
}

std::string parse_id(Cursor& c, std::string_view what) { return c.expect(Tok::Ident, "as " + std::string(what)).text; }

Fact parse_record(Cursor& c) {
    const Token& head = c.peek();
    if (c.at(Tok::HoldsStar) || c.at_ident("holds")) {
        const bool fully = c.advance().kind == Tok::HoldsStar;
        Term fluent = parse_term(c, false);
        std::string sit = parse_id(c, "situation id");
        return HoldsFact{std::move(fluent), std::move(sit), fully};
    }
    if (!c.at(Tok::Ident)) c.fail(head, "unexpected " + Cursor::shown(head), "a record keyword");
    const std::string kw = c.advance().text;
    if (kw == "situation") {
        std::string id = parse_id(c, "situation id");
        return Situation{std::move(id), parse_interval(c)};
    }
    if (kw == "event" || kw == "process") {
        std::string id = parse_id(c, kw + " id");
        Interval time = parse_interval(c);
        c.expect_ident("type");
        std::string type = parse_id(c, kw + " type");
        if (kw == "event") return EventToken{std::move(id), time, std::move(type)};
        ProcessToken p{std::move(id), time, std::move(type), {}};
        if (c.at_ident("steps")) {
            c.advance();
            p.steps.push_back(parse_id(c, "situation id"));
            while (c.at(Tok::Ident)) p.steps.push_back(c.advance().text);
        }
        return p;
    }
    if (kw == "action") {
        std::string id = parse_id(c, "action id");
        c.expect_ident("actor");
        std::string actor = parse_id(c, "actor");
        c.expect_ident("type");
        Term type = parse_term(c, false);
        return ActionToken{std::move(id), std::move(actor), std::move(type), parse_interval(c)};
    }
    if (kw == "imply") {
        Term from = parse_term(c, false);
        Term to = parse_term(c, false);
        return ImplyFact{std::move(from), std::move(to)};
    }
    if (kw == "fact") return DomainFact{parse_term(c, false)};
    c.fail(head, "unknown record '" + kw + "'", "situation, event, process, action, holds, holds**, imply or fact");
}

} // namespace

NormFile parse_norms(std::string_view text, std::string file) {
    NormFile out;
    Cursor c(detail::lex(text, file, out.diagnostics), file, out.diagnostics);
    std::vector<Directive> enacts, repeals;
    while (!c.at_end()) {
        try {
            if (c.at_ident("norm")) {
                if (auto rule = parse_rule(c)) out.rules.push_back(std::move(*rule));
            } else if (c.at_ident("enact") || c.at_ident("repeal")) {
                const Token& kw = c.advance();
                const Token& id = c.expect(Tok::Ident, "as norm id");
                const auto tick = c.integer(c.expect(Tok::Int, "as tick"));
                c.expect(Tok::Semi, "after directive");
                (kw.text == "enact" ? enacts : repeals).push_back({id.text, tick, c.span(id)});
            } else {
                c.fail(c.peek(), "unexpected " + Cursor::shown(c.peek()) + " at top level", "norm, enact or repeal");
            }
        } catch (const Abort&) {
            skip_top_level(c);
        }
    }
    check_rules(out);
    collect_validity(out, enacts, repeals);
    sort_diagnostics(out.diagnostics);
    return out;
}

FactFile parse_facts(std::string_view text, std::string file) {
    FactFile out;
    auto toks = detail::lex(text, file, out.diagnostics);
    // One record per line: split the stream at line changes.
    std::size_t i = 0;
    while (toks[i].kind != Tok::End) {
        std::vector<Token> line;
        const int ln = toks[i].line;
        while (toks[i].kind != Tok::End && toks[i].line == ln) line.push_back(toks[i++]);
        line.push_back({Tok::End, "", ln, line.back().end_column, line.back().end_column});
        Cursor c(std::move(line), file, out.diagnostics);
        try {
            const Token& first = c.peek();
            Fact f = parse_record(c);
            if (!c.at_end()) c.fail(c.peek(), "unexpected " + Cursor::shown(c.peek()) + " after record", "end of line");
            out.spans.push_back(c.span_from(first));
            out.facts.push_back(std::move(f));
        } catch (const Abort&) {
        }
    }
    sort_diagnostics(out.diagnostics);
    return out;
}

TemporalConstraint parse_tc(std::string_view text) {
    std::vector<ParseDiagnostic> diags;
    Cursor c(detail::lex(text, "<tc>", diags), "<tc>", diags);
    try {
        if (diags.empty()) {
            auto tc = parse_tc_expr(c);
            if (c.at_end()) return tc;
            c.fail(c.peek(), "trailing input " + Cursor::shown(c.peek()), "end of input");
        }
    } catch (const Abort&) {
    }
    throw SyntaxError(format_diagnostic(diags.front()));
}

} // namespace normcheck
