#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "normcheck/constraint.hpp"
#include "normcheck/knowledge_base.hpp"
#include "normcheck/norm.hpp"

namespace normcheck {

enum class Severity { Error, Warning };

struct ParseDiagnostic {
    Severity severity = Severity::Error;
    SourceSpan span;
    std::string message;
    std::string expected;             // hint, may be empty
    std::optional<SourceSpan> related;  // e.g. the first definition of a duplicate
};

/// file:line:col: error: message (expected ...)
std::string format_diagnostic(const ParseDiagnostic& d);

struct NormFile {
    std::vector<NormRule> rules;
    std::vector<ValidityRecord> validity;
    std::vector<ParseDiagnostic> diagnostics;

    bool ok() const;
};

/// Parses a .norm file: `norm ID { ... }` rules plus `enact ID n;` and
/// `repeal ID n;` directives. Recovers at `;` and `}` so one pass reports
/// every error. Rules with errors are dropped; diagnostics come back sorted
/// by position.
NormFile parse_norms(std::string_view text, std::string file = "<input>");

struct FactFile {
    std::vector<Fact> facts;
    std::vector<SourceSpan> spans;  // parallel to facts
    std::vector<ParseDiagnostic> diagnostics;

    bool ok() const;
};

/// Parses a .facts file, one record per line.
FactFile parse_facts(std::string_view text, std::string file = "<input>");

/// Parses a bare temporal constraint such as `and(le(E,tdisp(B,10)),ge(E,B))`.
/// Throws SyntaxError.
TemporalConstraint parse_tc(std::string_view text);

std::string print_tpi(const TimePointImage& p);
std::string print_tc(const TemporalConstraint& tc);
std::string print_fluent(const NormativeFluent& f);
std::string print_literal(const BodyLiteral& lit);
std::string print_rule(const NormRule& rule);
std::string print_validity(const ValidityRecord& rec);
std::string print_fact(const Fact& fact);

} // namespace normcheck
