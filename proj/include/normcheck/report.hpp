#pragma once

#include <span>
#include <string>
#include <vector>

#include "normcheck/judge.hpp"
#include "normcheck/knowledge_base.hpp"
#include "normcheck/norm.hpp"

namespace normcheck {

struct ReportEntry {
    NormToken token;
    Outcome outcome;
};

struct ComplianceReport {
    Instant horizon;
    std::vector<ReportEntry> entries;
    std::vector<AxiomViolation> findings;

    std::size_t count(Verdict v) const;
};

/// Instantiates every rule in order and judges each token at the horizon.
ComplianceReport run_report(const KnowledgeBase& kb, std::span<const NormRule> rules, Instant horizon);

/// outcome=... agent=... norm=... situation=... tc="..." evidence=... window=... horizon=...
std::string format_record(const ReportEntry& entry, Instant horizon);
std::string format_summary_record(const ComplianceReport& report);

/// "bob violated OB101 with regard to situation s1 (...)"
std::string format_human(const ReportEntry& entry, Instant horizon);
std::string format_summary_human(const ComplianceReport& report);

} // namespace normcheck
