#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "normcheck/dsl.hpp"
#include "normcheck/knowledge_base.hpp"
#include "normcheck/norm.hpp"
#include "normcheck/time.hpp"

namespace normcheck {

enum class OutputMode { Human, Records };

struct ExplainTarget {
    std::string agent;
    std::string norm_id;
    std::string situation;
};

/// Parses `agent:norm-id:situation`.
std::optional<ExplainTarget> parse_explain_target(const std::string& text);

struct RunConfig {
    std::vector<std::string> norm_files;
    std::vector<std::string> fact_files;
    std::optional<Instant> horizon;
    OutputMode mode = OutputMode::Human;
    std::optional<ExplainTarget> explain;
};

/// Rules and facts read from disk. Diagnostics cover unreadable files,
/// parse errors, facts the KB rejects and norm ids defined in two files.
struct Workspace {
    std::vector<NormRule> rules;
    KnowledgeBase kb;
    std::vector<ParseDiagnostic> diagnostics;

    std::size_t errors() const;
};

/// Fact records are asserted declarations first, so files may list them in
/// any order.
Workspace load_workspace(const std::vector<std::string>& norm_files, const std::vector<std::string>& fact_files);

/// Exit codes shared by the commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitLoadError = 2;

/// Report to `out`, diagnostics and findings to `err`. 0 without violations,
/// 1 with, 2 when any input fails to load.
int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parse diagnostics, rule safety and consistency findings. 0 iff there are
/// no errors and no findings.
int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Trace of one judgment. 0 when the token exists, 1 when it does not,
/// 2 on load errors.
int cmd_explain(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Entry point behind the executable.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace normcheck
