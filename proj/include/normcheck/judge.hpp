#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "normcheck/knowledge_base.hpp"
#include "normcheck/norm.hpp"
#include "normcheck/window.hpp"

namespace normcheck {

enum class Verdict { Conformed, Violated, Pending, Inapplicable };

std::string_view to_string(Verdict v);

/// Which inference rule produced a verdict. The codes are printed in
/// explanations and findings.
enum class Ground {
    NotValid,               // 3.6.0 fails
    ObligationMet,          // 3.6.1
    ObligationMissed,       // 3.6.2
    ProhibitionBreached,    // 3.6.3
    ProhibitionRespected,   // 3.6.4
    PermissionToAct,        // 3.6.5
    PermissionToRefrain,    // 3.6.6
    WindowOpen,
};

std::string_view axiom_code(Ground g);

struct Outcome {
    Verdict verdict = Verdict::Pending;
    Ground ground = Ground::WindowOpen;
    std::optional<std::string> action;  // conforming or violating action
    WindowBound window = WindowBound::unbounded();
    bool valid = false;
    // Set for prohibitions whose TC admits violations arbitrarily late.
    bool provisional_conform = false;

    friend bool operator==(const Outcome&, const Outcome&) = default;
};

/// Recorded actions by the token's agent whose type equals the token's
/// action type, in id order.
std::vector<const ActionToken*> candidate_actions(const KnowledgeBase& kb, const NormToken& token);

/// Positive obligation: Conformed if a candidate action satisfies the TC,
/// Violated once the horizon is past the window, Pending before that.
/// Throws WrongFluentKind for anything but a positive obl.
Outcome judge_obligation(const KnowledgeBase& kb, const NormToken& token, Instant horizon);

/// Positive prohibition: Violated if a candidate action satisfies the TC,
/// Conformed once the horizon is past the window, Pending before that. An
/// unbounded window closes when the warranting situation ends, and the
/// conformance stays flagged provisional.
Outcome judge_prohibition(const KnowledgeBase& kb, const NormToken& token, Instant horizon);

/// Negated fluents: always Conformed.
Outcome judge_permission(const NormToken& token);

/// Dispatches on the token's fluent.
Outcome judge(const KnowledgeBase& kb, const NormToken& token, Instant horizon);

} // namespace normcheck
