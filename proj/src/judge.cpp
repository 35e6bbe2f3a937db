#include "normcheck/judge.hpp"

#include "normcheck/errors.hpp"

namespace normcheck {

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::Conformed: return "Conformed";
    case Verdict::Violated: return "Violated";
    case Verdict::Pending: return "Pending";
    case Verdict::Inapplicable: return "Inapplicable";
    }
    return "?";
}

std::string_view axiom_code(Ground g) {
    switch (g) {
    case Ground::NotValid: return "3.6.0";
    case Ground::ObligationMet: return "3.6.1";
    case Ground::ObligationMissed: return "3.6.2";
    case Ground::ProhibitionBreached: return "3.6.3";
    case Ground::ProhibitionRespected: return "3.6.4";
    case Ground::PermissionToAct: return "3.6.5";
    case Ground::PermissionToRefrain: return "3.6.6";
    case Ground::WindowOpen: return "open-window";
    }
    return "?";
}

std::vector<const ActionToken*> candidate_actions(const KnowledgeBase& kb, const NormToken& token) {
    std::vector<const ActionToken*> out;
    if (!token.agent.is_constant()) return out;
    for (const auto& [id, act] : kb.actions()) {
        if (act.actor == token.agent.name() && act.type == token.fluent.action) out.push_back(&act);
    }
    return out;
}

namespace {

const ActionToken* first_satisfying(const KnowledgeBase& kb, const NormToken& token, const Interval& situation) {
    for (const auto* act : candidate_actions(kb, token)) {
        if (eval_constraint(act->time, situation, token.tc)) return act;
    }
    return nullptr;
}

// Fills window and validity; true when the validity gate closes the case.
bool gated(const KnowledgeBase& kb, const NormToken& token, Outcome& out) {
    const auto& s = kb.situation(token.situation);
    out.window = window_upper_bound(token.tc, s.time);
    out.valid = static_cast<bool>(valid_wrt(kb, token.norm_id, token.situation));
    if (!out.valid) {
        out.verdict = Verdict::Inapplicable;
        out.ground = Ground::NotValid;
        return true;
    }
    return false;
}

} // namespace

Outcome judge_obligation(const KnowledgeBase& kb, const NormToken& token, Instant horizon) {
    if (token.fluent.negated || token.fluent.kind != Deontic::Obligation) {
        throw WrongFluentKind("judge_obligation needs a positive obl token, got " + to_string(token.fluent));
    }
    Outcome out;
    if (gated(kb, token, out)) return out;
    if (const auto* act = first_satisfying(kb, token, kb.situation(token.situation).time)) {
        out.verdict = Verdict::Conformed;
        out.ground = Ground::ObligationMet;
        out.action = act->id;
    } else if (out.window.closed_at(horizon)) {
        out.verdict = Verdict::Violated;
        out.ground = Ground::ObligationMissed;
    } else {
        out.verdict = Verdict::Pending;
        out.ground = Ground::WindowOpen;
    }
    return out;
}

Outcome judge_prohibition(const KnowledgeBase& kb, const NormToken& token, Instant horizon) {
    if (token.fluent.negated || token.fluent.kind != Deontic::Prohibition) {
        throw WrongFluentKind("judge_prohibition needs a positive pro token, got " + to_string(token.fluent));
    }
    Outcome out;
    if (gated(kb, token, out)) return out;
    const auto& s = kb.situation(token.situation);
    if (const auto* act = first_satisfying(kb, token, s.time)) {
        out.verdict = Verdict::Violated;
        out.ground = Ground::ProhibitionBreached;
        out.action = act->id;
        return out;
    }
    out.provisional_conform = !out.window.bounded();
    const bool closed = out.window.bounded() ? out.window.closed_at(horizon) : horizon > s.time.end();
    out.verdict = closed ? Verdict::Conformed : Verdict::Pending;
    out.ground = closed ? Ground::ProhibitionRespected : Ground::WindowOpen;
    return out;
}

Outcome judge_permission(const NormToken& token) {
    if (!token.fluent.negated) {
        throw WrongFluentKind("judge_permission needs a negated fluent, got " + to_string(token.fluent));
    }
    Outcome out;
    out.verdict = Verdict::Conformed;
    out.ground = token.fluent.kind == Deontic::Prohibition ? Ground::PermissionToAct : Ground::PermissionToRefrain;
    out.valid = true;
    return out;
}

Outcome judge(const KnowledgeBase& kb, const NormToken& token, Instant horizon) {
    if (token.fluent.negated) {
        Outcome out = judge_permission(token);
        gated(kb, token, out);
        return out;
    }
    if (token.fluent.kind == Deontic::Obligation) return judge_obligation(kb, token, horizon);
    return judge_prohibition(kb, token, horizon);
}

} // namespace normcheck
