#pragma once

#include <optional>
#include <span>
#include <vector>

#include "normcheck/knowledge_base.hpp"
#include "normcheck/norm.hpp"

namespace normcheck {

/// Conjunctive query over the KB with negation as failure. Returns every
/// extension of `seed` that satisfies the body, deduplicated and sorted.
///
/// Literals are evaluated left to right. A negated literal or interval
/// predicate reached with an unbound variable throws UnsafeRule.
std::vector<Binding> match_body(const KnowledgeBase& kb, std::span<const BodyLiteral> body, const Binding& seed = {});

/// Truth of a single literal under a binding that already grounds it.
bool literal_holds(const KnowledgeBase& kb, const BodyLiteral& literal, const Binding& binding);

/// timeS/timeE/timeP/timeA of a bound argument; nullopt if the argument is
/// unbound or names no entity of the right kind.
std::optional<Interval> resolve_time_term(const KnowledgeBase& kb, const TimeTerm& term, const Binding& binding);

} // namespace normcheck
