#pragma once

// Random knowledge bases shared by the property tests and the acceptance
// runner.

#include <string>
#include <vector>

#include "generators.hpp"
#include "normcheck/knowledge_base.hpp"
#include "normcheck/norm.hpp"
#include "oracles.hpp"

namespace scenario {

using namespace normcheck;

/// One situation, a validity record, up to three actions and one token.
struct RandomCase {
    KnowledgeBase kb;
    NormToken token;
    std::int64_t horizon;
};

inline RandomCase random_case(gen::Rng& rng) {
    RandomCase rc;
    const auto sit = gen::interval(rng, 0, 20, 10);
    rc.kb.assert_fact(Situation{"s", sit});
    const int enact = gen::uniform(rng, -5, 12);
    std::set<Instant> repeals;
    if (gen::coin(rng, 0.3)) repeals.insert(Instant{enact + gen::uniform(rng, 1, 30)});
    rc.kb.add_validity({"N", Instant{enact}, repeals});
    static const std::vector<std::string> kActors{"ann", "ben"};
    static const std::vector<std::string> kTypes{"go", "stay"};
    const int n = gen::uniform(rng, 0, 3);
    for (int i = 0; i < n; ++i) {
        rc.kb.assert_fact(ActionToken{"a" + std::to_string(i), gen::pick(rng, kActors),
                                      Term::constant(gen::pick(rng, kTypes)), gen::interval(rng, -5, 30, 10)});
    }
    rc.token = {Term::constant("ann"),
                {gen::coin(rng) ? Deontic::Obligation : Deontic::Prohibition, Term::constant("go"),
                 gen::coin(rng, 0.15)},
                "s",
                gen::tc(rng, 3),
                "N"};
    rc.horizon = gen::uniform(rng, 0, 45);
    return rc;
}

/// A process over a span of at most 6 ticks whose steps follow a random
/// composition, sometimes perturbed so that the chain is broken.
struct ProcessCase {
    KnowledgeBase kb;
    std::string process;
    std::string situation;
};

inline void add_situation(KnowledgeBase& kb, const std::string& id, std::int64_t b, std::int64_t e) {
    kb.assert_fact(Situation{id, Interval(b, e)});
}

inline ProcessCase random_process(gen::Rng& rng) {
    ProcessCase pc;
    auto& kb = pc.kb;
    int counter = 0;
    auto fresh = [&](const char* prefix) { return prefix + std::to_string(counter++); };
    const auto busy = Term::constant("busy");

    const int len = gen::uniform(rng, 1, 6);
    const int begin = gen::uniform(rng, 0, 4);
    pc.situation = fresh("s");
    add_situation(kb, pc.situation, begin, begin + len);
    pc.process = fresh("p");

    std::vector<std::string> steps;
    const auto comps = oracle::compositions({begin, begin + len});
    if (!comps.empty() && gen::coin(rng, 0.85)) {
        auto parts = gen::pick(rng, comps);
        if (gen::coin(rng, 0.2)) {
            // Break the chain by moving one cut.
            auto& part = parts[static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<int>(parts.size()) - 1))];
            if (part.e - part.b > 1) part.e -= 1;
        }
        for (const auto& part : parts) {
            const auto id = fresh("s");
            add_situation(kb, id, part.b, part.e);
            steps.push_back(id);
            switch (gen::uniform(rng, 0, 3)) {
                case 0: {
                    const auto ev = fresh("e");
                    kb.assert_fact(EventToken{ev, Interval(part.b, part.e), "t"});
                    kb.assert_fact(HoldsFact{occurring(ev), id, true});
                    break;
                }
                case 1: kb.assert_fact(HoldsFact{busy, id, true}); break;
                case 2: {
                    if (part.e - part.b < 2) break;
                    const auto sub = fresh("p");
                    const int cut = gen::uniform(rng, static_cast<int>(part.b) + 1, static_cast<int>(part.e) - 1);
                    const auto left = fresh("s");
                    const auto right = fresh("s");
                    add_situation(kb, left, part.b, cut);
                    add_situation(kb, right, cut, part.e);
                    kb.assert_fact(HoldsFact{busy, left, true});
                    if (gen::coin(rng, 0.7)) {
                        const auto ev = fresh("e");
                        kb.assert_fact(EventToken{ev, Interval(cut, part.e), "t"});
                        kb.assert_fact(HoldsFact{occurring(ev), right, true});
                    }
                    kb.assert_fact(ProcessToken{sub, Interval(part.b, part.e), "t", {left, right}});
                    kb.assert_fact(HoldsFact{prog(sub), id, gen::coin(rng)});
                    break;
                }
                default: break;
            }
        }
    } else if (gen::coin(rng)) {
        const auto ev = fresh("e");
        kb.assert_fact(EventToken{ev, Interval(begin, begin + len), "t"});
        kb.assert_fact(HoldsFact{occurring(ev), pc.situation, true});
    }
    kb.assert_fact(ProcessToken{pc.process, Interval(begin, begin + len), "Course", steps});
    kb.assert_fact(HoldsFact{prog(pc.process), pc.situation, true});
    return pc;
}

} // namespace scenario
