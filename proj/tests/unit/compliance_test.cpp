#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "normcheck/dsl.hpp"
#include "normcheck/errors.hpp"
#include "normcheck/judge.hpp"
#include "normcheck/matcher.hpp"
#include "normcheck/report.hpp"
#include "normcheck/window.hpp"
#include "oracles.hpp"
#include "scenarios.hpp"

using namespace normcheck;
using namespace normcheck::tc;

namespace {

Term c(const std::string& name) { return Term::constant(name); }

NormToken ob101_token() {
    return {c("bob"), {Deontic::Obligation, Term::compound("arrive-at", {c("room5")}), false}, "s1",
            all(le(E, tdisp(B, 10)), ge(E, B)), "OB101"};
}

KnowledgeBase ob101_kb(std::optional<Interval> action) {
    KnowledgeBase kb;
    kb.assert_fact(Situation{"s1", Interval(600, 660)});
    kb.add_validity({"OB101", Instant{0}, {}});
    if (action) kb.assert_fact(ActionToken{"a1", "bob", Term::compound("arrive-at", {c("room5")}), *action});
    return kb;
}

std::int64_t sweep_limit(const ComplianceReport& r, const KnowledgeBase& kb) {
    std::int64_t limit = 0;
    for (const auto& e : r.entries) {
        const auto end = kb.situation(e.token.situation).time.end().tick;
        limit = std::max(limit, e.outcome.window.bounded() ? e.outcome.window.upper().tick : end);
        limit = std::max(limit, end);
    }
    return limit + 5;
}

} // namespace

TEST(MatchBody, Ob101FixtureBinding) {
    const auto ws = fixture::load("ob101", "violate.facts");
    const auto bindings = match_body(ws.kb, ws.rules.at(0).body);
    ASSERT_EQ(bindings.size(), 1u);
    EXPECT_EQ(bindings[0], (Binding{{"A", c("bob")}, {"Ev", c("e1")}, {"S", c("s1")}, {"V", c("room5")}}));
}

TEST(MatchBody, EmptyBodyYieldsSeed) {
    const Binding seed{{"X", c("x")}};
    const auto out = match_body(KnowledgeBase{}, {}, seed);
    ASSERT_EQ(out.size(), 1u);
    EXPECT_EQ(out[0], seed);
}

TEST(MatchBody, WithinDecidesPermissionBinding) {
    const auto ws = fixture::load("per010", "conform.facts");
    EXPECT_EQ(match_body(ws.kb, ws.rules.at(0).body).size(), 1u);
    const auto disjoint = fixture::load("per010", "disjoint.facts");
    EXPECT_TRUE(match_body(disjoint.kb, disjoint.rules.at(0).body).empty());
}

TEST(MatchBody, UnsafeNegationAtRuntime) {
    BodyLiteral lit{HoldsAtom{Term::compound("banned", {Term::variable("A")}), Term::variable("S"), false}, true, {}};
    KnowledgeBase kb;
    kb.assert_fact(Situation{"s", Interval(0, 1)});
    EXPECT_THROW(match_body(kb, std::span(&lit, 1)), UnsafeRule);
}

TEST(MatchBody, HoldsSeesImpliedFluents) {
    KnowledgeBase kb;
    kb.assert_fact(Situation{"s", Interval(0, 5)});
    kb.assert_fact(HoldsFact{c("raining"), "s", true});
    kb.assert_fact(ImplyFact{c("raining"), c("wet")});
    BodyLiteral lit{HoldsAtom{c("wet"), Term::variable("S"), false}, false, {}};
    EXPECT_EQ(match_body(kb, std::span(&lit, 1)).size(), 1u);
    lit.atom = HoldsAtom{c("wet"), Term::variable("S"), true};
    EXPECT_TRUE(match_body(kb, std::span(&lit, 1)).empty());
}

TEST(WindowUpperBound, Examples) {
    EXPECT_EQ(window_upper_bound(le(E, tdisp(B, 10)), Interval(600, 660)), WindowBound::finite(Instant{610}));
    EXPECT_EQ(window_upper_bound(ge(E, B), Interval(600, 660)), WindowBound::unbounded());
    EXPECT_EQ(window_upper_bound(all(ge(E, B), le(E, tdisp(B, 30))), Interval(0, 365)),
              WindowBound::finite(Instant{30}));
    EXPECT_EQ(to_string(WindowBound::unbounded()), "unbounded");
}

TEST(WindowUpperBound, BeginBoundedConstraints) {
    // Sweeping must start by end+4; the action may run on afterwards.
    EXPECT_EQ(window_upper_bound(all(gt(B, E), le(B, tdisp(E, 4))), Interval(20, 30)), WindowBound::finite(Instant{35}));
    // Unsatisfiable: no action can ever conform.
    EXPECT_EQ(window_upper_bound(all(lt(E, B), gt(B, E)), Interval(20, 30)), WindowBound::finite(Instant{20}));
}

TEST(WindowProperty, MatchesBruteForceSearch) {
    gen::Rng rng(41);
    for (int i = 0; i < 1500; ++i) {
        const auto tc = gen::tc(rng, 3);
        const auto k = gen::interval(rng, 0, 20, 10);
        const auto got = window_upper_bound(tc, k);
        const auto expected = oracle::window(tc, oracle::span_of(k));
        if (!expected) {
            ASSERT_FALSE(got.bounded()) << print_tc(tc) << " " << k;
        } else {
            ASSERT_TRUE(got.bounded()) << print_tc(tc) << " " << k;
            ASSERT_EQ(got.upper().tick, *expected) << print_tc(tc) << " " << k;
        }
    }
}

TEST(JudgeObligation, Examples) {
    const auto tok = ob101_token();
    auto punctual = judge_obligation(ob101_kb(Interval(598, 605)), tok, Instant{700});
    EXPECT_EQ(punctual.verdict, Verdict::Conformed);
    EXPECT_EQ(punctual.ground, Ground::ObligationMet);
    EXPECT_EQ(punctual.action, "a1");

    auto absent = judge_obligation(ob101_kb(std::nullopt), tok, Instant{700});
    EXPECT_EQ(absent.verdict, Verdict::Violated);
    EXPECT_EQ(absent.ground, Ground::ObligationMissed);
    EXPECT_EQ(absent.window, WindowBound::finite(Instant{610}));

    EXPECT_EQ(judge_obligation(ob101_kb(std::nullopt), tok, Instant{605}).verdict, Verdict::Pending);
    EXPECT_EQ(judge_obligation(ob101_kb(std::nullopt), tok, Instant{610}).verdict, Verdict::Pending);
    EXPECT_EQ(judge_obligation(ob101_kb(std::nullopt), tok, Instant{611}).verdict, Verdict::Violated);
}

TEST(JudgeObligation, ActorAndTypeMustMatchExactly) {
    auto kb = ob101_kb(std::nullopt);
    kb.assert_fact(ActionToken{"x1", "ann", Term::compound("arrive-at", {c("room5")}), Interval(598, 605)});
    kb.assert_fact(ActionToken{"x2", "bob", Term::compound("arrive-at", {c("room6")}), Interval(598, 605)});
    EXPECT_EQ(judge_obligation(kb, ob101_token(), Instant{700}).verdict, Verdict::Violated);
}

TEST(JudgeObligation, WrongKindThrows) {
    auto tok = ob101_token();
    tok.fluent.kind = Deontic::Prohibition;
    EXPECT_THROW(judge_obligation(ob101_kb(std::nullopt), tok, Instant{700}), WrongFluentKind);
    EXPECT_THROW(judge_prohibition(ob101_kb(std::nullopt), ob101_token(), Instant{700}), WrongFluentKind);
    EXPECT_THROW(judge_permission(ob101_token()), WrongFluentKind);
}

TEST(JudgeProhibition, Examples) {
    const auto late = fixture::load("pr0103", "violate.facts");
    const auto tokens = instantiate(late.kb, late.rules.at(0));
    ASSERT_EQ(tokens.size(), 1u);
    const auto v = judge_prohibition(late.kb, tokens[0], Instant{60});
    EXPECT_EQ(v.verdict, Verdict::Violated);
    EXPECT_EQ(v.ground, Ground::ProhibitionBreached);
    EXPECT_EQ(v.action, "c2");

    const auto early = fixture::load("pr0103", "conform.facts");
    const auto open = judge_prohibition(early.kb, tokens[0], Instant{60});
    EXPECT_EQ(open.verdict, Verdict::Pending);
    EXPECT_TRUE(open.provisional_conform);
    EXPECT_FALSE(open.window.bounded());
    const auto done = judge_prohibition(early.kb, tokens[0], Instant{121});
    EXPECT_EQ(done.verdict, Verdict::Conformed);
    EXPECT_EQ(done.ground, Ground::ProhibitionRespected);
    EXPECT_TRUE(done.provisional_conform);
}

TEST(JudgeProhibition, RepealedNormIsInapplicable) {
    auto ws = fixture::load("pr0103", "violate.facts");
    KnowledgeBase kb;
    kb.assert_fact(Situation{"x1", Interval(0, 120)});
    kb.add_validity({"PR0103", Instant{-10}, {Instant{-5}}});
    const auto tok = instantiate(ws.kb, ws.rules.at(0)).at(0);
    const auto out = judge_prohibition(kb, tok, Instant{500});
    EXPECT_EQ(out.verdict, Verdict::Inapplicable);
    EXPECT_EQ(out.ground, Ground::NotValid);
}

TEST(JudgePermission, Examples) {
    for (const auto* dir : {"per010", "per012"}) {
        const auto ws = fixture::load(dir, "conform.facts");
        for (const auto& tok : instantiate(ws.kb, ws.rules.at(0))) {
            const auto out = judge_permission(tok);
            EXPECT_EQ(out.verdict, Verdict::Conformed);
            EXPECT_EQ(out.ground, Ground::PermissionToAct);
            EXPECT_EQ(axiom_code(out.ground), "3.6.5");
        }
    }
    NormToken refrain{c("a"), {Deontic::Obligation, c("go"), true}, "s", eq(E, B), "P"};
    const auto out = judge_permission(refrain);
    EXPECT_EQ(out.verdict, Verdict::Conformed);
    EXPECT_EQ(axiom_code(out.ground), "3.6.6");
}

TEST(RunReport, Examples) {
    const auto late = fixture::load("ob101", "violate.facts");
    const auto report = run_report(late.kb, late.rules, Instant{700});
    ASSERT_EQ(report.entries.size(), 1u);
    EXPECT_EQ(report.entries[0].outcome.verdict, Verdict::Violated);
    EXPECT_EQ(report.entries[0].token.norm_id, "OB101");
    EXPECT_EQ(format_record(report.entries[0], Instant{700}),
              "outcome=Violated agent=bob norm=OB101 situation=s1 tc=\"and(le(E,tdisp(B,10)),ge(E,B))\" "
              "evidence=none window=610 horizon=700");
    EXPECT_EQ(format_human(report.entries[0], Instant{700}).rfind("bob violated OB101 with regard to situation s1", 0),
              0u);

    const auto nbb = fixture::load("nbb1", "validity.facts");
    const auto gated = run_report(nbb.kb, nbb.rules, Instant{2100});
    ASSERT_EQ(gated.entries.size(), 3u);
    EXPECT_EQ(gated.count(Verdict::Inapplicable), 2u);

    const auto empty = run_report(late.kb, {}, Instant{700});
    EXPECT_TRUE(empty.entries.empty());
    EXPECT_EQ(format_summary_record(empty), "summary conformed=0 violated=0 pending=0 inapplicable=0 total=0");
}

// ---------------------------------------------------------------------------
// Properties

TEST(ComplianceProperty, FixturesAgreeWithBruteForceOracle) {
    for (const auto& c : fixture::cases()) {
        const auto ws = fixture::load(c.dir, c.facts);
        const auto report = run_report(ws.kb, ws.rules, Instant{c.horizon});
        for (const auto& e : report.entries) {
            const auto o = oracle::judge(ws.kb, e.token, c.horizon, 100);
            EXPECT_EQ(e.outcome.verdict, o.verdict) << c.dir << "/" << c.facts;
        }
    }
}

TEST(ComplianceProperty, HorizonSweepOnlyResolvesPending) {
    for (const auto& [dir, facts] : fixture::all_inputs()) {
        const auto ws = fixture::load(dir, facts);
        const auto first = run_report(ws.kb, ws.rules, Instant{0});
        const auto limit = sweep_limit(first, ws.kb);
        std::vector<Verdict> last;
        for (const auto& e : first.entries) last.push_back(e.outcome.verdict);
        for (std::int64_t h = 1; h <= limit; ++h) {
            const auto r = run_report(ws.kb, ws.rules, Instant{h});
            ASSERT_EQ(r.entries.size(), last.size());
            for (std::size_t i = 0; i < last.size(); ++i) {
                const auto now = r.entries[i].outcome.verdict;
                if (last[i] != Verdict::Pending) ASSERT_EQ(now, last[i]) << dir << " h=" << h;
                last[i] = now;
            }
        }
    }
}

TEST(ComplianceProperty, PermissionsNeverViolated) {
    gen::Rng rng(43);
    for (int i = 0; i < 200; ++i) {
        NormToken tok{c("a"), {gen::coin(rng) ? Deontic::Obligation : Deontic::Prohibition, c("go"), true}, "s",
                      gen::tc(rng, 2), "P"};
        KnowledgeBase kb;
        kb.assert_fact(Situation{"s", gen::interval(rng, 0, 10, 5)});
        kb.add_validity({"P", Instant{0}, {}});
        kb.assert_fact(ActionToken{"x", "a", c("go"), gen::interval(rng, 0, 20, 5)});
        EXPECT_NE(judge(kb, tok, Instant{gen::uniform(rng, 0, 40)}).verdict, Verdict::Violated);
    }
}

TEST(ComplianceProperty, ClosedWorldOracleOnRandomKbs) {
    gen::Rng rng(47);
    std::map<Verdict, int> seen;
    for (int i = 0; i < 1000; ++i) {
        const auto rc = scenario::random_case(rng);
        const auto got = judge(rc.kb, rc.token, Instant{rc.horizon});
        const auto expected = oracle::judge(rc.kb, rc.token, rc.horizon);
        ASSERT_EQ(got.verdict, expected.verdict) << "case " << i << " tc " << print_tc(rc.token.tc);
        ASSERT_EQ(got.window.bounded(), expected.window.has_value()) << "case " << i;
        if (expected.window) ASSERT_EQ(got.window.upper().tick, *expected.window) << "case " << i;
        ++seen[got.verdict];
    }
    EXPECT_GT(seen[Verdict::Conformed], 0);
    EXPECT_GT(seen[Verdict::Violated], 0);
    EXPECT_GT(seen[Verdict::Pending], 0);
    EXPECT_GT(seen[Verdict::Inapplicable], 0);
}
