#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.hpp"
#include "normcheck/cli.hpp"

using namespace normcheck;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "normcheck");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string last_line(const std::string& text) {
    auto end = text.find_last_not_of('\n');
    auto start = text.rfind('\n', end);
    return text.substr(start == std::string::npos ? 0 : start + 1, end - (start == std::string::npos ? 0 : start + 1) + 1);
}

int count_lines_with(const std::string& text, const std::string& needle) {
    int n = 0;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) n += line.find(needle) != std::string::npos;
    return n;
}

} // namespace

TEST(ExplainTarget, Parses) {
    const auto t = parse_explain_target("bob:OB101:s1");
    ASSERT_TRUE(t);
    EXPECT_EQ(t->agent, "bob");
    EXPECT_EQ(t->norm_id, "OB101");
    EXPECT_EQ(t->situation, "s1");
    EXPECT_FALSE(parse_explain_target("bob:OB101"));
    EXPECT_FALSE(parse_explain_target("bob::s1"));
    EXPECT_FALSE(parse_explain_target("a:b:c:d"));
}

TEST(Check, LateTeacherIsViolated) {
    const auto r = run({"check", "--norms", fixture::path("ob101/rule.norm"), "--facts",
                        fixture::path("ob101/violate.facts"), "--horizon", "700", "--format", "records"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(count_lines_with(r.out, "outcome=Violated"), 1);
    EXPECT_NE(r.out.find("norm=OB101"), std::string::npos);
    EXPECT_EQ(last_line(r.out), "summary conformed=0 violated=1 pending=0 inapplicable=0 total=1");
}

TEST(Check, PunctualTeacherExitsZero) {
    const auto r = run({"check", "--norms", fixture::path("ob101/rule.norm"), "--facts",
                        fixture::path("ob101/conform.facts"), "--horizon", "700"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("bob conformed to OB101 with regard to situation s1"), std::string::npos);
}

TEST(Check, HumanModeUsesViolationPhrasing) {
    const auto r = run({"check", "--norms", fixture::path("ob101/rule.norm"), "--facts",
                        fixture::path("ob101/violate.facts"), "--horizon", "700"});
    EXPECT_NE(r.out.find("bob violated OB101 with regard to situation s1"), std::string::npos);
}

TEST(Check, MissingFactFileExitsTwo) {
    const auto r = run({"check", "--norms", fixture::path("ob101/rule.norm"), "--facts",
                        fixture::path("ob101/nope.facts"), "--horizon", "700"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("cannot read fact file"), std::string::npos);
    EXPECT_TRUE(r.out.empty());
}

TEST(Check, HorizonIsRequired) {
    const auto r = run({"check", "--norms", fixture::path("ob101/rule.norm"), "--facts",
                        fixture::path("ob101/violate.facts")});
    EXPECT_EQ(r.code, 2);
}

TEST(Check, ParseErrorsExitTwo) {
    const auto r = run({"check", "--norms", fixture::path("invalid/unsafe.norm"), "--facts",
                        fixture::path("ob101/violate.facts"), "--horizon", "700"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("unsafe.norm:7:5: error"), std::string::npos);
}

TEST(Check, RecordsAreStableAcrossRuns) {
    const std::vector<std::string> args{"check", "--norms", fixture::path("nbb1/rule.norm"), "--facts",
                                        fixture::path("nbb1/validity.facts"), "--horizon", "2100", "--format",
                                        "records"};
    const auto a = run(args);
    const auto b = run(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(count_lines_with(a.out, "outcome=Inapplicable"), 2);
}

TEST(Validate, ConsistentFixture) {
    const auto r = run({"validate", "--norms", fixture::path("ob101/rule.norm"), "--facts",
                        fixture::path("ob101/conform.facts")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(last_line(r.out), "0 findings");
}

TEST(Validate, TimeMismatchCitesAxiom) {
    const auto r = run({"validate", "--norms", fixture::path("ob101/rule.norm"), "--facts",
                        fixture::path("invalid/time-mismatch.facts")});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("axiom 3.2.5"), std::string::npos);
}

TEST(Validate, UnsafeNegationIsSpanLocated) {
    const auto r = run({"validate", "--norms", fixture::path("invalid/unsafe.norm"), "--facts",
                        fixture::path("ob101/conform.facts")});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("unsafe.norm:7:5: error: norm BAD1: negated literal"), std::string::npos);
}

TEST(Explain, LateTeacherTrace) {
    const auto r = run({"explain", "--norms", fixture::path("ob101/rule.norm"), "--facts",
                        fixture::path("ob101/violate.facts"), "--horizon", "700", "--explain", "bob:OB101:s1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(last_line(r.out), "Violated by Axiom 3.6.2: no conforming action; window closed at 610");
    EXPECT_NE(r.out.find("window: 610"), std::string::npos);
    EXPECT_NE(r.out.find("horizon: 700"), std::string::npos);
    EXPECT_NE(r.out.find("A=bob Ev=e1 S=s1 V=room5"), std::string::npos);
    EXPECT_NE(r.out.find("le(E,tdisp(B,10)): end(action) <= 610"), std::string::npos);
    EXPECT_NE(r.out.find("action a2 [612,615]"), std::string::npos);
}

TEST(Explain, PermissionTrace) {
    const auto r = run({"explain", "--norms", fixture::path("per012/rule.norm"), "--facts",
                        fixture::path("per012/conform.facts"), "--horizon", "100", "--explain", "gus:PER012:lec"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(last_line(r.out), "Conformed by Axiom 3.6.5");
}

TEST(Explain, CheckAcceptsExplainFlag) {
    const auto r = run({"check", "--norms", fixture::path("ob101/rule.norm"), "--facts",
                        fixture::path("ob101/conform.facts"), "--horizon", "700", "--explain", "bob:OB101:s1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(last_line(r.out), "Conformed by Axiom 3.6.1: action a1 satisfies the tc");
}

TEST(Explain, UnknownSituationListsNearMisses) {
    const auto r = run({"explain", "--norms", fixture::path("ob101/rule.norm"), "--facts",
                        fixture::path("ob101/violate.facts"), "--horizon", "700", "--explain", "bob:OB101:s9"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("no token bob:OB101:s9"), std::string::npos);
    EXPECT_NE(r.out.find("bob:OB101:s1"), std::string::npos);
}

TEST(LoadWorkspace, FactsMayPrecedeTheirDeclarations) {
    const auto ws = load_workspace({fixture::path("ob101/rule.norm")}, {fixture::path("ob101/conform.facts")});
    EXPECT_EQ(ws.errors(), 0u);
    EXPECT_EQ(ws.rules.size(), 1u);
    EXPECT_EQ(ws.kb.actions().size(), 1u);
}
