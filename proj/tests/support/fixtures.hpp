#pragma once

#include <string>
#include <vector>

#include "normcheck/cli.hpp"
#include "normcheck/judge.hpp"

#ifndef NORMCHECK_FIXTURE_DIR
#error "NORMCHECK_FIXTURE_DIR must point at the fixtures directory"
#endif

namespace fixture {

inline std::string path(const std::string& relative) { return std::string(NORMCHECK_FIXTURE_DIR) + "/" + relative; }

struct Case {
    std::string dir;
    std::string facts;  // file name inside dir
    std::int64_t horizon;
    normcheck::Verdict expected;
    std::string agent;
    std::string norm;
    std::string situation;
};

/// Every shipped scenario with its expected judgment.
inline const std::vector<Case>& cases() {
    using normcheck::Verdict;
    static const std::vector<Case> kCases{
        {"ob101", "conform.facts", 700, Verdict::Conformed, "bob", "OB101", "s1"},
        {"ob101", "violate.facts", 700, Verdict::Violated, "bob", "OB101", "s1"},
        {"ob102", "conform.facts", 300, Verdict::Conformed, "carol", "OB102", "s2"},
        {"ob102", "violate.facts", 300, Verdict::Violated, "carol", "OB102", "s2"},
        {"pr0103", "conform.facts", 130, Verdict::Conformed, "dave", "PR0103", "x1"},
        {"pr0103", "violate.facts", 130, Verdict::Violated, "dave", "PR0103", "x1"},
        {"pro014", "conform.facts", 200, Verdict::Conformed, "erin", "PRO014", "sc"},
        {"pro014", "violate.facts", 200, Verdict::Violated, "erin", "PRO014", "sc"},
        {"per010", "conform.facts", 500, Verdict::Conformed, "fay", "PER010", "od"},
        {"per012", "conform.facts", 500, Verdict::Conformed, "gus", "PER012", "lec"},
        {"norm001", "conform.facts", 50, Verdict::Conformed, "robosweeper", "Norm001", "sn1"},
        {"norm001", "violate.facts", 50, Verdict::Violated, "robosweeper", "Norm001", "sn1"},
        {"nbb1", "conform.facts", 2000, Verdict::Conformed, "hmg", "NBB-1", "b1"},
        {"nbb1", "violate.facts", 2000, Verdict::Violated, "hmg", "NBB-1", "b1"},
        {"obltax1", "conform.facts", 400, Verdict::Conformed, "kim", "OBLTAX1", "y1999"},
        {"obltax1", "violate.facts", 400, Verdict::Violated, "kim", "OBLTAX1", "y1999"},
        {"obrc1", "conform.facts", 20, Verdict::Conformed, "rc", "OBRC1", "g1"},
        {"obrc1", "violate.facts", 20, Verdict::Violated, "rc", "OBRC1", "g1"},
    };
    return kCases;
}

/// Every (rule, facts) pair shipped, including the extra scenarios.
inline std::vector<std::pair<std::string, std::string>> all_inputs() {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& c : cases()) out.emplace_back(c.dir, c.facts);
    out.emplace_back("per010", "disjoint.facts");
    out.emplace_back("nbb1", "validity.facts");
    return out;
}

inline normcheck::Workspace load(const std::string& dir, const std::string& facts) {
    return normcheck::load_workspace({path(dir + "/rule.norm")}, {path(dir + "/" + facts)});
}

} // namespace fixture
