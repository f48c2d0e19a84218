// Copyright 2026 The modalq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "modalq/dimacs.h"

#include "gtest/gtest.h"

#include "modalq/algorithm.h"
#include "test_util.h"

using namespace modalq;
using namespace modalq::testing;

namespace {

ParseDiagnostic diagnose(std::string_view text, DimacsOptions options = {}) {
    try {
        parse_dimacs(text, options);
    } catch (const ParseError &e) {
        return e.diagnostic();
    }
    ADD_FAILURE() << "parsed without error: " << text;
    return {};
}

}  // namespace

TEST(dimacs, parse_examples) {
    Cnf c = parse_dimacs("p cnf 2 2\n1 0\n-2 0\n");
    EXPECT_EQ(c, (Cnf{2, {{1}, {-2}}}));

    Cnf taut = parse_dimacs("c comment\np cnf 1 1\n1 -1 0\n");
    EXPECT_EQ(taut, (Cnf{1, {{1, -1}}}));
    BoolFn f = boolfn_from_cnf(taut);
    // Both assignments satisfy (x or not x).
    EXPECT_TRUE(f(0));
    EXPECT_TRUE(f(1));
    EXPECT_EQ(count_sat(f), 2u);
    try {
        run_unique_sat(f);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::PromiseViolated);
    }

    ParseDiagnostic d = diagnose("p cnf 1 1\n2 0\n");
    EXPECT_EQ(d.kind, ErrorKind::LiteralOutOfRange);
    EXPECT_EQ(d.line, 2u);
    EXPECT_EQ(d.column, 1u);
}

TEST(dimacs, accepts_common_layouts) {
    EXPECT_EQ(parse_dimacs("p cnf 3 2\n1 -3\n 2 0 -1\n0\n"), (Cnf{3, {{1, -3, 2}, {-1}}}));
    EXPECT_EQ(parse_dimacs("c a\nc b\r\np cnf 2 1\r\nc mid\n1 2 0\r\n"), (Cnf{2, {{1, 2}}}));
    EXPECT_EQ(parse_dimacs("p cnf 4 0\n"), (Cnf{4, {}}));
    EXPECT_EQ(parse_dimacs("p cnf 2 1\n0\n"), (Cnf{2, {{}}}));
    EXPECT_EQ(parse_dimacs("p  cnf\t2 1\n1 2 0"), (Cnf{2, {{1, 2}}}));
}

TEST(dimacs, header_errors) {
    EXPECT_EQ(diagnose("").kind, ErrorKind::MissingHeader);
    EXPECT_EQ(diagnose("c only comments\n").kind, ErrorKind::MissingHeader);
    EXPECT_EQ(diagnose("1 0\np cnf 1 1\n").kind, ErrorKind::MissingHeader);
    EXPECT_EQ(diagnose("p dnf 1 1\n1 0\n").kind, ErrorKind::BadHeader);
    EXPECT_EQ(diagnose("p cnf 1\n1 0\n").kind, ErrorKind::BadHeader);
    EXPECT_EQ(diagnose("p cnf x 1\n1 0\n").kind, ErrorKind::BadHeader);
    EXPECT_EQ(diagnose("p cnf 1 -1\n").kind, ErrorKind::BadHeader);
    EXPECT_EQ(diagnose("p cnf 1 1\np cnf 1 1\n1 0\n").kind, ErrorKind::BadHeader);
    ParseDiagnostic big = diagnose("p cnf 27 0\n");
    EXPECT_EQ(big.kind, ErrorKind::TooManyVariables);
    EXPECT_EQ(big.column, 7u);
    EXPECT_EQ(parse_dimacs("p cnf 26 0\n").num_vars, 26u);
}

TEST(dimacs, body_errors_carry_positions) {
    ParseDiagnostic d = diagnose("c header next\np cnf 3 2\n1 2 0\n  -3 x 0\n");
    EXPECT_EQ(d.kind, ErrorKind::BadToken);
    EXPECT_EQ(d.line, 4u);
    EXPECT_EQ(d.column, 6u);

    d = diagnose("p cnf 3 2\n1 2 0\n\n\n3 -4 0\n");
    EXPECT_EQ(d.kind, ErrorKind::LiteralOutOfRange);
    EXPECT_EQ(d.line, 5u);
    EXPECT_EQ(d.column, 3u);
    EXPECT_NE(d.message.find("variable 4"), std::string::npos);

    d = diagnose("p cnf 3 2\n1 2 0\n3\n-1\n");
    EXPECT_EQ(d.kind, ErrorKind::UnterminatedClause);
    EXPECT_EQ(d.line, 3u);

    d = diagnose("c\np cnf 3 3\n1 0\n2 0\n");
    EXPECT_EQ(d.kind, ErrorKind::ClauseCountMismatch);
    EXPECT_EQ(d.line, 2u);

    EXPECT_EQ(diagnose("p cnf 1 1\n1 0\n-1 0\n").kind, ErrorKind::ClauseCountMismatch);
    EXPECT_EQ(diagnose("p cnf 1 1\n1 0\n%\n0\n").kind, ErrorKind::BadToken);
    EXPECT_EQ(diagnose("p cnf 1 1\n99999999999 0\n").kind, ErrorKind::BadToken);
    EXPECT_EQ(diagnose("p cnf 1 1\n+1 0\n").kind, ErrorKind::BadToken);
    EXPECT_EQ(diagnose("p cnf 1 1\n1 0 c trailing\n").kind, ErrorKind::BadToken);
}

TEST(dimacs, lenient_mode) {
    DimacsOptions lenient{true};
    EXPECT_EQ(parse_dimacs("p cnf 2 2\n1 0\n-2", lenient), (Cnf{2, {{1}, {-2}}}));
    EXPECT_EQ(parse_dimacs("p cnf 2 1\n1 0\n-2 0\n", lenient), (Cnf{2, {{1}, {-2}}}));
    EXPECT_EQ(parse_dimacs("p cnf 2 1\n1 0\n%\n0\n", lenient), (Cnf{2, {{1}}}));
    EXPECT_EQ(diagnose("p cnf 2 3\n1 0\n", lenient).kind, ErrorKind::ClauseCountMismatch);
    EXPECT_EQ(diagnose("p cnf 2 2\n1 0\n-2", {}).kind, ErrorKind::UnterminatedClause);
}

TEST(dimacs, format_examples) {
    EXPECT_EQ(format_dimacs(Cnf{2, {{1}, {-2}}}), "p cnf 2 2\n1 0\n-2 0\n");
    EXPECT_EQ(format_dimacs(Cnf{5, {}}), "p cnf 5 0\n");
    EXPECT_EQ(format_dimacs(Cnf{3, {{1, -2, 3}, {}}}), "p cnf 3 2\n1 -2 3 0\n0\n");
}

TEST(dimacs, round_trip_random) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 1000; trial++) {
        Cnf c = random_cnf(rng, 26, 12, 6);
        std::string text = format_dimacs(c);
        Cnf back = parse_dimacs(text);
        ASSERT_EQ(back, c) << text;
        EXPECT_EQ(format_dimacs(back), text);
    }
}

TEST(dimacs, never_crashes_on_garbage) {
    std::mt19937_64 rng(43);
    const std::string alphabet = "pcnf -0123456789\n\t\r%x";
    size_t parsed = 0;
    for (int trial = 0; trial < 10000; trial++) {
        std::string text;
        size_t len = rng() % 64;
        bool structured = trial % 2;
        if (structured) {
            text = "p cnf " + std::to_string(rng() % 30) + " " + std::to_string(rng() % 5) + "\n";
        }
        for (size_t k = 0; k < len; k++) {
            text += structured ? alphabet[rng() % alphabet.size()] : static_cast<char>(rng() & 0xFF);
        }
        try {
            Cnf c = parse_dimacs(text, DimacsOptions{(trial & 2) != 0});
            c.validate();
            parsed++;
        } catch (const ParseError &e) {
            const auto &d = e.diagnostic();
            EXPECT_GE(d.line, 1u);
            EXPECT_GE(d.column, 1u);
            EXPECT_LE(d.line, static_cast<size_t>(std::count(text.begin(), text.end(), '\n')) + 1);
        }
    }
    EXPECT_GT(parsed, 0u);
}
