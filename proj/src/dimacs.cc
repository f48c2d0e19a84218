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

#include <charconv>
#include <optional>
#include <vector>

namespace modalq {

std::string ParseDiagnostic::str() const {
    return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
}

ParseError::ParseError(ParseDiagnostic diagnostic)
    : Error(diagnostic.kind, diagnostic.str()), diagnostic_(std::move(diagnostic)) {
}

namespace {

struct Token {
    std::string_view text;
    size_t line;
    size_t column;
};

bool is_blank(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

std::vector<Token> split_line(std::string_view line, size_t line_no) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_blank(line[i])) {
            i++;
        }
        size_t start = i;
        while (i < line.size() && !is_blank(line[i])) {
            i++;
        }
        if (i > start) {
            out.push_back(Token{line.substr(start, i - start), line_no, start + 1});
        }
    }
    return out;
}

template <typename T>
std::optional<T> parse_int(std::string_view s) {
    T value{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return value;
}

[[noreturn]] void fail(ErrorKind kind, size_t line, size_t column, std::string message) {
    throw ParseError(ParseDiagnostic{line, column, std::move(message), kind});
}

}  // namespace

Cnf parse_dimacs(std::string_view text, const DimacsOptions &options) {
    Cnf cnf;
    bool have_header = false;
    uint64_t declared_clauses = 0;
    size_t header_line = 1;
    size_t header_column = 1;
    std::vector<int> current;
    Token clause_start{{}, 1, 1};
    size_t line_no = 0;
    size_t last_line = 1;

    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        line_no++;
        pos = end + 1;
        if (pos > text.size() && line.empty() && line_no > 1) {
            break;
        }
        last_line = line_no;

        auto tokens = split_line(line, line_no);
        if (tokens.empty()) {
            continue;
        }
        const Token &first = tokens.front();
        if (first.text.front() == 'c') {
            continue;
        }
        if (first.text.front() == '%') {
            if (options.lenient) {
                break;
            }
            fail(ErrorKind::BadToken, line_no, first.column, "'%' end marker is only accepted in lenient mode");
        }
        if (first.text == "p") {
            if (have_header) {
                fail(ErrorKind::BadHeader, line_no, first.column, "duplicate problem line");
            }
            if (tokens.size() != 4 || tokens[1].text != "cnf") {
                fail(ErrorKind::BadHeader, line_no, first.column, "expected 'p cnf <num_vars> <num_clauses>'");
            }
            auto vars = parse_int<uint64_t>(tokens[2].text);
            auto clauses = parse_int<uint64_t>(tokens[3].text);
            if (!vars) {
                fail(ErrorKind::BadHeader, line_no, tokens[2].column, "bad variable count '" + std::string(tokens[2].text) + "'");
            }
            if (!clauses) {
                fail(ErrorKind::BadHeader, line_no, tokens[3].column, "bad clause count '" + std::string(tokens[3].text) + "'");
            }
            if (*vars > kMaxArity) {
                fail(
                    ErrorKind::TooManyVariables,
                    line_no,
                    tokens[2].column,
                    std::to_string(*vars) + " variables declared; the limit is " + std::to_string(kMaxArity));
            }
            cnf.num_vars = static_cast<unsigned>(*vars);
            declared_clauses = *clauses;
            have_header = true;
            header_line = line_no;
            header_column = first.column;
            continue;
        }
        if (!have_header) {
            fail(ErrorKind::MissingHeader, line_no, first.column, "clause data before the 'p cnf' problem line");
        }
        for (const auto &tok : tokens) {
            auto lit = parse_int<int>(tok.text);
            if (!lit) {
                fail(ErrorKind::BadToken, tok.line, tok.column, "expected an integer literal, got '" + std::string(tok.text) + "'");
            }
            if (*lit == 0) {
                cnf.clauses.push_back(std::move(current));
                current.clear();
                continue;
            }
            int64_t var = *lit < 0 ? -int64_t{*lit} : *lit;
            if (var > cnf.num_vars) {
                fail(
                    ErrorKind::LiteralOutOfRange,
                    tok.line,
                    tok.column,
                    "variable " + std::to_string(var) + " exceeds the declared " + std::to_string(cnf.num_vars));
            }
            if (current.empty()) {
                clause_start = tok;
            }
            current.push_back(*lit);
        }
    }

    if (!have_header) {
        fail(ErrorKind::MissingHeader, last_line, 1, "no 'p cnf' problem line");
    }
    if (!current.empty()) {
        if (!options.lenient) {
            fail(ErrorKind::UnterminatedClause, clause_start.line, clause_start.column, "last clause is not terminated by 0");
        }
        cnf.clauses.push_back(std::move(current));
    }
    uint64_t parsed = cnf.clauses.size();
    if (parsed < declared_clauses || (parsed > declared_clauses && !options.lenient)) {
        fail(
            ErrorKind::ClauseCountMismatch,
            header_line,
            header_column,
            "header declares " + std::to_string(declared_clauses) + " clauses, found " + std::to_string(parsed));
    }
    return cnf;
}

std::string format_dimacs(const Cnf &cnf) {
    std::string out = "p cnf " + std::to_string(cnf.num_vars) + " " + std::to_string(cnf.clauses.size()) + "\n";
    for (const auto &clause : cnf.clauses) {
        for (int lit : clause) {
            out += std::to_string(lit);
            out += ' ';
        }
        out += "0\n";
    }
    return out;
}

}  // namespace modalq
