// Copyright 2026 The qtc Authors
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

/// \file
/// Text syntax for observables as real combinations of Pauli words:
///
///     expr   := term (('+' | '-') term)*
///     term   := [number '*']? word
///     number := decimal with optional sign and exponent
///     word   := [IXYZ]+
///
/// Whitespace between tokens is ignored. An omitted coefficient means 1; a
/// '-' separator negates the following term. All words of one expression
/// must have the same length (the qubit count). Parse errors carry 1-based
/// positions into the original text.

#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qtc/operators.hpp"

namespace qtc {

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}

    /// 1-based offset into the original input.
    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

struct PauliTerm {
    double coefficient;
    std::string word;

    bool operator==(const PauliTerm&) const = default;
};

/// Canonical form: duplicate words merged by coefficient addition, terms
/// sorted lexicographically by word. Zero coefficients are kept so the
/// expression always has at least one term and a well-defined qubit count.
class PauliExpression {
  public:
    explicit PauliExpression(std::vector<PauliTerm> terms) {
        if (terms.empty()) {
            throw std::invalid_argument("PauliExpression: need at least one term");
        }
        const std::size_t n = terms.front().word.size();
        for (const auto& t : terms) {
            if (t.word.empty() || t.word.size() != n) {
                throw std::invalid_argument("PauliExpression: mixed word lengths");
            }
            for (char c : t.word) {
                if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
                    throw std::invalid_argument("PauliExpression: invalid Pauli letter");
                }
            }
        }
        std::sort(terms.begin(), terms.end(),
                  [](const PauliTerm& a, const PauliTerm& b) { return a.word < b.word; });
        for (const auto& t : terms) {
            if (!terms_.empty() && terms_.back().word == t.word) {
                terms_.back().coefficient += t.coefficient;
            } else {
                terms_.push_back(t);
            }
        }
    }

    int num_qubits() const { return static_cast<int>(terms_.front().word.size()); }
    const std::vector<PauliTerm>& terms() const { return terms_; }

    bool operator==(const PauliExpression&) const = default;

  private:
    std::vector<PauliTerm> terms_;
};

namespace detail {

class PauliLexer {
  public:
    explicit PauliLexer(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() const { return text_[pos_]; }
    std::size_t here() const { return pos_ + 1; }  // 1-based

    bool looks_like_number() {
        skip_ws();
        if (pos_ >= text_.size()) return false;
        const char c = text_[pos_];
        if (c >= '0' && c <= '9') return true;
        if (c != '+' && c != '-' && c != '.') return false;
        // A sign only starts a number when digits (or .digits) follow; a
        // bare sign is the expression-level separator.
        std::size_t probe = pos_ + 1;
        if (probe < text_.size() && text_[probe] == '.') ++probe;
        return probe < text_.size() && text_[probe] >= '0' && text_[probe] <= '9';
    }

    double read_number() {
        skip_ws();
        const std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
        std::size_t digits = 0;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_, ++digits;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_, ++digits;
        }
        if (digits == 0) {
            throw ParseError("malformed number", start + 1);
        }
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            ++pos_;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
            std::size_t exp_digits = 0;
            while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9')
                ++pos_, ++exp_digits;
            if (exp_digits == 0) {
                throw ParseError("malformed exponent", start + 1);
            }
        }
        double value = 0.0;
        const auto* first = text_.data() + start;
        const auto* last = text_.data() + pos_;
        if (*first == '+') ++first;  // from_chars rejects a leading '+'
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last) {
            throw ParseError("malformed number", start + 1);
        }
        return value;
    }

    std::string read_word() {
        skip_ws();
        std::string word;
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == 'I' || c == 'X' || c == 'Y' || c == 'Z') {
                word.push_back(c);
                ++pos_;
            } else {
                break;
            }
        }
        if (word.empty()) {
            if (pos_ >= text_.size()) throw ParseError("expected Pauli word", text_.size() + 1);
            throw ParseError(std::string("invalid character '") + text_[pos_] + "'", here());
        }
        return word;
    }

    bool consume(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the expression grammar above into canonical form. Mixed word
/// lengths, malformed numbers, and stray characters raise ParseError with
/// the 1-based offending position.
inline PauliExpression parse_observable(std::string_view text) {
    detail::PauliLexer lex(text);
    if (lex.at_end()) {
        throw ParseError("empty input", 1);
    }

    std::vector<PauliTerm> terms;
    std::size_t word_len = 0;
    double sign = 1.0;
    while (true) {
        double coeff = 1.0;
        if (lex.looks_like_number()) {
            coeff = lex.read_number();
            lex.skip_ws();
            if (!lex.consume('*')) {
                throw ParseError("expected '*' between coefficient and Pauli word", lex.here());
            }
        }
        const std::size_t word_pos = lex.at_end() ? text.size() + 1 : lex.here();
        const std::string word = lex.read_word();
        if (word_len == 0) {
            word_len = word.size();
        } else if (word.size() != word_len) {
            throw ParseError("mixed word lengths (" + std::to_string(word_len) + " vs " +
                                 std::to_string(word.size()) + ")",
                             word_pos);
        }
        terms.push_back({sign * coeff, word});

        if (lex.at_end()) break;
        if (lex.consume('+')) {
            sign = 1.0;
        } else if (lex.consume('-')) {
            sign = -1.0;
        } else {
            throw ParseError(std::string("expected '+' or '-', got '") + lex.peek() + "'",
                             lex.here());
        }
    }
    return PauliExpression(std::move(terms));
}

/// Canonical text form; reparsing yields an equal expression.
inline std::string format_expression(const PauliExpression& e) {
    std::string out;
    char buf[64];
    for (std::size_t i = 0; i < e.terms().size(); ++i) {
        const auto& t = e.terms()[i];
        const double mag = std::abs(t.coefficient);
        const bool negative = std::signbit(t.coefficient);
        if (i == 0) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::snprintf(buf, sizeof(buf), "%.17g", mag);
        out += buf;
        out += "*";
        out += t.word;
    }
    return out;
}

/// sum_t coeff_t * (tensor product of single-qubit Paulis of word_t);
/// Hermitian by construction since coefficients are real.
inline HermitianOperator to_operator(const PauliExpression& e) {
    const int n = e.num_qubits();
    const Eigen::Index dim = Eigen::Index{1} << n;
    CMatrix total = CMatrix::Zero(dim, dim);
    for (const auto& t : e.terms()) {
        CMatrix factor = CMatrix::Identity(1, 1);
        for (char c : t.word) {
            switch (c) {
                case 'I': factor = kron(factor, CMatrix::Identity(2, 2)); break;
                case 'X': factor = kron(factor, pauli_x().matrix()); break;
                case 'Y': factor = kron(factor, pauli_y().matrix()); break;
                case 'Z': factor = kron(factor, pauli_z().matrix()); break;
            }
        }
        total += t.coefficient * factor;
    }
    return HermitianOperator(std::move(total));
}

/// Pauli-word expansion of an operator on n qubits (dim must be a power of
/// two): coefficient of word W is Tr[O * W] / dim. Terms below 1e-12 in
/// magnitude are dropped; the all-identity word is kept as a last resort so
/// the result is always a valid expression.
inline PauliExpression pauli_expansion(const HermitianOperator& op) {
    int n = 0;
    while ((1 << n) < op.dim()) ++n;
    if ((1 << n) != op.dim()) {
        throw std::invalid_argument("pauli_expansion: dimension is not a power of two");
    }
    if (n == 0) {
        return PauliExpression({{op.matrix()(0, 0).real(), "I"}});
    }

    std::vector<PauliTerm> terms;
    std::string word(static_cast<std::size_t>(n), 'I');
    const double inv_dim = 1.0 / static_cast<double>(op.dim());
    const auto enumerate = [&](auto&& self, int q) -> void {
        if (q == n) {
            const CMatrix w = to_operator(PauliExpression({{1.0, word}})).matrix();
            const double coeff = (op.matrix() * w).trace().real() * inv_dim;
            if (std::abs(coeff) > 1e-12) terms.push_back({coeff, word});
            return;
        }
        for (char c : {'I', 'X', 'Y', 'Z'}) {
            word[static_cast<std::size_t>(q)] = c;
            self(self, q + 1);
        }
    };
    enumerate(enumerate, 0);
    if (terms.empty()) terms.push_back({0.0, std::string(static_cast<std::size_t>(n), 'I')});
    return PauliExpression(std::move(terms));
}

/// Comma-separated real triple, e.g. "1,0,0".
inline Vector3 parse_vector3(std::string_view text) {
    std::vector<std::pair<std::string_view, std::size_t>> pieces;  // text, 0-based offset
    std::size_t pos = 0;
    while (true) {
        const std::size_t next = text.find(',', pos);
        const std::size_t end = (next == std::string_view::npos) ? text.size() : next;
        pieces.emplace_back(text.substr(pos, end - pos), pos);
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    if (pieces.size() != 3) {
        throw ParseError("expected 3 comma-separated components, got " +
                             std::to_string(pieces.size()),
                         text.size() + 1);
    }

    Vector3 out;
    for (int k = 0; k < 3; ++k) {
        auto [piece, offset] = pieces[static_cast<std::size_t>(k)];
        while (!piece.empty() && (piece.front() == ' ' || piece.front() == '\t')) {
            piece.remove_prefix(1);
            ++offset;
        }
        while (!piece.empty() && (piece.back() == ' ' || piece.back() == '\t'))
            piece.remove_suffix(1);
        if (piece.empty()) {
            throw ParseError("empty vector component", offset + 1);
        }
        const char* first = piece.data();
        const char* last = piece.data() + piece.size();
        if (*first == '+') ++first;  // from_chars rejects a leading '+'
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last || first == last) {
            throw ParseError("malformed number '" + std::string(piece) + "'", offset + 1);
        }
        out(k) = value;
    }
    return out;
}

}  // namespace qtc
