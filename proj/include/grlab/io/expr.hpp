#pragma once

#include <cctype>
#include <optional>
#include <string>

#include "grlab/core.hpp"
#include "grlab/group/words.hpp"
#include "grlab/ring/element.hpp"
#include "grlab/ring/model.hpp"

namespace grlab {

template <class M>
std::optional<typename M::Basis> model_letter(const M& m, char c) {
    if constexpr (requires { m.backend(); }) {
        return letter_element(m.backend(), c);
    } else {
        (void)m;
        if (c == 'x') return typename M::Basis{1, 0};
        if (c == 'y') return typename M::Basis{0, 1};
        return std::nullopt;
    }
}

// Ring element expressions over a model.
//
//   expr    := ['-'] term (('+' | '-') term)*
//   term    := factor (('*' factor) | ('/' integer) | factor)*
//   factor  := primary ('^' integer)?
//   primary := integer | generator-letter | 'e' | '(' expr ')'
//
// Precedence: ^ over * and / over + and -.  Juxtaposition composes like '*'.
// 'e' denotes the identity basis element.  '/' divides by an integer scalar
// (exact; errors out of the coefficient ring).  Negative '^' exponents are
// valid for invertible single-term elements only.
template <class M>
class ExprParser {
  public:
    ExprParser(const M& m, const std::string& src) : m_(m), src_(src) {}

    RingElement<M> parse() {
        auto r = parse_expr();
        skip_ws();
        if (!eof()) fail("unexpected trailing input");
        return r;
    }

  private:
    const M& m_;
    const std::string& src_;
    std::size_t pos_ = 0;

    bool eof() const { return pos_ >= src_.size(); }
    char peek() const { return src_[pos_]; }
    void skip_ws() {
        while (!eof() && std::isspace((unsigned char)peek())) ++pos_;
    }
    void position(int& line, int& col) const {
        line = 1;
        col = 1;
        for (std::size_t i = 0; i < pos_ && i < src_.size(); ++i) {
            if (src_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    }
    [[noreturn]] void fail(const std::string& msg) const {
        int line, col;
        position(line, col);
        throw parse_error(msg, line, col);
    }

    long long parse_int_lit() {
        skip_ws();
        bool neg = false;
        if (!eof() && (peek() == '-' || peek() == '+')) {
            neg = peek() == '-';
            ++pos_;
            skip_ws();
        }
        if (eof() || !std::isdigit((unsigned char)peek())) fail("expected integer");
        long long v = 0;
        int digits = 0;
        while (!eof() && std::isdigit((unsigned char)peek())) {
            v = v * 10 + (peek() - '0');
            if (++digits > 18) fail("integer literal too large");
            ++pos_;
        }
        return neg ? -v : v;
    }

    RingElement<M> parse_expr() {
        skip_ws();
        bool neg = false;
        if (!eof() && peek() == '-') {
            neg = true;
            ++pos_;
        }
        RingElement<M> acc = parse_term();
        if (neg) acc = re_neg(m_, acc);
        while (true) {
            skip_ws();
            if (eof()) break;
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                RingElement<M> t = parse_term();
                acc = c == '+' ? re_add(m_, acc, t) : re_sub(m_, acc, t);
            } else {
                break;
            }
        }
        return acc;
    }

    bool starts_factor() {
        skip_ws();
        if (eof()) return false;
        char c = peek();
        return std::isdigit((unsigned char)c) || std::isalpha((unsigned char)c) || c == '(';
    }

    RingElement<M> parse_term() {
        RingElement<M> acc = parse_factor();
        while (true) {
            skip_ws();
            if (eof()) break;
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = re_mul(m_, acc, parse_factor());
            } else if (c == '/') {
                ++pos_;
                long long d = parse_int_lit();
                try {
                    for (auto& t : acc.terms) t.second = m_.coeff().div_int(t.second, d);
                } catch (const std::domain_error& e) {
                    fail(std::string("coefficient not in the ring: ") + e.what());
                }
            } else if (starts_factor()) {
                acc = re_mul(m_, acc, parse_factor());
            } else {
                break;
            }
        }
        return acc;
    }

    RingElement<M> parse_factor() {
        RingElement<M> base = parse_primary();
        skip_ws();
        if (!eof() && peek() == '^') {
            ++pos_;
            long long k = parse_int_lit();
            if (k > 64 || k < -64) fail("exponent overflow");
            try {
                return re_pow(m_, base, k);
            } catch (const std::domain_error& e) {
                fail(e.what());
            }
        }
        return base;
    }

    RingElement<M> parse_primary() {
        skip_ws();
        if (eof()) fail("expected expression");
        char c = peek();
        if (c == '(') {
            ++pos_;
            RingElement<M> inner = parse_expr();
            skip_ws();
            if (eof() || peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit((unsigned char)c)) {
            long long v = parse_int_lit();
            return re_monomial(m_, m_.one(), m_.coeff().from_int(v));
        }
        if (std::isalpha((unsigned char)c)) {
            if (c == 'e' && !model_letter(m_, 'e')) {
                ++pos_;
                return re_one(m_);
            }
            auto b = model_letter(m_, c);
            if (!b) fail(std::string("unknown generator '") + c + "'");
            ++pos_;
            return re_monomial(m_, *b, m_.coeff().one());
        }
        fail("unexpected character");
    }
};

template <class M>
RingElement<M> parse_element(const M& m, const std::string& src) {
    return ExprParser<M>(m, src).parse();
}

} // namespace grlab
