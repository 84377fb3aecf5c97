#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "grlab/core.hpp"
#include "grlab/group/backend.hpp"
#include "grlab/group/cyclic.hpp"
#include "grlab/group/heisenberg.hpp"
#include "grlab/group/promislow.hpp"
#include "grlab/group/zn.hpp"

namespace grlab {

template <class G>
std::optional<typename G::Elt> letter_element(const G& g, char c) {
    return generator_by_letter(g, c);
}

inline std::optional<HeisenbergGroup::Elt> letter_element(const HeisenbergGroup& g, char c) {
    if (c == 'z') return g.central_z();
    return generator_by_letter(g, c);
}

inline std::optional<KleinFourGroup::Elt> letter_element(const KleinFourGroup& g, char c) {
    if (c == 'k') return KleinFourGroup::Elt{3};
    return generator_by_letter(g, c);
}

// Group word parser.  Grammar (whitespace-insensitive):
//   word  := 'e' | atom+            (juxtaposition or '*' both compose)
//   atom  := letter ('^' int)? | '(' word ')' ('^' int)?
// Backend-specific literals:
//   z^n backends also accept exponent tuples '(2,-1)';
//   the Promislow backend also accepts the canonical form p[s:x:y:z].
template <class G>
class WordParser {
  public:
    WordParser(const G& g, const std::string& src) : g_(g), src_(src) {}

    typename G::Elt parse() {
        skip_ws();
        if (eof()) fail("empty word");
        typename G::Elt acc = parse_word();
        skip_ws();
        if (!eof()) fail("unexpected trailing input");
        return acc;
    }

  private:
    const G& g_;
    const std::string& src_;
    std::size_t pos_ = 0;

    bool eof() const { return pos_ >= src_.size(); }
    char peek() const { return src_[pos_]; }
    void skip_ws() {
        while (!eof() && std::isspace((unsigned char)peek())) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(msg, 1, (int)pos_ + 1);
    }

    long long parse_int() {
        skip_ws();
        bool neg = false;
        if (!eof() && (peek() == '-' || peek() == '+')) {
            neg = peek() == '-';
            ++pos_;
        }
        if (eof() || !std::isdigit((unsigned char)peek())) fail("expected integer");
        long long v = 0;
        while (!eof() && std::isdigit((unsigned char)peek())) {
            v = v * 10 + (peek() - '0');
            if (v > 1000000) fail("exponent overflow");
            ++pos_;
        }
        return neg ? -v : v;
    }

    typename G::Elt parse_word() {
        typename G::Elt acc = g_.identity();
        bool any = false;
        while (true) {
            skip_ws();
            if (eof()) break;
            char c = peek();
            if (c == '*') {
                ++pos_;
                continue;
            }
            if (c == ')' || c == ',') break;
            typename G::Elt atom;
            if (!parse_atom(atom)) break;
            acc = g_.compose(acc, atom);
            any = true;
        }
        if (!any) fail("expected a group word");
        return acc;
    }

    bool parse_atom(typename G::Elt& out) {
        skip_ws();
        if (eof()) return false;
        char c = peek();
        if constexpr (std::is_same_v<G, ZnGroup>) {
            if (c == '(') {
                out = parse_tuple();
                return true;
            }
        }
        if constexpr (std::is_same_v<G, PromislowGroup>) {
            if (c == 'p' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '[') {
                out = parse_promislow_bracket();
                return true;
            }
        }
        if (c == '(') {
            ++pos_;
            typename G::Elt inner = parse_word();
            skip_ws();
            if (eof() || peek() != ')') fail("expected ')'");
            ++pos_;
            out = maybe_pow(inner);
            return true;
        }
        if (c == 'e' && !is_letter_of_backend('e')) {
            ++pos_;
            out = maybe_pow(g_.identity());
            return true;
        }
        if (std::isalpha((unsigned char)c)) {
            auto gen = letter_element(g_, c);
            if (!gen) fail(std::string("unknown generator '") + c + "' for backend " + g_.name());
            ++pos_;
            out = maybe_pow(*gen);
            return true;
        }
        return false;
    }

    bool is_letter_of_backend(char c) const { return letter_element(g_, c).has_value(); }

    typename G::Elt maybe_pow(const typename G::Elt& base) {
        skip_ws();
        if (!eof() && peek() == '^') {
            ++pos_;
            long long k = parse_int();
            return power(g_, base, k);
        }
        return base;
    }

    typename G::Elt parse_tuple() {
        if constexpr (std::is_same_v<G, ZnGroup>) {
            ++pos_; // '('
            typename G::Elt e = g_.identity();
            for (int i = 0; i < g_.n; ++i) {
                e[(std::size_t)i] = parse_int();
                skip_ws();
                if (i + 1 < g_.n) {
                    if (eof() || peek() != ',') fail("expected ','");
                    ++pos_;
                }
            }
            skip_ws();
            if (eof() || peek() != ')') fail("expected ')'");
            ++pos_;
            return e;
        } else {
            fail("tuple literals are only valid for z^n backends");
        }
    }

    typename G::Elt parse_promislow_bracket() {
        if constexpr (std::is_same_v<G, PromislowGroup>) {
            pos_ += 2; // "p["
            skip_ws();
            std::uint8_t s;
            if (peek() == '1') {
                s = 0;
                ++pos_;
            } else if (peek() == 'a') {
                ++pos_;
                if (!eof() && peek() == 'b') {
                    s = 3;
                    ++pos_;
                } else {
                    s = 1;
                }
            } else if (peek() == 'b') {
                s = 2;
                ++pos_;
            } else {
                fail("expected sign part 1, a, b or ab");
            }
            typename G::Elt e;
            e.s = s;
            for (int i = 0; i < 3; ++i) {
                skip_ws();
                if (eof() || peek() != ':') fail("expected ':'");
                ++pos_;
                long long num = parse_int();
                skip_ws();
                if (!eof() && peek() == '/') {
                    ++pos_;
                    long long den = parse_int();
                    if (den != 2) fail("translation denominators must be 2");
                    e.t2[(std::size_t)i] = num;
                } else {
                    e.t2[(std::size_t)i] = 2 * num;
                }
            }
            skip_ws();
            if (eof() || peek() != ']') fail("expected ']'");
            ++pos_;
            // parity of the doubled translation is forced by the sign part
            static constexpr std::int64_t parity[4][3] = {
                {0, 0, 0}, {1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
            for (int i = 0; i < 3; ++i)
                if (((e.t2[(std::size_t)i] % 2) + 2) % 2 != parity[e.s][i])
                    fail("translation parity does not match sign part (not an element of P)");
            return e;
        } else {
            fail("p[...] literals are only valid for the promislow backend");
        }
    }
};

template <class G>
typename G::Elt parse_group_word(const G& g, const std::string& src) {
    return WordParser<G>(g, src).parse();
}

// Splits "w1, w2, ..." at top-level commas (commas inside (), [] nest).
inline std::vector<std::string> split_top_level(const std::string& src) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : src) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) parts.push_back(cur);
    return parts;
}

template <class G>
std::vector<typename G::Elt> parse_group_set(const G& g, const std::string& src) {
    std::vector<typename G::Elt> out;
    for (const auto& part : split_top_level(src)) out.push_back(parse_group_word(g, part));
    return out;
}

} // namespace grlab
