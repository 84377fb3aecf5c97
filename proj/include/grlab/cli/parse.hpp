#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "grlab/cli/dispatch.hpp"
#include "grlab/group/subgroup.hpp"
#include "grlab/group/words.hpp"
#include "grlab/io/expr.hpp"

namespace grlab {

// Subgroup descriptors:
//   whole | trivial | center | cyclic:<word> | lattice:(..);(..) |
//   normal:a (Klein bottle) | translations (Promislow)
template <class G>
Subgroup<G> parse_subgroup(const G& g, const std::string& desc) {
    if (desc == "whole") return Subgroup<G>::whole();
    if (desc == "trivial") return Subgroup<G>::trivial();
    if (desc == "center") return Subgroup<G>::center();
    if (desc == "translations") return Subgroup<G>::named("translations");
    if (desc.rfind("normal:", 0) == 0) return Subgroup<G>::named(desc.substr(7));
    if (desc.rfind("cyclic:", 0) == 0)
        return Subgroup<G>::cyclic(g, parse_group_word(g, desc.substr(7)));
    if (desc.rfind("lattice:", 0) == 0) {
        if constexpr (std::is_same_v<G, ZnGroup>) {
            std::vector<std::array<std::int64_t, 3>> gens;
            std::string body = desc.substr(8);
            std::size_t pos = 0;
            while (pos < body.size()) {
                std::size_t end = body.find(';', pos);
                if (end == std::string::npos) end = body.size();
                gens.push_back(parse_group_word(g, body.substr(pos, end - pos)));
                pos = end + 1;
            }
            return Subgroup<G>::lattice(g, gens);
        } else {
            throw unsupported_error("lattice subgroups exist only for z^n backends");
        }
    }
    throw std::invalid_argument("unknown subgroup descriptor '" + desc + "'");
}

// Window specs: "ball:<r>" or "list:<item>,<item>,..." where items are group
// words (group-ring and twisted models) or monomials like x^2*y (Weyl).
template <class M>
std::vector<typename M::Basis> parse_window_spec(const M& m, const std::string& spec) {
    if (spec.rfind("ball:", 0) == 0) {
        int r = std::stoi(spec.substr(5));
        if (r < 0) throw std::invalid_argument("window radius must be >= 0");
        return m.ball_window(r);
    }
    if (spec.rfind("list:", 0) == 0) {
        std::vector<typename M::Basis> out;
        for (const auto& item : split_top_level(spec.substr(5))) {
            if constexpr (detail::is_group_like<M>::value) {
                out.push_back(parse_group_word(m.backend(), item));
            } else {
                auto e = parse_element(m, item);
                if (e.terms.size() != 1 || !(e.terms[0].second == m.coeff().one()))
                    throw std::invalid_argument("window items must be single basis monomials");
                out.push_back(e.terms[0].first);
            }
        }
        return out;
    }
    throw std::invalid_argument("window spec must be ball:<r> or list:<words>");
}

// Fixture files: one canonical word per line, '#' comments and blank lines
// ignored.
template <class G>
std::vector<typename G::Elt> load_word_fixture(const G& g, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open fixture file: " + path);
    std::vector<typename G::Elt> out;
    std::string line;
    while (std::getline(in, line)) {
        auto h = line.find('#');
        if (h != std::string::npos) line = line.substr(0, h);
        std::size_t a = line.find_first_not_of(" \t\r\n");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r\n");
        out.push_back(parse_group_word(g, line.substr(a, b - a + 1)));
    }
    return out;
}

} // namespace grlab
