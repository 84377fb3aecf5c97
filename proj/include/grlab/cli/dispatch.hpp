#pragma once

#include <string>

#include "grlab/coeff.hpp"
#include "grlab/group/cyclic.hpp"
#include "grlab/group/free.hpp"
#include "grlab/group/heisenberg.hpp"
#include "grlab/group/klein_bottle.hpp"
#include "grlab/group/promislow.hpp"
#include "grlab/group/zn.hpp"
#include "grlab/ring/model.hpp"

namespace grlab {

// String names for the CLI surface:
//   groups: z1 (alias z), z2, z3, f2, heisenberg (alias heis), klein,
//           promislow, c<N> (e.g. c2, c3, c6), v4
//   fields: a prime p, "int"/"z" (integers), "rat"/"q" (rationals)
//   models: groupring (needs --group), quaternion, weyl

template <class Fn>
auto with_backend(const std::string& name, Fn&& fn) {
    if (name == "z" || name == "z1") return fn(ZnGroup(1));
    if (name == "z2") return fn(ZnGroup(2));
    if (name == "z3") return fn(ZnGroup(3));
    if (name == "f2") return fn(FreeGroup(2));
    if (name == "heisenberg" || name == "heis") return fn(HeisenbergGroup{});
    if (name == "klein") return fn(KleinBottleGroup{});
    if (name == "promislow") return fn(PromislowGroup{});
    if (name == "v4") return fn(KleinFourGroup{});
    if (name.size() >= 2 && name[0] == 'c') {
        bool digits = true;
        for (std::size_t i = 1; i < name.size(); ++i) digits &= std::isdigit((unsigned char)name[i]);
        if (digits) return fn(CyclicGroup((std::uint32_t)std::stoul(name.substr(1))));
    }
    throw std::invalid_argument("unknown group backend '" + name +
                                "' (try z1, z2, z3, f2, heisenberg, klein, promislow, cN, v4)");
}

inline bool field_is_prime(const std::string& f) {
    if (f.empty()) return false;
    for (char c : f)
        if (!std::isdigit((unsigned char)c)) return false;
    return true;
}

// group ring over any supported coefficient ring
template <class Fn>
auto with_group_model(const std::string& group, const std::string& field, Fn&& fn) {
    return with_backend(group, [&](auto g) {
        if (field_is_prime(field))
            return fn(GroupRingModel(std::move(g), FpRing((std::uint32_t)std::stoul(field))));
        if (field == "int" || field == "z") return fn(GroupRingModel(std::move(g), IntRing{}));
        if (field == "rat" || field == "q") return fn(GroupRingModel(std::move(g), RatRing{}));
        throw std::invalid_argument("unknown coefficient ring '" + field + "'");
    });
}

// any model; search-capable fields only (F_p or Q)
template <class Fn>
auto with_model(const std::string& model, const std::string& group, const std::string& field,
                Fn&& fn) {
    if (model == "groupring" || model.empty()) {
        if (group.empty()) throw std::invalid_argument("--model groupring needs --group");
        return with_group_model(group, field.empty() ? "2" : field, fn);
    }
    if (model == "quaternion") {
        if (field.empty() || field == "rat" || field == "q")
            return fn(make_quaternion_model(RatRing{}));
        if (field_is_prime(field))
            return fn(make_quaternion_model(FpRing((std::uint32_t)std::stoul(field))));
        throw std::invalid_argument("quaternion model supports F_p or rational coefficients");
    }
    if (model == "weyl") {
        if (field.empty() || field == "rat" || field == "q") return fn(WeylModel(RatRing{}));
        if (field_is_prime(field))
            return fn(WeylModel(FpRing((std::uint32_t)std::stoul(field))));
        throw std::invalid_argument("weyl model supports F_p or rational coefficients");
    }
    throw std::invalid_argument("unknown model '" + model +
                                "' (try groupring, quaternion, weyl)");
}

// search-capable models only: coefficients must form a field (F_p or Q)
template <class Fn>
auto with_search_model(const std::string& model, const std::string& group,
                       const std::string& field, Fn&& fn) {
    if (model == "groupring" || model.empty()) {
        if (group.empty()) throw std::invalid_argument("--model groupring needs --group");
        std::string f = field.empty() ? "2" : field;
        if (!field_is_prime(f))
            throw std::invalid_argument("group-ring searches need a prime field --field p");
        return with_backend(group, [&](auto g) {
            return fn(GroupRingModel(std::move(g), FpRing((std::uint32_t)std::stoul(f))));
        });
    }
    return with_model(model, group, field, fn);
}

} // namespace grlab
