#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "grlab/core.hpp"

namespace grlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Prime field F_p with a runtime modulus.  Values are reduced representatives
// in [0, p).  The ring object owns p; values are plain integers.
struct FpRing {
    using value_type = std::uint32_t;
    std::uint32_t p;

    explicit FpRing(std::uint32_t prime) : p(prime) {
        if (!is_prime_u32(prime))
            throw std::invalid_argument("FpRing: modulus " + std::to_string(prime) + " is not prime");
    }

    value_type zero() const { return 0; }
    value_type one() const { return 1 % p; }
    bool is_zero(value_type a) const { return a == 0; }
    value_type add(value_type a, value_type b) const {
        std::uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
    value_type sub(value_type a, value_type b) const { return add(a, neg(b)); }
    value_type mul(value_type a, value_type b) const {
        return static_cast<value_type>((std::uint64_t)a * b % p);
    }
    value_type inv(value_type a) const {
        if (a == 0) throw std::domain_error("FpRing::inv: zero is not invertible");
        // extended Euclid on (a, p)
        std::int64_t t = 0, nt = 1, r = p, nr = a;
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (t < 0) t += p;
        return static_cast<value_type>(t);
    }
    bool is_unit(value_type a) const { return a != 0; }
    value_type from_int(long long n) const {
        long long m = n % (long long)p;
        if (m < 0) m += p;
        return static_cast<value_type>(m);
    }
    // Scalar division used by the expression grammar's `expr / intliteral`.
    value_type div_int(value_type a, long long n) const {
        value_type d = from_int(n);
        return mul(a, inv(d));
    }
    std::string str(value_type a) const { return std::to_string(a); }
    std::string name() const { return "F" + std::to_string(p); }
};

// Arbitrary-precision integers.
struct IntRing {
    using value_type = BigInt;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    bool is_zero(const value_type& a) const { return a == 0; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type inv(const value_type& a) const {
        if (a == 1 || a == -1) return a;
        throw std::domain_error("IntRing::inv: not a unit in Z");
    }
    bool is_unit(const value_type& a) const { return a == 1 || a == -1; }
    value_type from_int(long long n) const { return n; }
    value_type div_int(const value_type& a, long long n) const {
        if (n == 0) throw std::domain_error("division by zero");
        if (a % n != 0) throw std::domain_error("IntRing: inexact division");
        return a / n;
    }
    bool is_neg(const value_type& a) const { return a < 0; }
    std::string str(const value_type& a) const { return a.str(); }
    std::string name() const { return "Z"; }
};

// Exact rationals.
struct RatRing {
    using value_type = Rational;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    bool is_zero(const value_type& a) const { return a == 0; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type inv(const value_type& a) const {
        if (a == 0) throw std::domain_error("RatRing::inv: zero is not invertible");
        return 1 / a;
    }
    bool is_unit(const value_type& a) const { return a != 0; }
    value_type from_int(long long n) const { return n; }
    value_type div_int(const value_type& a, long long n) const {
        if (n == 0) throw std::domain_error("division by zero");
        return a / n;
    }
    bool is_neg(const value_type& a) const { return a < 0; }
    std::string str(const value_type& a) const {
        const auto& num = boost::multiprecision::numerator(a);
        const auto& den = boost::multiprecision::denominator(a);
        if (den == 1) return num.str();
        return num.str() + "/" + den.str();
    }
    std::string name() const { return "Q"; }
};

} // namespace grlab
