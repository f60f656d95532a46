#pragma once

// Exact arithmetic substrate: arbitrary-precision integers and rationals.
// Everything in the core is exact; no floating point outside the sketch tool.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dualscope {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Int int_gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }
inline Int int_lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline int sign(const Int& a) { return a.sign(); }
inline int sign(const Rat& a) { return a.sign(); }

inline Int int_pow(Int base, unsigned e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Rat rat_pow(const Rat& base, int e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("rat_pow: 0^negative");
        Rat p = rat_pow(base, -e);
        return 1 / p;
    }
    Rat r = 1, b = base;
    unsigned u = static_cast<unsigned>(e);
    while (u) {
        if (u & 1) r *= b;
        b *= b;
        u >>= 1;
    }
    return r;
}

// Canonical string form: "p" when the denominator is 1, else "p/q".
inline std::string to_string(const Rat& r) {
    if (den(r) == 1) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

// Accepts "p", "-p", "p/q"; whitespace is not tolerated.
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_rat: empty string");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("parse_rat: zero denominator");
        return Rat(p, q);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("parse_rat: bad rational '" + s + "'");
    }
}

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

}  // namespace dualscope
