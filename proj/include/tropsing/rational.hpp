#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "tropsing/errors.hpp"

namespace tropsing {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using VecI = std::vector<Int>;  // integer lattice vector
using VecQ = std::vector<Rat>;  // rational vector

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

// Floor division for possibly negative operands.
inline Int floor_div(const Int& a, const Int& b) {
    internal_check(b != 0, "floor_div by zero");
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline long long to_int64(const Int& v) {
    if (v > Int(std::numeric_limits<long long>::max()) ||
        v < Int(std::numeric_limits<long long>::min()))
        throw SchemaError("integer too large for 64-bit serialization");
    return static_cast<long long>(v);
}

inline std::string to_string(const Int& v) { return v.str(); }

inline std::string to_string(const Rat& r) {
    if (den(r) == 1) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

inline std::string to_string(const VecI& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + ")";
}

inline std::string to_string(const VecQ& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += to_string(v[i]);
    }
    return s + ")";
}

inline VecQ to_vecq(const VecI& v) {
    VecQ out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
    return out;
}

inline bool is_integral(const Rat& r) { return den(r) == 1; }

inline Int to_integer(const Rat& r) {
    internal_check(is_integral(r), "expected integral rational");
    return num(r);
}

} // namespace tropsing
