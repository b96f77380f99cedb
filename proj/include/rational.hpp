#pragma once

// Exact arithmetic used throughout: arbitrary-precision integers and
// rationals. boost cpp_rational is always stored canonically (numerator and
// denominator coprime, denominator > 0), which is exactly the contract the
// rest of the code relies on.

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace exact {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown on rejected input (non-coprime pairs, zero denominators, malformed
// records, ...). CLI maps this to exit code 2.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when the manifold in question is not a rational homology sphere
// (degenerate gluing). CLI maps this to exit code 3.
struct NotQHSError : std::runtime_error {
    explicit NotQHSError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when two independently computed routes to the same quantity
// disagree. CLI maps this to exit code 4.
struct ConsistencyError : std::runtime_error {
    explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

inline int sgn(const Int& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }
inline int sgn(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }
inline int sgn(long long x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// Floor division, b != 0, result rounds toward minus infinity.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;            // truncates toward zero
    if (q * b != a && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int rat_floor(const Rat& x) {
    return floor_div(numerator(x), denominator(x));
}

// The two-argument Rat constructor rejects negative denominators outright;
// this one normalizes the sign instead and turns den == 0 into our own error.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw ValidationError("zero denominator");
    if (den < 0) return Rat(-num, -den);
    return Rat(num, den);
}

inline std::string to_string(const Int& x) { return x.str(); }

// Prints "num/den", or just "num" when the denominator is 1.
inline std::string to_string(const Rat& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

// Parses "num" or "num/den" (optional leading minus on either part).
inline Rat parse_rational(const std::string& text) {
    if (text.empty()) throw ValidationError("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        return make_rat(num, den);
    } catch (const std::exception& e) {
        throw ValidationError("bad rational literal '" + text + "'");
    }
}

inline Int gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace exact
