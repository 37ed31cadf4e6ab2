#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace dualgraph {

// All arithmetic in this library is exact. Integers are arbitrary precision,
// fractions are kept in lowest terms with positive denominator.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }
inline bool is_integer(const Rat& q) { return den(q) == 1; }

// "p/q" in lowest terms, plain integer when q == 1.
inline std::string to_string(const Rat& q) {
    if (is_integer(q)) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

inline std::string to_string(const Int& n) { return n.str(); }

}  // namespace dualgraph
