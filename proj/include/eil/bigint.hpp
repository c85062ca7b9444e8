#ifndef EIL_BIGINT_HPP
#define EIL_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace eil {

// Exact signed integer. Counts of independent sets approach C(64, 32) and
// Hilbert numerator terms multiply two such counts, so fixed 64-bit words
// are not enough.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& x) { return x.str(); }

} // namespace eil

#endif
