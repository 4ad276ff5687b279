#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace djgraph {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Renders an exact rational as "p" when the denominator is one and "p/q"
// otherwise; cpp_rational keeps values canonical (reduced, q > 0), so the
// rendering is unique per value.
std::string exact_str(const BigRat& value);

BigInt big_from_int128(__int128 value);
std::string int128_str(__int128 value);

// x * (x - 1) * (x - 2) / 6 over the rationals; negative for x in (0, 1) or
// below, which callers rely on for vacuous lower bounds.
BigRat generalized_binom3(const BigRat& x);

}  // namespace djgraph
