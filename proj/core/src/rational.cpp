#include "djgraph/rational.hpp"

namespace djgraph {

std::string exact_str(const BigRat& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigInt big_from_int128(__int128 value) {
  const bool negative = value < 0;
  unsigned __int128 magnitude =
      negative ? -static_cast<unsigned __int128>(value)
               : static_cast<unsigned __int128>(value);
  BigInt result = static_cast<std::uint64_t>(magnitude >> 64);
  result <<= 64;
  result += static_cast<std::uint64_t>(magnitude);
  return negative ? -result : result;
}

std::string int128_str(__int128 value) { return big_from_int128(value).str(); }

BigRat generalized_binom3(const BigRat& x) {
  return x * (x - 1) * (x - 2) / 6;
}

}  // namespace djgraph
