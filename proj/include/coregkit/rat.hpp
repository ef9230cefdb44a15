#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace coregkit {

// All arithmetic in this library is exact. Rationals are GMP-backed and kept
// canonical (lowest terms, positive denominator) by the mpq layer.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Builds a canonical rational; rejects zero denominators. Use this instead of
// the two-integer Rat constructor, whose denominator parameter is unsigned.
Rat make_rat(const Int& num, const Int& den);

// Parses "p", "-p", or "p/q" (whitespace-free) into a canonical rational.
Rat parse_rat(const std::string& text);

// Prints as "p" or "p/q" with positive q; parse_rat round-trips this exactly.
std::string rat_to_string(const Rat& value);

inline bool is_integer(const Rat& value) { return denominator(value) == 1; }

}  // namespace coregkit
