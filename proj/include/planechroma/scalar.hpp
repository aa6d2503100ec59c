#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace planechroma {

using Scalar = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

constexpr unsigned kDefaultPrecisionBits = 128;

// Sets the significand width used for newly created Scalars.
void set_precision_bits(unsigned bits);
unsigned precision_bits();

// Reads PLANE_CHROMA_PRECISION if present, else applies the default.
void init_precision_from_env();

Scalar sqrt_of(const Rational& r);
Scalar to_scalar(const Rational& r);
Scalar pi();

// Full-precision decimal rendering, no exponent for moderate magnitudes.
std::string to_decimal(const Scalar& s);
Scalar parse_scalar(const std::string& text);

}  // namespace planechroma
