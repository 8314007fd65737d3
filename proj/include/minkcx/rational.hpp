/*
 * Exact rational scalars and coordinate vectors.
 *
 * Every coordinate in the library is a Rational; no floating point is used
 * anywhere. Values are kept canonical (lowest terms, positive denominator)
 * by the underlying GMP representation.
 */

#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace minkcx {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/** A point of R^d as a fixed-length list of exact rationals. */
using RatVector = std::vector<Rational>;

/** Parse "p/q" or "p" (optional sign, arbitrary precision). Throws ParseError. */
Rational parse_rational(const std::string& text);

/**
 * num/den in canonical form for any sign of den. Use this instead of the
 * two-argument Rational constructor when the denominator can be negative;
 * the underlying small-integer constructor does not canonicalize signs.
 */
Rational make_rational(const Integer& num, const Integer& den);

/** Render in lowest terms, "p" when the denominator is 1, else "p/q". */
std::string to_string(const Rational& value);

/** Render as "(a, b, ...)". */
std::string to_string(const RatVector& vec);

bool is_integral(const Rational& value);
Integer floor_int(const Rational& value);
Integer ceil_int(const Rational& value);

RatVector zero_vector(int dim);
RatVector vec_add(const RatVector& a, const RatVector& b);
RatVector vec_sub(const RatVector& a, const RatVector& b);
RatVector vec_scale(const Rational& c, const RatVector& v);
Rational vec_dot(const RatVector& a, const RatVector& b);
bool vec_is_zero(const RatVector& v);

/** Three-way lexicographic comparison; vectors must have equal length. */
int vec_compare(const RatVector& a, const RatVector& b);

/** Scale a nonzero vector to a primitive integer vector with positive leading entry. */
RatVector primitive_direction(const RatVector& v);

}  // namespace minkcx
