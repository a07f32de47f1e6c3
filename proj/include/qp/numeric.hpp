#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace qp {

/// Exact rational coordinate type used by all geometric predicates.
using Rat = boost::multiprecision::cpp_rational;

/// Arbitrary-precision integer, used for exact exponent bookkeeping.
using BigInt = boost::multiprecision::cpp_int;

/// High-precision real with a 64-bit binary exponent, so that log-scale
/// bound values with exponents far beyond double range stay finite.
using BigFloat = boost::multiprecision::number<
    boost::multiprecision::backends::cpp_bin_float<
        100, boost::multiprecision::backends::digit_base_10, void, long long>>;

BigFloat log2_bf(const BigFloat& x);
BigFloat log2_bf(const BigInt& x);

/// 2^x for possibly huge x (handled through the wide exponent).
BigFloat pow2_bf(const BigFloat& x);

}  // namespace qp
