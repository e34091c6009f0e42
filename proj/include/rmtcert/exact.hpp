#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace rmtcert {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// C(n, k); zero for k < 0 or k > n.
BigInt binomial(long n, long k);

BigInt factorial(long n);

double to_double(const BigRat& r);

} // namespace rmtcert
