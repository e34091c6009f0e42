#include "rmtcert/exact.hpp"

#include <stdexcept>

namespace rmtcert {

BigInt binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (long i = 0; i < k; ++i) {
    result *= n - i;
    result /= i + 1;  // exact: product of j consecutive integers is divisible by j!
  }
  return result;
}

BigInt factorial(long n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  BigInt result = 1;
  for (long i = 2; i <= n; ++i) result *= i;
  return result;
}

double to_double(const BigRat& r) { return r.convert_to<double>(); }

} // namespace rmtcert
