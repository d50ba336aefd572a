#ifndef RATCALC_INTEGER_HPP
#define RATCALC_INTEGER_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace ratcalc {

using Integer = boost::multiprecision::cpp_int;

inline Integer factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Integer binomial(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("binomial: need 0 <= k <= n");
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact at every step: r is C(n-k+i, i)
    }
    return r;
}

// b^e with 0^0 = 1.
inline Integer int_pow(Integer base, long long e) {
    if (e < 0) throw std::invalid_argument("int_pow: negative exponent");
    Integer r = 1;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

}  // namespace ratcalc

#endif
