#pragma once

// Exact scalars: arbitrary-precision integers and rationals.
// Every computation in the library is exact; no floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <string>

namespace mck::exact {

using Int = boost::multiprecision::cpp_int;

// Always stored in lowest terms with positive denominator (the backend
// normalizes on construction and after every operation).
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rat& x) { return denominator(x) == 1; }

// C(n, k) over arbitrary-precision integers; zero outside 0 <= k <= n.
inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int result = 1;
    for (long i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i; // exact at every step
    }
    return result;
}

inline Int factorial(long n) {
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

// Catalan number C_k = (2k)! / (k! (k+1)!)
inline Int catalan(long k) {
    return binomial(2 * k, k) / Int(k + 1);
}

inline std::string to_string(const Rat& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

inline std::string to_string(const Int& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

} // namespace mck::exact
