#ifndef PINCHED_BOUNDS_HH
#define PINCHED_BOUNDS_HH 1

#include <boost/multiprecision/cpp_int.hpp>

namespace pinched
{
    using BigInt = boost::multiprecision::cpp_int;

    /// Size thresholds of the extraction lemmas, exact. All arguments must be
    /// positive; std::invalid_argument otherwise.
    auto ramsey_bound(int c, int s) -> BigInt;
    auto lemma42_bound(int a, int d, int s, int l) -> BigInt;
    auto lemma43_bound(int a, int c, int d, int h) -> BigInt;
    auto lemma44_bound(int s, int l, int t) -> BigInt;

    /// sigma(c,h,s,t) = s^(2cht-1) t (h + 2cht - 1)
    auto sigma(int c, int h, int s, int t) -> BigInt;

    /// lambda(c,h,s,t) = c s s! sigma^s + (sigma t)^t
    auto lambda(int c, int h, int s, int t) -> BigInt;

    /// gamma(c,h,l) = (c(h+2))^(2chl-1) l (h + 2chl - 1)
    auto gamma(int c, int h, int l) -> BigInt;

    auto big_pow(const BigInt & base, const BigInt & exponent) -> BigInt;
    auto factorial(int n) -> BigInt;

    /// Saturating conversion for comparisons against container sizes.
    auto at_most(const BigInt & value, long long cap) -> long long;
}

#endif
