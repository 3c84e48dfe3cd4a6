#include <pinched/bounds.hh>

#include <stdexcept>
#include <string>

namespace pinched
{
    namespace
    {
        auto positive(std::initializer_list<int> args, const char * what) -> void
        {
            for (auto a : args)
                if (a < 1)
                    throw std::invalid_argument(std::string(what) + ": arguments must be positive");
        }

        constexpr long long max_exponent = 1 << 20;
    }

    auto big_pow(const BigInt & base, const BigInt & exponent) -> BigInt
    {
        if (exponent < 0)
            throw std::invalid_argument("big_pow: negative exponent");
        if (base == 0)
            return exponent == 0 ? BigInt(1) : BigInt(0);
        if (base == 1)
            return 1;
        if (exponent > max_exponent)
            throw std::overflow_error("big_pow: exponent too large to evaluate");
        return boost::multiprecision::pow(base, exponent.convert_to<unsigned>());
    }

    auto factorial(int n) -> BigInt
    {
        BigInt r = 1;
        for (int i = 2 ; i <= n ; ++i)
            r *= i;
        return r;
    }

    auto at_most(const BigInt & value, long long cap) -> long long
    {
        return value > cap ? cap : value.convert_to<long long>();
    }

    auto ramsey_bound(int c, int s) -> BigInt
    {
        positive({ c, s }, "ramsey_bound");
        return big_pow(c, s);
    }

    auto lemma42_bound(int a, int d, int s, int l) -> BigInt
    {
        positive({ a, d, s, l }, "lemma42_bound");
        return big_pow(a, l - 1) * (BigInt(s) + BigInt(d) * (l - 1));
    }

    auto lemma43_bound(int a, int c, int d, int h) -> BigInt
    {
        positive({ a, c, d, h }, "lemma43_bound");
        BigInt k = BigInt(2) * c * d * h;
        return big_pow(a, k - 1) * d * (h + k - 1);
    }

    auto lemma44_bound(int s, int l, int t) -> BigInt
    {
        positive({ s, l, t }, "lemma44_bound");
        return l + big_pow(BigInt(s) * t, t);
    }

    auto sigma(int c, int h, int s, int t) -> BigInt
    {
        positive({ c, h, s, t }, "sigma");
        BigInt k = BigInt(2) * c * h * t;
        return big_pow(s, k - 1) * t * (h + k - 1);
    }

    auto lambda(int c, int h, int s, int t) -> BigInt
    {
        positive({ c, h, s, t }, "lambda");
        auto sg = sigma(c, h, s, t);
        return BigInt(c) * s * factorial(s) * big_pow(sg, s) + big_pow(sg * t, t);
    }

    auto gamma(int c, int h, int l) -> BigInt
    {
        positive({ c, h, l }, "gamma");
        BigInt k = BigInt(2) * c * h * l;
        return big_pow(BigInt(c) * (h + 2), k - 1) * l * (h + k - 1);
    }
}
