#include <pinched/random.hh>

#include <stdexcept>

namespace pinched
{
    auto splitmix64(std::uint64_t x) -> std::uint64_t
    {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    Rng::Rng(std::uint64_t seed) :
        _seed(seed),
        _engine(splitmix64(seed))
    {
    }

    auto Rng::split(std::uint64_t stream) const -> Rng
    {
        return Rng(_seed ^ splitmix64(stream + 1));
    }

    auto Rng::uniform(std::int64_t lo, std::int64_t hi) -> std::int64_t
    {
        if (hi < lo)
            throw std::invalid_argument("Rng::uniform: empty range");
        auto span = std::uint64_t(hi - lo) + 1;
        if (span == 0)
            return std::int64_t(next());
        auto limit = ~std::uint64_t(0) - (~std::uint64_t(0) % span);
        std::uint64_t r;
        do
            r = next();
        while (r >= limit);
        return lo + std::int64_t(r % span);
    }

    auto Rng::chance(int num, int den) -> bool
    {
        return uniform(0, den - 1) < num;
    }
}
