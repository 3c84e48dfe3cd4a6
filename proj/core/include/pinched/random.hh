#ifndef PINCHED_RANDOM_HH
#define PINCHED_RANDOM_HH 1

#include <cstdint>
#include <random>
#include <vector>

namespace pinched
{
    /// Seeded randomness with a fixed, platform-independent contract:
    ///
    ///   * the engine is std::mt19937_64 (output fully specified by the standard),
    ///     seeded with splitmix64(seed);
    ///   * split(k) yields an independent child stream seeded with
    ///     splitmix64(seed ^ splitmix64(k + 1)), so sub-generators never depend on
    ///     how much a sibling consumed;
    ///   * bounded draws use rejection sampling on the raw 64-bit output rather
    ///     than std::uniform_int_distribution, whose algorithm is unspecified.
    ///
    /// Identical seeds therefore reproduce identical graphs on every platform.
    class Rng
    {
        private:
            std::uint64_t _seed;
            std::mt19937_64 _engine;

        public:
            explicit Rng(std::uint64_t seed);

            auto seed() const noexcept -> std::uint64_t { return _seed; }
            auto split(std::uint64_t stream) const -> Rng;

            auto next() -> std::uint64_t { return _engine(); }

            /// Uniform in [lo, hi]; hi >= lo.
            auto uniform(std::int64_t lo, std::int64_t hi) -> std::int64_t;
            auto uniform_int(int lo, int hi) -> int { return int(uniform(lo, hi)); }

            /// True with probability num / den.
            auto chance(int num, int den) -> bool;

            template <typename T_>
            auto shuffle(std::vector<T_> & v) -> void
            {
                for (std::size_t i = v.size() ; i > 1 ; --i)
                    std::swap(v[i - 1], v[std::size_t(uniform(0, std::int64_t(i - 1)))]);
            }
    };

    auto splitmix64(std::uint64_t x) -> std::uint64_t;
}

#endif
