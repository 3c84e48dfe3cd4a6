#ifndef PINCHED_SRC_SEARCH_BUDGET_HH
#define PINCHED_SRC_SEARCH_BUDGET_HH 1

#include <pinched/oracles.hh>

namespace pinched::detail
{
    struct Exhausted
    {
    };

    /// Counts search nodes and unwinds with Exhausted once a limit is hit.
    class Budget
    {
        private:
            SearchLimits _limits;
            std::uint64_t _nodes = 0;

        public:
            explicit Budget(SearchLimits limits) : _limits(limits) {}

            auto tick() -> void
            {
                ++_nodes;
                if (_limits.node_limit != 0 && _nodes > _limits.node_limit)
                    throw Exhausted{};
                if (_limits.cancel && (_nodes & 0x3ff) == 0 && _limits.cancel->load(std::memory_order_relaxed))
                    throw Exhausted{};
            }

            auto nodes() const -> std::uint64_t { return _nodes; }
    };

    inline auto for_each_bit(const VertexSet & s, auto && f) -> void
    {
        for (auto v = s.find_first() ; v != VertexSet::npos ; v = s.find_next(v))
            f(Vertex(v));
    }
}

#endif
