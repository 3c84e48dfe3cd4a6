#include <pinched/generators.hh>
#include <pinched/oracles.hh>

namespace pinched
{
    auto to_string(CleanStatus s) -> std::string
    {
        switch (s) {
            case CleanStatus::clean_within_budget: return "clean-within-budget";
            case CleanStatus::obstruction:         return "obstruction";
            case CleanStatus::exhausted:           return "exhausted";
        }
        return "?";
    }

    auto is_t_clean_bounded(const Graph & g, int t, int vertex_budget, SearchLimits limits) -> CleanVerdict
    {
        if (t < 1)
            throw std::invalid_argument("is_t_clean_bounded: need t >= 1");

        CleanVerdict verdict;
        verdict.t = t;
        verdict.vertex_budget = vertex_budget;
        bool exhausted = false;

        auto note = [&] (SearchStatus s) {
            exhausted = exhausted || s == SearchStatus::exhausted;
            return s == SearchStatus::found;
        };

        auto tag = std::to_string(t);
        if (auto r = find_induced_embedding(g, gen_complete(t), limits) ; note(r.status)) {
            verdict.status = CleanStatus::obstruction;
            verdict.obstruction = "K_" + tag;
            verdict.embedding = std::move(r.witness);
            return verdict;
        }
        if (auto r = find_induced_embedding(g, gen_biclique(t, t), limits) ; note(r.status)) {
            verdict.status = CleanStatus::obstruction;
            verdict.obstruction = "K_{" + tag + "," + tag + "}";
            verdict.embedding = std::move(r.witness);
            return verdict;
        }
        if (t >= 2) {
            auto wall = gen_wall(t);
            if (auto r = find_induced_subdivision(g, wall, vertex_budget, limits) ; note(r.status)) {
                verdict.status = CleanStatus::obstruction;
                verdict.obstruction = "subdivided W_" + tag + "x" + tag;
                verdict.wall = std::move(r.witness);
                return verdict;
            }
            if (auto r = find_induced_line_subdivision(g, wall, vertex_budget, limits) ; note(r.status)) {
                verdict.status = CleanStatus::obstruction;
                verdict.obstruction = "line graph of subdivided W_" + tag + "x" + tag;
                verdict.line_wall = std::move(r.witness);
                return verdict;
            }
        }
        verdict.status = exhausted ? CleanStatus::exhausted : CleanStatus::clean_within_budget;
        return verdict;
    }
}
