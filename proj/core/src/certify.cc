#include <pinched/extractors.hh>
#include <pinched/generators.hh>

#include <algorithm>
#include <sstream>

namespace pinched
{
    auto to_string(CheckStatus s) -> std::string
    {
        switch (s) {
            case CheckStatus::pass:      return "pass";
            case CheckStatus::fail:      return "fail";
            case CheckStatus::exhausted: return "exhausted";
        }
        return "?";
    }

    auto CertifyReport::all_pass() const -> bool
    {
        return std::all_of(checks.begin(), checks.end(), [] (const CertifyCheck & c) { return c.status == CheckStatus::pass; });
    }

    namespace
    {
        auto list(const VertexList & vs, const VertexList & to_parent) -> std::string
        {
            std::ostringstream out;
            for (std::size_t i = 0 ; i < vs.size() ; ++i)
                out << (i ? " " : "") << to_parent[vs[i]];
            return out.str();
        }

        /// found means the property fails
        auto absent(SearchStatus s) -> CheckStatus
        {
            switch (s) {
                case SearchStatus::found:     return CheckStatus::fail;
                case SearchStatus::none:      return CheckStatus::pass;
                case SearchStatus::exhausted: return CheckStatus::exhausted;
            }
            return CheckStatus::fail;
        }
    }

    auto certify_array_properties(const Graph & g, const Array & arr, const CertifyOptions & opt) -> CertifyReport
    {
        require_fingerprint(g, arr.graph);
        if (auto v = validate_array(g, arr) ; ! v)
            throw InvalidWitness("certify_array_properties: not an array: " + to_string(v));

        CertifyReport report;
        report.graph = g.fingerprint();
        report.s = int(arr.order.size());
        report.h = arr.h;
        report.vertices = arr.order;
        for (auto & p : arr.paths)
            report.vertices.insert(report.vertices.end(), p.begin(), p.end());
        std::sort(report.vertices.begin(), report.vertices.end());

        auto sub = induced_subgraph(g, report.vertices);
        auto & J = sub.graph;
        std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
        for (std::size_t i = 0 ; i < sub.to_parent.size() ; ++i)
            local[sub.to_parent[i]] = int(i);

        auto embedding_check = [&] (const char * name, const Graph & pattern) {
            auto r = find_induced_embedding(J, pattern, opt.limits);
            CertifyCheck c{ name, absent(r.status), 0, {} };
            if (r.witness)
                c.detail = "induced copy on " + list(r.witness->map, sub.to_parent);
            report.checks.push_back(std::move(c));
        };
        embedding_check("K_4-free", gen_complete(4));
        embedding_check("K_{2,3}-free", gen_biclique(2, 3));

        SubdivisionBounds few_direct;
        few_direct.max_unsubdivided = 1;
        {
            auto r = find_induced_subdivision(J, gen_complete(4), opt.vertex_budget, opt.limits, few_direct);
            CertifyCheck c{ "no induced K_4 subdivision with at most one unsubdivided edge", absent(r.status), opt.vertex_budget, {} };
            if (r.witness)
                c.detail = "branch vertices " + list(r.witness->branch, sub.to_parent);
            report.checks.push_back(std::move(c));
        }
        {
            auto r = find_induced_line_subdivision(J, gen_complete(4), opt.vertex_budget, opt.limits, few_direct);
            CertifyCheck c{ "no induced line graph of such a K_4 subdivision", absent(r.status), opt.vertex_budget, {} };
            if (r.witness)
                c.detail = "found one";
            report.checks.push_back(std::move(c));
        }
        {
            auto r = find_pinch_witness(J, 3, arr.h, opt.limits);
            CertifyCheck c{ "no (3," + std::to_string(arr.h) + ") pinch witness", absent(r.status), 0, {} };
            if (r.witness)
                c.detail = "hub " + std::to_string(sub.to_parent[r.witness->hub]);
            report.checks.push_back(std::move(c));
        }
        {
            Array local_arr{ J.fingerprint(), {}, {}, {}, arr.h };
            for (auto x : arr.order)
                local_arr.order.push_back(local[x]);
            for (std::size_t i = 0 ; i < arr.paths.size() ; ++i) {
                VertexList p;
                for (auto v : arr.paths[i])
                    p.push_back(local[v]);
                local_arr.paths.push_back(std::move(p));
                local_arr.ends.push_back(local[arr.ends[i]]);
            }
            auto model = array_minor_model(J, local_arr);
            CertifyCheck c{ "K_{s,s} minor model, treewidth >= s", CheckStatus::fail, 0, {} };
            if (auto v = validate_minor_model(J, model) ; ! v)
                c.detail = to_string(v);
            else {
                report.treewidth_lower_bound = treewidth_lower_via_minor(J, model);
                c.status = report.treewidth_lower_bound >= report.s ? CheckStatus::pass : CheckStatus::fail;
                c.detail = "lower bound " + std::to_string(report.treewidth_lower_bound);
            }
            report.checks.push_back(std::move(c));
        }
        return report;
    }
}
