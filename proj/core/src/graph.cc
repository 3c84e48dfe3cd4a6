#include <pinched/graph.hh>
#include <pinched/graph6.hh>

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace pinched
{
    namespace
    {
        auto fnv1a(std::string_view bytes) -> std::uint64_t
        {
            std::uint64_t h = 0xcbf29ce484222325ULL;
            for (unsigned char c : bytes) {
                h ^= c;
                h *= 0x100000001b3ULL;
            }
            return h;
        }

        auto check_distinct(const Graph & g, std::span<const Vertex> vs, const char * what) -> void
        {
            auto seen = g.empty_set();
            for (auto v : vs) {
                if (! g.contains(v))
                    throw GraphError(std::string(what) + ": unknown vertex " + std::to_string(v));
                if (seen.test(v))
                    throw GraphError(std::string(what) + ": vertex " + std::to_string(v) + " repeated");
                seen.set(v);
            }
        }
    }

    auto to_string(const Fingerprint & f) -> std::string
    {
        std::ostringstream s;
        s << "n=" << f.n << " m=" << f.m << " hash=" << std::hex << std::setw(16) << std::setfill('0') << f.hash;
        return s.str();
    }

    Graph::Graph() :
        Graph(0, std::span<const Edge>{})
    {
    }

    Graph::Graph(int n, std::initializer_list<Edge> edges) :
        Graph(n, std::span<const Edge>(edges.begin(), edges.size()))
    {
    }

    Graph::Graph(int n, std::span<const Edge> edges, std::vector<std::string> labels) :
        _n(n),
        _labels(std::move(labels))
    {
        if (n < 0)
            throw GraphError("negative vertex count");
        if (! _labels.empty() && int(_labels.size()) != n)
            throw GraphError("label count " + std::to_string(_labels.size()) + " does not match order " + std::to_string(n));

        _rows.assign(std::size_t(n), VertexSet(std::size_t(n)));
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
            if (u == v)
                throw GraphError("self-loop at vertex " + std::to_string(u));
            _rows[u].set(v);
            _rows[v].set(u);
        }

        _adj.resize(std::size_t(n));
        for (int v = 0 ; v < n ; ++v) {
            for (auto w = _rows[v].find_first() ; w != VertexSet::npos ; w = _rows[v].find_next(w))
                _adj[v].push_back(Vertex(w));
            _m += std::int64_t(_adj[v].size());
        }
        _m /= 2;

        auto code = graph6_emit(*this);
        _fingerprint = Fingerprint{ _n, _m, fnv1a(code) };
    }

    auto Graph::max_degree() const -> int
    {
        int result = 0;
        for (auto & a : _adj)
            result = std::max(result, int(a.size()));
        return result;
    }

    auto Graph::label(Vertex v) const -> std::string
    {
        if (! _labels.empty())
            return _labels[v];
        return std::to_string(v);
    }

    auto Graph::edges() const -> std::vector<Edge>
    {
        std::vector<Edge> result;
        result.reserve(std::size_t(_m));
        for (int u = 0 ; u < _n ; ++u)
            for (auto v : _adj[u])
                if (u < v)
                    result.emplace_back(u, v);
        return result;
    }

    auto Graph::make_set(std::span<const Vertex> vs) const -> VertexSet
    {
        VertexSet s(static_cast<std::size_t>(_n));
        for (auto v : vs) {
            if (! contains(v))
                throw GraphError("unknown vertex " + std::to_string(v));
            s.set(v);
        }
        return s;
    }

    auto Graph::operator== (const Graph & other) const -> bool
    {
        return _n == other._n && _rows == other._rows;
    }

    auto induced_subgraph(const Graph & g, std::span<const Vertex> X) -> InducedSubgraph
    {
        check_distinct(g, X, "induced_subgraph");
        std::vector<int> index(std::size_t(g.order()), -1);
        for (std::size_t i = 0 ; i < X.size() ; ++i)
            index[X[i]] = int(i);

        std::vector<Edge> edges;
        for (std::size_t i = 0 ; i < X.size() ; ++i)
            for (auto w : g.neighbours(X[i]))
                if (index[w] > int(i))
                    edges.emplace_back(int(i), index[w]);

        std::vector<std::string> labels;
        if (g.has_labels())
            for (auto v : X)
                labels.push_back(g.label(v));

        return InducedSubgraph{ Graph(int(X.size()), edges, std::move(labels)), VertexList(X.begin(), X.end()) };
    }

    auto are_anticomplete(const Graph & g, std::span<const Vertex> X, std::span<const Vertex> Y) -> bool
    {
        auto xs = g.make_set(X), ys = g.make_set(Y);
        if (xs.intersects(ys))
            throw GraphError("are_anticomplete: X and Y overlap");
        for (auto x : X)
            if (g.row(x).intersects(ys))
                return false;
        return true;
    }

    auto are_complete(const Graph & g, std::span<const Vertex> X, std::span<const Vertex> Y) -> bool
    {
        auto xs = g.make_set(X), ys = g.make_set(Y);
        if (xs.intersects(ys))
            throw GraphError("are_complete: X and Y overlap");
        for (auto x : X)
            if (! ys.is_subset_of(g.row(x)))
                return false;
        return true;
    }

    auto is_stable(const Graph & g, std::span<const Vertex> X) -> bool
    {
        auto xs = g.make_set(X);
        for (auto x : X)
            if (g.row(x).intersects(xs))
                return false;
        return true;
    }

    auto is_clique(const Graph & g, std::span<const Vertex> X) -> bool
    {
        for (std::size_t i = 0 ; i < X.size() ; ++i)
            for (std::size_t j = i + 1 ; j < X.size() ; ++j)
                if (X[i] == X[j] || ! g.adjacent(X[i], X[j]))
                    return false;
        return true;
    }

    auto is_induced_path(const Graph & g, std::span<const Vertex> seq) -> bool
    {
        if (seq.empty())
            throw GraphError("is_induced_path: empty sequence");
        check_distinct(g, seq, "is_induced_path");
        for (std::size_t i = 0 ; i < seq.size() ; ++i)
            for (std::size_t j = i + 1 ; j < seq.size() ; ++j)
                if (g.adjacent(seq[i], seq[j]) != (j == i + 1))
                    return false;
        return true;
    }

    auto is_induced_cycle(const Graph & g, std::span<const Vertex> seq) -> bool
    {
        if (seq.empty())
            throw GraphError("is_induced_cycle: empty sequence");
        check_distinct(g, seq, "is_induced_cycle");
        auto k = seq.size();
        if (k < 3)
            return false;
        for (std::size_t i = 0 ; i < k ; ++i)
            for (std::size_t j = i + 1 ; j < k ; ++j) {
                bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
                if (g.adjacent(seq[i], seq[j]) != consecutive)
                    return false;
            }
        return true;
    }

    auto is_connected_subset(const Graph & g, std::span<const Vertex> X) -> bool
    {
        if (X.empty())
            return false;
        auto members = g.make_set(X);
        auto seen = g.empty_set();
        VertexList stack{ X[0] };
        seen.set(X[0]);
        std::size_t reached = 1;
        while (! stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto w : g.neighbours(v))
                if (members.test(w) && ! seen.test(w)) {
                    seen.set(w);
                    ++reached;
                    stack.push_back(w);
                }
        }
        return reached == members.count();
    }

    auto line_graph(const Graph & f) -> LineGraph
    {
        auto edge_of = f.edges();
        std::vector<VertexList> incident(std::size_t(f.order()));
        for (std::size_t i = 0 ; i < edge_of.size() ; ++i) {
            incident[edge_of[i].first].push_back(int(i));
            incident[edge_of[i].second].push_back(int(i));
        }

        std::vector<Edge> edges;
        for (auto & at : incident)
            for (std::size_t i = 0 ; i < at.size() ; ++i)
                for (std::size_t j = i + 1 ; j < at.size() ; ++j)
                    edges.emplace_back(at[i], at[j]);

        std::vector<std::string> labels;
        for (auto [u, v] : edge_of)
            labels.push_back(f.label(u) + "-" + f.label(v));

        return LineGraph{ Graph(int(edge_of.size()), edges, std::move(labels)), std::move(edge_of) };
    }

    auto dot_emit(const Graph & g, const std::vector<std::string> & labels) -> std::string
    {
        if (! labels.empty() && int(labels.size()) != g.order())
            throw GraphError("dot_emit: label count does not match order");

        auto quote = [] (const std::string & s) {
            std::string q = "\"";
            for (char c : s) {
                if (c == '"' || c == '\\')
                    q.push_back('\\');
                q.push_back(c);
            }
            return q + "\"";
        };

        std::ostringstream out;
        out << "graph G {\n";
        for (int v = 0 ; v < g.order() ; ++v) {
            out << "  " << v;
            if (! labels.empty())
                out << " [label=" << quote(labels[v]) << "]";
            else if (g.has_labels())
                out << " [label=" << quote(g.label(v)) << "]";
            out << ";\n";
        }
        for (auto [u, v] : g.edges())
            out << "  " << u << " -- " << v << ";\n";
        out << "}\n";
        return out.str();
    }
}
