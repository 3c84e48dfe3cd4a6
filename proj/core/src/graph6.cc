#include <pinched/graph6.hh>

#include <cstdint>
#include <vector>

namespace pinched
{
    namespace
    {
        constexpr char bias = 63;
        constexpr std::string_view header = ">>graph6<<";

        auto encode_size(std::uint64_t n, std::string & out) -> void
        {
            if (n <= 62)
                out.push_back(char(n + bias));
            else if (n <= 258047) {
                out.push_back(126);
                for (int shift = 12 ; shift >= 0 ; shift -= 6)
                    out.push_back(char(((n >> shift) & 63) + bias));
            }
            else {
                out.push_back(126);
                out.push_back(126);
                for (int shift = 30 ; shift >= 0 ; shift -= 6)
                    out.push_back(char(((n >> shift) & 63) + bias));
            }
        }

        auto sextet(std::string_view text, std::size_t pos) -> int
        {
            if (pos >= text.size())
                throw Graph6Error(Graph6ErrorKind::truncated_bit_stream, pos, "input ends inside the graph6 record");
            auto c = static_cast<unsigned char>(text[pos]);
            if (c < 63 || c > 126)
                throw Graph6Error(Graph6ErrorKind::out_of_range_character, pos,
                        "byte " + std::to_string(int(c)) + " outside the printable graph6 range 63..126");
            return c - bias;
        }
    }

    auto to_string(Graph6ErrorKind kind) -> std::string
    {
        switch (kind) {
            case Graph6ErrorKind::malformed_header:       return "malformed header";
            case Graph6ErrorKind::out_of_range_character: return "out-of-range character";
            case Graph6ErrorKind::truncated_bit_stream:   return "truncated bit stream";
            case Graph6ErrorKind::trailing_data:          return "trailing data";
        }
        return "unknown";
    }

    Graph6Error::Graph6Error(Graph6ErrorKind kind, std::size_t offset, const std::string & message) :
        std::runtime_error("graph6 " + to_string(kind) + " at offset " + std::to_string(offset) + ": " + message),
        _kind(kind),
        _offset(offset)
    {
    }

    auto graph6_parse(std::string_view text) -> Graph
    {
        if (text.starts_with(header))
            text.remove_prefix(header.size());
        if (text.ends_with('\n'))
            text.remove_suffix(1);
        if (text.ends_with('\r'))
            text.remove_suffix(1);

        if (text.empty())
            throw Graph6Error(Graph6ErrorKind::malformed_header, 0, "empty record");

        std::size_t pos = 0;
        std::uint64_t n = 0;
        if (text[0] == 126) {
            if (text.size() > 1 && text[1] == 126) {
                pos = 2;
                for (int i = 0 ; i < 6 ; ++i) {
                    if (pos >= text.size())
                        throw Graph6Error(Graph6ErrorKind::malformed_header, pos, "size field cut short");
                    n = (n << 6) | std::uint64_t(sextet(text, pos++));
                }
                if (n <= 258047)
                    throw Graph6Error(Graph6ErrorKind::malformed_header, 0, "8-byte size form used for a small order");
            }
            else {
                pos = 1;
                for (int i = 0 ; i < 3 ; ++i) {
                    if (pos >= text.size())
                        throw Graph6Error(Graph6ErrorKind::malformed_header, pos, "size field cut short");
                    n = (n << 6) | std::uint64_t(sextet(text, pos++));
                }
                if (n <= 62)
                    throw Graph6Error(Graph6ErrorKind::malformed_header, 0, "4-byte size form used for a small order");
            }
        }
        else {
            auto c = static_cast<unsigned char>(text[0]);
            if (c < 63 || c > 125)
                throw Graph6Error(Graph6ErrorKind::malformed_header, 0, "first byte is not a graph6 size");
            n = c - bias;
            pos = 1;
        }

        if (n > std::uint64_t(1) << 20)
            throw Graph6Error(Graph6ErrorKind::malformed_header, 0, "order " + std::to_string(n) + " exceeds supported range");

        std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
        std::size_t body = std::size_t((bits + 5) / 6);
        if (text.size() < pos + body)
            throw Graph6Error(Graph6ErrorKind::truncated_bit_stream, text.size(),
                    "expected " + std::to_string(body) + " data bytes, found " + std::to_string(text.size() - pos));
        if (text.size() > pos + body)
            throw Graph6Error(Graph6ErrorKind::trailing_data, pos + body, "extra bytes after the adjacency data");

        std::vector<Edge> edges;
        std::uint64_t k = 0;
        int nn = int(n);
        for (int j = 1 ; j < nn ; ++j)
            for (int i = 0 ; i < j ; ++i, ++k) {
                int value = sextet(text, pos + std::size_t(k / 6));
                if ((value >> (5 - int(k % 6))) & 1)
                    edges.emplace_back(i, j);
            }

        if (body > 0 && bits % 6 != 0) {
            int last = sextet(text, pos + body - 1);
            int pad = int(6 - bits % 6);
            if (last & ((1 << pad) - 1))
                throw Graph6Error(Graph6ErrorKind::trailing_data, pos + body - 1, "non-zero padding bits");
        }

        return Graph(nn, edges);
    }

    auto graph6_emit(const Graph & g) -> std::string
    {
        std::string out;
        int n = g.order();
        encode_size(std::uint64_t(n), out);

        int acc = 0, filled = 0;
        for (int j = 1 ; j < n ; ++j)
            for (int i = 0 ; i < j ; ++i) {
                acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
                if (++filled == 6) {
                    out.push_back(char(acc + bias));
                    acc = 0;
                    filled = 0;
                }
            }
        if (filled > 0)
            out.push_back(char((acc << (6 - filled)) + bias));
        return out;
    }
}
