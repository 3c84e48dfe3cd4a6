#ifndef PINCHED_GRAPH6_HH
#define PINCHED_GRAPH6_HH 1

#include <pinched/graph.hh>

#include <stdexcept>
#include <string>
#include <string_view>

namespace pinched
{
    enum class Graph6ErrorKind
    {
        malformed_header,
        out_of_range_character,
        truncated_bit_stream,
        trailing_data
    };

    auto to_string(Graph6ErrorKind) -> std::string;

    class Graph6Error : public std::runtime_error
    {
        private:
            Graph6ErrorKind _kind;
            std::size_t _offset;

        public:
            Graph6Error(Graph6ErrorKind kind, std::size_t offset, const std::string & message);

            auto kind() const noexcept -> Graph6ErrorKind { return _kind; }
            auto offset() const noexcept -> std::size_t { return _offset; }
    };

    /// Parses one graph6 record. An optional ">>graph6<<" prefix and a single
    /// trailing newline are accepted; padding bits must be zero.
    auto graph6_parse(std::string_view text) -> Graph;

    /// Shortest graph6 encoding of the graph (no header, no newline).
    auto graph6_emit(const Graph &) -> std::string;
}

#endif
