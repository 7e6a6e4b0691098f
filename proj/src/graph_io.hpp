#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "graph.hpp"

namespace netvuln {

/// Malformed input; carries the 1-based line where parsing stopped.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// File-system failure (unreadable input, failed write).
class IoError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ReadReport {
    std::size_t dropped_self_loops = 0;
    std::size_t dropped_duplicate_edges = 0;
};

/// Two whitespace-separated labels per line; '#' starts a comment. Labels are
/// interned to dense ids in first-appearance order.
Graph read_edge_list(std::istream& in, ReadReport* report = nullptr);

/// Pajek subset: a `*Vertices n` header with optional labeled vertex lines,
/// then `*Edges` / `*Arcs` sections of 1-based endpoint pairs (arcs treated
/// as undirected, trailing weights ignored).
Graph read_pajek(std::istream& in, ReadReport* report = nullptr);

/// GML subset: `graph [ node [ id .. label .. ] edge [ source .. target .. ] ]`
/// with unknown keys (and balanced unknown blocks) skipped.
Graph read_gml(std::istream& in, ReadReport* report = nullptr);

enum class GraphFormat { EdgeList, Pajek, Gml };

std::optional<GraphFormat> format_from_name(std::string_view name);

Graph read_graph(std::istream& in, GraphFormat format, ReadReport* report = nullptr);

/// Opens and parses `path`; throws IoError when the file cannot be read.
Graph read_graph_file(const std::string& path, GraphFormat format,
                      ReadReport* report = nullptr);

/// One `label label` line per edge (labels default to decimal ids),
/// lexicographic by endpoint ids.
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list_file(const Graph& g, const std::string& path);

}  // namespace netvuln
