#include "graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace netvuln {

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

class LabelInterner {
public:
    NodeId intern(const std::string& label) {
        auto [it, fresh] = ids_.try_emplace(label, static_cast<NodeId>(labels_.size()));
        if (fresh) labels_.push_back(label);
        return it->second;
    }
    std::vector<std::string> take_labels() { return std::move(labels_); }
    std::size_t size() const { return labels_.size(); }

private:
    std::unordered_map<std::string, NodeId> ids_;
    std::vector<std::string> labels_;
};

}  // namespace

Graph read_edge_list(std::istream& in, ReadReport* report) {
    LabelInterner names;
    std::vector<Edge> edges;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        const auto tokens = split_tokens(line);
        if (tokens.empty()) continue;
        if (tokens.size() != 2) {
            throw ParseError(lineno, "expected two endpoint tokens, got " +
                                         std::to_string(tokens.size()));
        }
        const NodeId a = names.intern(tokens[0]);
        const NodeId b = names.intern(tokens[1]);
        edges.push_back({a, b});
    }

    BuildCounts counts;
    Graph g = Graph::from_edges(edges, names.size(), &counts);
    g.set_labels(names.take_labels());
    if (report != nullptr) {
        *report = {counts.dropped_self_loops, counts.dropped_duplicate_edges};
    }
    return g;
}

Graph read_pajek(std::istream& in, ReadReport* report) {
    std::string line;
    std::size_t lineno = 0;
    std::size_t n = 0;
    bool have_header = false;
    bool in_edges = false;
    std::vector<std::string> labels;
    std::vector<Edge> edges;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '%') continue;

        if (line[0] == '*') {
            const auto tokens = split_tokens(line);
            const std::string section = lowercase(tokens[0]);
            if (section == "*vertices") {
                if (tokens.size() < 2) throw ParseError(lineno, "*Vertices needs a count");
                try {
                    n = std::stoul(tokens[1]);
                } catch (const std::exception&) {
                    throw ParseError(lineno, "bad vertex count '" + tokens[1] + "'");
                }
                labels.assign(n, {});
                have_header = true;
                in_edges = false;
            } else if (section == "*edges" || section == "*arcs") {
                if (!have_header) throw ParseError(lineno, "*Vertices header missing");
                in_edges = true;
            } else {
                throw ParseError(lineno, "unsupported section '" + tokens[0] + "'");
            }
            continue;
        }
        if (!have_header) throw ParseError(lineno, "*Vertices header missing");

        const auto tokens = split_tokens(line);
        if (tokens.empty()) continue;

        auto parse_endpoint = [&](const std::string& tok) -> NodeId {
            std::size_t id = 0;
            try {
                id = std::stoul(tok);
            } catch (const std::exception&) {
                throw ParseError(lineno, "bad vertex id '" + tok + "'");
            }
            if (id < 1 || id > n) {
                throw ParseError(lineno, "vertex id " + tok + " outside 1.." +
                                             std::to_string(n));
            }
            return static_cast<NodeId>(id - 1);
        };

        if (!in_edges) {
            // Vertex line: id, optional quoted label, anything else ignored.
            const NodeId v = parse_endpoint(tokens[0]);
            const auto q0 = line.find('"');
            if (q0 != std::string::npos) {
                const auto q1 = line.find('"', q0 + 1);
                if (q1 == std::string::npos) throw ParseError(lineno, "unterminated label");
                labels[v] = line.substr(q0 + 1, q1 - q0 - 1);
            }
            continue;
        }

        if (tokens.size() < 2) throw ParseError(lineno, "edge needs two endpoints");
        edges.push_back({parse_endpoint(tokens[0]), parse_endpoint(tokens[1])});
        // Any trailing tokens (weights etc.) are ignored.
    }
    if (!have_header) throw ParseError(lineno == 0 ? 1 : lineno, "*Vertices header missing");

    BuildCounts counts;
    Graph g = Graph::from_edges(edges, n, &counts);
    g.set_labels(std::move(labels));
    if (report != nullptr) {
        *report = {counts.dropped_self_loops, counts.dropped_duplicate_edges};
    }
    return g;
}

namespace {

// Minimal GML tokenizer: brackets, quoted strings, bare words/numbers.
struct GmlToken {
    enum class Type { Open, Close, String, Word, End } type = Type::End;
    std::string text;
    std::size_t line = 0;
};

class GmlLexer {
public:
    explicit GmlLexer(std::istream& in) : in_(in) {}

    GmlToken next() {
        int c = get();
        while (c != EOF && std::isspace(c)) c = get();
        if (c == EOF) return {GmlToken::Type::End, "", line_};
        const std::size_t at = line_;
        if (c == '[') return {GmlToken::Type::Open, "[", at};
        if (c == ']') return {GmlToken::Type::Close, "]", at};
        if (c == '"') {
            std::string text;
            while ((c = get()) != '"') {
                if (c == EOF) throw ParseError(at, "unterminated string");
                text.push_back(static_cast<char>(c));
            }
            return {GmlToken::Type::String, text, at};
        }
        std::string text(1, static_cast<char>(c));
        while ((c = get()) != EOF && !std::isspace(c) && c != '[' && c != ']') {
            text.push_back(static_cast<char>(c));
        }
        if (c == '[' || c == ']') unget(static_cast<char>(c));
        return {GmlToken::Type::Word, text, at};
    }

private:
    int get() {
        if (pushed_) {
            pushed_ = false;
            return pushback_;
        }
        const int c = in_.get();
        if (c == '\n') ++line_;
        return c;
    }
    void unget(char c) {
        pushed_ = true;
        pushback_ = c;
    }

    std::istream& in_;
    std::size_t line_ = 1;
    bool pushed_ = false;
    int pushback_ = 0;
};

class GmlParser {
public:
    explicit GmlParser(std::istream& in) : lexer_(in) {}

    Graph parse(ReadReport* report) {
        // Skip top-level keys (Creator, Version, ...) until `graph [`.
        while (true) {
            GmlToken tok = lexer_.next();
            if (tok.type == GmlToken::Type::End) {
                throw ParseError(tok.line, "no 'graph' block found");
            }
            if (tok.type == GmlToken::Type::Word && lowercase(tok.text) == "graph") {
                expect_open("graph");
                parse_graph_body();
                break;
            }
            if (tok.type == GmlToken::Type::Word) {
                skip_value(tok.line);
            }
            // Stray strings/brackets at top level fall through to the next
            // token; unbalanced brackets surface as errors inside blocks.
        }

        BuildCounts counts;
        Graph g = Graph::from_edges(edges_, ids_.size(), &counts);
        std::vector<std::string> labels(ids_.size());
        for (std::size_t i = 0; i < labels_.size(); ++i) labels[i] = labels_[i];
        g.set_labels(std::move(labels));
        if (report != nullptr) {
            *report = {counts.dropped_self_loops, counts.dropped_duplicate_edges};
        }
        return g;
    }

private:
    void expect_open(const std::string& what) {
        const GmlToken tok = lexer_.next();
        if (tok.type != GmlToken::Type::Open) {
            throw ParseError(tok.line, "expected '[' after '" + what + "'");
        }
    }

    // Consumes the value following a key: a scalar or a balanced block.
    void skip_value(std::size_t at) {
        GmlToken tok = lexer_.next();
        if (tok.type == GmlToken::Type::Word || tok.type == GmlToken::Type::String) {
            return;
        }
        if (tok.type != GmlToken::Type::Open) {
            throw ParseError(at, "expected a value");
        }
        std::size_t depth = 1;
        while (depth > 0) {
            tok = lexer_.next();
            if (tok.type == GmlToken::Type::End) {
                throw ParseError(tok.line, "unbalanced brackets");
            }
            if (tok.type == GmlToken::Type::Open) ++depth;
            if (tok.type == GmlToken::Type::Close) --depth;
        }
    }

    void parse_graph_body() {
        while (true) {
            const GmlToken tok = lexer_.next();
            if (tok.type == GmlToken::Type::Close) return;
            if (tok.type == GmlToken::Type::End) {
                throw ParseError(tok.line, "unbalanced brackets in 'graph'");
            }
            if (tok.type != GmlToken::Type::Word) {
                throw ParseError(tok.line, "expected a key inside 'graph'");
            }
            const std::string key = lowercase(tok.text);
            if (key == "node") {
                expect_open("node");
                parse_node(tok.line);
            } else if (key == "edge") {
                expect_open("edge");
                parse_edge(tok.line);
            } else {
                skip_value(tok.line);
            }
        }
    }

    void parse_node(std::size_t at) {
        std::optional<long long> id;
        std::string label;
        while (true) {
            const GmlToken tok = lexer_.next();
            if (tok.type == GmlToken::Type::Close) break;
            if (tok.type == GmlToken::Type::End) {
                throw ParseError(tok.line, "unbalanced brackets in 'node'");
            }
            if (tok.type != GmlToken::Type::Word) {
                throw ParseError(tok.line, "expected a key inside 'node'");
            }
            const std::string key = lowercase(tok.text);
            if (key == "id") {
                id = read_integer("id");
            } else if (key == "label") {
                const GmlToken val = lexer_.next();
                if (val.type != GmlToken::Type::String && val.type != GmlToken::Type::Word) {
                    throw ParseError(val.line, "expected a label value");
                }
                label = val.text;
            } else {
                skip_value(tok.line);
            }
        }
        if (!id) throw ParseError(at, "node without id");
        if (ids_.count(*id) != 0) {
            throw ParseError(at, "duplicate node id " + std::to_string(*id));
        }
        const NodeId v = static_cast<NodeId>(ids_.size());
        ids_.emplace(*id, v);
        labels_.push_back(label);
    }

    void parse_edge(std::size_t at) {
        std::optional<long long> source, target;
        while (true) {
            const GmlToken tok = lexer_.next();
            if (tok.type == GmlToken::Type::Close) break;
            if (tok.type == GmlToken::Type::End) {
                throw ParseError(tok.line, "unbalanced brackets in 'edge'");
            }
            if (tok.type != GmlToken::Type::Word) {
                throw ParseError(tok.line, "expected a key inside 'edge'");
            }
            const std::string key = lowercase(tok.text);
            if (key == "source") {
                source = read_integer("source");
            } else if (key == "target") {
                target = read_integer("target");
            } else {
                skip_value(tok.line);
            }
        }
        if (!source || !target) throw ParseError(at, "edge without source/target");
        edges_.push_back({resolve(*source, at), resolve(*target, at)});
    }

    NodeId resolve(long long id, std::size_t at) const {
        const auto it = ids_.find(id);
        if (it == ids_.end()) {
            throw ParseError(at, "edge references undeclared node id " +
                                     std::to_string(id));
        }
        return it->second;
    }

    long long read_integer(const std::string& key) {
        const GmlToken tok = lexer_.next();
        if (tok.type != GmlToken::Type::Word) {
            throw ParseError(tok.line, "expected an integer after '" + key + "'");
        }
        try {
            return std::stoll(tok.text);
        } catch (const std::exception&) {
            throw ParseError(tok.line, "bad integer '" + tok.text + "'");
        }
    }

    GmlLexer lexer_;
    std::unordered_map<long long, NodeId> ids_;
    std::vector<std::string> labels_;
    std::vector<Edge> edges_;
};

}  // namespace

Graph read_gml(std::istream& in, ReadReport* report) {
    return GmlParser(in).parse(report);
}

std::optional<GraphFormat> format_from_name(std::string_view name) {
    const std::string lower = lowercase(std::string(name));
    if (lower == "edgelist") return GraphFormat::EdgeList;
    if (lower == "pajek") return GraphFormat::Pajek;
    if (lower == "gml") return GraphFormat::Gml;
    return std::nullopt;
}

Graph read_graph(std::istream& in, GraphFormat format, ReadReport* report) {
    switch (format) {
        case GraphFormat::EdgeList: return read_edge_list(in, report);
        case GraphFormat::Pajek: return read_pajek(in, report);
        case GraphFormat::Gml: return read_gml(in, report);
    }
    throw std::invalid_argument("read_graph: unknown format");
}

Graph read_graph_file(const std::string& path, GraphFormat format,
                      ReadReport* report) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    return read_graph(in, format, report);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << "# nodes " << g.node_count() << " edges " << g.edge_count() << "\n";
    for (const Edge& e : g.edges()) {
        out << g.label(e.a) << ' ' << g.label(e.b) << "\n";
    }
    if (!out) throw IoError("edge list write failed");
}

void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    write_edge_list(g, out);
}

}  // namespace netvuln
