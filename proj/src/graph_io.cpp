#include "primegraph/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "primegraph/errors.hpp"

namespace primegraph {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

bool is_g6_byte(unsigned char c) { return c >= 63 && c <= 126; }

std::string_view strip_line_end(std::string_view s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    text = strip_line_end(text);
    std::size_t pos = 0;
    if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();

    auto byte_at = [&](std::size_t i) -> int {
        if (i >= text.size()) throw ParseError("graph6: unexpected end of input", i);
        auto c = static_cast<unsigned char>(text[i]);
        if (!is_g6_byte(c)) throw ParseError("graph6: byte outside printable range 63..126", i);
        return c - kBias;
    };

    std::uint64_t n = 0;
    if (pos >= text.size()) throw ParseError("graph6: empty input", pos);
    if (text[pos] != '~') {
        n = byte_at(pos++);
    } else if (pos + 1 < text.size() && text[pos + 1] == '~') {
        pos += 2;
        for (int k = 0; k < 6; ++k) n = (n << 6) | byte_at(pos++);
    } else {
        ++pos;
        for (int k = 0; k < 3; ++k) n = (n << 6) | byte_at(pos++);
    }
    if (n > (1u << 20)) throw ParseError("graph6: order too large", pos);

    const auto order = static_cast<int>(n);
    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t body = (bits + 5) / 6;
    if (text.size() - pos != body)
        throw ParseError("graph6: expected " + std::to_string(body) + " data bytes, found " +
                             std::to_string(text.size() - pos),
                         text.size() < pos + body ? text.size() : pos + body);

    GraphBuilder b(order);
    std::uint64_t k = 0;
    for (int j = 1; j < order; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int chunk = byte_at(pos + k / 6);
            if ((chunk >> (5 - k % 6)) & 1) b.add_edge(i, j);
        }
    if (body > 0) {
        int last = byte_at(pos + body - 1);
        int pad = static_cast<int>(body * 6 - bits);
        if (last & ((1 << pad) - 1)) throw ParseError("graph6: nonzero padding bits", pos + body - 1);
    }
    return b.build();
}

std::string emit_graph6(const Graph& g) {
    std::string out;
    const std::uint64_t n = static_cast<std::uint64_t>(g.order());
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + kBias));
    } else {
        out += "~~";
        for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + kBias));
    }
    int acc = 0, filled = 0;
    for (int j = 1; j < g.order(); ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

Graph parse_adjacency_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    int order = -1;
    long declared = -1;
    long seen = 0;
    GraphBuilder b(0);
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#' || line.compare(first, 2, "c ") == 0) continue;
        std::istringstream ls(line.substr(first));
        if (order < 0) {
            std::string tag;
            if (!(ls >> tag >> order >> declared) || tag != "p" || order < 0 || declared < 0)
                throw ParseError("adjacency list: expected header 'p <order> <edges>'", lineno);
            b = GraphBuilder(order);
            continue;
        }
        long u = 0, v = 0;
        std::string extra;
        if (!(ls >> u >> v) || (ls >> extra))
            throw ParseError("adjacency list: expected 'u v'", lineno);
        if (u < 0 || v < 0 || u >= order || v >= order)
            throw ParseError("adjacency list: vertex out of range", lineno);
        if (u == v) throw ParseError("adjacency list: self-loop", lineno);
        b.add_edge(static_cast<int>(u), static_cast<int>(v));
        ++seen;
    }
    if (order < 0) throw ParseError("adjacency list: missing header", lineno);
    if (seen != declared)
        throw ParseError("adjacency list: header declares " + std::to_string(declared) + " edges, found " +
                             std::to_string(seen),
                         lineno);
    return b.build();
}

std::string emit_adjacency_list(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::string emit_dot(const Graph& g, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

namespace {

bool looks_like_adjacency_list(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size()) {
        auto end = text.find('\n', i);
        auto line = text.substr(i, end == std::string_view::npos ? std::string_view::npos : end - i);
        auto first = line.find_first_not_of(" \t\r");
        if (first != std::string_view::npos) {
            if (line[first] == '#' || line.substr(first, 2) == "c ") {
                // comment, keep looking
            } else {
                return line.substr(first, 2) == "p ";
            }
        }
        if (end == std::string_view::npos) break;
        i = end + 1;
    }
    return false;
}

}  // namespace

std::vector<GraphRecord> read_graph_records(std::string_view text) {
    std::vector<GraphRecord> out;
    if (looks_like_adjacency_list(text)) {
        GraphRecord r;
        r.line = 1;
        try {
            r.graph = parse_adjacency_list(text);
        } catch (const InputError& e) {
            r.error = e.what();
        }
        out.push_back(std::move(r));
        return out;
    }
    std::size_t i = 0, lineno = 0;
    while (i < text.size()) {
        auto end = text.find('\n', i);
        auto line = strip_line_end(text.substr(i, end == std::string_view::npos ? std::string_view::npos : end - i));
        ++lineno;
        if (!line.empty()) {
            GraphRecord r;
            r.line = lineno;
            try {
                r.graph = parse_graph6(line);
            } catch (const InputError& e) {
                r.error = e.what();
            }
            out.push_back(std::move(r));
        }
        if (end == std::string_view::npos) break;
        i = end + 1;
    }
    return out;
}

Graph read_graph_text(std::string_view text) {
    auto records = read_graph_records(text);
    if (records.empty()) throw InputError("no graph in input");
    if (!records.front().error.empty()) throw InputError(records.front().error);
    return records.front().graph;
}

std::string slurp_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph read_graph_file(const std::string& path) { return read_graph_text(slurp_file(path)); }

}  // namespace primegraph
