#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "reconfig.hpp"

namespace alre {

namespace detail {

// Line-oriented `key: value` reader. `#` starts a comment; blank lines are
// skipped; parsing is whitespace-tolerant.
struct KeyValueLines {
    std::vector<std::pair<std::string, std::string>> items;

    static KeyValueLines read(std::istream& in) {
        KeyValueLines out;
        std::string line;
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::size_t b = line.find_first_not_of(" \t\r");
            if (b == std::string::npos) continue;
            std::size_t e = line.find_last_not_of(" \t\r");
            line = line.substr(b, e - b + 1);
            auto colon = line.find(':');
            if (colon == std::string::npos)
                throw malformed_input_error("expected 'key: value', got '" + line + "'");
            std::string key = line.substr(0, colon);
            std::string value = line.substr(colon + 1);
            auto strip = [](std::string& s) {
                std::size_t x = s.find_first_not_of(" \t");
                std::size_t y = s.find_last_not_of(" \t");
                s = x == std::string::npos ? "" : s.substr(x, y - x + 1);
            };
            strip(key);
            strip(value);
            out.items.emplace_back(key, value);
        }
        return out;
    }
};

inline std::vector<int> parse_vertex_list(const std::string& text) {
    std::istringstream is(text);
    std::vector<int> vs;
    long v;
    while (is >> v) {
        if (v < 1) throw malformed_input_error("vertex id must be >= 1, got " + std::to_string(v));
        vs.push_back(int(v));
    }
    if (!is.eof()) throw malformed_input_error("bad vertex list: '" + text + "'");
    return vs;
}

inline VertexSet list_to_set(int n, const std::vector<int>& vs, const std::string& what) {
    VertexSet s(n);
    for (int v : vs) {
        if (v > n) throw malformed_input_error(what + ": vertex " + std::to_string(v) + " out of range");
        s.set(v);
    }
    return s;
}

} // namespace detail

// Graph text format: `graph: <n>` then zero or more `edge: <u> <v>` lines.
inline Graph parse_graph_lines(const detail::KeyValueLines& kv, std::size_t& pos) {
    const auto& items = kv.items;
    if (pos >= items.size() || items[pos].first != "graph")
        throw malformed_input_error("expected 'graph: <n>' first");
    long n;
    {
        std::istringstream is(items[pos].second);
        if (!(is >> n) || n < 0) throw malformed_input_error("bad vertex count '" + items[pos].second + "'");
    }
    ++pos;
    std::vector<std::pair<int, int>> edges;
    while (pos < items.size() && items[pos].first == "edge") {
        std::istringstream is(items[pos].second);
        long u, v;
        if (!(is >> u >> v)) throw malformed_input_error("bad edge '" + items[pos].second + "'");
        edges.emplace_back(int(u), int(v));
        ++pos;
    }
    return Graph::build(int(n), edges);
}

inline Graph parse_graph(std::istream& in) {
    auto kv = detail::KeyValueLines::read(in);
    std::size_t pos = 0;
    Graph g = parse_graph_lines(kv, pos);
    if (pos != kv.items.size())
        throw malformed_input_error("unexpected trailing line '" + kv.items[pos].first + ":'");
    return g;
}

inline Graph parse_graph(const std::string& text) {
    std::istringstream is(text);
    return parse_graph(is);
}

// Instance file: graph block, then variant/rule/cap/start/target and an
// optional configuration bound `bound: T` (converted to a move bound of T-2;
// a sequence with m moves has m+1 configurations and needs m+1 < T).
inline Instance parse_instance(std::istream& in) {
    auto kv = detail::KeyValueLines::read(in);
    std::size_t pos = 0;
    Instance inst;
    inst.graph = parse_graph_lines(kv, pos);
    int n = inst.graph.vertex_count();
    bool have_variant = false, have_rule = false, have_start = false, have_target = false, have_cap = false;
    for (; pos < kv.items.size(); ++pos) {
        const auto& [key, value] = kv.items[pos];
        if (key == "variant") {
            inst.variant = Variant::parse(value);
            have_variant = true;
        } else if (key == "rule") {
            inst.rule = MoveRule::parse(value);
            have_rule = true;
        } else if (key == "cap") {
            std::istringstream is(value);
            long c;
            if (!(is >> c) || c < 0) throw malformed_input_error("bad cap '" + value + "'");
            inst.rule.cap = int(c);
            have_cap = true;
        } else if (key == "start") {
            inst.start = detail::list_to_set(n, detail::parse_vertex_list(value), "start");
            have_start = true;
        } else if (key == "target") {
            inst.target = detail::list_to_set(n, detail::parse_vertex_list(value), "target");
            have_target = true;
        } else if (key == "bound") {
            std::istringstream is(value);
            long t;
            if (!(is >> t) || t < 0) throw malformed_input_error("bad bound '" + value + "'");
            inst.move_bound = t - 2;
        } else {
            throw malformed_input_error("unknown instance key '" + key + "'");
        }
    }
    if (!have_variant) throw malformed_input_error("instance: missing variant");
    if (!have_rule) throw malformed_input_error("instance: missing rule");
    if (!have_start) throw malformed_input_error("instance: missing start");
    if (!have_target) throw malformed_input_error("instance: missing target");
    if (inst.rule.kind == MoveKind::tar && !have_cap)
        throw malformed_input_error("instance: rule tar requires cap");
    if (inst.rule.kind != MoveKind::tar && have_cap)
        throw malformed_input_error("instance: cap is only valid with rule tar");
    inst.validate();
    return inst;
}

inline Instance parse_instance(const std::string& text) {
    std::istringstream is(text);
    return parse_instance(is);
}

// Dominating-set reconfiguration instance: graph block + start/target (+bound).
inline DsInstance parse_ds_instance(std::istream& in) {
    auto kv = detail::KeyValueLines::read(in);
    std::size_t pos = 0;
    DsInstance inst;
    inst.graph = parse_graph_lines(kv, pos);
    int n = inst.graph.vertex_count();
    bool have_start = false, have_target = false;
    for (; pos < kv.items.size(); ++pos) {
        const auto& [key, value] = kv.items[pos];
        if (key == "start") {
            inst.start = detail::list_to_set(n, detail::parse_vertex_list(value), "start");
            have_start = true;
        } else if (key == "target") {
            inst.target = detail::list_to_set(n, detail::parse_vertex_list(value), "target");
            have_target = true;
        } else if (key == "bound") {
            std::istringstream is(value);
            long t;
            if (!(is >> t) || t < 0) throw malformed_input_error("bad bound '" + value + "'");
            inst.move_bound = t - 2;
        } else {
            throw malformed_input_error("unknown ds-instance key '" + key + "'");
        }
    }
    if (!have_start || !have_target) throw malformed_input_error("ds-instance: missing start/target");
    return inst;
}

inline DsInstance parse_ds_instance(const std::string& text) {
    std::istringstream is(text);
    return parse_ds_instance(is);
}

inline std::string format_instance(const Instance& inst) {
    std::ostringstream os;
    os << "graph: " << inst.graph.vertex_count() << "\n";
    for (auto [u, v] : inst.graph.edges()) os << "edge: " << u << " " << v << "\n";
    os << "variant: " << inst.variant.to_string() << "\n";
    os << "rule: " << inst.rule.to_string() << "\n";
    if (inst.rule.kind == MoveKind::tar) os << "cap: " << inst.rule.cap << "\n";
    auto put_set = [&](const char* key, const VertexSet& s) {
        os << key << ":";
        s.for_each([&](int v) { os << " " << v; });
        os << "\n";
    };
    put_set("start", inst.start);
    put_set("target", inst.target);
    if (inst.move_bound) os << "bound: " << (*inst.move_bound + 2) << "\n";
    return os.str();
}

// Sequence file: one configuration per line, vertices space-separated. An
// empty line is the empty configuration; a single trailing newline is allowed.
inline Sequence parse_sequence(std::istream& in, int universe) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    Sequence seq;
    for (const auto& l : lines)
        seq.configs.push_back(detail::list_to_set(universe, detail::parse_vertex_list(l), "sequence"));
    return seq;
}

inline Sequence parse_sequence(const std::string& text, int universe) {
    std::istringstream is(text);
    return parse_sequence(is, universe);
}

inline std::string format_sequence(const Sequence& seq) {
    std::ostringstream os;
    for (const auto& c : seq.configs) {
        bool first = true;
        c.for_each([&](int v) {
            if (!first) os << ' ';
            os << v;
            first = false;
        });
        os << '\n';
    }
    return os.str();
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw malformed_input_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw malformed_input_error("cannot write '" + path + "'");
    out << content;
}

} // namespace alre
