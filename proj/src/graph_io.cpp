#include "critwin/graph_io.hpp"

#include <charconv>
#include <sstream>

namespace critwin {

namespace {

constexpr int graph6_max_order = 62;

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_lines(std::string_view text)
{
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        auto eol = text.find('\n');
        lines.push_back(text.substr(0, eol));
        if (eol == std::string_view::npos)
            break;
        text.remove_prefix(eol + 1);
    }
    return lines;
}

std::vector<long long> integers(std::string_view line, const char* what)
{
    std::vector<long long> out;
    line = trim(line);
    while (!line.empty()) {
        long long value = 0;
        auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
        if (ec != std::errc{} || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t'))
            throw FormatError(std::string(what) + ": expected integers, got '" + std::string(line) + "'");
        out.push_back(value);
        line = trim(line.substr(static_cast<std::size_t>(ptr - line.data())));
    }
    return out;
}

} // namespace

Graph parse_graph6(std::string_view line)
{
    line = trim(line);
    if (line.empty())
        throw FormatError("graph6: empty line");
    const int header = static_cast<unsigned char>(line[0]);
    if (header < 63 || header > 126)
        throw FormatError("graph6: bad length character");
    if (header == 126)
        throw FormatError("graph6: long form (n > 62) not supported");
    const int n = header - 63;
    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    const std::size_t chars = (bits + 5) / 6;
    if (line.size() - 1 != chars)
        throw FormatError("graph6: expected " + std::to_string(chars) + " data characters for n=" +
                          std::to_string(n) + ", got " + std::to_string(line.size() - 1));
    Graph g(n);
    std::size_t k = 0;
    for (std::size_t c = 0; c < chars; ++c) {
        const int value = static_cast<unsigned char>(line[c + 1]) - 63;
        if (value < 0 || value > 63)
            throw FormatError("graph6: bad character at offset " + std::to_string(c + 1));
        for (int b = 5; b >= 0; --b, ++k) {
            const bool set = (value >> b) & 1;
            if (k >= bits) {
                if (set)
                    throw FormatError("graph6: nonzero padding bits");
                continue;
            }
            if (set) {
                // k enumerates (i, j), i < j, column by column.
                std::size_t j = 1, before = 0;
                while (before + j <= k)
                    before += j++;
                g.add_edge(static_cast<Vertex>(k - before), static_cast<Vertex>(j));
            }
        }
    }
    return g;
}

std::string encode_graph6(const Graph& g)
{
    const int n = g.order();
    if (n > graph6_max_order)
        throw FormatError("graph6: long form (n > 62) not supported");
    std::string out(1, static_cast<char>(63 + n));
    int acc = 0, filled = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

Graph parse_edge_list(std::string_view text)
{
    auto lines = split_lines(text);
    std::size_t at = 0;
    auto next_content = [&]() -> std::string_view {
        while (at < lines.size()) {
            auto l = trim(lines[at++]);
            if (!l.empty())
                return l;
        }
        return {};
    };
    auto header = integers(next_content(), "edge list header");
    if (header.size() != 2)
        throw FormatError("edge list: header must be 'n m'");
    const auto n = header[0], m = header[1];
    if (n < 0 || m < 0)
        throw FormatError("edge list: negative counts in header");
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        auto line = next_content();
        if (line.empty())
            throw FormatError("edge list: expected " + std::to_string(m) + " edges, found " + std::to_string(i));
        auto uv = integers(line, "edge list");
        if (uv.size() != 2)
            throw FormatError("edge list: edge line must be 'u v'");
        if (uv[0] < 0 || uv[1] < 0 || uv[0] >= n || uv[1] >= n)
            throw FormatError("edge list: endpoint out of range in '" + std::string(line) + "'");
        if (uv[0] == uv[1])
            throw FormatError("edge list: self-loop in '" + std::string(line) + "'");
        g.add_edge(static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1]));
    }
    if (!next_content().empty())
        throw FormatError("edge list: trailing content after " + std::to_string(m) + " edges");
    return g;
}

std::string encode_edge_list(const Graph& g)
{
    std::ostringstream out;
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

std::string edge_string(const Graph& g)
{
    std::string out = std::to_string(g.order()) + ":";
    bool first = true;
    for (auto [u, v] : g.edges()) {
        if (!first)
            out += ',';
        out += std::to_string(u) + "-" + std::to_string(v);
        first = false;
    }
    return out;
}

Graph parse_edge_string(std::string_view text)
{
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw FormatError("edge string: missing ':'");
    auto n = integers(text.substr(0, colon), "edge string order");
    if (n.size() != 1 || n[0] < 0)
        throw FormatError("edge string: bad order");
    Graph g(static_cast<int>(n[0]));
    auto rest = text.substr(colon + 1);
    while (!rest.empty()) {
        auto comma = rest.find(',');
        auto item = rest.substr(0, comma);
        auto dash = item.find('-');
        if (dash == std::string_view::npos)
            throw FormatError("edge string: bad edge '" + std::string(item) + "'");
        auto u = integers(item.substr(0, dash), "edge string");
        auto v = integers(item.substr(dash + 1), "edge string");
        if (u.size() != 1 || v.size() != 1 || u[0] >= n[0] || v[0] >= n[0])
            throw FormatError("edge string: bad edge '" + std::string(item) + "'");
        g.add_edge(static_cast<Vertex>(u[0]), static_cast<Vertex>(v[0]));
        if (comma == std::string_view::npos)
            break;
        rest.remove_prefix(comma + 1);
    }
    return g;
}

GraphFormat detect_format(std::string_view text)
{
    for (auto line : split_lines(text)) {
        line = trim(line);
        if (line.empty())
            continue;
        // An edge-list header is two integers; graph6 has no spaces.
        return line.find_first_of(" \t") != std::string_view::npos ? GraphFormat::edge_list : GraphFormat::graph6;
    }
    throw FormatError("no graph data in input");
}

std::vector<Graph> read_graphs(std::string_view text, GraphFormat format)
{
    if (format == GraphFormat::automatic)
        format = detect_format(text);
    if (format == GraphFormat::edge_list)
        return {parse_edge_list(text)};
    std::vector<Graph> out;
    for (auto line : split_lines(text)) {
        line = trim(line);
        if (line.empty() || line == ">>graph6<<")
            continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

} // namespace critwin
