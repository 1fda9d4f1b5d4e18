#include "rotsys/io.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace rotsys {

namespace {

// data lines with their 1-based line numbers; comments and blanks dropped
std::vector<std::pair<int, std::string>> data_lines(const std::string& text) {
    std::vector<std::pair<int, std::string>> out;
    std::istringstream in(text);
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        std::size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        if (i == line.size() || line[i] == '#') continue;
        out.emplace_back(no, line);
    }
    return out;
}

[[noreturn]] void bad(const char* what, int line, const std::string& msg) {
    std::ostringstream os;
    os << what << " line " << line << ": " << msg;
    throw std::invalid_argument(os.str());
}

std::vector<long> ints_of(const char* what, int no, const std::string& line) {
    std::vector<long> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(tok, &used);
        } catch (const std::exception&) {
            bad(what, no, "expected an integer, got '" + tok + "'");
        }
        if (used != tok.size())
            bad(what, no, "expected an integer, got '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

std::vector<double> doubles_of(const char* what, int no,
                               const std::string& line) {
    std::vector<double> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        const char* s = tok.c_str();
        char* end = nullptr;
        double v = std::strtod(s, &end);
        if (end != s + tok.size())
            bad(what, no, "expected a number, got '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

Drawing parse_rotations(const std::string& text) {
    static const char* W = "rotation file";
    auto lines = data_lines(text);
    if (lines.empty()) throw std::invalid_argument("rotation file is empty");

    auto head = ints_of(W, lines[0].first, lines[0].second);
    if (head.size() != 1 || head[0] < 3)
        bad(W, lines[0].first, "first data line must be a vertex count >= 3");
    const int n = static_cast<int>(head[0]);
    if (static_cast<int>(lines.size()) != n + 1)
        throw std::invalid_argument(
            "rotation file: expected " + std::to_string(n) +
            " rotation rows, found " + std::to_string(lines.size() - 1));

    std::vector<std::vector<VertexId>> rows(n);
    std::vector<char> seen(n + 1, 0);
    for (int r = 1; r <= n; ++r) {
        auto [no, line] = lines[r];
        auto colon = line.find(':');
        if (colon == std::string::npos)
            bad(W, no, "expected 'v: neighbors...'");
        auto label = ints_of(W, no, line.substr(0, colon));
        if (label.size() != 1 || label[0] < 1 || label[0] > n)
            bad(W, no, "row label must be a vertex in 1.." + std::to_string(n));
        const int v = static_cast<int>(label[0]);
        if (seen[v]) bad(W, no, "duplicate row for vertex " + std::to_string(v));
        seen[v] = 1;
        auto vals = ints_of(W, no, line.substr(colon + 1));
        if (static_cast<int>(vals.size()) != n - 1)
            bad(W, no, "expected " + std::to_string(n - 1) + " neighbors");
        rows[v - 1].assign(vals.begin(), vals.end());
    }
    return Drawing(n, std::move(rows));
}

std::string serialize_rotations(const Drawing& d) {
    std::ostringstream os;
    os << d.n() << '\n';
    for (VertexId v = 1; v <= d.n(); ++v) {
        os << v << ':';
        for (VertexId u : d.rotation(v)) os << ' ' << u;
        os << '\n';
    }
    return os.str();
}

EdgeList parse_edges(const std::string& text) {
    static const char* W = "edge file";
    EdgeList out;
    for (auto& [no, line] : data_lines(text)) {
        auto vals = ints_of(W, no, line);
        if (vals.size() != 2) bad(W, no, "expected 'u v'");
        if (vals[0] < 1 || vals[1] < 1 || vals[0] == vals[1])
            bad(W, no, "not an edge between distinct positive vertices");
        out.emplace_back(static_cast<VertexId>(vals[0]),
                         static_cast<VertexId>(vals[1]));
    }
    return out;
}

std::string serialize_edges(const EdgeList& edges) {
    std::ostringstream os;
    for (const Edge& e : edges) os << e.u << ' ' << e.v << '\n';
    return os.str();
}

std::vector<Point> parse_points(const std::string& text) {
    static const char* W = "point file";
    std::vector<Point> out;
    for (auto& [no, line] : data_lines(text)) {
        auto vals = doubles_of(W, no, line);
        if (vals.size() != 2) bad(W, no, "expected 'x y'");
        out.push_back({vals[0], vals[1]});
    }
    return out;
}

std::string serialize_points(const std::vector<Point>& pts) {
    std::ostringstream os;
    for (const Point& p : pts) os << fmt(p.x) << ' ' << fmt(p.y) << '\n';
    return os.str();
}

std::vector<Segment> parse_segments(const std::string& text) {
    static const char* W = "segment file";
    std::vector<Segment> out;
    for (auto& [no, line] : data_lines(text)) {
        auto vals = doubles_of(W, no, line);
        if (vals.size() != 4) bad(W, no, "expected 'x1 y1 x2 y2'");
        out.push_back({{vals[0], vals[1]}, {vals[2], vals[3]}});
    }
    return out;
}

std::string serialize_segments(const std::vector<Segment>& segs) {
    std::ostringstream os;
    for (const Segment& s : segs)
        os << fmt(s.a.x) << ' ' << fmt(s.a.y) << ' ' << fmt(s.b.x) << ' '
           << fmt(s.b.y) << '\n';
    return os.str();
}

}  // namespace rotsys
