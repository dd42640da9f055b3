#include "gt/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace gt {

namespace {

[[noreturn]] void syntax_error(int line_no, const std::string &what) {
    throw Error(ErrorKind::SyntaxError, "line " + std::to_string(line_no) + ": " + what);
}

int parse_int(std::string_view s, int line_no) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        syntax_error(line_no, "expected integer, got '" + std::string(s) + "'");
    return value;
}

} // namespace

Triple parse_triple(const std::string &text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;

    auto next_line = [&](std::string &out) -> bool {
        while (std::getline(in, raw)) {
            ++line_no;
            if (!raw.empty() && raw.back() == '\r') raw.pop_back();
            if (raw.empty() || raw[0] == '#') continue;
            out = raw;
            return true;
        }
        return false;
    };

    std::string line;
    if (!next_line(line) || line != "gtriple 1")
        syntax_error(line_no == 0 ? 1 : line_no, "expected header 'gtriple 1'");
    if (!next_line(line) || line.rfind("n ", 0) != 0)
        syntax_error(line_no, "expected 'n <N>'");
    const int n = parse_int(std::string_view(line).substr(2), line_no);
    if (n < 0 || n > kMaxVertices)
        throw Error(ErrorKind::IndexOutOfRange, "n out of range: " + std::to_string(n));

    std::vector<std::pair<int, int>> sections[3];
    int cur = -1;
    while (next_line(line)) {
        if (line == "E1" || line == "E2" || line == "E3") {
            const int idx = line[1] - '1';
            if (idx != cur + 1) syntax_error(line_no, "section " + line + " out of order");
            cur = idx;
            continue;
        }
        if (cur < 0) syntax_error(line_no, "edge line before any section header");
        const auto sp = line.find(' ');
        if (sp == std::string::npos || line.find(' ', sp + 1) != std::string::npos)
            syntax_error(line_no, "expected '<u> <v>'");
        const int u = parse_int(std::string_view(line).substr(0, sp), line_no);
        const int v = parse_int(std::string_view(line).substr(sp + 1), line_no);
        if (cur < 2 && u >= v) syntax_error(line_no, "white edges require u < v");
        sections[cur].emplace_back(u, v);
    }
    if (cur != 2) syntax_error(line_no, "missing section E" + std::to_string(cur + 2));

    return Triple(Graph::from_edges(n, sections[0]), Graph::from_edges(n, sections[1]),
                  sections[2]);
}

std::string serialize_triple(const Triple &t) {
    std::ostringstream out;
    out << "gtriple 1\n";
    out << "n " << t.order() << "\n";
    auto emit = [&](const char *header, std::vector<std::pair<int, int>> es) {
        std::sort(es.begin(), es.end());
        out << header << "\n";
        for (auto [u, v] : es) out << u << " " << v << "\n";
    };
    emit("E1", t.g1().edges());
    emit("E2", t.g2().edges());
    emit("E3", t.yellow_edges());
    return out.str();
}

std::vector<int> parse_packing(const std::string &line) {
    std::vector<int> map;
    std::string_view rest(line);
    while (!rest.empty() && (rest.back() == '\n' || rest.back() == '\r'))
        rest.remove_suffix(1);
    if (rest.empty()) return map;
    while (true) {
        const auto comma = rest.find(',');
        const auto tok = rest.substr(0, comma);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw Error(ErrorKind::SyntaxError, "bad certificate entry '" + std::string(tok) + "'");
        map.push_back(value);
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return map;
}

std::string serialize_packing(const std::vector<int> &map) {
    std::ostringstream out;
    for (std::size_t i = 0; i < map.size(); ++i) {
        if (i) out << ",";
        out << map[i];
    }
    return out.str();
}

} // namespace gt
