#include "newton/io.hpp"

#include <charconv>
#include <sstream>

namespace newton {

namespace {

Int parse_int(std::string_view s) {
    Int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw DomainError("bad integer: '" + std::string(s) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

} // namespace

std::string diagram_to_text(const Diagram &d) {
    std::ostringstream os;
    bool first = true;
    for (const auto &v : d.vertices()) {
        if (!first)
            os << ',';
        os << v.x << ':' << v.y;
        first = false;
    }
    return os.str();
}

Diagram diagram_from_text(const std::string &text) {
    std::istringstream is(text);
    std::string head;
    is >> head;
    if (head == "TRI") {
        Int p = 0, q = 0;
        if (!(is >> p >> q))
            throw DomainError("TRI needs two intercepts");
        std::string rest;
        if (is >> rest)
            throw DomainError("trailing input after TRI p q");
        return segment_diagram(p, q);
    }
    std::vector<LatticePoint> pts;
    for (auto item : split(head, ',')) {
        auto xy = split(item, ':');
        if (xy.size() != 2)
            throw DomainError("expected x:y, got '" + std::string(item) + "'");
        pts.emplace_back(parse_int(xy[0]), parse_int(xy[1]));
    }
    return diagram_from_points(std::move(pts));
}

nlohmann::json diagram_to_json(const Diagram &d) {
    nlohmann::json verts = nlohmann::json::array();
    for (const auto &v : d.vertices())
        verts.push_back({v.x, v.y});
    return {{"vertices", verts}};
}

Diagram diagram_from_json(const nlohmann::json &j) {
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw DomainError("diagram json needs a vertices array");
    std::vector<LatticePoint> pts;
    for (const auto &v : j["vertices"]) {
        if (!v.is_array() || v.size() != 2)
            throw DomainError("vertex must be [x,y]");
        pts.emplace_back(v[0].get<Int>(), v[1].get<Int>());
    }
    return diagram_from_points(std::move(pts));
}

} // namespace newton
