#include "digiplane/io.hpp"

#include <json.hpp>

#include <sstream>

namespace digiplane {

namespace {

using nlohmann::json;

// line:column (1-based) of a byte offset, for parse diagnostics.
std::string at(std::string_view text, std::size_t pos) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return std::to_string(line) + ":" + std::to_string(col);
}

Result<Image> parse_json(std::string_view text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded())
        return {Err::ParseError, "invalid JSON"};
    if (!j.is_object() || !j.contains("adjacency") || !j.contains("points"))
        return {Err::ParseError, "expected object with \"adjacency\" and \"points\""};
    Adjacency kind;
    if (j["adjacency"] == "c1")
        kind = Adjacency::c1;
    else if (j["adjacency"] == "c2")
        kind = Adjacency::c2;
    else
        return {Err::ParseError, "\"adjacency\" must be \"c1\" or \"c2\""};
    if (!j["points"].is_array())
        return {Err::ParseError, "\"points\" must be an array"};
    std::vector<Point> pts;
    for (const auto& e : j["points"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            return {Err::ParseError, "each point must be an [x,y] integer pair"};
        pts.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return Image(std::move(pts), kind);
}

Result<Image> parse_grid(std::string_view text) {
    std::size_t pos = text.find('\n');
    std::string_view header = text.substr(0, pos == std::string_view::npos ? text.size() : pos);
    std::istringstream hs{std::string(header)};
    std::string bang;
    int xmin, ymin;
    if (!(hs >> bang >> xmin >> ymin) || bang != "!origin")
        return {Err::ParseError, at(text, 0) + ": expected \"!origin <xmin> <ymin>\""};
    std::vector<Point> pts;
    std::vector<std::string_view> rows;
    std::size_t start = pos == std::string_view::npos ? text.size() : pos + 1;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        std::string_view row = text.substr(start, (end == std::string_view::npos ? text.size() : end) - start);
        if (!row.empty())
            rows.push_back(row);
        else if (end != std::string_view::npos && end + 1 < text.size())
            return {Err::ParseError, at(text, start) + ": blank row inside grid"};
        if (end == std::string_view::npos)
            break;
        start = end + 1;
    }
    // Rows run from ymax down to ymin.
    int ymax = ymin + (int)rows.size() - 1;
    for (std::size_t ri = 0; ri < rows.size(); ++ri) {
        std::string_view row = rows[ri];
        for (std::size_t ci = 0; ci < row.size(); ++ci) {
            if (row[ci] == '#')
                pts.push_back({xmin + (int)ci, ymax - (int)ri});
            else if (row[ci] != '.')
                return {Err::ParseError,
                        at(text, (std::size_t)(row.data() - text.data()) + ci) +
                            ": expected '#' or '.'"};
        }
    }
    return Image(std::move(pts), Adjacency::c2);
}

}  // namespace

Result<Format> detect_format(std::string_view text) {
    for (char c : text) {
        if (c == '{')
            return Format::Json;
        if (c == '!')
            return Format::Grid;
        if (!isspace((unsigned char)c))
            break;
    }
    return {Err::ParseError, "cannot detect format: expected '{' (JSON) or '!' (GRID)"};
}

Result<Image> parse_image(std::string_view text, Format format) {
    return format == Format::Json ? parse_json(text) : parse_grid(text);
}

Result<Image> parse_image(std::string_view text) {
    auto f = detect_format(text);
    if (!f)
        return f.error();
    return parse_image(text, *f);
}

std::string emit_image(const Image& X, Format format) {
    std::string out;
    if (format == Format::Json) {
        out = X.kind() == Adjacency::c1 ? R"({"adjacency":"c1","points":[)"
                                        : R"({"adjacency":"c2","points":[)";
        bool first = true;
        for (Point p : X.points()) {
            if (!first)
                out += ',';
            first = false;
            out += '[' + std::to_string(p.x) + ',' + std::to_string(p.y) + ']';
        }
        out += "]}\n";
        return out;
    }
    Window box = X.empty() ? Window{0, 0, 0, 0} : X.bounding_box();
    out = "!origin " + std::to_string(box.x0) + ' ' + std::to_string(box.y0) + '\n';
    if (X.empty())
        return out;
    for (int y = box.y1; y >= box.y0; --y) {
        for (int x = box.x0; x <= box.x1; ++x)
            out += X.contains({x, y}) ? '#' : '.';
        out += '\n';
    }
    return out;
}

std::string retraction_table_tsv(const Retraction& r, const Window& window) {
    std::string out = "x\ty\trx\try\n";
    for (int x = window.x0; x <= window.x1; ++x)
        for (int y = window.y0; y <= window.y1; ++y) {
            Point q = r({x, y});
            out += std::to_string(x) + '\t' + std::to_string(y) + '\t' + std::to_string(q.x) +
                   '\t' + std::to_string(q.y) + '\n';
        }
    return out;
}

std::string render_ascii(const Image& X, const Window& window) {
    std::string out;
    for (int y = window.y1; y >= window.y0; --y) {
        for (int x = window.x0; x <= window.x1; ++x)
            out += X.contains({x, y}) ? '#' : '.';
        out += '\n';
    }
    return out;
}

std::string render_svg(const Image& X, const Window& window, const Retraction* r) {
    const int cell = 24, rad = 6, margin = cell;
    auto cx = [&](int x) { return margin + cell * (x - window.x0); };
    auto cy = [&](int y) { return margin + cell * (window.y1 - y); };
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
      << 2 * margin + cell * (window.x1 - window.x0) << "\" height=\""
      << 2 * margin + cell * (window.y1 - window.y0) << "\">\n"
      << "<defs><marker id=\"a\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"3\" "
         "orient=\"auto\"><path d=\"M0,0 L6,3 L0,6 z\"/></marker></defs>\n";
    for (int x = window.x0; x <= window.x1; ++x)
        s << "<line x1=\"" << cx(x) << "\" y1=\"" << cy(window.y1) << "\" x2=\"" << cx(x)
          << "\" y2=\"" << cy(window.y0) << "\" stroke=\"#ddd\"/>\n";
    for (int y = window.y0; y <= window.y1; ++y)
        s << "<line x1=\"" << cx(window.x0) << "\" y1=\"" << cy(y) << "\" x2=\"" << cx(window.x1)
          << "\" y2=\"" << cy(y) << "\" stroke=\"#ddd\"/>\n";
    if (r)
        for (const Point& p : window.points()) {
            if (X.contains(p))
                continue;
            Point q = (*r)(p);
            if (q == p)
                continue;
            s << "<line x1=\"" << cx(p.x) << "\" y1=\"" << cy(p.y) << "\" x2=\"" << cx(q.x)
              << "\" y2=\"" << cy(q.y)
              << "\" stroke=\"#c33\" marker-end=\"url(#a)\"/>\n";
        }
    for (const Point& p : window.points())
        s << "<circle cx=\"" << cx(p.x) << "\" cy=\"" << cy(p.y) << "\" r=\""
          << (X.contains(p) ? rad : 2) << "\" fill=\"" << (X.contains(p) ? "#226" : "#aaa")
          << "\"/>\n";
    s << "</svg>\n";
    return s.str();
}

}  // namespace digiplane
