#ifndef DIGIPLANE_IO_HPP
#define DIGIPLANE_IO_HPP

#include <string>
#include <string_view>

#include "digiplane/core.hpp"
#include "digiplane/retraction.hpp"

namespace digiplane {

enum class Format { Json, Grid };

/// Detect the serialization format from the first meaningful byte
/// ('{' = JSON, '!' = GRID).
Result<Format> detect_format(std::string_view text);

/// Parse a digital image. GRID files carry no adjacency and parse as c2.
/// Malformed input yields ParseError with a line:column diagnostic.
Result<Image> parse_image(std::string_view text, Format format);
Result<Image> parse_image(std::string_view text);  // auto-detect

/// Emit an image. Deterministic: identical images yield identical bytes.
/// JSON: {"adjacency":"c1|c2","points":[[x,y],...]} in canonical order.
/// GRID: "!origin <xmin> <ymin>" then rows from ymax down to ymin of
/// '#'/'.', no trailing spaces, each line newline-terminated.
std::string emit_image(const Image& X, Format format);

/// Retraction table over a window, one "x<TAB>y<TAB>rx<TAB>ry" line per
/// point in canonical order, after a header line.
std::string retraction_table_tsv(const Retraction& r, const Window& window);

/// ASCII rendering of the window: '#' for points of X, '.' elsewhere.
std::string render_ascii(const Image& X, const Window& window);

/// SVG rendering: unit-square lattice, filled points of X, and (when a
/// retraction is given) arrows p -> r(p) for window points outside X.
std::string render_svg(const Image& X, const Window& window, const Retraction* r = nullptr);

}  // namespace digiplane

#endif
