#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "digiplane/afpp.hpp"
#include "digiplane/catalog.hpp"
#include "digiplane/convexity.hpp"
#include "digiplane/io.hpp"
#include "digiplane/retraction.hpp"

using namespace digiplane;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitBudget = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Image load_image(const std::string& path, const std::string& adjacency) {
    auto img = parse_image(slurp(path));
    if (!img)
        throw InputError(path + ": " + img.error().message);
    if (adjacency == "c1")
        return img->with_kind(Adjacency::c1);
    if (adjacency == "c2")
        return img->with_kind(Adjacency::c2);
    if (!adjacency.empty())
        throw InputError("bad --adjacency: " + adjacency);
    return *img;
}

Window parse_window(const std::vector<int>& w, const Image& fallback, int pad) {
    if (w.size() == 4) {
        if (w[0] > w[1] || w[2] > w[3])
            throw InputError("--window wants x0 <= x1 and y0 <= y1");
        return {w[0], w[1], w[2], w[3]};
    }
    if (!w.empty())
        throw InputError("--window wants four integers: x0 x1 y0 y1");
    if (fallback.empty())
        throw InputError("empty image needs an explicit --window");
    return fallback.bounding_box().padded(pad);
}

Retraction load_table(const std::string& path, const Image& target) {
    std::istringstream in(slurp(path));
    std::string line;
    std::map<Point, Point> table;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        if (first && line.rfind("x\t", 0) == 0) {
            first = false;
            continue;
        }
        first = false;
        std::istringstream row(line);
        Point p, q;
        if (!(row >> p.x >> p.y >> q.x >> q.y))
            throw InputError(path + ": bad TSV row: " + line);
        table[p] = q;
    }
    if (table.empty())
        throw InputError(path + ": empty table");
    return table_retraction(target, std::move(table));
}

void write_out(const std::string& path, const std::string& bytes) {
    if (path.empty() || path == "-") {
        std::cout << bytes;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    out << bytes;
    if (!out)
        throw InputError("cannot write " + path);
}

int cmd_convex(const Image& X) {
    ConvexityReport rep = is_convex(X);
    std::cout << convexity_kind_name(rep.kind);
    if (rep.kind == ConvexityReport::Kind::NotConvex && !rep.reason.empty())
        std::cout << " (" << rep.reason << ")";
    std::cout << "\n";
    return kExitOk;
}

int cmd_curve(const Image& X) {
    auto rep = decompose_disk(X);
    if (!rep)
        throw InputError(std::string(err_name(rep.code())) + ": " + rep.error().message);
    std::cout << "curve:";
    for (Point p : rep->curve.cycle)
        std::cout << ' ' << to_string(p);
    std::cout << "\nvertices:\n";
    for (std::size_t i = 0; i < rep->vertices.size(); ++i)
        std::cout << "  " << to_string(rep->vertices[i]) << " angle " << rep->angles[i] << "\n";
    return kExitOk;
}

int print_search(const SearchCertificate& cert, const Image& X, bool afpp) {
    const char* prop = afpp ? "AFPP" : "FPP";
    switch (cert.verdict) {
        case SearchCertificate::Verdict::Exhausted:
            std::cout << prop << ": yes (search exhausted, " << cert.stats.nodes << " nodes)\n";
            return kExitOk;
        case SearchCertificate::Verdict::Witness: {
            std::cout << prop << ": no\nwitness:\n";
            const auto& pts = X.points();
            for (std::size_t i = 0; i < pts.size(); ++i)
                std::cout << "  " << to_string(pts[i]) << " -> "
                          << to_string(cert.witness->values[i]) << "\n";
            return kExitOk;
        }
        default:
            std::cout << prop << ": unknown (budget exceeded after " << cert.stats.nodes
                      << " nodes)\n";
            return kExitBudget;
    }
}

Image catalog_image(const std::string& name) {
    using namespace catalog;
    if (name == "fig1-triangle")
        return make_fig1_triangle();
    if (name == "block-u")
        return make_block_u(3);
    if (name == "tee")
        return make_tee().whole;
    if (name == "annulus")
        return make_annulus().x;
    if (name == "annulus-ring")
        return make_annulus().inner_ring;
    if (name == "diamond4")
        return make_scc_diamond(4).value();
    if (name == "diamond8")
        return make_scc_diamond(8).value();
    if (name == "wedge") {
        auto [x1, x2] = make_wedge_45_45();
        return image_union(x1, x2);
    }
    throw InputError("unknown catalog name: " + name +
                     " (try fig1-triangle, block-u, tee, annulus, annulus-ring, "
                     "diamond4, diamond8, wedge)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"digital-plane topology toolkit"};
    app.require_subcommand(1);
    std::string file, file2, adjacency, out_path, format = "json", table_path, target_path;
    std::string scheme, name, sandwich = "v";
    int slope = -1;
    long long budget = kDefaultBudget;
    std::vector<int> window;

    auto add_window = [&](CLI::App* c) {
        c->add_option("--window", window, "x0 x1 y0 y1 (inclusive)")->expected(4);
    };

    auto* convex = app.add_subcommand("convex", "classify digital convexity");
    convex->add_option("file", file)->required();
    convex->add_option("--adjacency", adjacency);

    auto* curve = app.add_subcommand("curve", "bounding curve and interior angles");
    curve->add_option("file", file)->required();

    auto* retract = app.add_subcommand("retract", "retraction builders and checks");
    retract->require_subcommand(1);
    auto* build = retract->add_subcommand("build", "emit a retraction table");
    build->add_option("scheme", scheme, "axis|slanted|edge-union|wedge")->required();
    build->add_option("file", file)->required();
    build->add_option("file2", file2, "second disk for edge-union/wedge");
    build->add_option("--slope", slope, "slanted sandwich slope: -1 or 1");
    build->add_option("--sandwich", sandwich, "axis orientation: h or v");
    build->add_option("-o,--output", out_path);
    add_window(build);

    auto* verify = retract->add_subcommand("verify", "verify a retraction table");
    verify->add_option("--target", target_path)->required();
    verify->add_option("--table", table_path)->required();
    add_window(verify);

    auto* afpp_cmd = app.add_subcommand("afpp", "approximate fixed point property");
    afpp_cmd->add_option("file", file)->required();
    afpp_cmd->add_option("--budget", budget);
    afpp_cmd->add_option("--adjacency", adjacency);

    auto* fpp_cmd = app.add_subcommand("fpp", "fixed point property");
    fpp_cmd->add_option("file", file)->required();
    fpp_cmd->add_option("--budget", budget);
    fpp_cmd->add_option("--adjacency", adjacency);

    auto* cat = app.add_subcommand("catalog", "emit a named example image");
    cat->add_option("name", name)->required();
    cat->add_option("--format", format, "json or grid");
    cat->add_option("-o,--output", out_path);

    auto* render = app.add_subcommand("render", "ASCII or SVG picture");
    render->add_option("file", file)->required();
    render->add_option("--format", format, "ascii or svg");
    render->add_option("--table", table_path, "retraction table for arrows (SVG)");
    render->add_option("-o,--output", out_path);
    add_window(render);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInput;
    }

    try {
        if (*convex)
            return cmd_convex(load_image(file, adjacency));
        if (*curve)
            return cmd_curve(load_image(file, ""));
        if (*build) {
            Result<Retraction> r{Err::DomainError, ""};
            Image X = load_image(file, "");
            Image whole = X;
            if (scheme == "axis") {
                if (sandwich != "h" && sandwich != "v")
                    throw InputError("--sandwich wants h or v");
                r = build_axis_retraction(
                    X, sandwich == "h" ? Orientation::Horizontal : Orientation::Vertical);
            } else if (scheme == "slanted") {
                r = build_slanted_retraction(X, slope);
            } else if (scheme == "edge-union" || scheme == "wedge") {
                if (file2.empty())
                    throw InputError(scheme + " needs two image files");
                Image Y = load_image(file2, "");
                whole = image_union(X, Y);
                r = scheme == "wedge" ? build_wedge_retraction(X, Y)
                                      : build_edge_union_retraction(X, Y);
            } else {
                throw InputError("unknown scheme: " + scheme);
            }
            if (!r)
                throw InputError(std::string(err_name(r.code())) + ": " + r.error().message);
            Window w = parse_window(window, whole, 2);
            write_out(out_path, retraction_table_tsv(*r, w));
            return kExitOk;
        }
        if (*verify) {
            Image target = load_image(target_path, "");
            Retraction r = load_table(table_path, target);
            Window w = parse_window(window, target, 2);
            auto rep = verify_retraction(r, w);
            if (!rep)
                throw InputError(std::string(err_name(rep.code())) + ": " + rep.error().message);
            if (rep->pass) {
                std::cout << "verify: pass\n";
                return kExitOk;
            }
            std::cout << "verify: fail (" << rep->failure << ")\n";
            return kExitOk;
        }
        if (*afpp_cmd || *fpp_cmd) {
            Image X = load_image(file, adjacency);
            if (X.empty())
                throw InputError("empty image");
            bool afpp = (bool)*afpp_cmd;
            SearchCertificate cert = afpp ? search_afpp_violation(X, (std::uint64_t)budget)
                                          : search_fixed_point_free(X, (std::uint64_t)budget);
            return print_search(cert, X, afpp);
        }
        if (*cat) {
            Image X = catalog_image(name);
            if (format != "json" && format != "grid")
                throw InputError("--format wants json or grid");
            write_out(out_path, emit_image(X, format == "json" ? Format::Json : Format::Grid));
            return kExitOk;
        }
        if (*render) {
            Image X = load_image(file, "");
            Window w = parse_window(window, X, 1);
            if (format == "svg") {
                std::optional<Retraction> r;
                if (!table_path.empty())
                    r = load_table(table_path, X);
                write_out(out_path, render_svg(X, w, r ? &*r : nullptr));
            } else if (format == "ascii" || format == "json") {
                write_out(out_path, render_ascii(X, w));
            } else {
                throw InputError("--format wants ascii or svg");
            }
            return kExitOk;
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
