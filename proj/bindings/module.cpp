#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "digiplane/afpp.hpp"
#include "digiplane/catalog.hpp"
#include "digiplane/convexity.hpp"
#include "digiplane/io.hpp"
#include "digiplane/retraction.hpp"

namespace py = pybind11;
using namespace digiplane;

namespace {

Image image_from_pairs(const std::vector<std::pair<int, int>>& pts, const std::string& adjacency) {
    Adjacency kind;
    if (adjacency == "c1")
        kind = Adjacency::c1;
    else if (adjacency == "c2")
        kind = Adjacency::c2;
    else
        throw std::invalid_argument("adjacency must be 'c1' or 'c2'");
    std::vector<Point> v;
    v.reserve(pts.size());
    for (auto [x, y] : pts)
        v.push_back({x, y});
    return Image(std::move(v), kind);
}

template <typename T>
T unwrap(Result<T> r) {
    if (!r.ok())
        throw std::runtime_error(std::string(err_name(r.code())) + ": " + r.error().message);
    return std::move(r).value();
}

}  // namespace

PYBIND11_MODULE(_digiplane, m) {
    m.doc() = "Digital-plane topology: convexity, retractions, and the "
              "approximate fixed point property";

    py::enum_<Adjacency>(m, "Adjacency").value("c1", Adjacency::c1).value("c2", Adjacency::c2);

    py::class_<Point>(m, "Point")
        .def(py::init<int, int>(), py::arg("x"), py::arg("y"))
        .def_readwrite("x", &Point::x)
        .def_readwrite("y", &Point::y)
        .def("__iter__",
             [](const Point& p) { return py::iter(py::make_tuple(p.x, p.y)); })
        .def("__eq__", [](const Point& a, const Point& b) { return a == b; })
        .def("__hash__", [](const Point& p) { return py::hash(py::make_tuple(p.x, p.y)); })
        .def("__repr__", [](const Point& p) { return to_string(p); });

    py::class_<Image>(m, "Image")
        .def(py::init(&image_from_pairs), py::arg("points"), py::arg("adjacency") = "c2")
        .def_property_readonly("points", &Image::points)
        .def_property_readonly("adjacency",
                               [](const Image& X) {
                                   return X.kind() == Adjacency::c1 ? "c1" : "c2";
                               })
        .def("__len__", &Image::size)
        .def("__contains__",
             [](const Image& X, std::pair<int, int> p) {
                 return X.contains({p.first, p.second});
             })
        .def("__repr__", [](const Image& X) {
            return "<Image " + std::to_string(X.size()) + " points, " +
                   (X.kind() == Adjacency::c1 ? "c1" : "c2") + ">";
        });

    py::class_<SelfMap>(m, "SelfMap")
        .def_readonly("domain", &SelfMap::domain)
        .def_readonly("values", &SelfMap::values)
        .def("__call__", [](const SelfMap& f, int x, int y) { return f.apply({x, y}); });

    py::class_<Retraction>(m, "Retraction")
        .def_property_readonly("target", &Retraction::target)
        .def_property_readonly("scheme", &Retraction::scheme)
        .def("__call__", [](const Retraction& r, int x, int y) { return r({x, y}); });

    py::class_<VerifyReport>(m, "VerifyReport")
        .def_readonly("ok", &VerifyReport::pass)
        .def_readonly("failure", &VerifyReport::failure)
        .def_readonly("boundary_checked", &VerifyReport::boundary_checked);

    py::class_<SearchCertificate>(m, "SearchCertificate")
        .def_property_readonly("verdict",
                               [](const SearchCertificate& c) {
                                   switch (c.verdict) {
                                       case SearchCertificate::Verdict::Witness:
                                           return "witness";
                                       case SearchCertificate::Verdict::Exhausted:
                                           return "exhausted";
                                       default:
                                           return "budget-exceeded";
                                   }
                               })
        .def_readonly("witness", &SearchCertificate::witness)
        .def_property_readonly("nodes",
                               [](const SearchCertificate& c) { return c.stats.nodes; });

    m.def("adjacent", &adjacent, py::arg("p"), py::arg("q"), py::arg("adjacency"));
    m.def(
        "components",
        [](const Image& X) {
            return components(X);
        },
        "kind-components of X, each a sorted point list");
    m.def("is_convex_kind", [](const Image& X) {
        return std::string(convexity_kind_name(is_convex(X).kind));
    });
    m.def("hull_vertices", &hull_vertices);
    m.def("build_axis_retraction",
          [](const Image& X) { return unwrap(build_axis_retraction(X)); });
    m.def("build_slanted_retraction", [](const Image& X, int slope) {
        return unwrap(build_slanted_retraction(X, slope));
    });
    m.def("build_edge_union_retraction", [](const Image& a, const Image& b) {
        return unwrap(build_edge_union_retraction(a, b));
    });
    m.def("build_wedge_retraction", [](const Image& a, const Image& b) {
        return unwrap(build_wedge_retraction(a, b));
    });
    m.def("verify_retraction", [](const Retraction& r, int x0, int x1, int y0, int y1) {
        return unwrap(verify_retraction(r, Window{x0, x1, y0, y1}));
    });
    m.def("search_afpp_violation", &search_afpp_violation, py::arg("X"),
          py::arg("budget") = kDefaultBudget);
    m.def("search_fixed_point_free", &search_fixed_point_free, py::arg("X"),
          py::arg("budget") = kDefaultBudget);
    m.def("has_afpp", [](const Image& X) {
        return search_afpp_violation(X).has_property();
    });
    m.def("parse_image", [](const std::string& text) { return unwrap(parse_image(text)); });
    m.def("emit_image", [](const Image& X, const std::string& format) {
        return emit_image(X, format == "grid" ? Format::Grid : Format::Json);
    });
    m.def("render_ascii", [](const Image& X, int x0, int x1, int y0, int y1) {
        return render_ascii(X, Window{x0, x1, y0, y1});
    });

    py::module_ cat = m.def_submodule("catalog", "named examples");
    cat.def("rectangle", &catalog::make_rectangle, py::arg("x0"), py::arg("x1"), py::arg("y0"),
            py::arg("y1"), py::arg("kind") = Adjacency::c2);
    cat.def("fig1_triangle", &catalog::make_fig1_triangle);
    cat.def("block_u", &catalog::make_block_u);
    cat.def("scc_diamond", [](int k) { return unwrap(catalog::make_scc_diamond(k)); });
    cat.def("tee", [] {
        auto t = catalog::make_tee();
        return py::make_tuple(t.x1, t.x2, t.whole, t.r);
    });
    cat.def("annulus", [] {
        auto a = catalog::make_annulus();
        return py::make_tuple(a.x, a.inner_ring, a.r);
    });
    cat.def("wedge_45_45", [] {
        auto w = catalog::make_wedge_45_45();
        return py::make_tuple(w.x1, w.x2);
    });
}
