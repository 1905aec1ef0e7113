#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jtkk/catalog.hpp"
#include "jtkk/report.hpp"
#include "jtkk/serialize.hpp"

namespace py = pybind11;
using namespace jtkk;

namespace {

py::object fraction(const Rational& r) {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(to_string(r));
}

Rational rational(py::handle h) {
    py::object f = py::module_::import("fractions").attr("Fraction")(h);
    return parse_rational(py::str(f.attr("numerator")).cast<std::string>() + "/" +
                          py::str(f.attr("denominator")).cast<std::string>());
}

py::list fractions(const Vec& v) {
    py::list out;
    for (const auto& x : v) out.append(fraction(x));
    return out;
}

py::object report_dict(const Report& r) {
    return py::module_::import("json").attr("loads")(render_machine({r}))["reports"][py::int_(0)];
}

JordanAlgebra jordan_of(const std::string& source) {
    Source s = load_source(source);
    if (!s.jordan) throw std::invalid_argument(source + " is not a Jordan superalgebra");
    return *s.jordan;
}

py::dict graded(const std::map<std::pair<int, int>, std::size_t>& m) {
    py::dict d;
    for (const auto& [k, v] : m) d[py::make_tuple(k.first, k.second)] = v;
    return d;
}

py::dict space_dims(const OperatorSpace& s) {
    py::dict d;
    auto [e, o] = s.parity_dims();
    d["dim"] = s.dim();
    d["even"] = e;
    d["odd"] = o;
    return d;
}

}  // namespace

PYBIND11_MODULE(_jtkk, m) {
    m.doc() = "Exact Jordan superalgebras, structure algebras and TKK constructions";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<AlgebraError>(m, "AlgebraError", PyExc_ValueError);
    py::register_exception<CatalogError>(m, "CatalogError", PyExc_KeyError);

    py::class_<SuperAlgebra>(m, "Algebra")
        .def_property_readonly("name", &SuperAlgebra::name)
        .def_property_readonly("kind", [](const SuperAlgebra& a) { return to_string(a.kind()); })
        .def_property_readonly("dim", &SuperAlgebra::dim)
        .def_property_readonly("parities", &SuperAlgebra::parities)
        .def_property_readonly("zdegrees", &SuperAlgebra::zdegrees)
        .def("product", [](const SuperAlgebra& a, std::size_t i, std::size_t j) {
            if (i >= a.dim() || j >= a.dim()) throw py::index_error("basis index out of range");
            py::dict d;
            for (const auto& [k, c] : a.product(i, j)) d[py::int_(k)] = fraction(c);
            return d;
        })
        .def("multiply", [](const SuperAlgebra& a, py::sequence x, py::sequence y) {
            Vec vx, vy;
            for (auto h : x) vx.push_back(rational(h));
            for (auto h : y) vy.push_back(rational(h));
            if (vx.size() != a.dim() || vy.size() != a.dim()) throw py::value_error("vector length must equal dim");
            return fractions(a.product(vx, vy));
        })
        .def("entries", [](const SuperAlgebra& a) {
            py::list out;
            for (const auto& e : a.entries()) out.append(py::make_tuple(e.i, e.j, e.k, fraction(e.coeff)));
            return out;
        })
        .def("graded_dims", [](const SuperAlgebra& a) { return graded(graded_dims(a)); })
        .def("parity_dims", [](const SuperAlgebra& a) { return parity_dims(a); })
        .def("is_lie", [](const SuperAlgebra& a) { return check_lie(a).pass; })
        .def("is_jordan", [](const SuperAlgebra& a) {
            return check_supercommutative(a).pass && check_jordan_identity(a).pass;
        })
        .def("to_text", [](const SuperAlgebra& a) { return save(to_spec(a)); })
        .def_static("from_text", [](const std::string& text) { return from_spec(load(text)); })
        .def("__repr__", [](const SuperAlgebra& a) {
            return "<Algebra " + a.name() + " dim " + std::to_string(a.dim()) + ">";
        });

    py::class_<TkkAlgebra>(m, "Tkk")
        .def_readonly("algebra", &TkkAlgebra::lie)
        .def_readonly("source", &TkkAlgebra::source)
        .def_property_readonly("graded_dims", &TkkAlgebra::graded_dims)
        .def_property_readonly("dim", &TkkAlgebra::dim)
        .def_property_readonly("origin", [](const TkkAlgebra& t) {
            std::vector<std::string> out;
            for (auto o : t.origin) out.push_back(to_string(o));
            return out;
        });

    m.def("jordan_names", [] {
        std::vector<std::string> out;
        for (const auto& i : jordan_catalog_info()) out.push_back(i.name);
        return out;
    });
    m.def("lie_names", [] {
        std::vector<std::string> out;
        for (const auto& i : lie_catalog_info()) out.push_back(i.name);
        return out;
    });
    m.def("shipped_jordan", &shipped_jordan_entries);
    m.def("shipped_lie", &shipped_lie_entries);

    m.def("algebra", [](const std::string& source) {
        Source s = load_source(source);
        return s.jordan ? s.jordan->base() : *s.lie;
    }, py::arg("source"), "Catalog name or AlgebraSpec file.");
    m.def("unit", [](const std::string& source) -> py::object {
        auto u = jordan_of(source).unit();
        if (!u) return py::none();
        return fractions(*u);
    });
    m.def("structure_dims", [](const std::string& source) {
        const SuperAlgebra v = jordan_of(source).base();
        JordanPair p = JordanPair::doubled(v);
        py::dict d;
        d["der"] = space_dims(der_algebra(v));
        d["inn"] = space_dims(inn_algebra(v));
        d["str"] = space_dims(str_algebra(v));
        d["istr"] = space_dims(istr_algebra(v));
        d["istr_tilde"] = space_dims(istr_tilde(v));
        d["str_w"] = space_dims(str_w(v));
        d["pair_der"] = space_dims(pair_der(p));
        d["pair_inn"] = space_dims(pair_inn(p));
        return d;
    });
    m.def("tkk", [](const std::string& source, const std::string& construction) {
        return build(jordan_of(source), parse_construction(construction));
    }, py::arg("source"), py::arg("construction") = "ko");
    m.def("out_dims", [](const SuperAlgebra& g) {
        DerTower t = lie_der_tower(g);
        py::dict d;
        for (const auto& [k, v] : t.out_dims) d[py::make_tuple(k.first, k.second)] = v;
        return d;
    }, "Outer derivation dims keyed by (shift, parity).");
    m.def("fingerprint", [](const SuperAlgebra& g) {
        Fingerprint f = fingerprint(g);
        py::dict d;
        d["graded"] = graded(f.graded);
        d["parity"] = f.parity;
        d["center"] = f.center;
        d["derived"] = f.derived;
        d["out"] = f.out;
        return d;
    });
    m.def("verify", [](const std::string& source) { return report_dict(verify_source(load_source(source))); });
    m.def("dims_report", [](const std::string& source) { return report_dict(dims_report(jordan_of(source))); });
    m.def("export_text", [](const std::string& source, const std::string& construction) {
        TkkAlgebra t = build(jordan_of(source), parse_construction(construction));
        return save(to_spec(t.lie, {{"construction", construction}, {"source", source}}));
    });
}
