#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gkm/generators.hpp"
#include "gkm/graph_io.hpp"
#include "gkm/selftest.hpp"

namespace py = pybind11;
using namespace gkm;

namespace {

py::int_ to_py(const BigInt& c)
{
    const std::string s = c.str();
    return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10));
}

BigInt from_py(const py::int_& c)
{
    return BigInt(py::repr(c).cast<std::string>());
}

/// A validated action together with the named classes from its file.
struct Graph
{
    ActionPtr action;
    std::map<std::string, std::vector<LaurentPoly>> classes;

    static Graph from_file(const GraphFile& g) { return Graph{make_action(g.raw), g.classes}; }

    static Graph from_example(const Example& ex)
    {
        return Graph{ex.action(), {{"f", ex.cls.base().values()}}};
    }

    const std::vector<LaurentPoly>& values(const std::string& name) const
    {
        const auto it = classes.find(name);
        if (it == classes.end())
            throw py::key_error("no class named '" + name + "'");
        return it->second;
    }

    KClass kclass(const std::string& name) const
    {
        return validate_class(action, values(name)).get<InvalidClass>();
    }

    SymplecticClass symplectic(const std::string& name) const
    {
        return as_symplectic(action, values(name)).get<InvalidClass>();
    }
};

py::list violations(const std::vector<Violation>& vs)
{
    py::list out;
    for (const auto& v : vs) {
        py::dict d;
        d["code"]    = v.code;
        d["where"]   = v.where;
        d["message"] = v.message;
        out.append(d);
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact characters, residues and reductions on GKM graphs";

    auto base = py::register_exception<Error>(m, "GkmError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<NotGeneric>(m, "NotGeneric", base.ptr());
    py::register_exception<NotPrimitive>(m, "NotPrimitive", base.ptr());
    py::register_exception<InvalidAction>(m, "InvalidAction", base.ptr());
    py::register_exception<InvalidClass>(m, "InvalidClass", base.ptr());
    py::register_exception<ZeroNotRegular>(m, "ZeroNotRegular", base.ptr());
    py::register_exception<NotRegular>(m, "NotRegular", base.ptr());

    py::class_<LaurentPoly>(m, "LaurentPoly")
        .def(py::init([](std::size_t dim, const py::dict& terms) {
                 LaurentPoly p(dim);
                 for (const auto& [k, v] : terms)
                     p.add_term(Weight(k.cast<std::vector<Coord>>()), from_py(v.cast<py::int_>()));
                 return p;
             }),
             py::arg("dim"), py::arg("terms") = py::dict())
        .def_property_readonly("dim", &LaurentPoly::dim)
        .def("terms",
             [](const LaurentPoly& p) {
                 py::dict d;
                 for (const auto& [mu, c] : p.terms())
                     d[py::tuple(py::cast(mu.coords()))] = to_py(c);
                 return d;
             })
        .def("coefficient", [](const LaurentPoly& p, const std::vector<Coord>& mu) { return to_py(p.coefficient(Weight(mu))); })
        .def("is_zero", &LaurentPoly::is_zero)
        .def("__len__", &LaurentPoly::size)
        .def("__eq__", [](const LaurentPoly& a, const LaurentPoly& b) { return a == b; })
        .def("__add__", [](const LaurentPoly& a, const LaurentPoly& b) { return a + b; })
        .def("__sub__", [](const LaurentPoly& a, const LaurentPoly& b) { return a - b; })
        .def("__mul__", [](const LaurentPoly& a, const LaurentPoly& b) { return a * b; })
        .def("__str__", [](const LaurentPoly& p) { return to_string(p); })
        .def("__repr__", [](const LaurentPoly& p) { return "LaurentPoly(" + to_string(p) + ")"; });

    py::class_<Graph>(m, "Graph")
        .def_static("from_json", [](const std::string& text) { return Graph::from_file(parse_graph(text)); })
        .def_static("load", [](const std::string& path) { return Graph::from_file(load_graph(path)); })
        .def_static("projective", [](std::size_t n) { return Graph::from_example(gen_projective(n)); },
                    "Projective space with its default symplectic class 'f'")
        .def_property_readonly("torus_dim", [](const Graph& g) { return g.action->torus_dim(); })
        .def_property_readonly("vertices", [](const Graph& g) { return g.action->vertex_names(); })
        .def_property_readonly("class_names",
                               [](const Graph& g) {
                                   std::vector<std::string> names;
                                   for (const auto& [k, v] : g.classes)
                                       names.push_back(k);
                                   return names;
                               })
        .def("values", &Graph::values, py::arg("cls"))
        .def("validate_class", [](const Graph& g, const std::string& cls) {
            return violations(validate_class(g.action, g.values(cls)).violations);
        }, py::arg("cls"))
        .def("character",
             [](const Graph& g, const std::string& cls, const std::vector<Coord>& xi, const std::string& method) {
                 const KClass f = g.kclass(cls);
                 if (method == "oracle")
                     return character_oracle(f);
                 if (method != "expand")
                     throw py::value_error("method must be 'expand' or 'oracle'");
                 return character_expand(f, polarize(g.action, LatticeVector(xi))).poly;
             },
             py::arg("cls"), py::arg("xi"), py::arg("method") = "expand")
        .def("multiplicity",
             [](const Graph& g, const std::string& cls, const std::vector<Coord>& xi, const std::vector<Coord>& alpha) {
                 return to_py(multiplicity(g.symplectic(cls), polarize(g.action, LatticeVector(xi)), Weight(alpha)));
             },
             py::arg("cls"), py::arg("xi"), py::arg("alpha"))
        .def("reduce",
             [](const Graph& g, const std::string& cls, const std::vector<Coord>& xi, const std::string& c) {
                 const SymplecticClass f = g.symplectic(cls);
                 const MomentMap mm      = symplectic_moment_map(f, LatticeVector(xi));
                 return chi_reduced(f.base(), mm, parse_rational(c));
             },
             py::arg("cls"), py::arg("xi"), py::arg("c"))
        .def("qr_check",
             [](const Graph& g, const std::string& cls, const std::vector<Coord>& xi) {
                 const QrResult r = qr_check(g.symplectic(cls), LatticeVector(xi));
                 return py::make_tuple(r.pass, r.invariant, r.reduced);
             },
             py::arg("cls"), py::arg("xi"))
        .def("to_json", [](const Graph& g) { return dump_graph(*g.action, g.classes); });

    m.def(
        "selftest",
        [](std::uint64_t seed, bool inject_corrupt) {
            SelftestOptions o;
            o.seed           = seed;
            o.inject_corrupt = inject_corrupt;
            py::list out;
            for (const auto& e : run_selftest(o)) {
                py::dict d;
                d["battery"]  = e.battery;
                d["property"] = e.property;
                d["cases"]    = e.cases;
                d["failures"] = e.failures;
                out.append(d);
            }
            return out;
        },
        py::arg("seed") = 42, py::arg("inject_corrupt") = false);
}
