#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "groth/harness.hpp"

namespace py = pybind11;
using namespace groth;

namespace {

py::dict gco_dict(const Involution& z) {
    py::dict d;
    for (const auto& [w, c] : gco(z).values) d[py::str(w.str())] = py::int_(py::str(c.str()));
    return d;
}

std::vector<std::string> perm_strs(const std::set<Permutation>& ws) {
    std::vector<std::string> out;
    for (const auto& w : ws) out.push_back(w.str());
    return out;
}

}  // namespace

PYBIND11_MODULE(_groth, m) {
    m.doc() = "Exact Grothendieck, involution, orthogonal and symplectic "
              "Grothendieck polynomial computations";

    py::register_exception<MathError>(m, "MathError");
    py::register_exception<InternalError>(m, "InternalError");

    py::class_<MultiPoly>(m, "MultiPoly")
        .def(py::init([](const std::string& json) { return poly_from_json(json); }))
        .def("__str__", [](const MultiPoly& p) { return to_text(p); })
        .def("__repr__", [](const MultiPoly& p) { return "MultiPoly(" + to_text(p) + ")"; })
        .def("__eq__", [](const MultiPoly& p, const MultiPoly& q) { return p == q; })
        .def("__add__", [](const MultiPoly& p, const MultiPoly& q) { return p + q; })
        .def("__sub__", [](const MultiPoly& p, const MultiPoly& q) { return p - q; })
        .def("__mul__", [](const MultiPoly& p, const MultiPoly& q) { return p * q; })
        .def("is_zero", &MultiPoly::is_zero)
        .def("num_terms", &MultiPoly::size)
        .def("to_json", [](const MultiPoly& p) { return to_json(p); })
        .def("graded_degree", [](const MultiPoly& p) { return graded_degree(p); });

    m.def("var", [](int i) { return MultiPoly::var(i); }, py::arg("i"));
    m.def("beta", [](int k) { return MultiPoly::beta(k); }, py::arg("k") = 1);
    m.def("constant", [](long c) { return MultiPoly::constant(c); });
    m.def("oplus", &oplus);
    m.def("divdiff", &divdiff);
    m.def("beta_divdiff", &beta_divdiff);
    m.def("isobaric", &isobaric);
    m.def("shift_down_poly", &shift_down_poly);

    py::class_<Permutation>(m, "Permutation")
        .def(py::init([](const std::string& s) { return parse_permutation(s); }))
        .def(py::init([](const std::vector<int>& win) { return Permutation::from_window(win); }))
        .def("__str__", &Permutation::str)
        .def("__repr__", [](const Permutation& w) { return "Permutation(" + w.str() + ")"; })
        .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; })
        .def("__call__", &Permutation::operator())
        .def("window", &Permutation::window)
        .def("inverse", &Permutation::inverse)
        .def("length", &Permutation::length)
        .def("des_r", &Permutation::des_r)
        .def("code", [](const Permutation& w) { return lehmer_code(w); })
        .def("is_vexillary", [](const Permutation& w) { return is_vexillary(w); });

    py::class_<Involution>(m, "Involution")
        .def(py::init([](const std::string& s) { return parse_involution(s); }))
        .def("__str__", &Involution::str)
        .def("__repr__", [](const Involution& z) { return "Involution(" + z.str() + ")"; })
        .def("__eq__", [](const Involution& a, const Involution& b) { return a == b; })
        .def("cycles", &Involution::cycles)
        .def("is_vexillary", [](const Involution& z) { return is_vexillary(z); })
        .def("ell_inv", [](const Involution& z) { return inv_stats(z).ell_inv; })
        .def("shape", [](const Involution& z) { return inv_shape(z); });

    py::class_<GrothExpansion>(m, "GrothExpansion")
        .def("__str__", [](const GrothExpansion& e) { return to_text(e); })
        .def("__eq__", [](const GrothExpansion& a, const GrothExpansion& b) { return a == b; })
        .def("to_json", [](const GrothExpansion& e) { return to_json(e); })
        .def("support", [](const GrothExpansion& e) { return perm_strs(e.support()); })
        .def("eval", [](const GrothExpansion& e) { return eval(e); });

    m.def("grothendieck", [](const Permutation& w) { return grothendieck(w); },
          "Grothendieck polynomial of a permutation");
    m.def("groth_oracle", &groth_oracle);
    m.def("expand", &expand, "expansion in the Grothendieck basis");
    m.def("invgroth", &invgroth);
    m.def("ortho_groth", &ortho_groth);
    m.def("qd_formula", &qd_formula);
    m.def("ivex_formula", &ivex_formula);
    m.def("gco", &gco_dict, "coefficient function of the basis expansion");
    m.def("binv", [](const Involution& z) { return perm_strs(binv(z)); });
    m.def("binv_plus", [](const Involution& z) {
        auto plus = binv_plus(z);
        py::dict d;
        std::vector<std::string> members;
        for (const auto& w : plus.members) members.push_back(w.str());
        d["members"] = members;
        d["edges"] = plus.edges;
        d["connected"] = plus.connected;
        return d;
    });
    m.def("symp_groth", [](const std::string& cycles, int n) {
        return symp_groth(FpfInvolution(n, parse_involution(cycles)));
    });
    m.def("shiftable_json",
          [](const Involution& z) { return shiftable_to_json(shiftable_data(z)); });
    m.def("is_locally_noncrossing", &is_locally_noncrossing);
    m.def("igrassmannian", &igrassmannian, py::arg("mu"), py::arg("n"));
    m.def("stable_truncation", [](const Involution& z, const std::string& kind, int steps,
                                  int vars) {
        return stable_truncation(z, kind == "GQ" ? StableKind::GQ : StableKind::GP, steps, vars);
    });
    m.def("verify", [](const std::string& theorem, int n_max, int jobs) {
        auto r = run_verify(theorem, n_max, jobs);
        py::dict d;
        d["theorem"] = r.theorem;
        d["n_max"] = r.n_max;
        d["cases_checked"] = r.cases_checked;
        d["failures"] = r.failures;
        d["passed"] = r.passed();
        return d;
    }, py::arg("theorem"), py::arg("n_max"), py::arg("jobs") = 1);
    m.def("values_table", [](int n) {
        std::vector<py::int_> out;
        for (const auto& c : values_table(n)) out.push_back(py::int_(py::str(c.str())));
        return out;
    });
    m.def("export_binv_plus_dot", &export_binv_plus_dot);
}
