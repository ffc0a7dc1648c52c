// Python bindings for the flag-variety K-theory engine. Classes and
// polynomials cross the boundary as JSON (same schemas as the CLI) or as
// the canonical text rendering; identity checks return plain dicts.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cctype>

#include "kflag/json_io.hpp"
#include "kflag/motivic.hpp"
#include "kflag/verify.hpp"

namespace py = pybind11;
using namespace kflag;

namespace {

ClassKind kind_from_string(const std::string& s) {
    if (s == "mc") return ClassKind::Mc;
    if (s == "mc_opposite") return ClassKind::McOpposite;
    if (s == "mcprime" || s == "mc_prime") return ClassKind::McPrime;
    if (s == "dual_mc") return ClassKind::DualMc;
    if (s == "schubert") return ClassKind::Schubert;
    if (s == "schubert_opposite") return ClassKind::SchubertOpposite;
    if (s == "point") return ClassKind::Point;
    if (s == "line") return ClassKind::Line;
    throw py::value_error("unknown class kind '" + s + "'");
}

OpKind tilde_kind_for(const std::string& s) {
    if (s == "schubert") return OpKind::Demazure;
    if (s == "mc") return OpKind::TDual;
    if (s == "mcprime" || s == "mc_prime") return OpKind::T;
    throw py::value_error("chi supports kinds schubert|mc|mcprime, got '" + s + "'");
}

}  // namespace

PYBIND11_MODULE(_kflag, m) {
    m.doc() = "exact torus-equivariant K-theory of flag varieties";

    py::register_exception<UnsupportedType>(m, "UnsupportedTypeError");
    py::register_exception<MismatchError>(m, "MismatchError");
    py::register_exception<PreconditionError>(m, "PreconditionError");

    py::class_<RootSystem>(m, "RootSystem")
        .def(py::init<char, int>(), py::arg("family"), py::arg("rank"))
        .def_property_readonly("rank", &RootSystem::rank)
        .def_property_readonly("family", &RootSystem::family)
        .def_property_readonly("order", &RootSystem::order)
        .def("length", &RootSystem::length, py::arg("w"))
        .def("longest", &RootSystem::longest)
        .def("identity", &RootSystem::identity)
        .def("mul", &RootSystem::mul, py::arg("u"), py::arg("v"))
        .def("inverse", &RootSystem::inverse, py::arg("w"))
        .def("bruhat_leq", &RootSystem::bruhat_leq, py::arg("u"), py::arg("w"))
        .def("reduced_word", &RootSystem::reduced_word, py::arg("w"))
        .def("element_from_word", &RootSystem::element_from_word, py::arg("word"));

    m.def(
        "cell_class_json",
        [](const RootSystem& rs, const std::string& kind, const std::vector<int>& word,
           const std::vector<int>& lam) {
            int w = rs.element_from_word(word);
            Weight lv = lam.empty() ? Weight(rs.rank(), 0) : lam;
            return kclass_to_json(class_of_kind(rs, kind_from_string(kind), w, lv), kind)
                .dump();
        },
        py::arg("rs"), py::arg("kind"), py::arg("word"),
        py::arg("lam") = std::vector<int>{},
        "fixed-point restrictions of a cell class, as a JSON string");

    m.def(
        "chi",
        [](const RootSystem& rs, const std::string& kind, const std::vector<int>& word,
           const std::vector<int>& lam) {
            int w = rs.element_from_word(word);
            RatChar c = euler_char(
                tensor(line_bundle_class(rs, lam),
                       class_of_kind(rs, kind_from_string(kind), w)));
            auto lhs = c.is_polynomial();
            CharPoly rhs = tilde_op(rs, tilde_kind_for(kind), w, lam);
            py::dict out;
            out["localization"] = lhs ? lhs->to_string() : c.to_string();
            out["operator"] = rhs.to_string();
            out["equal"] = lhs && *lhs == rhs;
            return out;
        },
        py::arg("rs"), py::arg("kind"), py::arg("word"), py::arg("lam"),
        "Euler characteristic of L_lambda twisted by a cell class, both routes");

    m.def(
        "casselman_shalika",
        [](const RootSystem& rs, const std::vector<int>& lam) {
            CsReport rep = casselman_shalika(rs, lam);
            py::dict out;
            out["t_sum"] = rep.t_sum.to_string();
            out["t_dual_sum"] = rep.t_dual_sum.to_string();
            out["t_product_equal"] = rep.t_ok;
            out["t_dual_product_equal"] = rep.t_dual_ok;
            return out;
        },
        py::arg("rs"), py::arg("lam"),
        "summed Whittaker values and their product formulas");

    m.def(
        "poincare",
        [](const RootSystem& rs, const std::vector<int>& word) {
            int w = rs.element_from_word(word);
            CharPoly bruhat = poincare_bruhat(rs, w);
            bool smooth = is_rationally_smooth(rs, w);
            py::dict out;
            out["bruhat_sum"] = bruhat.to_string(true);
            out["rationally_smooth"] = smooth;
            if (smooth)
                out["product_equal"] = poincare_product(rs, w).equals(RatChar(bruhat));
            return out;
        },
        py::arg("rs"), py::arg("word"),
        "Bruhat rank polynomial and the height-product formula");

    m.def(
        "bb_product_check",
        [](const std::string& fixture_json) {
            BBFixedPointData data = bb_data_from_json(json::parse(fixture_json));
            if (!data.valid()) throw py::value_error("fixed-point data is not valid");
            BBReport rep = bb_product_check(data);
            py::dict out;
            out["star_ok"] = rep.star_ok;
            out["product_ok"] = rep.product_ok;
            out["e2_ok"] = rep.e2_ok;
            out["specialization_ok"] = rep.specialization_ok;
            out["all_ok"] = rep.all_ok();
            return out;
        },
        py::arg("fixture_json"),
        "product-formula checks on torus-fixed-point data given as JSON");

    m.def(
        "verify",
        [](const std::string& suite, const std::string& cartan, std::uint64_t seed) {
            if (cartan.size() < 2) throw py::value_error("cartan: expected e.g. 'A2'");
            char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(cartan[0])));
            int rank = std::stoi(cartan.substr(1));
            SuiteReport rep = run_suite(suite, fam, rank, seed);
            py::dict out;
            out["report"] = rep.render();
            out["pass"] = rep.all_pass();
            return out;
        },
        py::arg("suite"), py::arg("cartan"), py::arg("seed") = 0,
        "run an identity-verification suite; returns the rendered report");
}
