#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "aronberner/battery.hpp"
#include "aronberner/catalog.hpp"
#include "aronberner/limits.hpp"
#include "aronberner/tensor.hpp"

namespace py = pybind11;
using namespace aronberner;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

template <std::size_t Arity>
MultilinearTensor<Arity> from_array(const Array& a, const Signature& sig) {
    if (a.ndim() != static_cast<py::ssize_t>(Arity + 1)) {
        throw std::invalid_argument("expected an array with " + std::to_string(Arity + 1) + " axes");
    }
    typename MultilinearTensor<Arity>::Shape dims{};
    for (std::size_t k = 0; k <= Arity; ++k) dims[k] = static_cast<std::size_t>(a.shape(k));
    return MultilinearTensor<Arity>(dims, std::vector<double>(a.data(), a.data() + a.size()), sig);
}

template <std::size_t Arity>
Array to_array(const MultilinearTensor<Arity>& t) {
    std::vector<py::ssize_t> shape(t.dims().begin(), t.dims().end());
    Array out(shape);
    std::copy(t.entries().begin(), t.entries().end(), out.mutable_data());
    return out;
}

Signature bilinear_x_y_s() { return Signature::bilinear(Role::X, Role::Y, Role::S); }
Signature bilinear_s_z_w() { return Signature::bilinear(Role::S, Role::Z, Role::W); }

py::dict limit_dict(const LimitResult& r) {
    py::dict d;
    d["values"] = r.value ? py::cast(*r.value) : py::none();
    d["status"] = to_string(r.status);
    d["stabilization"] = r.stabilization_index;
    d["failure"] = r.failure;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Adjoint and flip calculus of multilinear maps";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<ExtensionOrder>(m, "ExtensionOrder")
        .def_static("from_letters", &ExtensionOrder::from_letters)
        .def_property_readonly("letters", &ExtensionOrder::letters)
        .def_property_readonly("greek", &ExtensionOrder::greek)
        .def("__repr__", [](const ExtensionOrder& o) { return "ExtensionOrder('" + o.letters() + "')"; })
        .def("__eq__", [](const ExtensionOrder& a, const ExtensionOrder& b) { return a == b; });

    m.def(
        "word_signature", [](const std::string& w) { return to_string(word_signature(Signature::trilinear(), Word::parse(w))); },
        py::arg("word"), "Printed signature of f^word for f: X x Y x Z -> W.");
    m.def(
        "word_permutation", [](const std::string& w) { return word_to_axis_permutation(Word::parse(w)).axes; },
        py::arg("word"), "Axis permutation: result axis a holds original axis perm[a].");
    m.def(
        "extension_order", [](const std::string& w) { return extension_order(Word::parse(w)); }, py::arg("word"));
    m.def(
        "canonical_word", [](const std::string& letters) { return canonical_word(ExtensionOrder::from_letters(letters)).letters(); },
        py::arg("order"));
    m.def(
        "flip_compose",
        [](char a, char b) -> std::string {
            const auto as_element = [](char c) -> FlipOrIdentity {
                return c == '1' ? FlipOrIdentity{} : FlipOrIdentity{Flip::from_letter(c)};
            };
            const auto product = flip_compose(as_element(a), as_element(b));
            return product ? std::string(1, product->name) : "1";
        },
        py::arg("first"), py::arg("second"), "Group element 'apply first, then second'; '1' is the identity.");

    m.def(
        "apply_word",
        [](const Array& a, const std::string& w) -> Array {
            if (a.ndim() == 4) return to_array(apply_word(from_array<3>(a, Signature::trilinear()), Word::parse(w)));
            if (a.ndim() == 3) return to_array(apply_word(from_array<2>(a, bilinear_x_y_s()), Word::parse(w)));
            throw std::invalid_argument("expected a bilinear (3-axis) or tri-linear (4-axis) array");
        },
        py::arg("tensor"), py::arg("word"));
    m.def(
        "compose_bilinear",
        [](const Array& g, const Array& mm) {
            return to_array(compose_bilinear(from_array<2>(g, bilinear_s_z_w()), from_array<2>(mm, bilinear_x_y_s())));
        },
        py::arg("g"), py::arg("m"), "f(x, y, z) = g(m(x, y), z)");
    m.def(
        "check_i_extension_factorization",
        [](const Array& g, const Array& mm) {
            return check_i_extension_factorization(from_array<2>(g, bilinear_s_z_w()), from_array<2>(mm, bilinear_x_y_s()));
        },
        py::arg("g"), py::arg("m"));
    m.def(
        "check_r_extension_factorization",
        [](const Array& g, const Array& mm) {
            return check_r_extension_factorization(from_array<2>(g, bilinear_s_z_w()), from_array<2>(mm, bilinear_x_y_s()));
        },
        py::arg("g"), py::arg("m"));
    m.def(
        "check_j_extension_factorization",
        [](const Array& g, const Array& mm) {
            return check_j_extension_factorization(from_array<2>(g, bilinear_s_z_w()), from_array<2>(mm, bilinear_x_y_s()));
        },
        py::arg("g"), py::arg("m"));
    m.def(
        "check_mixed_word_identities",
        [](const Array& a) { return check_mixed_word_identities(from_array<3>(a, Signature::trilinear())); },
        py::arg("tensor"));

    m.def(
        "run_identity_battery",
        [](const std::array<std::size_t, 4>& dims, std::uint64_t seed, std::size_t trials) {
            py::dict out;
            for (const auto& t : run_identity_battery(dims, seed, trials).tallies) out[py::str(t.name)] = py::make_tuple(t.passed, t.total);
            return out;
        },
        py::arg("dims"), py::arg("seed") = 1, py::arg("trials") = 100, "Identity name -> (passed, total).");

    m.def("example_names", &example_names);
    m.def(
        "six_extensions",
        [](const std::string& name, std::size_t truncation, std::size_t horizon, double tol) {
            const auto spec = example_by_name(name);
            const auto report = six_extensions(spec.sequence_instance, spec.probe_nets(), LimitParams{truncation, horizon, tol});
            py::dict out;
            out["example"] = report.map_name;
            out["functionals"] = report.functionals;
            py::dict primary;
            for (const auto& order : all_extension_orders()) primary[py::str(order.letters())] = limit_dict(report.primary(order));
            out["primary"] = primary;
            out["classification"] = to_string(report.verdict.classification);
            if (report.verdict.witness) {
                out["witness"] = py::make_tuple(report.verdict.witness->first.letters(),
                                                report.verdict.witness->second.letters(), report.verdict.witness->probe);
            } else {
                out["witness"] = py::none();
            }
            out["extension_triples_consistent"] =
                report.all_succeeded() ? py::cast(extension_triples_consistent(report)) : py::none();
            return out;
        },
        py::arg("example"), py::arg("truncation") = 50, py::arg("horizon") = 10, py::arg("tol") = 1e-9);
}
