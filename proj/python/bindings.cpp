#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dlower/corpus.hpp"
#include "dlower/json_io.hpp"
#include "dlower/lowering.hpp"
#include "dlower/qracah.hpp"
#include "dlower/verify.hpp"

namespace py = pybind11;
using namespace dlower;

namespace {

// Scalars cross the boundary as "p/q" strings; results as JSON text.
Data make_data(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    Json j{{"a", a}, {"b", b}};
    return data_from_json(j);
}

QRacahParams make_params(const std::string& q, const std::string& a, const std::string& b, std::size_t n) {
    return {parse_scalar(q), parse_scalar(a), parse_scalar(b), n};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact double lowering computations";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<InternalDisagreement>(m, "InternalDisagreement", PyExc_RuntimeError);

    m.def("parse_scalar", [](const std::string& s) { return parse_scalar(s).to_string(); });

    m.def("classify", [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
        return to_json(cross_check(make_data(a, b))).dump();
    }, py::arg("a"), py::arg("b"));

    m.def("verify", [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
        return to_json(verify_data(make_data(a, b))).dump();
    }, py::arg("a"), py::arg("b"));

    m.def("lowering_dim", [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
        return lowering_space(make_data(a, b)).dim;
    }, py::arg("a"), py::arg("b"));

    m.def("data_matrices", [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
        const Data d = make_data(a, b);
        Json out{{"psi", to_json(candidate_psi(d))}, {"delta", to_json(delta(d))}, {"delta_inv", to_json(delta_inv(d))}};
        return out.dump();
    }, py::arg("a"), py::arg("b"));

    m.def("qracah_matrices", [](const std::string& q, const std::string& a, const std::string& b, std::size_t n,
                                const std::string& basis) {
        const QRacahParams p = make_params(q, a, b, n);
        const Basis bs = parse_basis(basis);
        const KBM kbm = kbm_matrices(p, bs);
        Json out{{"psi", to_json(OperatorMatrix{bs, psi_hat(p)})},
                 {"K", to_json(kbm.k)},
                 {"B", to_json(kbm.b)},
                 {"M", to_json(kbm.m)},
                 {"A", to_json(a_matrix(p, bs))}};
        return out.dump();
    }, py::arg("q"), py::arg("a"), py::arg("b"), py::arg("n"), py::arg("basis") = "tau");

    m.def("qracah_suite", [](const std::string& q, const std::string& a, const std::string& b, std::size_t n) {
        return to_json(full_suite(make_params(q, a, b, n))).dump();
    }, py::arg("q"), py::arg("a"), py::arg("b"), py::arg("n"));

    m.def("gen_corpus", [](std::uint64_t seed, std::size_t count, std::size_t max_n,
                           const std::vector<std::string>& kinds, std::size_t min_n) {
        CorpusOptions opts;
        opts.seed = seed;
        opts.count = count;
        opts.max_n = max_n;
        opts.min_n = min_n;
        if (!kinds.empty()) {
            opts.kinds.clear();
            for (const auto& k : kinds) opts.kinds.push_back(parse_corpus_kind(k));
        }
        return to_json(generate_corpus(opts)).dump();
    }, py::arg("seed"), py::arg("count"), py::arg("max_n") = 10, py::arg("kinds") = std::vector<std::string>{},
       py::arg("min_n") = 3);
}
