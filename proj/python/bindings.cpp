#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "oacodes/cli.hpp"
#include "oacodes/codes.hpp"
#include "oacodes/construct.hpp"
#include "oacodes/gf.hpp"
#include "oacodes/quantum.hpp"
#include "oacodes/reproduce.hpp"
#include "oacodes/threads.hpp"

namespace py = pybind11;
using namespace oacodes;

namespace {

OrthogonalArray array_from_rows(const std::vector<int>& levels, const std::vector<std::vector<int>>& rows) {
    if (rows.empty()) throw std::invalid_argument("need at least one row");
    OrthogonalArray A(static_cast<int64_t>(rows.size()), static_cast<int>(levels.size()), levels);
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != levels.size()) throw std::invalid_argument("row length must match level count");
        for (size_t c = 0; c < levels.size(); ++c) A.set(static_cast<int64_t>(r), static_cast<int>(c), rows[r][c]);
    }
    A.validate();
    return A;
}

std::vector<std::vector<int>> array_rows(const OrthogonalArray& A) {
    std::vector<std::vector<int>> rows(A.runs, std::vector<int>(A.cols));
    for (int64_t r = 0; r < A.runs; ++r)
        for (int c = 0; c < A.cols; ++c) rows[r][c] = A.at(r, c);
    return rows;
}

GeneratorColumns make_generator(int s, const std::vector<std::vector<int>>& columns) {
    if (columns.empty()) throw std::invalid_argument("need at least one column");
    GeneratorColumns G;
    G.s = s;
    G.k = static_cast<int>(columns[0].size());
    G.columns = columns;
    G.folds.assign(columns.size(), Fold::none);
    return G;
}

OrthogonalPartition make_partition(const std::vector<std::vector<int64_t>>& blocks, int k0) {
    OrthogonalPartition P;
    P.blocks = blocks;
    P.block_strength = k0;
    return P;
}

}  // namespace

PYBIND11_MODULE(_oacodes, m) {
    m.doc() = "orthogonal arrays, exact verification, code classification and quantum certificates";

    py::register_exception<NotPrimePower>(m, "NotPrimePower", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "OaParseError", PyExc_ValueError);
    py::register_exception<ShapeMismatch>(m, "ShapeMismatch", PyExc_ValueError);
    py::register_exception<RowCountMismatch>(m, "RowCountMismatch", PyExc_ValueError);
    py::register_exception<OddLevels>(m, "OddLevels", PyExc_ValueError);
    py::register_exception<Unconstructible>(m, "Unconstructible", PyExc_ValueError);
    py::register_exception<RankDeficient>(m, "RankDeficient", PyExc_ValueError);
    py::register_exception<InvalidDistance>(m, "InvalidDistance", PyExc_ValueError);
    py::register_exception<PartitionInvalid>(m, "PartitionInvalid", PyExc_ValueError);
    py::register_exception<DistanceUnavailable>(m, "DistanceUnavailable", PyExc_RuntimeError);
    py::register_exception<NotIrredundant>(m, "NotIrredundant", PyExc_ValueError);
    py::register_exception<InsufficientStrength>(m, "InsufficientStrength", PyExc_ValueError);
    py::register_exception<DimensionCap>(m, "DimensionCap", PyExc_RuntimeError);

    py::class_<OrthogonalArray>(m, "OrthogonalArray")
        .def_readonly("runs", &OrthogonalArray::runs)
        .def_readonly("cols", &OrthogonalArray::cols)
        .def_readonly("levels", &OrthogonalArray::levels)
        .def_readonly("provenance", &OrthogonalArray::provenance)
        .def_property_readonly("verified_strength",
                               [](const OrthogonalArray& A) { return A.verified_strength; })
        .def("at", &OrthogonalArray::at, py::arg("row"), py::arg("col"))
        .def("rows", &array_rows)
        .def("__repr__", [](const OrthogonalArray& A) {
            return "<OrthogonalArray " + std::to_string(A.runs) + "x" + std::to_string(A.cols) + ">";
        });

    m.def("array_from_rows", &array_from_rows, py::arg("levels"), py::arg("rows"));
    m.def("read_oa_file", &read_oa_file, py::arg("path"));
    m.def("write_oa_file", &write_oa_file, py::arg("path"), py::arg("array"));

    m.def("set_thread_count", &set_thread_count, py::arg("n"));

    // constructions
    m.def(
        "ic_oa", [](int s, int mm) { return linear_oa(ic_saturated_columns(s, mm)); }, py::arg("s"), py::arg("m"));
    m.def(
        "vandermonde_oa", [](int s, int k, int n) { return linear_oa(vandermonde_columns(s, k, n)); }, py::arg("s"),
        py::arg("k"), py::arg("n"));
    m.def(
        "linear_oa", [](int s, const std::vector<std::vector<int>>& cols) { return linear_oa(make_generator(s, cols)); },
        py::arg("s"), py::arg("columns"), "columns are length-k vectors over GF(s)");
    m.def("repetition_oa", &repetition_oa, py::arg("s"), py::arg("n"));
    m.def("kronecker_product", &kronecker_product, py::arg("a"), py::arg("b"));
    m.def("expansive_replace", &expansive_replace, py::arg("a"), py::arg("col"), py::arg("b"));
    m.def("fold_mod2", &fold_mod2, py::arg("array"), py::arg("col"));

    // verification
    m.def("check_strength", &check_strength, py::arg("array"), py::arg("t"));
    m.def("max_strength", &max_strength, py::arg("array"));
    m.def("min_distance", &min_distance, py::arg("array"), py::arg("pair_budget") = kDefaultPairBudget);
    m.def(
        "is_irredundant", [](const OrthogonalArray& A, int k) { return is_irredundant(A, k); }, py::arg("array"),
        py::arg("k"));
    m.def(
        "verify_partition",
        [](const OrthogonalArray& A, const std::vector<std::vector<int64_t>>& blocks, int k0) {
            return verify_partition(A, make_partition(blocks, k0));
        },
        py::arg("array"), py::arg("blocks"), py::arg("k0"));

    // classification and certificates, reported as JSON strings
    m.def(
        "classify_generator_json",
        [](int s, const std::vector<std::vector<int>>& cols) { return classify(make_generator(s, cols)).to_json().dump(); },
        py::arg("s"), py::arg("columns"));
    m.def(
        "classify_array_json",
        [](const OrthogonalArray& A) { return classify(generator_from_array(A)).to_json().dump(); }, py::arg("array"));
    m.def(
        "certify_json",
        [](const OrthogonalArray& A, const std::vector<std::vector<int64_t>>& blocks, int k0, int64_t budget) {
            return certify_qecc(A, make_partition(blocks, k0), budget).to_json().dump();
        },
        py::arg("array"), py::arg("blocks"), py::arg("k0"), py::arg("pair_budget") = kDefaultPairBudget);
    m.def(
        "certify_trivial_json",
        [](const OrthogonalArray& A, int64_t budget) {
            return certify_qecc(A, trivial_partition(A, max_strength(A)), budget).to_json().dump();
        },
        py::arg("array"), py::arg("pair_budget") = kDefaultPairBudget);
    m.def(
        "build_nqmds_json",
        [](int s, int k) {
            auto [A, cert] = build_nqmds(s, k);
            return py::make_tuple(A, cert.to_json().dump());
        },
        py::arg("s"), py::arg("k"));
    m.def("quantum_singleton_bound",
          [](const std::vector<int>& levels, int d) {
              return quantum_singleton_bound(levels, static_cast<int>(levels.size()), d);
          },
          py::arg("levels"), py::arg("d"));

    // uniform states
    m.def(
        "uniform_state_kets",
        [](const OrthogonalArray& A, int k) { return uniform_state(A, k).kets; }, py::arg("array"), py::arg("k"));
    m.def(
        "reduction_check",
        [](const std::vector<std::vector<int32_t>>& kets, const std::vector<int>& dims, int k) {
            BasisState psi;
            psi.kets = kets;
            psi.dims = dims;
            return reduction_check(psi, k);
        },
        py::arg("kets"), py::arg("dims"), py::arg("k"));
    m.def(
        "reduction_check_array",
        [](const OrthogonalArray& A, int k) { return reduction_check(uniform_state(A, k), k); }, py::arg("array"),
        py::arg("k"));

    // reproduction
    m.def("reproduce_targets", &reproduce_targets);
    m.def(
        "reproduce_json",
        [](const std::string& target) {
            ReproduceResult r = run_reproduce(target);
            return py::make_tuple(r.ok, r.report.dump());
        },
        py::arg("target"));

    // field sanity surface
    m.def(
        "field_tables",
        [](int q) {
            GaloisField F = build_field(q);
            std::vector<std::vector<int>> add(q, std::vector<int>(q)), mul(q, std::vector<int>(q));
            for (int a = 0; a < q; ++a)
                for (int b = 0; b < q; ++b) {
                    add[a][b] = F.add(a, b);
                    mul[a][b] = F.mul(a, b);
                }
            return py::make_tuple(add, mul);
        },
        py::arg("q"));
}
