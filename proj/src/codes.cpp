#include "oacodes/codes.hpp"

#include <stdexcept>

#include "oacodes/construct.hpp"
#include "oacodes/gf.hpp"

namespace oacodes {

namespace {

constexpr int64_t kWeightEnumCap = int64_t{1} << 24;

FieldMatrix generator_matrix(const GeneratorColumns& G) {
    FieldMatrix M(G.s, G.k, G.n());
    for (int j = 0; j < G.n(); ++j)
        for (int i = 0; i < G.k; ++i) M.at(i, j) = G.columns[j][i];
    return M;
}

void require_enumerable(const GeneratorColumns& G) {
    int64_t total = 1;
    for (int i = 0; i < G.k; ++i) {
        total *= G.s;
        if (total > kWeightEnumCap)
            throw BudgetExceeded("weight enumeration over " + std::to_string(G.s) + "^" + std::to_string(G.k) +
                                 " messages exceeds the 2^24 cap");
    }
}

void require_full_rank(const GeneratorColumns& G) {
    if (G.any_fold()) throw std::invalid_argument("code extraction expects unfolded generator columns");
    const int r = rank(generator_matrix(G));
    if (r < G.k)
        throw RankDeficient("generator has rank " + std::to_string(r) + " < k = " + std::to_string(G.k) +
                            "; the message space over-counts codewords");
}

}  // namespace

std::string CodeReport::classification() const {
    switch (cls) {
        case CodeClass::MDS:
            return "MDS";
        case CodeClass::AMDS_only:
            return "AMDS-only";
        case CodeClass::NMDS:
            return "NMDS";
        case CodeClass::m_MDS:
            return std::to_string(m) + "-MDS";
        case CodeClass::other:
            return "other";
    }
    return "other";
}

nlohmann::json CodeReport::to_json() const {
    return nlohmann::json{
        {"schema", "oa-codes/1"},
        {"type", "code_report"},
        {"field", s},
        {"n", n},
        {"k", k},
        {"d", d},
        {"dual_k", dual_k},
        {"dual_d", dual_d},
        {"defect", defect},
        {"dual_defect", dual_defect},
        {"classification", classification()},
        {"almost_extremal", almost_extremal},
        {"self_dual", self_dual},
    };
}

CodeReport code_params(const GeneratorColumns& G) {
    require_full_rank(G);
    require_enumerable(G);
    CodeReport r;
    r.s = G.s;
    r.n = G.n();
    r.k = G.k;
    r.d = linear_min_weight(G);
    return r;
}

GeneratorColumns dual_generator(const GeneratorColumns& G) {
    require_full_rank(G);
    FieldMatrix basis = null_space(generator_matrix(G));
    GeneratorColumns D;
    D.s = G.s;
    D.k = basis.rows;
    D.columns.assign(G.n(), std::vector<int>(basis.rows));
    for (int j = 0; j < G.n(); ++j)
        for (int i = 0; i < basis.rows; ++i) D.columns[j][i] = basis.at(i, j);
    D.folds.assign(G.n(), Fold::none);
    return D;
}

CodeReport classify(const GeneratorColumns& G) {
    CodeReport r = code_params(G);
    const int n = r.n;
    const int k = r.k;

    GeneratorColumns dual = dual_generator(G);
    r.dual_k = dual.k;
    if (dual.k == 0) {
        r.dual_d = n + 1;  // [n, n, 1] duals are empty; keeps Singleton equality
    } else {
        require_enumerable(dual);
        r.dual_d = linear_min_weight(dual);
    }

    // independent route: strength of the generated array, counted from scratch
    OrthogonalArray A = linear_oa(G);
    A.verified_strength.reset();
    const int t = max_strength(A);
    if (t + 1 != r.dual_d)
        throw std::logic_error("dual distance mismatch: weight enumeration gives " + std::to_string(r.dual_d) +
                               ", strength search gives " + std::to_string(t + 1));

    r.defect = n - k + 1 - r.d;
    r.dual_defect = k + 1 - r.dual_d;
    if (r.defect < 0 || r.dual_defect < 0) throw std::logic_error("negative Singleton defect");

    if (r.defect == 0) {
        r.cls = CodeClass::MDS;
    } else if (r.defect == 1 && r.dual_defect == 1) {
        r.cls = CodeClass::NMDS;
    } else if (r.defect >= 2 && r.defect == r.dual_defect) {
        r.cls = CodeClass::m_MDS;
        r.m = r.defect;
    } else if (r.defect == 1) {
        r.cls = CodeClass::AMDS_only;
    } else {
        r.cls = CodeClass::other;
    }

    // [2q+kappa, kappa+1, 2q-1] over GF(q); q comes from the field order
    r.almost_extremal = r.cls == CodeClass::NMDS && n == 2 * r.s + (k - 1) && r.d == 2 * r.s - 1;

    if (k * 2 == n) {
        FieldMatrix dm(G.s, dual.k, n);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < dual.k; ++i) dm.at(i, j) = dual.columns[j][i];
        r.self_dual = same_row_space(generator_matrix(G), dm);
    }
    return r;
}

GeneratorColumns generator_from_array(const OrthogonalArray& A) {
    if (!A.pure_level()) throw std::invalid_argument("linear code extraction needs a single-level array");
    const int s = A.levels[0];
    cached_field(s);  // rejects non prime powers
    if (has_duplicate_rows(A)) throw std::invalid_argument("rows are not distinct, not a linear code");

    FieldMatrix M(s, static_cast<int>(A.runs), A.cols);
    for (int64_t r = 0; r < A.runs; ++r)
        for (int c = 0; c < A.cols; ++c) M.at(static_cast<int>(r), c) = A.at(r, c);
    std::vector<int> pivots = rref(M);
    const int k = static_cast<int>(pivots.size());

    int64_t expect = 1;
    for (int i = 0; i < k; ++i) expect *= s;
    if (expect != A.runs)
        throw std::invalid_argument("rows do not form a linear code: rank " + std::to_string(k) + " but " +
                                    std::to_string(A.runs) + " rows");

    GeneratorColumns G;
    G.s = s;
    G.k = k;
    G.columns.assign(A.cols, std::vector<int>(k));
    for (int j = 0; j < A.cols; ++j)
        for (int i = 0; i < k; ++i) G.columns[j][i] = M.at(i, j);
    G.folds.assign(A.cols, Fold::none);
    return G;
}

}  // namespace oacodes
