#ifndef OACODES_CODES_HPP
#define OACODES_CODES_HPP

#include <string>

#include "json.hpp"
#include "oacodes/array.hpp"
#include "oacodes/generator_columns.hpp"

namespace oacodes {

enum class CodeClass {
    MDS,
    AMDS_only,
    NMDS,
    m_MDS,
    other,
};

/// Parameters, dual parameters, Singleton defects and classification of
/// the linear code generated by a set of columns.
struct CodeReport {
    int s = 2;
    int n = 0;
    int k = 0;
    int d = 0;
    int dual_k = 0;
    int dual_d = 0;
    int defect = 0;       // S = n - k + 1 - d
    int dual_defect = 0;  // S_dual = k + 1 - dual_d
    CodeClass cls = CodeClass::other;
    int m = 0;  // defect value when cls == m_MDS
    bool almost_extremal = false;
    bool self_dual = false;

    std::string classification() const;
    nlohmann::json to_json() const;
};

/// n, k and d only (d by weight enumeration over the s^k - 1 nonzero
/// messages). Throws RankDeficient when the columns do not span a
/// k-dimensional code.
CodeReport code_params(const GeneratorColumns& G);

/// Generator of the dual code (dimension n - k), via the null space of
/// the k x n generator matrix.
GeneratorColumns dual_generator(const GeneratorColumns& G);

/// Full report. The dual distance is computed twice, by dual weight
/// enumeration and as max_strength + 1 of the generated array; the two
/// must agree.
CodeReport classify(const GeneratorColumns& G);

/// Generator recovered from an array whose rows form a linear code:
/// single prime-power level, distinct rows, row rank r with s^r = N.
GeneratorColumns generator_from_array(const OrthogonalArray& A);

}  // namespace oacodes

#endif
