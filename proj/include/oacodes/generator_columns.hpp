#ifndef OACODES_GENERATOR_COLUMNS_HPP
#define OACODES_GENERATOR_COLUMNS_HPP

#include <vector>

namespace oacodes {

enum class Fold {
    none,
    mod2,  // level l -> l mod 2
};

/// Columns of a linear construction over GF(s): n vectors in GF(s)^k.
/// Column j of the array they generate holds <x, columns[j]> for each
/// message x, post-composed with the fold map where annotated.
struct GeneratorColumns {
    int s = 2;  // field order
    int k = 1;  // message dimension
    std::vector<std::vector<int>> columns;
    std::vector<Fold> folds;  // one per column; empty means all none

    int n() const { return static_cast<int>(columns.size()); }
    Fold fold_of(int j) const { return folds.empty() ? Fold::none : folds[j]; }
    bool any_fold() const {
        for (Fold f : folds)
            if (f != Fold::none) return true;
        return false;
    }
};

}  // namespace oacodes

#endif
