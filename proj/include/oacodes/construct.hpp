#ifndef OACODES_CONSTRUCT_HPP
#define OACODES_CONSTRUCT_HPP

#include "oacodes/array.hpp"
#include "oacodes/generator_columns.hpp"

namespace oacodes {

/// Materializes the s^k x n array with entry <x, columns[j]> in column j,
/// rows ordered by message read as a base-s integer (first coordinate most
/// significant). Records the algebraic strength (largest t with every t
/// columns linearly independent) and attaches the generator as a linear hint.
OrthogonalArray linear_oa(const GeneratorColumns& G);

/// Largest t such that every t of the columns are linearly independent.
int algebraic_strength(const GeneratorColumns& G);

/// The (s^m - 1)/(s - 1) saturated strength-2 columns: unit vectors first,
/// then every vector with last nonzero coordinate 1, ordered by pivot index
/// then lexicographically by the free coefficients.
GeneratorColumns ic_saturated_columns(int s, int m);

/// Moment-curve columns (1, a, a^2, ..., a^(k-1)) over the first field
/// elements, plus (0,...,0,1) when n = s+1. Every k columns are linearly
/// independent, so the generated array has strength k and md = n-k+1.
GeneratorColumns vandermonde_columns(int s, int k, int n);

/// s rows (i, i, ..., i); strength 1, md = n. Works over any s >= 2.
OrthogonalArray repetition_oa(int s, int n);

/// Level-wise product: row (i, j) has entries a*s2 + b. Levels s1*s2,
/// strength >= min of the factors' strengths, md = min of the factors' md.
OrthogonalArray kronecker_product(const OrthogonalArray& A, const OrthogonalArray& B);

/// Replaces column col of A by the row of B indexed by its level.
/// B must have exactly levels[col] rows.
OrthogonalArray expansive_replace(const OrthogonalArray& A, int col, const OrthogonalArray& B);

/// Maps column col through l -> l mod 2. The column must have an even
/// level count. Strength is re-verified on the output and md may drop by
/// at most 1; both are checked.
OrthogonalArray fold_mod2(const OrthogonalArray& A, int col);

}  // namespace oacodes

#endif
