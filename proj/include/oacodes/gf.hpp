#ifndef OACODES_GF_HPP
#define OACODES_GF_HPP

#include <cstdint>
#include <vector>

#include "oacodes/errors.hpp"

namespace oacodes {

/// Arithmetic tables for GF(q), q = p^m a prime power, 2 <= q <= 256.
/// Elements are labeled 0..q-1; the label is the polynomial coefficient
/// vector read as a base-p integer, so 0 is the additive and 1 the
/// multiplicative identity. For q = p^m the modulus is the canonical
/// (smallest by coefficient order) monic irreducible of degree m.
class GaloisField {
  public:
    explicit GaloisField(int q);

    int order() const { return q_; }
    int characteristic() const { return p_; }
    int degree() const { return m_; }

    int add(int a, int b) const { return add_[a * q_ + b]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
    int inv(int a) const;
    int pow(int a, long long e) const;

    /// Modulus coefficients, constant term first; size m+1, leading 1.
    const std::vector<int>& modulus() const { return modulus_; }

    /// Exhaustive field-axiom check (associativity, commutativity,
    /// distributivity, identities, inverses). O(q^3); run at
    /// construction for q <= 64.
    bool check_axioms() const;

  private:
    int q_, p_, m_;
    std::vector<uint8_t> add_, mul_, neg_, inv_;
    std::vector<int> modulus_;
};

/// Builds GF(q). Throws NotPrimePower unless q is a prime power in [2, 256].
GaloisField build_field(int q);

/// Shared immutable field instance (arithmetic tables are pure data).
const GaloisField& cached_field(int q);

/// Dense matrix with entries in 0..q-1.
struct FieldMatrix {
    int q = 2;
    int rows = 0;
    int cols = 0;
    std::vector<int> a;  // row-major

    FieldMatrix() = default;
    FieldMatrix(int q, int rows, int cols) : q(q), rows(rows), cols(cols), a(static_cast<size_t>(rows) * cols, 0) {}

    int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    int at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

/// In-place reduced row echelon form; returns pivot column indices.
std::vector<int> rref(FieldMatrix& M);

int rank(const FieldMatrix& M);

/// Basis of {v : M v^T = 0} as matrix rows, in reduced echelon form.
/// rank(M) + result.rows == M.cols.
FieldMatrix null_space(const FieldMatrix& M);

/// True iff the row spaces of A and B coincide.
bool same_row_space(const FieldMatrix& A, const FieldMatrix& B);

}  // namespace oacodes

#endif
