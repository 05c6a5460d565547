#include "oacodes/gf.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace oacodes {

namespace {

// Polynomials over GF(p) as coefficient vectors, constant term first.
using Poly = std::vector<int>;

int poly_deg(const Poly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

Poly poly_mul(const Poly& f, const Poly& g, int p) {
    Poly h(f.size() + g.size() - 1, 0);
    for (size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        for (size_t j = 0; j < g.size(); ++j) h[i + j] = (h[i + j] + f[i] * g[j]) % p;
    }
    return h;
}

// f mod g, g monic.
Poly poly_mod(Poly f, const Poly& g, int p) {
    const int dg = poly_deg(g);
    for (int i = poly_deg(f); i >= dg; --i) {
        int c = f[i];
        if (c == 0) continue;
        for (int j = 0; j <= dg; ++j) {
            int& fi = f[i - dg + j];
            fi = ((fi - c * g[j]) % p + p) % p;
        }
    }
    f.resize(dg > 0 ? dg : 1, 0);
    return f;
}

Poly poly_from_value(long long v, int p, int len) {
    Poly f(len, 0);
    for (int i = 0; i < len; ++i) {
        f[i] = static_cast<int>(v % p);
        v /= p;
    }
    return f;
}

bool divides(const Poly& g, const Poly& f, int p) {
    Poly r = poly_mod(f, g, p);
    return poly_deg(r) < 0;
}

// Trial division by every monic polynomial of degree 1..m/2.
bool is_irreducible(const Poly& f, int p, int m) {
    for (int d = 1; 2 * d <= m; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long v = 0; v < count; ++v) {
            Poly g = poly_from_value(v, p, d + 1);
            g[d] = 1;
            if (divides(g, f, p)) return false;
        }
    }
    return true;
}

// Smallest monic irreducible of degree m over GF(p), ordered by the
// coefficient vector read high-to-low as a base-p integer.
Poly canonical_irreducible(int p, int m) {
    long long pm = 1;
    for (int i = 0; i < m; ++i) pm *= p;
    for (long long v = 0; v < pm; ++v) {
        Poly f = poly_from_value(v, p, m + 1);
        f[m] = 1;
        if (is_irreducible(f, p, m)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");
}

long long poly_value(const Poly& f, int p) {
    long long v = 0;
    for (int i = poly_deg(f); i >= 0; --i) v = v * p + f[i];
    return v;
}

// q = p^m with p prime, or 0 if q is not a prime power.
std::pair<int, int> prime_power_split(int q) {
    if (q < 2) return {0, 0};
    int p = 0;
    for (int d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return {q, 1};  // q prime
    int m = 0, r = q;
    while (r % p == 0) {
        r /= p;
        ++m;
    }
    if (r != 1) return {0, 0};
    return {p, m};
}

}  // namespace

GaloisField::GaloisField(int q) : q_(q) {
    if (q < 2 || q > 256) throw NotPrimePower("field order must be in [2, 256], got " + std::to_string(q));
    auto [p, m] = prime_power_split(q);
    if (p == 0) throw NotPrimePower(std::to_string(q) + " is not a prime power");
    p_ = p;
    m_ = m;

    add_.assign(static_cast<size_t>(q) * q, 0);
    mul_.assign(static_cast<size_t>(q) * q, 0);
    neg_.assign(q, 0);
    inv_.assign(q, 0);

    if (m == 1) {
        modulus_ = {0, 1};  // placeholder: prime fields use mod-q arithmetic
        for (int a = 0; a < q; ++a) {
            for (int b = 0; b < q; ++b) {
                add_[a * q + b] = static_cast<uint8_t>((a + b) % q);
                mul_[a * q + b] = static_cast<uint8_t>((a * b) % q);
            }
        }
    } else {
        modulus_ = canonical_irreducible(p, m);
        for (int a = 0; a < q; ++a) {
            Poly fa = poly_from_value(a, p, m);
            for (int b = 0; b < q; ++b) {
                Poly fb = poly_from_value(b, p, m);
                Poly s(m, 0);
                for (int i = 0; i < m; ++i) s[i] = (fa[i] + fb[i]) % p;
                add_[a * q + b] = static_cast<uint8_t>(poly_value(s, p));
                Poly prod = poly_mod(poly_mul(fa, fb, p), modulus_, p);
                mul_[a * q + b] = static_cast<uint8_t>(poly_value(prod, p));
            }
        }
    }

    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            if (add_[a * q + b] == 0) neg_[a] = static_cast<uint8_t>(b);
            if (a != 0 && mul_[a * q + b] == 1) inv_[a] = static_cast<uint8_t>(b);
        }
    }

    if (q_ <= 64) {
        if (!check_axioms()) throw std::logic_error("field axiom check failed for q=" + std::to_string(q));
    } else {
        // above 64 only identities and inverses are rechecked
        for (int a = 0; a < q; ++a) {
            if (add(a, 0) != a || mul(a, 1) != a) throw std::logic_error("identity check failed");
            if (a != 0 && mul(a, inv_[a]) != 1) throw std::logic_error("inverse check failed");
        }
    }
}

int GaloisField::inv(int a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return inv_[a];
}

int GaloisField::pow(int a, long long e) const {
    if (e < 0) return pow(inv(a), -e);
    int r = 1, b = a;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

bool GaloisField::check_axioms() const {
    const int q = q_;
    for (int a = 0; a < q; ++a) {
        if (add(a, 0) != a || mul(a, 1) != a || mul(a, 0) != 0) return false;
        if (add(a, neg_[a]) != 0) return false;
        if (a != 0 && mul(a, inv_[a]) != 1) return false;
        for (int b = 0; b < q; ++b) {
            if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a)) return false;
            for (int c = 0; c < q; ++c) {
                if (add(add(a, b), c) != add(a, add(b, c))) return false;
                if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
                if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) return false;
            }
        }
    }
    return true;
}

GaloisField build_field(int q) { return GaloisField(q); }

const GaloisField& cached_field(int q) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<GaloisField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, std::make_unique<GaloisField>(q)).first;
    return *it->second;
}

std::vector<int> rref(FieldMatrix& M) {
    const GaloisField& F = cached_field(M.q);
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < M.cols && r < M.rows; ++c) {
        int pr = -1;
        for (int i = r; i < M.rows; ++i) {
            if (M.at(i, c) != 0) {
                pr = i;
                break;
            }
        }
        if (pr < 0) continue;
        if (pr != r) {
            for (int j = 0; j < M.cols; ++j) std::swap(M.at(pr, j), M.at(r, j));
        }
        const int s = F.inv(M.at(r, c));
        for (int j = 0; j < M.cols; ++j) M.at(r, j) = F.mul(M.at(r, j), s);
        for (int i = 0; i < M.rows; ++i) {
            if (i == r || M.at(i, c) == 0) continue;
            const int f = M.at(i, c);
            for (int j = 0; j < M.cols; ++j) M.at(i, j) = F.sub(M.at(i, j), F.mul(f, M.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(const FieldMatrix& M) {
    FieldMatrix tmp = M;
    return static_cast<int>(rref(tmp).size());
}

FieldMatrix null_space(const FieldMatrix& M) {
    const GaloisField& F = cached_field(M.q);
    FieldMatrix R = M;
    std::vector<int> pivots = rref(R);
    std::vector<bool> is_pivot(M.cols, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<int> free_cols;
    for (int c = 0; c < M.cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    FieldMatrix B(M.q, static_cast<int>(free_cols.size()), M.cols);
    for (size_t i = 0; i < free_cols.size(); ++i) {
        const int f = free_cols[i];
        B.at(static_cast<int>(i), f) = 1;
        for (size_t r = 0; r < pivots.size(); ++r) B.at(static_cast<int>(i), pivots[r]) = F.neg(R.at(static_cast<int>(r), f));
    }
    rref(B);
    return B;
}

bool same_row_space(const FieldMatrix& A, const FieldMatrix& B) {
    if (A.cols != B.cols || A.q != B.q) return false;
    FieldMatrix ra = A, rb = B;
    std::vector<int> pa = rref(ra), pb = rref(rb);
    if (pa.size() != pb.size()) return false;
    const int r = static_cast<int>(pa.size());
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < A.cols; ++j)
            if (ra.at(i, j) != rb.at(i, j)) return false;
    return true;
}

}  // namespace oacodes
