#include "clawtop/snf.hpp"

#include <algorithm>
#include <utility>

#include "clawtop/errors.hpp"

namespace clawtop {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw InputError("matrix product shape mismatch");
    IntMatrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const BigInt& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j) out.at(i, j) += v * o.at(k, j);
        }
    return out;
}

bool IntMatrix::is_zero() const {
    for (const BigInt& v : a_)
        if (v != 0) return false;
    return true;
}

namespace {

using boost::multiprecision::abs;

struct SmithWorker {
    IntMatrix a;
    std::optional<IntMatrix> u, v;  // invariant: u * original * v == a

    void swap_rows(int r1, int r2) {
        if (r1 == r2) return;
        for (int j = 0; j < a.cols(); ++j) std::swap(a.at(r1, j), a.at(r2, j));
        if (u)
            for (int j = 0; j < u->cols(); ++j) std::swap(u->at(r1, j), u->at(r2, j));
    }
    void swap_cols(int c1, int c2) {
        if (c1 == c2) return;
        for (int i = 0; i < a.rows(); ++i) std::swap(a.at(i, c1), a.at(i, c2));
        if (v)
            for (int i = 0; i < v->rows(); ++i) std::swap(v->at(i, c1), v->at(i, c2));
    }
    void add_row(int dst, int src, const BigInt& q) {  // row dst += q * row src
        for (int j = 0; j < a.cols(); ++j) a.at(dst, j) += q * a.at(src, j);
        if (u)
            for (int j = 0; j < u->cols(); ++j) u->at(dst, j) += q * u->at(src, j);
    }
    void add_col(int dst, int src, const BigInt& q) {
        for (int i = 0; i < a.rows(); ++i) a.at(i, dst) += q * a.at(i, src);
        if (v)
            for (int i = 0; i < v->rows(); ++i) v->at(i, dst) += q * v->at(i, src);
    }
    void negate_row(int r) {
        for (int j = 0; j < a.cols(); ++j) a.at(r, j) = -a.at(r, j);
        if (u)
            for (int j = 0; j < u->cols(); ++j) u->at(r, j) = -u->at(r, j);
    }

    // Clears row t and column t outside the pivot.  Every remainder swap
    // strictly shrinks |pivot|, so this terminates.
    void clear_cross(int t) {
        while (true) {
            bool swapped = false;
            for (int i = t + 1; i < a.rows() && !swapped; ++i) {
                if (a.at(i, t) == 0) continue;
                BigInt q = a.at(i, t) / a.at(t, t);
                if (q != 0) add_row(i, t, -q);
                if (a.at(i, t) != 0) {
                    swap_rows(t, i);
                    swapped = true;
                }
            }
            if (swapped) continue;
            for (int j = t + 1; j < a.cols() && !swapped; ++j) {
                if (a.at(t, j) == 0) continue;
                BigInt q = a.at(t, j) / a.at(t, t);
                if (q != 0) add_col(j, t, -q);
                if (a.at(t, j) != 0) {
                    swap_cols(t, j);
                    swapped = true;
                }
            }
            if (swapped) continue;
            bool dirty = false;
            for (int i = t + 1; i < a.rows() && !dirty; ++i) dirty = a.at(i, t) != 0;
            for (int j = t + 1; j < a.cols() && !dirty; ++j) dirty = a.at(t, j) != 0;
            if (!dirty) return;
        }
    }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m, bool with_transforms) {
    SmithWorker w{m, std::nullopt, std::nullopt};
    if (with_transforms) {
        w.u = IntMatrix::identity(m.rows());
        w.v = IntMatrix::identity(m.cols());
    }
    const int bound = std::min(m.rows(), m.cols());
    int t = 0;
    while (t < bound) {
        // Smallest nonzero entry of the trailing submatrix as pivot.
        int pi = -1, pj = -1;
        BigInt best;
        for (int i = t; i < m.rows(); ++i)
            for (int j = t; j < m.cols(); ++j) {
                if (w.a.at(i, j) == 0) continue;
                BigInt mag = abs(w.a.at(i, j));
                if (pi < 0 || mag < best) {
                    best = mag;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;  // trailing submatrix is zero
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        // Clear, then force the pivot to divide the whole trailing block;
        // pulling in an offending row shrinks the pivot, so this terminates.
        while (true) {
            w.clear_cross(t);
            bool retry = false;
            for (int i = t + 1; i < m.rows() && !retry; ++i)
                for (int j = t + 1; j < m.cols() && !retry; ++j)
                    if (w.a.at(i, j) % w.a.at(t, t) != 0) {
                        w.add_row(t, i, 1);
                        retry = true;
                    }
            if (!retry) break;
        }
        ++t;
    }
    for (int k = 0; k < t; ++k)
        if (w.a.at(k, k) < 0) w.negate_row(k);

    SmithResult out;
    out.divisors.reserve(t);
    for (int k = 0; k < t; ++k) out.divisors.push_back(w.a.at(k, k));
    out.left = std::move(w.u);
    out.right = std::move(w.v);
    return out;
}

int bareiss_rank(const IntMatrix& m) {
    IntMatrix a = m;
    const int rows = a.rows(), cols = a.cols();
    BigInt prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (a.at(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < cols; ++j) std::swap(a.at(r, j), a.at(p, j));
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                a.at(i, j) = (a.at(r, c) * a.at(i, j) - a.at(i, c) * a.at(r, j)) / prev;
            a.at(i, c) = 0;
        }
        prev = a.at(r, c);
        ++r;
    }
    return r;
}

BigInt determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw InputError("determinant needs a square matrix");
    const int n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (a.at(i, k) != 0) {
                p = i;
                break;
            }
        if (p < 0) return 0;
        if (p != k) {
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j)) / prev;
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : BigInt(-a.at(n - 1, n - 1));
}

namespace {

long long mod_inverse(long long x, long long p) {
    long long t = 0, nt = 1, r = p, nr = x % p;
    while (nr != 0) {
        long long q = r / nr;
        t = std::exchange(nt, t - q * nt);
        r = std::exchange(nr, r - q * nr);
    }
    return t < 0 ? t + p : t;
}

}  // namespace

int rank_mod_p(const IntMatrix& m, long long p) {
    if (p < 2) throw InputError("rank_mod_p needs a prime modulus");
    const int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<long long>> a(rows, std::vector<long long>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            long long r = static_cast<long long>(m.at(i, j) % p);
            a[i][j] = r < 0 ? r + p : r;
        }
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int i = rank; i < rows; ++i)
            if (a[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        long long inv = mod_inverse(a[rank][c], p);
        for (int j = c; j < cols; ++j) a[rank][j] = a[rank][j] * inv % p;
        for (int i = rank + 1; i < rows; ++i) {
            long long f = a[i][c];
            if (f == 0) continue;
            for (int j = c; j < cols; ++j) a[i][j] = ((a[i][j] - f * a[rank][j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

}  // namespace clawtop
