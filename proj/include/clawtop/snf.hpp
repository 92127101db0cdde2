#ifndef CLAWTOP_SNF_HPP
#define CLAWTOP_SNF_HPP

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace clawtop {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major integer matrix with exact arbitrary-precision entries.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * size_t(cols)) {}

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    BigInt& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    const BigInt& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

    IntMatrix operator*(const IntMatrix& o) const;
    bool is_zero() const;
    bool operator==(const IntMatrix& o) const = default;

private:
    int rows_, cols_;
    std::vector<BigInt> a_;
};

/// Diagonal of the Smith form: positive entries, each dividing the next.
/// When requested, `left` and `right` are unimodular with
/// left * M * right equal to the diagonal matrix of the divisors.
struct SmithResult {
    std::vector<BigInt> divisors;
    std::optional<IntMatrix> left, right;

    int rank() const { return int(divisors.size()); }
};

SmithResult smith_normal_form(const IntMatrix& m, bool with_transforms = false);

/// Rank by fraction-free (Bareiss) elimination; exact, no diagonalization.
int bareiss_rank(const IntMatrix& m);

/// Exact determinant of a square matrix, also fraction-free.
BigInt determinant(const IntMatrix& m);

/// Rank over the prime field GF(p).
int rank_mod_p(const IntMatrix& m, long long p);

}  // namespace clawtop

#endif
