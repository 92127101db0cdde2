#include <cstdlib>
#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"

#include "clawtop/snf.hpp"

using namespace clawtop;

namespace {

// Cofactor-expansion determinant, written from scratch as an oracle that
// shares nothing with the library's fraction-free elimination.
BigInt cofactor_det(const IntMatrix& m, std::vector<int> rows, std::vector<int> cols) {
    if (rows.empty()) return 1;
    BigInt acc = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
        std::vector<int> rest_rows;
        for (size_t j = 0; j < rows.size(); ++j)
            if (j != i) rest_rows.push_back(rows[j]);
        std::vector<int> rest_cols(cols.begin() + 1, cols.end());
        const BigInt sub = cofactor_det(m, rest_rows, rest_cols);
        const BigInt term = m.at(rows[i], cols[0]) * sub;
        acc += (i % 2 == 0) ? term : -term;
    }
    return acc;
}

BigInt cofactor_det(const IntMatrix& m) {
    std::vector<int> idx(m.rows());
    std::iota(idx.begin(), idx.end(), 0);
    return cofactor_det(m, idx, idx);
}

// gcd of all k x k minors; 0 when every minor vanishes.
BigInt minor_gcd(const IntMatrix& m, int k) {
    BigInt g = 0;
    // enumerate k-subsets of rows and of columns
    std::vector<int> rcomb(k), ccomb(k);
    for (int i = 0; i < k; ++i) rcomb[i] = i;
    auto advance = [](std::vector<int>& comb, int n) {
        int i = int(comb.size()) - 1;
        while (i >= 0 && comb[i] == n - int(comb.size()) + i) --i;
        if (i < 0) return false;
        ++comb[i];
        for (size_t j = i + 1; j < comb.size(); ++j) comb[j] = comb[j - 1] + 1;
        return true;
    };
    do {
        for (int i = 0; i < k; ++i) ccomb[i] = i;
        do {
            const BigInt d = cofactor_det(m, rcomb, ccomb);
            g = boost::multiprecision::gcd(g, abs(d));
        } while (advance(ccomb, m.cols()));
    } while (advance(rcomb, m.rows()));
    return g;
}

IntMatrix random_matrix(int rows, int cols, int span, std::mt19937_64& rng) {
    IntMatrix m(rows, cols);
    std::uniform_int_distribution<int> entry(-span, span);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = entry(rng);
    return m;
}

IntMatrix diag_of(const SmithResult& s, int rows, int cols) {
    IntMatrix d(rows, cols);
    for (int i = 0; i < s.rank(); ++i) d.at(i, i) = s.divisors[i];
    return d;
}

}  // namespace

TEST_CASE("smith form of a fixed matrix") {
    IntMatrix m(2, 2);
    m.at(0, 0) = 2;
    m.at(0, 1) = 4;
    m.at(1, 0) = 6;
    m.at(1, 1) = 8;
    const SmithResult s = smith_normal_form(m);
    REQUIRE(s.divisors.size() == 2);
    CHECK(s.divisors[0] == 2);
    CHECK(s.divisors[1] == 4);
}

TEST_CASE("smith form of degenerate shapes") {
    CHECK(smith_normal_form(IntMatrix(0, 0)).divisors.empty());
    CHECK(smith_normal_form(IntMatrix(3, 0)).divisors.empty());
    CHECK(smith_normal_form(IntMatrix(2, 5)).divisors.empty());  // all zero
    const SmithResult id = smith_normal_form(IntMatrix::identity(4));
    REQUIRE(id.rank() == 4);
    for (const BigInt& d : id.divisors) CHECK(d == 1);
}

TEST_CASE("divisors match the minor-gcd characterization") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        const int rows = 1 + int(rng() % 5), cols = 1 + int(rng() % 5);
        const IntMatrix m = random_matrix(rows, cols, 6, rng);
        const SmithResult s = smith_normal_form(m);
        CAPTURE(trial);
        BigInt prev = 1;
        for (int k = 1; k <= std::min(rows, cols); ++k) {
            const BigInt g = minor_gcd(m, k);
            if (k <= s.rank()) {
                REQUIRE(g != 0);
                CHECK(s.divisors[k - 1] == g / prev);
                prev = g;
            } else {
                CHECK(g == 0);
            }
        }
    }
}

TEST_CASE("transform matrices are unimodular and reproduce the form") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const int rows = 1 + int(rng() % 6), cols = 1 + int(rng() % 6);
        const IntMatrix m = random_matrix(rows, cols, 9, rng);
        const SmithResult s = smith_normal_form(m, true);
        REQUIRE(s.left.has_value());
        REQUIRE(s.right.has_value());
        CAPTURE(trial);
        CHECK(*s.left * m * *s.right == diag_of(s, rows, cols));
        const BigInt du = cofactor_det(*s.left), dv = cofactor_det(*s.right);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
    }
}

TEST_CASE("divisibility chain") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        const int rows = 1 + int(rng() % 8), cols = 1 + int(rng() % 8);
        const IntMatrix m = random_matrix(rows, cols, 9, rng);
        const SmithResult s = smith_normal_form(m);
        for (size_t i = 0; i + 1 < s.divisors.size(); ++i) {
            CAPTURE(trial);
            CHECK(s.divisors[i] > 0);
            CHECK(s.divisors[i + 1] % s.divisors[i] == 0);
        }
    }
}

TEST_CASE("three rank computations agree") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 50; ++trial) {
        const int rows = 1 + int(rng() % 5), cols = 1 + int(rng() % 5);
        const IntMatrix m = random_matrix(rows, cols, 9, rng);
        const int by_snf = smith_normal_form(m).rank();
        const int by_bareiss = bareiss_rank(m);
        // Entries are at most 9 and dimensions at most 5, so every divisor
        // stays far below this prime: the modular rank cannot drop.
        const int by_modp = rank_mod_p(m, 2147483647);
        CAPTURE(trial);
        CHECK(by_snf == by_bareiss);
        CHECK(by_snf == by_modp);
    }
}

TEST_CASE("modular rank sees torsion") {
    IntMatrix m(2, 2);
    m.at(0, 0) = 2;
    m.at(1, 1) = 2;
    CHECK(bareiss_rank(m) == 2);
    CHECK(rank_mod_p(m, 2) == 0);
    CHECK(rank_mod_p(m, 3) == 2);
}

TEST_CASE("determinant agrees with cofactor expansion") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + int(rng() % 5);
        const IntMatrix m = random_matrix(n, n, 9, rng);
        CAPTURE(trial);
        CHECK(determinant(m) == cofactor_det(m));
    }
    IntMatrix singular(3, 3);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) singular.at(r, c) = r + c;
    CHECK(determinant(singular) == 0);
    CHECK(bareiss_rank(singular) == 2);
}

TEST_CASE("matrix product shapes") {
    IntMatrix a(2, 3), b(3, 2);
    int v = 1;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 3; ++c) a.at(r, c) = v++;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 2; ++c) b.at(r, c) = v++;
    const IntMatrix p = a * b;
    CHECK(p.rows() == 2);
    CHECK(p.cols() == 2);
    CHECK(p.at(0, 0) == 1 * 7 + 2 * 9 + 3 * 11);
    CHECK(p.at(1, 1) == 4 * 8 + 5 * 10 + 6 * 12);
}
