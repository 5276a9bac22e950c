// Shared helpers for the test suites: seeded random generators and conversions
// into the oracle's row format. All randomness is deterministic per test run.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "invder/lie_algebra.hpp"
#include "invder/matrix.hpp"
#include "invder/qlinalg.hpp"

namespace testsupport {

using invder::Matrix;
using invder::Rational;
using invder::Vector;

inline Rational random_rational(std::mt19937_64& rng, int lo = -4, int hi = 4, int den_max = 4) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, den_max);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_rational(rng);
    return m;
}

inline Matrix random_invertible(std::mt19937_64& rng, std::size_t n) {
    for (;;) {
        Matrix m = random_matrix(rng, n, n);
        if (invder::determinant(m) != 0) return m;
    }
}

inline std::vector<std::vector<mpq_class>> oracle_rows(const Matrix& m) {
    std::vector<std::vector<mpq_class>> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return rows;
}

struct BracketEntry {
    std::size_t i, j, k;  // 0-based, i < j
    int c;
};

// Dense structure constants from sparse upper entries; the (j, i) mirror is
// filled with the negated value.
inline std::vector<Rational> dense_constants(std::size_t n, std::vector<BracketEntry> entries) {
    std::vector<Rational> c(n * n * n, Rational(0));
    for (const BracketEntry& e : entries) {
        c[(e.i * n + e.j) * n + e.k] = e.c;
        c[(e.j * n + e.i) * n + e.k] = -e.c;
    }
    return c;
}

// Heisenberg: [e1, e2] = e3.
inline invder::LieAlgebra make_h3() {
    return invder::LieAlgebra(3, dense_constants(3, {{0, 1, 2, 1}}));
}

// sl2: [e1, e2] = e3, [e1, e3] = -2 e1, [e2, e3] = 2 e2 (e1 = e, e2 = f, e3 = h).
inline invder::LieAlgebra make_sl2() {
    return invder::LieAlgebra(3, dense_constants(3, {{0, 1, 2, 1}, {0, 2, 0, -2}, {1, 2, 1, 2}}));
}

inline invder::LieAlgebra make_abelian(std::size_t n) {
    return invder::LieAlgebra(n, std::vector<Rational>(n * n * n, Rational(0)));
}

// Invertible derivation of make_h3() satisfying the Inv condition; columns are
// images of e1, e2, e3.
inline Matrix sample_delta_h3() {
    Matrix d(3, 3);
    d.at(0, 0) = 0;
    d.at(0, 1) = -1;
    d.at(1, 0) = 1;
    d.at(1, 1) = 1;
    d.at(2, 2) = 1;
    return d;
}

inline invder::InvDerStructure make_h3_structure() {
    return invder::InvDerStructure::validated(make_h3(), sample_delta_h3());
}

}  // namespace testsupport
