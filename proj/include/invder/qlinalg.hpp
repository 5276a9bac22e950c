/**
 * @file qlinalg.hpp
 * @brief Exact linear algebra over the rationals: echelon forms, rank, kernel,
 *        solving, inverses, and quotient-space dimensions.
 *
 * Everything here is plain rational Gauss-Jordan elimination with exact
 * arithmetic; there is no floating point and no tolerance anywhere. Outputs are
 * canonical so that downstream golden tests are deterministic:
 *  - reduced_row_echelon returns the unique RREF of the row space;
 *  - kernel_basis returns one vector per free column, with entry 1 in that
 *    free coordinate and 0 in every other free coordinate;
 *  - solve returns the particular solution whose free coordinates are all 0.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "invder/matrix.hpp"

namespace invder {

/** Reduced row echelon form together with the pivot column indices. */
struct EchelonForm {
    Matrix reduced;
    std::vector<std::size_t> pivot_columns;
};

/** @brief Unique RREF of m; pivot entries are 1 and pivot columns are cleared. */
EchelonForm reduced_row_echelon(Matrix m);

/** @brief Dimension of the row space (= dimension of the column space). */
std::size_t rank(const Matrix& m);

/**
 * @brief Canonical basis of {v : m v = 0}.
 *
 * One basis vector per free column f: entry f is 1, every other free entry is
 * 0, and pivot entries are read off the RREF. Satisfies rank-nullity:
 * rank(m) + result.size() == m.cols().
 */
std::vector<Vector> kernel_basis(const Matrix& m);

/**
 * @brief One exact solution of m x = b, or nullopt when inconsistent.
 *
 * The returned solution has 0 in every free coordinate, so it is canonical.
 */
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/**
 * @brief dim span(z) - dim span(b), with span(b) ⊆ span(z) verified.
 * @throws CheckError if some vector of b lies outside span(z).
 */
std::size_t quotient_dimension(const std::vector<Vector>& z, const std::vector<Vector>& b);

/** @brief Exact determinant of a square matrix (0x0 has determinant 1). */
Rational determinant(const Matrix& m);

/** @brief Exact inverse. @throws CheckError on a singular or non-square input. */
Matrix inverse(const Matrix& m);

/** @brief True iff v lies in the span of the given vectors. */
bool in_span(const std::vector<Vector>& basis, const Vector& v);

}  // namespace invder
