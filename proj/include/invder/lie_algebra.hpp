/**
 * @file lie_algebra.hpp
 * @brief Lie algebras by structure constants, derivation machinery, invertible
 *        derivations with the Inv condition, and the twisted bracket.
 *
 * A LieAlgebra stores dense structure constants c[i][j][k] with
 * [e_i, e_j] = sum_k c[i][j][k] e_k. Antisymmetry is validated on input, not
 * silently symmetrized. An InvDerStructure pairs a validated algebra with an
 * invertible derivation delta satisfying [dx, dy] = d^2 [x, y]; equivalently
 * (and cross-checked) the inverse of delta is again a derivation.
 */
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "invder/matrix.hpp"

namespace invder {

/** One failed check: a stable check name, 0-based indices, exact residual. */
struct ValidationIssue {
    std::string check;
    std::vector<std::size_t> indices;
    Vector residual;
};

struct ValidationReport {
    bool ok = true;
    std::vector<ValidationIssue> issues;
};

/**
 * @brief Checks antisymmetry and the Jacobi identity on dense constants.
 *
 * Lists every violated entry/triple; "antisymmetry" issues carry indices
 * (i, j, k) with the scalar residual c[i][j][k] + c[j][i][k], "jacobi" issues
 * carry the basis triple (i, j, k) with the full residual vector.
 * @throws InputError when c does not have n^3 entries.
 */
ValidationReport validate_lie(std::size_t n, const std::vector<Rational>& c);

/**
 * @brief Full structure validation: Lie axioms plus the delta conditions
 *        ("delta_invertible", "leibniz", "inv_condition").
 *
 * All checks run even after earlier failures so reports are complete.
 */
ValidationReport validate_structure(std::size_t n, const std::vector<Rational>& c,
                                    const Matrix& delta);

class LieAlgebra {
  public:
    /**
     * @throws InputError on a shape mismatch.
     * @throws CheckError when antisymmetry or Jacobi fails (first issue named).
     */
    LieAlgebra(std::size_t n, std::vector<Rational> constants,
               std::vector<std::string> basis_names = {});

    std::size_t dim() const { return n_; }
    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * n_ + j) * n_ + k];
    }
    const std::vector<Rational>& constants() const { return c_; }
    /** [e_i, e_j] as a coordinate vector. */
    Vector bracket_basis(std::size_t i, std::size_t j) const;
    const std::vector<std::string>& basis_names() const { return names_; }

    bool same_constants(const LieAlgebra& other) const {
        return n_ == other.n_ && c_ == other.c_;
    }

  private:
    std::size_t n_;
    std::vector<Rational> c_;
    std::vector<std::string> names_;
};

/** Bilinear extension of the structure constants. */
Vector bracket(const LieAlgebra& L, const Vector& x, const Vector& y);

/**
 * @brief Matrix of y -> [x, y]; with acting_from_right, of y -> [y, x].
 *
 * The right variant is the map that is a delta-derivation whenever delta
 * fixes x.
 */
Matrix ad_map(const LieAlgebra& L, const Vector& x, bool acting_from_right = false);

/** Leibniz rule d[x,y] = [dx,y] + [x,dy] on all basis pairs. */
bool is_derivation(const LieAlgebra& L, const Matrix& d);

/** Canonical basis of the solution space of the Leibniz system (n^2 unknowns,
 *  matrix entries flattened row-major). */
std::vector<Matrix> derivation_space(const LieAlgebra& L);

/** Outcome of the three clauses of the invertible-derivation check. */
struct InvDerCheck {
    bool derivation = false;
    bool invertible = false;
    bool inv_condition = false;
    bool ok() const { return derivation && invertible && inv_condition; }
    /** Name of the first failed clause, or "" when ok. */
    std::string first_failure() const;
};

/** The Inv-condition route: derivation + invertible + [de_i,de_j] = d^2[e_i,e_j]. */
InvDerCheck check_invder(const LieAlgebra& L, const Matrix& d);

/**
 * @brief The inverse route: computes d^{-1} exactly and tests Leibniz on it.
 *
 * Agrees with check_invder(...).inv_condition for every invertible derivation;
 * both routes are kept separate so the agreement is testable.
 * @throws CheckError when d is singular.
 */
bool inverse_is_derivation(const LieAlgebra& L, const Matrix& d);

class InvDerStructure {
  public:
    /** @throws CheckError naming the first failed clause. */
    static InvDerStructure validated(LieAlgebra algebra, Matrix delta);

    const LieAlgebra& algebra() const { return algebra_; }
    const Matrix& delta() const { return delta_; }
    std::size_t dim() const { return algebra_.dim(); }

  private:
    InvDerStructure(LieAlgebra algebra, Matrix delta)
        : algebra_(std::move(algebra)), delta_(std::move(delta)) {}
    LieAlgebra algebra_;
    Matrix delta_;
};

/** The twisted bracket [x,y]_d = d[x,y]; always a Lie algebra again. */
LieAlgebra twist(const InvDerStructure& S);

/**
 * @brief Cyclic compatibility of the twisted and original brackets.
 *
 * Verifies, over all ordered basis triples, that the cyclic sums of
 * [x, [y,z]_d] and [dx, [y,z]] agree and that both vanish.
 */
bool check_cyclic_identity(const InvDerStructure& S);

/** Canonical basis of {D : D d = d^2 D and D[x,y] = [Dx, dy] + [dx, Dy]}. */
std::vector<Matrix> delta_derivation_space(const InvDerStructure& S);

/** Bracket preservation into the target plus phi d1 = d2 phi. */
bool is_homomorphism(const InvDerStructure& S1, const InvDerStructure& S2, const Matrix& phi);

}  // namespace invder
