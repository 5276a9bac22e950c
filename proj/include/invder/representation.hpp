/**
 * @file representation.hpp
 * @brief Representations of algebras carrying an invertible derivation.
 *
 * A representation is a triple (V; rho, delta_v) with rho given by one matrix
 * per basis vector of the base algebra and delta_v an invertible map of V.
 * Validity means three compatibility equations, checked exactly on basis
 * elements:
 *
 *   compat_delta_squared : rho(d x) delta_v       = delta_v^2 rho(x)
 *   compat_bracket       : rho([x,y]) delta_v     = rho(d x) rho(y) - rho(d y) rho(x)
 *   compat_leibniz       : delta_v rho(x)         = rho(d x) + rho(x) delta_v
 *
 * Nothing beyond these is enforced; in particular rho is not required to be a
 * Lie algebra map in the classical sense.
 */
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "invder/lie_algebra.hpp"
#include "invder/matrix.hpp"

namespace invder {

struct RepViolation {
    std::string equation;
    std::vector<std::size_t> indices;
    Matrix residual;  // left side minus right side of the listed equation
};

struct RepReport {
    bool ok = true;
    std::vector<RepViolation> violations;
};

class Representation {
  public:
    /**
     * @throws InputError on any shape mismatch.
     * @throws CheckError when delta_v is singular.
     */
    Representation(InvDerStructure base, std::vector<Matrix> rho, Matrix delta_v);

    const InvDerStructure& base() const { return base_; }
    std::size_t base_dim() const { return base_.dim(); }
    std::size_t target_dim() const { return target_dim_; }
    const Matrix& rho_basis(std::size_t i) const { return rho_[i]; }
    /** Linear extension of rho to an arbitrary element. */
    Matrix rho_of(const Vector& x) const;
    const Matrix& delta_v() const { return delta_v_; }

  private:
    InvDerStructure base_;
    std::size_t target_dim_;
    std::vector<Matrix> rho_;
    Matrix delta_v_;
};

/**
 * @brief Verifies the three compatibility equations on basis elements.
 *
 * Violations are listed in a fixed order: all compat_delta_squared failures by
 * basis index, then compat_bracket by pair (i < j), then compat_leibniz by
 * basis index.
 */
RepReport check_representation(const Representation& r);

/** rho = ad, delta_v = delta; valid for every validated structure. */
Representation adjoint_rep(const InvDerStructure& S);

/** rho = 0 on an m-dimensional space. @throws CheckError when delta_v is singular. */
Representation trivial_rep(const InvDerStructure& S, std::size_t m, const Matrix& delta_v);

struct GlCriteria {
    bool leibniz = false;  // delta_v is a derivation of the relevant bracket
    bool inv = false;      // delta_v also satisfies the Inv condition there
};

/**
 * @brief Derivation criteria for delta_v acting on gl(V) by left multiplication.
 *
 * Default mode works on the generator pairs rho(e_i), rho(e_j):
 *   leibniz <=> rho(e_i) delta_v rho(e_j) = rho(e_j) delta_v rho(e_i) for i < j,
 *   inv     <=> the same with delta_v^2.
 * Each pair is cross-checked against the literal Leibniz/Inv conditions on the
 * commutator [rho(e_i), rho(e_j)]; a disagreement there means the input was
 * not a valid representation and raises std::logic_error.
 *
 * Exhaustive mode instead tests the literal conditions on all pairs of
 * elementary matrices, i.e. over a basis of gl(V).
 */
GlCriteria check_gl_derivation_criteria(const Representation& r, bool exhaustive = false);

/**
 * @brief Semidirect product [x+a, y+b] = [x,y] + rho(x) b - rho(y) a with the
 *        map delta (+) delta_v.
 *
 * The first base_dim coordinates are the base algebra, the rest are V; V is
 * abelian and an ideal. The result is revalidated; a failure there is an
 * internal error (std::logic_error), not an input condition.
 */
InvDerStructure semidirect(const Representation& r);

}  // namespace invder
