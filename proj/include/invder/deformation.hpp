/**
 * @file deformation.hpp
 * @brief Truncated one-parameter deformations mu_t = sum mu_i t^i,
 *        delta_t = sum delta_i t^i of a structure (L, mu_0, delta_0).
 *
 * All equations are per-coefficient and finitary. For each order n up to the
 * truncation, three families are checked on basis pairs/triples:
 *
 *   jacobi  : cyclic sum over (x,y,z) of  sum_{i+j=n} mu_i(x, mu_j(y,z)) = 0
 *   leibniz : sum_{i+j=n} delta_i mu_j(x,y) - mu_i(delta_j x, y)
 *                                         - mu_i(x, delta_j y) = 0
 *   inv     : sum_{i+j+k=n} delta_i delta_j mu_k(x,y)
 *                          - mu_i(delta_j x, delta_k y) = 0
 *
 * At n = 0 these are exactly the structure axioms. At n = 1 the residuals are
 * the three components of d2 applied to (mu_1, delta_1, delta_1) over the
 * adjoint representation, up to sign; that identification is what makes the
 * infinitesimal a 2-cocycle.
 */
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "invder/cochain.hpp"
#include "invder/lie_algebra.hpp"

namespace invder {

class Deformation {
  public:
    /**
     * @param higher_mu mu_1..mu_N as antisymmetric grids over L
     * @param higher_delta delta_1..delta_N
     * The order-0 coefficients are taken from the base structure.
     * @throws InputError on shape mismatches or unequal list lengths.
     */
    Deformation(InvDerStructure base, std::vector<Cochain2> higher_mu,
                std::vector<Matrix> higher_delta);

    /** Same, with the full lists mu_0..mu_N; the order-0 entries must equal
     *  the base structure. @throws InputError when they do not. */
    static Deformation from_full(InvDerStructure base, std::vector<Cochain2> mu,
                                 std::vector<Matrix> delta);

    const InvDerStructure& base() const { return base_; }
    std::size_t order() const { return mu_.size() - 1; }
    const Cochain2& mu(std::size_t i) const { return mu_[i]; }
    const Matrix& delta(std::size_t i) const { return delta_[i]; }

  private:
    InvDerStructure base_;
    std::vector<Cochain2> mu_;     // index 0 is the base bracket
    std::vector<Matrix> delta_;    // index 0 is the base delta
};

struct DeformationViolation {
    std::size_t order;
    std::string equation;  // "jacobi", "leibniz" or "inv"
    std::vector<std::size_t> indices;
    Vector residual;
};

struct DeformationReport {
    bool ok = true;
    std::vector<DeformationViolation> violations;
};

/** Checks every order 0..N; violations sorted by (order, equation, indices). */
DeformationReport check_deformation(const Deformation& d);

/**
 * @brief The order-1 data (mu_1, delta_1, delta_1) as a degree-2 cochain over
 *        the adjoint representation.
 *
 * @throws CheckError when the deformation fails its equations at order 0 or 1.
 * @throws std::logic_error if the result were not a cocycle (impossible for
 *         inputs passing the order-1 equations).
 */
InvDerCochain2 infinitesimal(const Deformation& d);

/**
 * @brief The coboundary d1(psi1) by which order-1 data moves under the formal
 *        isomorphism id + t psi1, over the adjoint representation.
 */
InvDerCochain2 equivalence_diff(const InvDerStructure& S, const Matrix& psi1);

/**
 * @brief Transports order-1 coefficients along id + t psi1:
 *        mu_1' = mu_1 + mu_0(psi1 x, y) + mu_0(x, psi1 y) - psi1 mu_0(x,y),
 *        delta_1' = delta_1 + delta_0 psi1 - psi1 delta_0.
 *
 * Coefficients above order 1 are carried over unchanged. The infinitesimal of
 * the result differs from the input's by exactly equivalence_diff(base, psi1),
 * so the cohomology class is preserved.
 * @throws CheckError when the input fails its equations at order 0 or 1.
 */
Deformation apply_order1_equivalence(const Deformation& d, const Matrix& psi1);

}  // namespace invder
