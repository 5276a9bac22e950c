/**
 * @file extension.hpp
 * @brief Central extensions of a structure (L, delta) by an abelian algebra V
 *        carrying an invertible map delta_v.
 *
 * Extension data is a pair (gamma, chi) with gamma: wedge^2 L -> V and
 * chi: L -> V, subject to three equations on basis tuples:
 *
 *   cyclic_bracket : gamma([x,y],z) + gamma([y,z],x) + gamma([z,x],y) = 0
 *   leibniz_compat : chi([x,y]) + delta_v gamma(x,y)
 *                    - gamma(d x, y) - gamma(x, d y) = 0
 *   inv_compat     : chi(d [x,y]) + delta_v chi([x,y])
 *                    + delta_v^2 gamma(x,y) - gamma(d x, d y) = 0
 *
 * These are exactly the cocycle equations for (gamma, chi, chi) over the
 * trivial representation on V; check_extension_cocycle verifies both routes
 * and insists they agree. The total space L (+) V carries the bracket
 * [x+u, y+v] = [x,y] + gamma(x,y) and the map x+u -> d x + chi(x) + delta_v u;
 * two cocycles build isomorphic extensions exactly when they differ by the
 * coboundary of some Phi: L -> V.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "invder/cochain.hpp"
#include "invder/lie_algebra.hpp"

namespace invder {

struct ExtensionCocycle {
    std::size_t v_dim = 0;
    Matrix delta_v;   // m x m, invertible
    Cochain2 gamma;   // pairs of L to V
    Cochain1 chi;     // m x n

    ExtensionCocycle(std::size_t v_dim_, Matrix delta_v_, Cochain2 gamma_, Cochain1 chi_)
        : v_dim(v_dim_), delta_v(std::move(delta_v_)), gamma(std::move(gamma_)),
          chi(std::move(chi_)) {}
    /** All-zero data for given dimensions, with the given delta_v. */
    static ExtensionCocycle zero(std::size_t n, std::size_t m, Matrix delta_v);
};

struct ExtensionReport {
    bool ok = true;
    std::vector<ValidationIssue> issues;
    /** Cross-check result: (gamma, chi, chi) lies in the kernel of d2 over the
     *  trivial representation. Always equals ok; a mismatch is an internal
     *  error and raises std::logic_error. */
    bool in_cocycle_space = true;
};

/**
 * @throws InputError on shape mismatches.
 * @throws CheckError when delta_v is singular.
 */
ExtensionReport check_extension_cocycle(const InvDerStructure& S, const ExtensionCocycle& e);

/**
 * @brief Total space L (+) V in block coordinates: indices below base_dim are
 *        L, the rest are V.
 *
 * Invariants established on construction: V is central, the map is block
 * lower-triangular (V never leaks back into L), and both diagonal blocks are
 * again valid structures.
 */
class CentralExtension {
  public:
    /** @throws CheckError when the blocks violate the invariants above. */
    static CentralExtension from_total(InvDerStructure total, std::size_t base_dim);

    const InvDerStructure& total() const { return total_; }
    std::size_t base_dim() const { return base_dim_; }
    std::size_t v_dim() const { return total_.dim() - base_dim_; }
    /** The base structure read off the L blocks. */
    const InvDerStructure& base() const { return base_; }
    /** The lower-right block of the total map. */
    Matrix delta_v() const;

  private:
    CentralExtension(InvDerStructure total, std::size_t base_dim, InvDerStructure base)
        : total_(std::move(total)), base_dim_(base_dim), base_(std::move(base)) {}
    InvDerStructure total_;
    std::size_t base_dim_;
    InvDerStructure base_;
};

/** @throws CheckError when e fails check_extension_cocycle. */
CentralExtension build_extension(const InvDerStructure& S, const ExtensionCocycle& e);

/**
 * @brief Reads the cocycle off a section: gamma(x,y) = [sx, sy] - s[x,y] and
 *        chi(x) = d_total s(x) - s(d x), both landing in the V block.
 *
 * The section is an (n+m) x n matrix whose top block must be the identity.
 * Omitting it uses the canonical section [I; 0].
 * @throws CheckError when the top block is not the identity or a value
 *         escapes the V block.
 */
ExtensionCocycle extract_cocycle(const CentralExtension& ext, const Matrix& section);
ExtensionCocycle extract_cocycle(const CentralExtension& ext);

/**
 * @brief Decides whether two cocycles build isomorphic extensions.
 *
 * Solves d1(Phi) = e1 - e2 over the trivial representation; the witness Phi
 * (m x n), when present, satisfies exactly that identity.
 * @throws InputError when the V data of e1 and e2 disagree.
 */
std::optional<Matrix> same_class(const InvDerStructure& S, const ExtensionCocycle& e1,
                                 const ExtensionCocycle& e2);

/**
 * @brief The isomorphism xi(x+u) = x + Phi(x) + u from the extension built on
 *        e1 to the one built on e2, verified before it is returned.
 *
 * Checks, in order: xi fixes the embedded V, xi covers the identity on L, and
 * xi intertwines brackets and maps. @throws CheckError naming the first
 * failed check when Phi is not a witness.
 */
Matrix extension_isomorphism(const InvDerStructure& S, const ExtensionCocycle& e1,
                             const ExtensionCocycle& e2, const Matrix& phi);

}  // namespace invder
