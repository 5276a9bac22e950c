/**
 * @file cohomology.hpp
 * @brief The degree-1/2 cochain complex of an algebra with an invertible
 *        derivation, with coefficients in a representation.
 *
 * Building blocks, all evaluated exactly on basis tuples:
 *
 *   ce(f)(x,y)       = rho(x) f(y) - rho(y) f(x) - f([x,y])
 *   ce(f)(x,y,z)     = rho(x) f(y,z) - rho(y) f(x,z) + rho(z) f(x,y)
 *                      - f([x,y],z) + f([x,z],y) - f([y,z],x)
 *   delta1(f)        = f . d - d_V . f
 *   delta2(f)(x,y)   = f(d x, y) + f(x, d y) - d_V f(x,y)
 *   delta2_inv(f)(x,y) = f(d x, d y) - d_V^2 f(x,y)
 *   phi1(h)(x,y)     = d_V h([x,y]) + h(d [x,y]) - rho(d x) h(y) + rho(d y) h(x)
 *
 * The differentials combine them:
 *
 *   d1(f)       = (ce(f), -delta1(f), -delta1(f))
 *   d2(f,g,h)   = (ce(f), ce(g) + delta2(f), phi1(h) - delta2_inv(f))
 *
 * The third component of d1 reuses delta1: the degree-1 Inv operator has the
 * same closed form, which is exactly what makes the composite d2 . d1 vanish.
 * d2(d1(f)) = 0 holds identically and the matrix realizations multiply to the
 * zero matrix.
 */
#pragma once

#include <cstddef>
#include <vector>

#include "invder/cochain.hpp"
#include "invder/representation.hpp"

namespace invder {

Cochain2 ce_differential(const Representation& r, const Cochain1& f);
Cochain3 ce_differential(const Representation& r, const Cochain2& f);

Cochain1 delta1(const Representation& r, const Cochain1& f);
Cochain2 delta2(const Representation& r, const Cochain2& f);
Cochain2 delta2_inv(const Representation& r, const Cochain2& f);
Cochain2 phi1(const Representation& r, const Cochain1& h);

InvDerCochain2 d1(const Representation& r, const Cochain1& f);
InvDerCochain3 d2(const Representation& r, const InvDerCochain2& w);

/**
 * Full complex versus the compatibility reduction: LieDer drops the third
 * component everywhere (pairs (f, g) in degree 2, (a, b) in degree 3), leaving
 * the remaining blocks of the operator matrices bit-for-bit identical.
 */
enum class ComplexMode { InvDer, LieDer };

/** Matrix of d1 in flat coordinates; columns run over the degree-1 basis. */
Matrix d1_matrix(const Representation& r, ComplexMode mode = ComplexMode::InvDer);
/** Matrix of d2 in flat coordinates; d2_matrix * d1_matrix = 0. */
Matrix d2_matrix(const Representation& r, ComplexMode mode = ComplexMode::InvDer);

/** Degree-1 cohomology is the kernel of d1 (no quotient in this degree). */
struct H1Result {
    std::size_t dim = 0;
    std::vector<Cochain1> basis;
};
H1Result h1(const Representation& r);

/**
 * Degree-2 cohomology: Z2 = ker d2, B2 = im d1, H2 = Z2 / B2.
 *
 * The basis holds coset representatives: the Z2 kernel basis reduced against
 * an echelonized B2 and re-echelonized, so representatives are themselves
 * cocycles and the output is deterministic. B2 not contained in Z2 would
 * contradict the complex property and raises std::logic_error.
 */
struct H2Result {
    std::size_t z2_dim = 0;
    std::size_t b2_dim = 0;
    std::size_t dim = 0;
    std::vector<InvDerCochain2> basis;
};
H2Result h2(const Representation& r);

}  // namespace invder
