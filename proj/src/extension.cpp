#include "invder/extension.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "invder/cohomology.hpp"
#include "invder/qlinalg.hpp"
#include "invder/representation.hpp"

namespace invder {

namespace {

void require_cocycle_shapes(const InvDerStructure& S, const ExtensionCocycle& e) {
    const std::size_t n = S.dim();
    const std::size_t m = e.v_dim;
    if (e.delta_v.rows() != m || e.delta_v.cols() != m) {
        throw InputError("extension cocycle: delta_v must be v_dim x v_dim");
    }
    if (e.gamma.source_dim() != n || e.gamma.target_dim() != m) {
        throw InputError("extension cocycle: gamma must map pairs of the base into V");
    }
    if (e.chi.rows() != m || e.chi.cols() != n) {
        throw InputError("extension cocycle: chi must be v_dim x dim");
    }
    if (determinant(e.delta_v) == 0) {
        throw CheckError("extension cocycle: delta_v must be invertible");
    }
}

}  // namespace

ExtensionCocycle ExtensionCocycle::zero(std::size_t n, std::size_t m, Matrix delta_v) {
    return ExtensionCocycle(m, std::move(delta_v), Cochain2(n, m), Matrix(m, n));
}

ExtensionReport check_extension_cocycle(const InvDerStructure& S, const ExtensionCocycle& e) {
    require_cocycle_shapes(S, e);
    const LieAlgebra& L = S.algebra();
    const Matrix& d = S.delta();
    const Matrix& dv = e.delta_v;
    const std::size_t n = S.dim();

    ExtensionReport report;
    auto note = [&](const char* eq, std::vector<std::size_t> idx, Vector res) {
        report.ok = false;
        report.issues.push_back({eq, std::move(idx), std::move(res)});
    };

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                Vector res = add(e.gamma.evaluate(L.bracket_basis(i, j), unit_vector(n, k)),
                                 add(e.gamma.evaluate(L.bracket_basis(j, k), unit_vector(n, i)),
                                     e.gamma.evaluate(L.bracket_basis(k, i), unit_vector(n, j))));
                if (!is_zero(res)) note("cyclic_bracket", {i, j, k}, std::move(res));
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Vector res = add(e.chi * L.bracket_basis(i, j), dv * e.gamma.value(i, j));
            res = sub(res, e.gamma.evaluate(d.column(i), unit_vector(n, j)));
            res = sub(res, e.gamma.evaluate(unit_vector(n, i), d.column(j)));
            if (!is_zero(res)) note("leibniz_compat", {i, j}, std::move(res));
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Vector res = add(e.chi * (d * L.bracket_basis(i, j)), dv * (e.chi * L.bracket_basis(i, j)));
            res = add(res, dv * (dv * e.gamma.value(i, j)));
            res = sub(res, e.gamma.evaluate(d.column(i), d.column(j)));
            if (!is_zero(res)) note("inv_compat", {i, j}, std::move(res));
        }
    }

    // The three equations are the components of d2 on (gamma, chi, chi) over
    // the trivial representation, so both routes must reach the same verdict.
    InvDerCochain3 image = d2(trivial_rep(S, e.v_dim, dv), {e.gamma, e.chi, e.chi});
    report.in_cocycle_space = image.a.is_zero() && image.b.is_zero() && image.c.is_zero();
    if (report.in_cocycle_space != report.ok) {
        throw std::logic_error("check_extension_cocycle: equation checks disagree with d2");
    }
    return report;
}

CentralExtension CentralExtension::from_total(InvDerStructure total, std::size_t base_dim) {
    const std::size_t N = total.dim();
    if (base_dim > N) {
        throw InputError("central extension: base_dim exceeds the total dimension");
    }
    const std::size_t n = base_dim;
    const LieAlgebra& T = total.algebra();

    for (std::size_t i = n; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            if (!is_zero(T.bracket_basis(i, j))) {
                throw CheckError("central extension: the V block is not central");
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = n; j < N; ++j) {
            if (total.delta().at(i, j) != 0) {
                throw CheckError("central extension: the map sends V outside V");
            }
        }
    }

    // With V central and the map block-triangular, every axiom projects onto
    // the leading blocks, so this validation can only pass.
    std::vector<Rational> bc(n * n * n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                bc[(i * n + j) * n + k] = T.c(i, j, k);
            }
        }
    }
    Matrix bd(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            bd.at(i, j) = total.delta().at(i, j);
        }
    }
    InvDerStructure base = InvDerStructure::validated(LieAlgebra(n, std::move(bc)), std::move(bd));
    return CentralExtension(std::move(total), base_dim, std::move(base));
}

Matrix CentralExtension::delta_v() const {
    const std::size_t n = base_dim_;
    const std::size_t m = v_dim();
    Matrix dv(m, m);
    for (std::size_t s = 0; s < m; ++s) {
        for (std::size_t t = 0; t < m; ++t) {
            dv.at(s, t) = total_.delta().at(n + s, n + t);
        }
    }
    return dv;
}

CentralExtension build_extension(const InvDerStructure& S, const ExtensionCocycle& e) {
    ExtensionReport report = check_extension_cocycle(S, e);
    if (!report.ok) {
        throw CheckError("build_extension: data fails " + report.issues.front().check);
    }
    const std::size_t n = S.dim();
    const std::size_t m = e.v_dim;
    const std::size_t N = n + m;
    const LieAlgebra& L = S.algebra();

    std::vector<Rational> c(N * N * N, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                c[(i * N + j) * N + k] = L.c(i, j, k);
                c[(j * N + i) * N + k] = -L.c(i, j, k);
            }
            Vector gv = e.gamma.value(i, j);
            for (std::size_t t = 0; t < m; ++t) {
                c[(i * N + j) * N + (n + t)] = gv[t];
                c[(j * N + i) * N + (n + t)] = -gv[t];
            }
        }
    }
    Matrix dhat(N, N);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            dhat.at(i, j) = S.delta().at(i, j);
        }
    }
    for (std::size_t t = 0; t < m; ++t) {
        for (std::size_t j = 0; j < n; ++j) {
            dhat.at(n + t, j) = e.chi.at(t, j);
        }
        for (std::size_t s = 0; s < m; ++s) {
            dhat.at(n + t, n + s) = e.delta_v.at(t, s);
        }
    }

    // The cocycle equations are exactly what validation re-derives, so a
    // failure past this point is an internal error, not an input condition.
    try {
        InvDerStructure total = InvDerStructure::validated(LieAlgebra(N, std::move(c)), std::move(dhat));
        return CentralExtension::from_total(std::move(total), n);
    } catch (const CheckError& err) {
        throw std::logic_error(std::string("build_extension: built structure failed validation: ") +
                               err.what());
    }
}

ExtensionCocycle extract_cocycle(const CentralExtension& ext, const Matrix& section) {
    const std::size_t n = ext.base_dim();
    const std::size_t m = ext.v_dim();
    const std::size_t N = n + m;
    if (section.rows() != N || section.cols() != n) {
        throw InputError("extract_cocycle: section must be (base_dim + v_dim) x base_dim");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (section.at(i, j) != Rational(i == j ? 1 : 0)) {
                throw CheckError("extract_cocycle: the top block of the section is not the identity");
            }
        }
    }

    const LieAlgebra& T = ext.total().algebra();
    // Both defects live in the V block whenever the extension invariants hold;
    // an escaping value means the total space was tampered with.
    auto v_part = [&](const Vector& w, const char* what) {
        for (std::size_t k = 0; k < n; ++k) {
            if (w[k] != 0) {
                throw CheckError(std::string("extract_cocycle: ") + what + " escapes the V block");
            }
        }
        Vector v(m, Rational(0));
        for (std::size_t t = 0; t < m; ++t) v[t] = w[n + t];
        return v;
    };

    Cochain2 gamma(n, m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Vector w = bracket(T, section.column(i), section.column(j));
            w = sub(w, section * ext.base().algebra().bracket_basis(i, j));
            gamma.set_value(i, j, v_part(w, "a bracket defect"));
        }
    }
    Cochain1 chi(m, n);
    for (std::size_t i = 0; i < n; ++i) {
        Vector w = ext.total().delta() * section.column(i);
        w = sub(w, section * ext.base().delta().column(i));
        Vector v = v_part(w, "a map defect");
        for (std::size_t t = 0; t < m; ++t) chi.at(t, i) = v[t];
    }
    return ExtensionCocycle(m, ext.delta_v(), std::move(gamma), std::move(chi));
}

ExtensionCocycle extract_cocycle(const CentralExtension& ext) {
    const std::size_t n = ext.base_dim();
    Matrix canonical(n + ext.v_dim(), n);
    for (std::size_t i = 0; i < n; ++i) canonical.at(i, i) = 1;
    return extract_cocycle(ext, canonical);
}

std::optional<Matrix> same_class(const InvDerStructure& S, const ExtensionCocycle& e1,
                                 const ExtensionCocycle& e2) {
    require_cocycle_shapes(S, e1);
    require_cocycle_shapes(S, e2);
    if (e1.v_dim != e2.v_dim || !(e1.delta_v == e2.delta_v)) {
        throw InputError("same_class: the cocycles carry different V data");
    }
    const std::size_t n = S.dim();
    const std::size_t m = e1.v_dim;

    Matrix coboundary = d1_matrix(trivial_rep(S, m, e1.delta_v));
    InvDerCochain2 diff{sub(e1.gamma, e2.gamma), e1.chi - e2.chi, e1.chi - e2.chi};
    std::optional<Vector> phi_flat = solve(coboundary, flatten_invder2(diff));
    if (!phi_flat) return std::nullopt;
    return unflatten_cochain1(n, m, *phi_flat);
}

Matrix extension_isomorphism(const InvDerStructure& S, const ExtensionCocycle& e1,
                             const ExtensionCocycle& e2, const Matrix& phi) {
    const std::size_t n = S.dim();
    const std::size_t m = e1.v_dim;
    const std::size_t N = n + m;
    if (phi.rows() != m || phi.cols() != n) {
        throw InputError("extension_isomorphism: phi must be v_dim x dim");
    }
    CentralExtension first = build_extension(S, e1);
    CentralExtension second = build_extension(S, e2);

    Matrix xi = Matrix::identity(N);
    for (std::size_t t = 0; t < m; ++t) {
        for (std::size_t j = 0; j < n; ++j) {
            xi.at(n + t, j) = phi.at(t, j);
        }
    }

    Matrix inclusion(N, m);
    for (std::size_t t = 0; t < m; ++t) inclusion.at(n + t, t) = 1;
    Matrix projection(n, N);
    for (std::size_t i = 0; i < n; ++i) projection.at(i, i) = 1;

    if (!(xi * inclusion == inclusion)) {
        throw CheckError("extension_isomorphism: xi does not commute with the inclusion of V");
    }
    if (!(projection * xi == projection)) {
        throw CheckError("extension_isomorphism: xi does not cover the identity on the base");
    }
    if (!is_homomorphism(first.total(), second.total(), xi)) {
        throw CheckError("extension_isomorphism: xi is not a homomorphism of the built extensions");
    }
    return xi;
}

}  // namespace invder
