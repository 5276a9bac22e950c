#include "invder/deformation.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "invder/cohomology.hpp"
#include "invder/qlinalg.hpp"
#include "invder/rational.hpp"
#include "invder/representation.hpp"

namespace invder {

namespace {

Cochain2 bracket_as_cochain(const LieAlgebra& L) {
    Cochain2 out(L.dim(), L.dim());
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = i + 1; j < L.dim(); ++j) out.set_value(i, j, L.bracket_basis(i, j));
    return out;
}

void require_coefficients(const InvDerStructure& base, const std::vector<Cochain2>& mu,
                          const std::vector<Matrix>& delta) {
    if (mu.size() != delta.size())
        throw InputError("deformation: mu and delta lists must have equal length");
    for (const Cochain2& m : mu) {
        if (m.source_dim() != base.dim() || m.target_dim() != base.dim())
            throw InputError("deformation: mu coefficient has the wrong shape");
    }
    for (const Matrix& d : delta) {
        if (d.rows() != base.dim() || d.cols() != base.dim())
            throw InputError("deformation: delta coefficient has the wrong shape");
    }
}

}  // namespace

Deformation::Deformation(InvDerStructure base, std::vector<Cochain2> higher_mu,
                         std::vector<Matrix> higher_delta)
    : base_(std::move(base)) {
    require_coefficients(base_, higher_mu, higher_delta);
    mu_.push_back(bracket_as_cochain(base_.algebra()));
    delta_.push_back(base_.delta());
    for (Cochain2& m : higher_mu) mu_.push_back(std::move(m));
    for (Matrix& d : higher_delta) delta_.push_back(std::move(d));
}

Deformation Deformation::from_full(InvDerStructure base, std::vector<Cochain2> mu,
                                   std::vector<Matrix> delta) {
    if (mu.empty() || delta.empty())
        throw InputError("deformation: coefficient lists must include order 0");
    require_coefficients(base, mu, delta);
    if (mu.front() != bracket_as_cochain(base.algebra()) || delta.front() != base.delta())
        throw InputError("deformation: order-0 coefficients disagree with the base structure");
    return Deformation(std::move(base), std::vector<Cochain2>(mu.begin() + 1, mu.end()),
                       std::vector<Matrix>(delta.begin() + 1, delta.end()));
}

DeformationReport check_deformation(const Deformation& d) {
    const std::size_t n = d.base().dim(), N = d.order();
    DeformationReport report;
    auto record = [&](std::size_t ord, const char* eq, std::vector<std::size_t> idx, Vector res) {
        if (!is_zero(res)) {
            report.ok = false;
            report.violations.push_back({ord, eq, std::move(idx), std::move(res)});
        }
    };
    for (std::size_t ord = 0; ord <= N; ++ord) {
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a + 1; b < n; ++b) {
                for (std::size_t c = b + 1; c < n; ++c) {
                    Vector res = zero_vector(n);
                    for (std::size_t i = 0; i <= ord; ++i) {
                        const std::size_t j = ord - i;
                        const std::size_t cyc[3][3] = {{a, b, c}, {b, c, a}, {c, a, b}};
                        for (const auto& t : cyc) {
                            res = add(res, d.mu(i).evaluate(unit_vector(n, t[0]),
                                                            d.mu(j).value(t[1], t[2])));
                        }
                    }
                    record(ord, "jacobi", {a, b, c}, std::move(res));
                }
            }
        }
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a + 1; b < n; ++b) {
                const Vector ea = unit_vector(n, a), eb = unit_vector(n, b);
                Vector leib = zero_vector(n);
                for (std::size_t i = 0; i <= ord; ++i) {
                    const std::size_t j = ord - i;
                    leib = add(leib, d.delta(i) * d.mu(j).value(a, b));
                    leib = sub(leib, d.mu(i).evaluate(d.delta(j).column(a), eb));
                    leib = sub(leib, d.mu(i).evaluate(ea, d.delta(j).column(b)));
                }
                record(ord, "leibniz", {a, b}, std::move(leib));

                Vector inv = zero_vector(n);
                for (std::size_t i = 0; i <= ord; ++i) {
                    for (std::size_t j = 0; i + j <= ord; ++j) {
                        const std::size_t k = ord - i - j;
                        inv = add(inv, d.delta(i) * (d.delta(j) * d.mu(k).value(a, b)));
                        inv = sub(inv, d.mu(i).evaluate(d.delta(j).column(a),
                                                        d.delta(k).column(b)));
                    }
                }
                record(ord, "inv", {a, b}, std::move(inv));
            }
        }
    }
    std::sort(report.violations.begin(), report.violations.end(),
              [](const DeformationViolation& x, const DeformationViolation& y) {
                  if (x.order != y.order) return x.order < y.order;
                  if (x.equation != y.equation) return x.equation < y.equation;
                  return x.indices < y.indices;
              });
    return report;
}

namespace {

void require_order1_valid(const Deformation& d, const char* who) {
    if (d.order() < 1) throw InputError(std::string(who) + ": deformation has no order-1 data");
    DeformationReport report = check_deformation(d);
    for (const DeformationViolation& v : report.violations) {
        if (v.order <= 1) {
            throw CheckError(std::string(who) + ": deformation fails the " + v.equation +
                             " equation at order " + std::to_string(v.order));
        }
    }
}

}  // namespace

InvDerCochain2 infinitesimal(const Deformation& d) {
    require_order1_valid(d, "infinitesimal");
    InvDerCochain2 w{d.mu(1), d.delta(1), d.delta(1)};
    const InvDerCochain3 image = d2(adjoint_rep(d.base()), w);
    if (!image.a.is_zero() || !image.b.is_zero() || !image.c.is_zero())
        throw std::logic_error("order-1 data passed its equations but is not a cocycle");
    return w;
}

InvDerCochain2 equivalence_diff(const InvDerStructure& S, const Matrix& psi1) {
    if (psi1.rows() != S.dim() || psi1.cols() != S.dim())
        throw InputError("equivalence_diff: psi1 must be square of the algebra dimension");
    return d1(adjoint_rep(S), psi1);
}

Deformation apply_order1_equivalence(const Deformation& d, const Matrix& psi1) {
    require_order1_valid(d, "apply_order1_equivalence");
    const std::size_t n = d.base().dim();
    if (psi1.rows() != n || psi1.cols() != n)
        throw InputError("apply_order1_equivalence: psi1 must be square of the algebra dimension");
    const LieAlgebra& L = d.base().algebra();

    Cochain2 mu1 = d.mu(1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Vector v = mu1.value(i, j);
            v = add(v, bracket(L, psi1.column(i), unit_vector(n, j)));
            v = add(v, bracket(L, unit_vector(n, i), psi1.column(j)));
            v = sub(v, psi1 * L.bracket_basis(i, j));
            mu1.set_value(i, j, v);
        }
    }
    Matrix delta1 = d.delta(1) + d.base().delta() * psi1 - psi1 * d.base().delta();

    std::vector<Cochain2> higher_mu{std::move(mu1)};
    std::vector<Matrix> higher_delta{std::move(delta1)};
    for (std::size_t i = 2; i <= d.order(); ++i) {
        higher_mu.push_back(d.mu(i));
        higher_delta.push_back(d.delta(i));
    }
    return Deformation(d.base(), std::move(higher_mu), std::move(higher_delta));
}

}  // namespace invder
