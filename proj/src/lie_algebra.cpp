#include "invder/lie_algebra.hpp"

#include <utility>

#include "invder/qlinalg.hpp"
#include "invder/rational.hpp"

namespace invder {

namespace {

void require_shape(std::size_t n, const std::vector<Rational>& c) {
    if (c.size() != n * n * n) {
        throw InputError("structure constants: expected " + std::to_string(n * n * n) +
                         " entries, got " + std::to_string(c.size()));
    }
}

const Rational& cc(std::size_t n, const std::vector<Rational>& c, std::size_t i, std::size_t j,
                   std::size_t k) {
    return c[(i * n + j) * n + k];
}

Vector raw_bracket_basis(std::size_t n, const std::vector<Rational>& c, std::size_t i,
                         std::size_t j) {
    Vector out(n, Rational(0));
    for (std::size_t k = 0; k < n; ++k) out[k] = cc(n, c, i, j, k);
    return out;
}

Vector raw_bracket(std::size_t n, const std::vector<Rational>& c, const Vector& x,
                   const Vector& y) {
    Vector out(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j] == 0) continue;
            const Rational s = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k) out[k] += s * cc(n, c, i, j, k);
        }
    }
    return out;
}

void check_antisymmetry(std::size_t n, const std::vector<Rational>& c, ValidationReport& report) {
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                const Rational r = cc(n, c, i, j, k) + (i == j ? Rational(0) : cc(n, c, j, i, k));
                if (i == j ? cc(n, c, i, i, k) != 0 : r != 0) {
                    report.ok = false;
                    report.issues.push_back(
                        {"antisymmetry", {i, j, k}, {i == j ? cc(n, c, i, i, k) : r}});
                }
            }
        }
    }
}

void check_jacobi(std::size_t n, const std::vector<Rational>& c, ValidationReport& report) {
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                Vector r =
                    add(raw_bracket(n, c, raw_bracket_basis(n, c, i, j), unit_vector(n, k)),
                        add(raw_bracket(n, c, raw_bracket_basis(n, c, j, k), unit_vector(n, i)),
                            raw_bracket(n, c, raw_bracket_basis(n, c, k, i), unit_vector(n, j))));
                if (!is_zero(r)) {
                    report.ok = false;
                    report.issues.push_back({"jacobi", {i, j, k}, std::move(r)});
                }
            }
        }
    }
}

}  // namespace

ValidationReport validate_lie(std::size_t n, const std::vector<Rational>& c) {
    require_shape(n, c);
    ValidationReport report;
    check_antisymmetry(n, c, report);
    check_jacobi(n, c, report);
    return report;
}

ValidationReport validate_structure(std::size_t n, const std::vector<Rational>& c,
                                    const Matrix& delta) {
    require_shape(n, c);
    if (delta.rows() != n || delta.cols() != n) {
        throw InputError("delta: expected a " + std::to_string(n) + "x" + std::to_string(n) +
                         " matrix");
    }
    ValidationReport report = validate_lie(n, c);
    if (determinant(delta) == 0) {
        report.ok = false;
        report.issues.push_back({"delta_invertible", {}, {}});
    }
    const Matrix delta2 = delta * delta;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vector di = delta.column(i) /* delta e_i */, dj = delta.column(j);
            const Vector bij = raw_bracket_basis(n, c, i, j);
            Vector leib = sub(delta * bij, add(raw_bracket(n, c, di, unit_vector(n, j)),
                                               raw_bracket(n, c, unit_vector(n, i), dj)));
            if (!is_zero(leib)) {
                report.ok = false;
                report.issues.push_back({"leibniz", {i, j}, std::move(leib)});
            }
            Vector inv = sub(raw_bracket(n, c, di, dj), delta2 * bij);
            if (!is_zero(inv)) {
                report.ok = false;
                report.issues.push_back({"inv_condition", {i, j}, std::move(inv)});
            }
        }
    }
    return report;
}

LieAlgebra::LieAlgebra(std::size_t n, std::vector<Rational> constants,
                       std::vector<std::string> basis_names)
    : n_(n), c_(std::move(constants)), names_(std::move(basis_names)) {
    ValidationReport report = validate_lie(n_, c_);
    if (!report.ok) {
        const ValidationIssue& first = report.issues.front();
        std::string where;
        for (std::size_t v : first.indices) where += " " + std::to_string(v + 1);
        throw CheckError("not a Lie algebra: " + first.check + " fails at" + where);
    }
    if (names_.empty()) {
        for (std::size_t i = 0; i < n_; ++i) names_.push_back("e" + std::to_string(i + 1));
    } else if (names_.size() != n_) {
        throw InputError("basis names: expected " + std::to_string(n_) + " entries");
    }
}

Vector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
    return raw_bracket_basis(n_, c_, i, j);
}

Vector bracket(const LieAlgebra& L, const Vector& x, const Vector& y) {
    if (x.size() != L.dim() || y.size() != L.dim()) {
        throw InputError("bracket: vector length does not match the algebra dimension");
    }
    return raw_bracket(L.dim(), L.constants(), x, y);
}

Matrix ad_map(const LieAlgebra& L, const Vector& x, bool acting_from_right) {
    const std::size_t n = L.dim();
    std::vector<Vector> cols(n);
    for (std::size_t j = 0; j < n; ++j) {
        const Vector ej = unit_vector(n, j);
        cols[j] = acting_from_right ? bracket(L, ej, x) : bracket(L, x, ej);
    }
    return Matrix::from_columns(cols);
}

bool is_derivation(const LieAlgebra& L, const Matrix& d) {
    const std::size_t n = L.dim();
    if (d.rows() != n || d.cols() != n) {
        throw InputError("is_derivation: expected a square matrix of the algebra dimension");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vector lhs = d * L.bracket_basis(i, j);
            const Vector rhs = add(bracket(L, d.column(i), unit_vector(n, j)),
                                   bracket(L, unit_vector(n, i), d.column(j)));
            if (lhs != rhs) return false;
        }
    }
    return true;
}

std::vector<Matrix> derivation_space(const LieAlgebra& L) {
    const std::size_t n = L.dim();
    // Unknowns D[a][b] flattened as a*n + b; one row per (i < j, component a):
    // (D [e_i,e_j] - [D e_i, e_j] - [e_i, D e_j])_a = 0.
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t a = 0; a < n; ++a) {
                Vector row(n * n, Rational(0));
                for (std::size_t k = 0; k < n; ++k) {
                    row[a * n + k] += L.c(i, j, k);
                    row[k * n + i] -= L.c(k, j, a);
                    row[k * n + j] -= L.c(i, k, a);
                }
                rows.push_back(std::move(row));
            }
        }
    }
    Matrix system(rows.size(), n * n);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t t = 0; t < n * n; ++t) system.at(r, t) = rows[r][t];
    std::vector<Matrix> basis;
    for (const Vector& v : kernel_basis(system)) {
        Matrix d(n, n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) d.at(a, b) = v[a * n + b];
        basis.push_back(std::move(d));
    }
    return basis;
}

std::string InvDerCheck::first_failure() const {
    if (!derivation) return "derivation";
    if (!invertible) return "invertible";
    if (!inv_condition) return "inv_condition";
    return "";
}

InvDerCheck check_invder(const LieAlgebra& L, const Matrix& d) {
    const std::size_t n = L.dim();
    if (d.rows() != n || d.cols() != n) {
        throw InputError("check_invder: expected a square matrix of the algebra dimension");
    }
    InvDerCheck out;
    out.derivation = is_derivation(L, d);
    out.invertible = determinant(d) != 0;
    out.inv_condition = true;
    const Matrix d2 = d * d;
    for (std::size_t i = 0; i < n && out.inv_condition; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (bracket(L, d.column(i), d.column(j)) != d2 * L.bracket_basis(i, j)) {
                out.inv_condition = false;
                break;
            }
        }
    }
    return out;
}

bool inverse_is_derivation(const LieAlgebra& L, const Matrix& d) {
    return is_derivation(L, inverse(d));
}

InvDerStructure InvDerStructure::validated(LieAlgebra algebra, Matrix delta) {
    InvDerCheck check = check_invder(algebra, delta);
    if (!check.ok()) {
        throw CheckError("delta is not an invertible derivation with the Inv condition: " +
                         check.first_failure() + " fails");
    }
    return InvDerStructure(std::move(algebra), std::move(delta));
}

LieAlgebra twist(const InvDerStructure& S) {
    const std::size_t n = S.dim();
    std::vector<Rational> c(n * n * n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Vector v = S.delta() * S.algebra().bracket_basis(i, j);
            for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = v[k];
        }
    }
    return LieAlgebra(n, std::move(c), S.algebra().basis_names());
}

bool check_cyclic_identity(const InvDerStructure& S) {
    const std::size_t n = S.dim();
    const LieAlgebra& L = S.algebra();
    const LieAlgebra T = twist(S);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                const Vector ei = unit_vector(n, i), ej = unit_vector(n, j),
                             ek = unit_vector(n, k);
                const Vector lhs = add(bracket(L, ei, T.bracket_basis(j, k)),
                                       add(bracket(L, ej, T.bracket_basis(k, i)),
                                           bracket(L, ek, T.bracket_basis(i, j))));
                const Vector rhs =
                    add(bracket(L, S.delta().column(i), L.bracket_basis(j, k)),
                        add(bracket(L, S.delta().column(j), L.bracket_basis(k, i)),
                            bracket(L, S.delta().column(k), L.bracket_basis(i, j))));
                if (lhs != rhs || !is_zero(lhs)) return false;
            }
        }
    }
    return true;
}

std::vector<Matrix> delta_derivation_space(const InvDerStructure& S) {
    const std::size_t n = S.dim();
    const LieAlgebra& L = S.algebra();
    const Matrix& dl = S.delta();
    const Matrix dl2 = dl * dl;
    std::vector<Vector> rows;
    // (D dl - dl^2 D) e_b = 0, one row per matrix entry (a, b).
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            Vector row(n * n, Rational(0));
            for (std::size_t k = 0; k < n; ++k) {
                row[a * n + k] += dl.at(k, b);
                row[k * n + b] -= dl2.at(a, k);
            }
            rows.push_back(std::move(row));
        }
    }
    // (D [e_i,e_j] - [D e_i, dl e_j] - [dl e_i, D e_j])_a = 0.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t a = 0; a < n; ++a) {
                Vector row(n * n, Rational(0));
                for (std::size_t k = 0; k < n; ++k) row[a * n + k] += L.c(i, j, k);
                for (std::size_t b = 0; b < n; ++b) {
                    Rational s1(0), s2(0);
                    for (std::size_t l = 0; l < n; ++l) {
                        s1 += dl.at(l, j) * L.c(b, l, a);
                        s2 += dl.at(l, i) * L.c(l, b, a);
                    }
                    row[b * n + i] -= s1;
                    row[b * n + j] -= s2;
                }
                rows.push_back(std::move(row));
            }
        }
    }
    Matrix system(rows.size(), n * n);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t t = 0; t < n * n; ++t) system.at(r, t) = rows[r][t];
    std::vector<Matrix> basis;
    for (const Vector& v : kernel_basis(system)) {
        Matrix d(n, n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) d.at(a, b) = v[a * n + b];
        basis.push_back(std::move(d));
    }
    return basis;
}

bool is_homomorphism(const InvDerStructure& S1, const InvDerStructure& S2, const Matrix& phi) {
    const std::size_t n1 = S1.dim(), n2 = S2.dim();
    if (phi.rows() != n2 || phi.cols() != n1) {
        throw InputError("is_homomorphism: expected a " + std::to_string(n2) + "x" +
                         std::to_string(n1) + " matrix");
    }
    if (phi * S1.delta() != S2.delta() * phi) return false;
    for (std::size_t i = 0; i < n1; ++i) {
        for (std::size_t j = i + 1; j < n1; ++j) {
            if (phi * S1.algebra().bracket_basis(i, j) !=
                bracket(S2.algebra(), phi.column(i), phi.column(j)))
                return false;
        }
    }
    return true;
}

}  // namespace invder
