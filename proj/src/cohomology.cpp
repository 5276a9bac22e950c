#include "invder/cohomology.hpp"

#include <cassert>
#include <stdexcept>

#include "invder/qlinalg.hpp"
#include "invder/rational.hpp"

namespace invder {

// --- cochain storage -------------------------------------------------------

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
    assert(i < j && j < n);
    // Lex rank of (i, j): pairs starting below i, then the offset past i.
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::pair<std::size_t, std::size_t> pair_from_index(std::size_t n, std::size_t p) {
    for (std::size_t i = 0;; ++i) {
        const std::size_t block = n - i - 1;
        if (p < block) return {i, i + 1 + p};
        p -= block;
    }
}

std::size_t triple_count(std::size_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

std::size_t triple_index(std::size_t n, std::size_t i, std::size_t j, std::size_t k) {
    assert(i < j && j < k && k < n);
    std::size_t rank = 0;
    for (std::size_t a = 0; a < i; ++a) rank += pair_count(n - a - 1);
    rank += pair_index(n - i - 1, j - i - 1, k - i - 1);
    return rank;
}

Vector Cochain2::value(std::size_t i, std::size_t j) const {
    if (i == j) return zero_vector(target_dim());
    const Vector v = grid_.column(i < j ? pair_index(n_, i, j) : pair_index(n_, j, i));
    return i < j ? v : scale(Rational(-1), v);
}

void Cochain2::set_value(std::size_t i, std::size_t j, const Vector& v) {
    assert(i < j && v.size() == target_dim());
    const std::size_t p = pair_index(n_, i, j);
    for (std::size_t t = 0; t < v.size(); ++t) grid_.at(t, p) = v[t];
}

Vector Cochain2::evaluate(const Vector& x, const Vector& y) const {
    assert(x.size() == n_ && y.size() == n_);
    Vector out = zero_vector(target_dim());
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) {
            const Rational c = x[i] * y[j] - x[j] * y[i];
            if (c == 0) continue;
            const std::size_t p = pair_index(n_, i, j);
            for (std::size_t t = 0; t < target_dim(); ++t) out[t] += c * grid_.at(t, p);
        }
    }
    return out;
}

Cochain2 add(const Cochain2& a, const Cochain2& b) {
    Cochain2 out = a;
    out.grid() = a.grid() + b.grid();
    return out;
}

Cochain2 sub(const Cochain2& a, const Cochain2& b) {
    Cochain2 out = a;
    out.grid() = a.grid() - b.grid();
    return out;
}

Cochain2 scale(const Rational& c, const Cochain2& f) {
    Cochain2 out = f;
    out.grid() = scale(c, f.grid());
    return out;
}

Vector Cochain3::value(std::size_t i, std::size_t j, std::size_t k) const {
    return grid_.column(triple_index(n_, i, j, k));
}

void Cochain3::set_value(std::size_t i, std::size_t j, std::size_t k, const Vector& v) {
    assert(v.size() == target_dim());
    const std::size_t p = triple_index(n_, i, j, k);
    for (std::size_t t = 0; t < v.size(); ++t) grid_.at(t, p) = v[t];
}

// --- flat coordinates ------------------------------------------------------

std::size_t cochain1_size(std::size_t n, std::size_t m) { return n * m; }
std::size_t cochain2_size(std::size_t n, std::size_t m) { return pair_count(n) * m; }
std::size_t invder2_size(std::size_t n, std::size_t m) {
    return cochain2_size(n, m) + 2 * cochain1_size(n, m);
}
std::size_t invder3_size(std::size_t n, std::size_t m) {
    return triple_count(n) * m + 2 * cochain2_size(n, m);
}

Vector flatten_cochain1(const Cochain1& f) {
    Vector v(f.rows() * f.cols());
    for (std::size_t j = 0; j < f.cols(); ++j)
        for (std::size_t t = 0; t < f.rows(); ++t) v[j * f.rows() + t] = f.at(t, j);
    return v;
}

namespace {

Vector flatten_grid(const Matrix& grid) {
    Vector v(grid.rows() * grid.cols());
    for (std::size_t p = 0; p < grid.cols(); ++p)
        for (std::size_t t = 0; t < grid.rows(); ++t) v[p * grid.rows() + t] = grid.at(t, p);
    return v;
}

void append(Vector& dst, const Vector& src) { dst.insert(dst.end(), src.begin(), src.end()); }

}  // namespace

Vector flatten_cochain2(const Cochain2& f) { return flatten_grid(f.grid()); }

Vector flatten_invder2(const InvDerCochain2& w) {
    Vector v = flatten_cochain2(w.f);
    append(v, flatten_cochain1(w.g));
    append(v, flatten_cochain1(w.h));
    return v;
}

Vector flatten_invder3(const InvDerCochain3& w) {
    Vector v = flatten_grid(w.a.grid());
    append(v, flatten_cochain2(w.b));
    append(v, flatten_cochain2(w.c));
    return v;
}

Cochain1 unflatten_cochain1(std::size_t n, std::size_t m, const Vector& v) {
    assert(v.size() == cochain1_size(n, m));
    Cochain1 f(m, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t t = 0; t < m; ++t) f.at(t, j) = v[j * m + t];
    return f;
}

Cochain2 unflatten_cochain2(std::size_t n, std::size_t m, const Vector& v) {
    assert(v.size() == cochain2_size(n, m));
    Cochain2 f(n, m);
    for (std::size_t p = 0; p < pair_count(n); ++p)
        for (std::size_t t = 0; t < m; ++t) f.grid().at(t, p) = v[p * m + t];
    return f;
}

InvDerCochain2 unflatten_invder2(std::size_t n, std::size_t m, const Vector& v) {
    assert(v.size() == invder2_size(n, m));
    const std::size_t c2 = cochain2_size(n, m), c1 = cochain1_size(n, m);
    const Vector vf(v.begin(), v.begin() + c2);
    const Vector vg(v.begin() + c2, v.begin() + c2 + c1);
    const Vector vh(v.begin() + c2 + c1, v.end());
    return {unflatten_cochain2(n, m, vf), unflatten_cochain1(n, m, vg),
            unflatten_cochain1(n, m, vh)};
}

// --- operators -------------------------------------------------------------

namespace {

void require_cochain1(const Representation& r, const Cochain1& f) {
    if (f.rows() != r.target_dim() || f.cols() != r.base_dim())
        throw InputError("cochain of degree 1 has the wrong shape");
}

void require_cochain2(const Representation& r, const Cochain2& f) {
    if (f.target_dim() != r.target_dim() || f.source_dim() != r.base_dim())
        throw InputError("cochain of degree 2 has the wrong shape");
}

}  // namespace

Cochain2 ce_differential(const Representation& r, const Cochain1& f) {
    require_cochain1(r, f);
    const std::size_t n = r.base_dim();
    const LieAlgebra& L = r.base().algebra();
    Cochain2 out(n, r.target_dim());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Vector v = sub(sub(r.rho_basis(i) * f.column(j), r.rho_basis(j) * f.column(i)),
                           f * L.bracket_basis(i, j));
            out.set_value(i, j, v);
        }
    }
    return out;
}

Cochain3 ce_differential(const Representation& r, const Cochain2& f) {
    require_cochain2(r, f);
    const std::size_t n = r.base_dim();
    const LieAlgebra& L = r.base().algebra();
    Cochain3 out(n, r.target_dim());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                const Vector ei = unit_vector(n, i), ej = unit_vector(n, j),
                             ek = unit_vector(n, k);
                Vector v = r.rho_basis(i) * f.value(j, k);
                v = sub(v, r.rho_basis(j) * f.value(i, k));
                v = add(v, r.rho_basis(k) * f.value(i, j));
                v = sub(v, f.evaluate(L.bracket_basis(i, j), ek));
                v = add(v, f.evaluate(L.bracket_basis(i, k), ej));
                v = sub(v, f.evaluate(L.bracket_basis(j, k), ei));
                out.set_value(i, j, k, v);
            }
        }
    }
    return out;
}

Cochain1 delta1(const Representation& r, const Cochain1& f) {
    require_cochain1(r, f);
    return f * r.base().delta() - r.delta_v() * f;
}

Cochain2 delta2(const Representation& r, const Cochain2& f) {
    require_cochain2(r, f);
    const std::size_t n = r.base_dim();
    const Matrix& dl = r.base().delta();
    Cochain2 out(n, r.target_dim());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Vector v = add(f.evaluate(dl.column(i), unit_vector(n, j)),
                           f.evaluate(unit_vector(n, i), dl.column(j)));
            v = sub(v, r.delta_v() * f.value(i, j));
            out.set_value(i, j, v);
        }
    }
    return out;
}

Cochain2 delta2_inv(const Representation& r, const Cochain2& f) {
    require_cochain2(r, f);
    const std::size_t n = r.base_dim();
    const Matrix& dl = r.base().delta();
    const Matrix dv2 = r.delta_v() * r.delta_v();
    Cochain2 out(n, r.target_dim());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            out.set_value(i, j,
                          sub(f.evaluate(dl.column(i), dl.column(j)), dv2 * f.value(i, j)));
        }
    }
    return out;
}

Cochain2 phi1(const Representation& r, const Cochain1& h) {
    require_cochain1(r, h);
    const std::size_t n = r.base_dim();
    const LieAlgebra& L = r.base().algebra();
    const Matrix& dl = r.base().delta();
    Cochain2 out(n, r.target_dim());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vector bij = L.bracket_basis(i, j);
            Vector v = add(r.delta_v() * (h * bij), h * (dl * bij));
            v = sub(v, r.rho_of(dl.column(i)) * h.column(j));
            v = add(v, r.rho_of(dl.column(j)) * h.column(i));
            out.set_value(i, j, v);
        }
    }
    return out;
}

InvDerCochain2 d1(const Representation& r, const Cochain1& f) {
    const Cochain1 neg = scale(Rational(-1), delta1(r, f));
    return {ce_differential(r, f), neg, neg};
}

InvDerCochain3 d2(const Representation& r, const InvDerCochain2& w) {
    require_cochain2(r, w.f);
    require_cochain1(r, w.g);
    require_cochain1(r, w.h);
    return {ce_differential(r, w.f), add(ce_differential(r, w.g), delta2(r, w.f)),
            sub(phi1(r, w.h), delta2_inv(r, w.f))};
}

// --- matrix realizations and cohomology ------------------------------------

namespace {

// LieDer keeps the (f, g) part of degree 2 and the (a, b) part of degree 3.
Vector flatten_domain(const InvDerCochain2& w, ComplexMode mode) {
    if (mode == ComplexMode::InvDer) return flatten_invder2(w);
    Vector v = flatten_cochain2(w.f);
    append(v, flatten_cochain1(w.g));
    return v;
}

}  // namespace

Matrix d1_matrix(const Representation& r, ComplexMode mode) {
    const std::size_t n = r.base_dim(), m = r.target_dim();
    const std::size_t cols = cochain1_size(n, m);
    std::vector<Vector> columns(cols);
    for (std::size_t t = 0; t < cols; ++t) {
        Vector e(cols, Rational(0));
        e[t] = 1;
        columns[t] = flatten_domain(d1(r, unflatten_cochain1(n, m, e)), mode);
    }
    if (cols == 0) {
        return Matrix(mode == ComplexMode::InvDer ? invder2_size(n, m)
                                                  : cochain2_size(n, m) + cochain1_size(n, m),
                      0);
    }
    return Matrix::from_columns(columns);
}

Matrix d2_matrix(const Representation& r, ComplexMode mode) {
    const std::size_t n = r.base_dim(), m = r.target_dim();
    const std::size_t cols =
        mode == ComplexMode::InvDer ? invder2_size(n, m) : cochain2_size(n, m) + cochain1_size(n, m);
    const std::size_t rows = mode == ComplexMode::InvDer
                                 ? invder3_size(n, m)
                                 : triple_count(n) * m + cochain2_size(n, m);
    Matrix out(rows, cols);
    for (std::size_t t = 0; t < cols; ++t) {
        Vector e(invder2_size(n, m), Rational(0));
        e[t] = 1;  // LieDer coordinates are a prefix, so h stays zero there
        const InvDerCochain3 image = d2(r, unflatten_invder2(n, m, e));
        Vector flat = flatten_grid(image.a.grid());
        append(flat, flatten_cochain2(image.b));
        if (mode == ComplexMode::InvDer) append(flat, flatten_cochain2(image.c));
        for (std::size_t row = 0; row < rows; ++row) out.at(row, t) = flat[row];
    }
    return out;
}

H1Result h1(const Representation& r) {
    H1Result out;
    for (const Vector& v : kernel_basis(d1_matrix(r))) {
        out.basis.push_back(unflatten_cochain1(r.base_dim(), r.target_dim(), v));
    }
    out.dim = out.basis.size();
    return out;
}

H2Result h2(const Representation& r) {
    const std::size_t n = r.base_dim(), m = r.target_dim();
    const std::vector<Vector> z2 = kernel_basis(d2_matrix(r));
    const Matrix d1m = d1_matrix(r);
    std::vector<Vector> b2;
    for (std::size_t j = 0; j < d1m.cols(); ++j) b2.push_back(d1m.column(j));

    H2Result out;
    out.z2_dim = z2.size();
    Matrix b2rows(b2.size(), invder2_size(n, m));
    for (std::size_t i = 0; i < b2.size(); ++i)
        for (std::size_t j = 0; j < b2[i].size(); ++j) b2rows.at(i, j) = b2[i][j];
    const EchelonForm b2ech = reduced_row_echelon(b2rows);
    out.b2_dim = b2ech.pivot_columns.size();

    try {
        out.dim = quotient_dimension(z2, b2);
    } catch (const CheckError&) {
        throw std::logic_error("image of d1 escapes the kernel of d2");
    }

    // Representatives: strip each kernel vector of its component along the
    // echelonized boundary space, then echelonize what is left.
    Matrix reduced(z2.size(), invder2_size(n, m));
    for (std::size_t i = 0; i < z2.size(); ++i) {
        Vector v = z2[i];
        for (std::size_t rpos = 0; rpos < b2ech.pivot_columns.size(); ++rpos) {
            const std::size_t p = b2ech.pivot_columns[rpos];
            if (v[p] == 0) continue;
            const Rational c = v[p];
            for (std::size_t j = 0; j < v.size(); ++j)
                v[j] -= c * b2ech.reduced.at(rpos, j);
        }
        for (std::size_t j = 0; j < v.size(); ++j) reduced.at(i, j) = v[j];
    }
    const EchelonForm rep = reduced_row_echelon(reduced);
    if (rep.pivot_columns.size() != out.dim)
        throw std::logic_error("representative count disagrees with the quotient dimension");
    for (std::size_t i = 0; i < out.dim; ++i) {
        out.basis.push_back(unflatten_invder2(n, m, rep.reduced.row(i)));
    }
    return out;
}

}  // namespace invder
