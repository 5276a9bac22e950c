#include "invder/qlinalg.hpp"

#include <cassert>
#include <sstream>

namespace invder {

Rational parse_rational(const std::string& text) {
    // Accepted grammar: -?digits(/-?digits)?  with nonzero denominator.
    if (text.empty()) throw InputError("empty rational literal");
    std::size_t slash = text.find('/');
    auto check_int = [&](std::size_t from, std::size_t to) {
        if (from >= to) throw InputError("malformed rational literal: " + text);
        std::size_t p = from;
        if (text[p] == '-') ++p;
        if (p >= to) throw InputError("malformed rational literal: " + text);
        for (; p < to; ++p) {
            if (text[p] < '0' || text[p] > '9')
                throw InputError("malformed rational literal: " + text);
        }
    };
    check_int(0, slash == std::string::npos ? text.size() : slash);
    if (slash != std::string::npos) check_int(slash + 1, text.size());
    Rational value(text, 10);
    if (value.get_den() == 0) throw InputError("zero denominator in rational: " + text);
    value.canonicalize();
    return value;
}

std::string rational_to_string(const Rational& value) {
    return value.get_str();
}

Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v(n, Rational(0));
    v[i] = 1;
    return v;
}

Vector add(const Vector& a, const Vector& b) {
    assert(a.size() == b.size());
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Vector sub(const Vector& a, const Vector& b) {
    assert(a.size() == b.size());
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Vector scale(const Rational& c, const Vector& v) {
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
    return out;
}

bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns) {
    if (columns.empty()) return Matrix(0, 0);
    Matrix m(columns[0].size(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        assert(columns[j].size() == m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) = columns[j][i];
    }
    return m;
}

Vector Matrix::column(std::size_t j) const {
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, j);
    return out;
}

Vector Matrix::row(std::size_t i) const {
    Vector out(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out[j] = at(i, j);
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

Matrix Matrix::operator+(const Matrix& other) const {
    assert(rows_ == other.rows_ && cols_ == other.cols_);
    Matrix out(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] + other.a_[k];
    return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
    assert(rows_ == other.rows_ && cols_ == other.cols_);
    Matrix out(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] - other.a_[k];
    return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
    assert(cols_ == other.rows_);
    Matrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& x = at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                if (other.at(k, j) == 0) continue;
                out.at(i, j) += x * other.at(k, j);
            }
        }
    }
    return out;
}

Matrix scale(const Rational& c, const Matrix& m) {
    Matrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = c * m.at(i, j);
    return out;
}

Vector operator*(const Matrix& m, const Vector& v) {
    assert(m.cols() == v.size());
    Vector out(m.rows(), Rational(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0 && v[j] != 0) out[i] += m.at(i, j) * v[j];
    return out;
}

EchelonForm reduced_row_echelon(Matrix m) {
    EchelonForm out;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m.at(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(p, j), m.at(r, j));
        Rational inv_pivot = 1 / m.at(r, c);
        for (std::size_t j = c; j < cols; ++j) m.at(r, j) *= inv_pivot;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rational factor = m.at(i, c);
            for (std::size_t j = c; j < cols; ++j) m.at(i, j) -= factor * m.at(r, j);
        }
        out.pivot_columns.push_back(c);
        ++r;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const Matrix& m) {
    return reduced_row_echelon(m).pivot_columns.size();
}

std::vector<Vector> kernel_basis(const Matrix& m) {
    const std::size_t cols = m.cols();
    EchelonForm ech = reduced_row_echelon(m);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : ech.pivot_columns) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vector v = zero_vector(cols);
        v[f] = 1;
        for (std::size_t r = 0; r < ech.pivot_columns.size(); ++r)
            v[ech.pivot_columns[r]] = -ech.reduced.at(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    if (b.size() != m.rows()) throw InputError("solve: right-hand side length mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    EchelonForm ech = reduced_row_echelon(std::move(aug));
    for (std::size_t c : ech.pivot_columns)
        if (c == m.cols()) return std::nullopt;
    Vector x = zero_vector(m.cols());
    for (std::size_t r = 0; r < ech.pivot_columns.size(); ++r)
        x[ech.pivot_columns[r]] = ech.reduced.at(r, m.cols());
    return x;
}

std::size_t quotient_dimension(const std::vector<Vector>& z, const std::vector<Vector>& b) {
    for (const auto& v : b) {
        if (!in_span(z, v))
            throw CheckError("quotient_dimension: subspace vector outside the ambient span");
    }
    auto span_dim = [](const std::vector<Vector>& vecs) -> std::size_t {
        if (vecs.empty()) return 0;
        Matrix rows(vecs.size(), vecs[0].size());
        for (std::size_t i = 0; i < vecs.size(); ++i)
            for (std::size_t j = 0; j < vecs[i].size(); ++j) rows.at(i, j) = vecs[i][j];
        return rank(rows);
    };
    return span_dim(z) - span_dim(b);
}

Rational determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw CheckError("determinant: matrix is not square");
    const std::size_t n = m.rows();
    Matrix w = m;
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && w.at(p, c) == 0) ++p;
        if (p == n) return Rational(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(w.at(p, j), w.at(c, j));
            det = -det;
        }
        det *= w.at(c, c);
        Rational inv_pivot = 1 / w.at(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (w.at(i, c) == 0) continue;
            Rational factor = w.at(i, c) * inv_pivot;
            for (std::size_t j = c; j < n; ++j) w.at(i, j) -= factor * w.at(c, j);
        }
    }
    return det;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw CheckError("inverse: matrix is not square");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    EchelonForm ech = reduced_row_echelon(std::move(aug));
    for (std::size_t i = 0; i < n; ++i)
        if (ech.pivot_columns.size() <= i || ech.pivot_columns[i] != i)
            throw CheckError("inverse: matrix is singular");
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = ech.reduced.at(i, n + j);
    return out;
}

bool in_span(const std::vector<Vector>& basis, const Vector& v) {
    if (is_zero(v)) return true;
    if (basis.empty()) return false;
    return solve(Matrix::from_columns(basis), v).has_value();
}

}  // namespace invder
