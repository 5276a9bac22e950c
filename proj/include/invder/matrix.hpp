#pragma once

#include <cstddef>
#include <vector>

#include "invder/rational.hpp"

namespace invder {

using Vector = std::vector<Rational>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Rational& c, const Vector& v);
bool is_zero(const Vector& v);

// Dense row-major rational matrix. All entries are canonical rationals.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    static Matrix identity(std::size_t n);
    static Matrix from_columns(const std::vector<Vector>& columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vector column(std::size_t j) const;
    Vector row(std::size_t i) const;
    Matrix transpose() const;
    bool is_zero() const;

    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix operator*(const Matrix& other) const;
    bool operator==(const Matrix& other) const = default;

  private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

Matrix scale(const Rational& c, const Matrix& m);
Vector operator*(const Matrix& m, const Vector& v);

}  // namespace invder
