/**
 * @file cochain.hpp
 * @brief Cochain spaces for the degree-1/2 complex and their flat coordinates.
 *
 * Degree 1 is Hom(L,V), stored as an m x n matrix of basis images. Degree 2
 * is Hom(wedge^2 L, V), stored on ordered pairs i < j; evaluation handles the
 * antisymmetric extension. The full degree-2 space of the complex is a triple
 * (f, g, h) with f of degree 2 and g, h of degree 1; the degree-3 space is
 * (a, b, c) with a of degree 3 and b, c of degree 2.
 *
 * Flat layouts, used by the operator matrices and the kernel computations:
 * degree 1 puts basis vector j at offset j*m; degree 2 and 3 put the lex rank
 * of the pair/triple at offset p*m; triples concatenate their components in
 * declaration order.
 */
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "invder/matrix.hpp"

namespace invder {

std::size_t pair_count(std::size_t n);
std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j);  // requires i < j
std::pair<std::size_t, std::size_t> pair_from_index(std::size_t n, std::size_t p);

std::size_t triple_count(std::size_t n);
std::size_t triple_index(std::size_t n, std::size_t i, std::size_t j, std::size_t k);

using Cochain1 = Matrix;  // m x n, column j = image of basis vector j

class Cochain2 {
  public:
    Cochain2(std::size_t n, std::size_t m) : n_(n), grid_(m, pair_count(n)) {}

    std::size_t source_dim() const { return n_; }
    std::size_t target_dim() const { return grid_.rows(); }

    /** Value on (e_i, e_j); negated for i > j, zero for i == j. */
    Vector value(std::size_t i, std::size_t j) const;
    /** Sets the value on (e_i, e_j); requires i < j. */
    void set_value(std::size_t i, std::size_t j, const Vector& v);
    /** Bilinear antisymmetric extension. */
    Vector evaluate(const Vector& x, const Vector& y) const;

    bool is_zero() const { return grid_.is_zero(); }
    const Matrix& grid() const { return grid_; }
    Matrix& grid() { return grid_; }
    bool operator==(const Cochain2&) const = default;

  private:
    std::size_t n_;
    Matrix grid_;
};

Cochain2 add(const Cochain2& a, const Cochain2& b);
Cochain2 sub(const Cochain2& a, const Cochain2& b);
Cochain2 scale(const Rational& c, const Cochain2& f);

class Cochain3 {
  public:
    Cochain3(std::size_t n, std::size_t m) : n_(n), grid_(m, triple_count(n)) {}

    std::size_t source_dim() const { return n_; }
    std::size_t target_dim() const { return grid_.rows(); }

    /** Value on (e_i, e_j, e_k); requires i < j < k. */
    Vector value(std::size_t i, std::size_t j, std::size_t k) const;
    void set_value(std::size_t i, std::size_t j, std::size_t k, const Vector& v);

    bool is_zero() const { return grid_.is_zero(); }
    const Matrix& grid() const { return grid_; }
    bool operator==(const Cochain3&) const = default;

  private:
    std::size_t n_;
    Matrix grid_;
};

struct InvDerCochain2 {
    Cochain2 f;
    Cochain1 g;
    Cochain1 h;
    bool operator==(const InvDerCochain2&) const = default;
};

struct InvDerCochain3 {
    Cochain3 a;
    Cochain2 b;
    Cochain2 c;
    bool operator==(const InvDerCochain3&) const = default;
};

std::size_t cochain1_size(std::size_t n, std::size_t m);   // n*m
std::size_t cochain2_size(std::size_t n, std::size_t m);   // C(n,2)*m
std::size_t invder2_size(std::size_t n, std::size_t m);    // cochain2 + 2*cochain1
std::size_t invder3_size(std::size_t n, std::size_t m);    // C(n,3)*m + 2*cochain2

Vector flatten_cochain1(const Cochain1& f);
Vector flatten_cochain2(const Cochain2& f);
Vector flatten_invder2(const InvDerCochain2& w);
Vector flatten_invder3(const InvDerCochain3& w);

Cochain1 unflatten_cochain1(std::size_t n, std::size_t m, const Vector& v);
Cochain2 unflatten_cochain2(std::size_t n, std::size_t m, const Vector& v);
InvDerCochain2 unflatten_invder2(std::size_t n, std::size_t m, const Vector& v);

}  // namespace invder
