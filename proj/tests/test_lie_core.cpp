#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "invder/lie_algebra.hpp"
#include "invder/qlinalg.hpp"
#include "invder/rational.hpp"
#include "oracle_elim.hpp"
#include "support.hpp"

using namespace invder;
using testsupport::dense_constants;
using testsupport::make_abelian;
using testsupport::make_h3;
using testsupport::make_h3_structure;
using testsupport::make_sl2;
using testsupport::sample_delta_h3;

namespace {

Vector flatten_matrix(const Matrix& m) {
    Vector v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

// The full derivation algebra of the Heisenberg bracket [e1,e2] = e3:
// arbitrary on span(e1,e2) modulo the corner, with the trace tied to the
// e3 scaling. Used to sample invertible derivations.
Matrix h3_derivation(int a, int b, int c, int d, int e, int f) {
    Matrix m(3, 3);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    m.at(2, 0) = e;
    m.at(2, 1) = f;
    m.at(2, 2) = a + d;
    return m;
}

}  // namespace

TEST_CASE("classical examples validate cleanly") {
    for (const LieAlgebra& L : {make_h3(), make_sl2(), make_abelian(3)}) {
        ValidationReport r = validate_lie(L.dim(), L.constants());
        CHECK(r.ok);
        CHECK(r.issues.empty());
    }
    CHECK(make_h3().basis_names() == std::vector<std::string>{"e1", "e2", "e3"});
}

TEST_CASE("antisymmetry violations are reported entrywise") {
    std::vector<Rational> c(27, Rational(0));
    c[(0 * 3 + 1) * 3 + 2] = 1;  // c[1][2][3] = 1 with no mirror entry
    ValidationReport r = validate_lie(3, c);
    REQUIRE_FALSE(r.ok);
    REQUIRE(r.issues.size() == 1);
    CHECK(r.issues[0].check == "antisymmetry");
    CHECK(r.issues[0].indices == std::vector<std::size_t>{0, 1, 2});
    CHECK(r.issues[0].residual == Vector{Rational(1)});
    CHECK_THROWS_AS(LieAlgebra(3, c), CheckError);

    std::vector<Rational> diag(27, Rational(0));
    diag[(1 * 3 + 1) * 3 + 0] = 2;  // [e2, e2] = 2 e1
    ValidationReport rd = validate_lie(3, diag);
    REQUIRE(rd.issues.size() == 1);
    CHECK(rd.issues[0].check == "antisymmetry");
    CHECK(rd.issues[0].indices == std::vector<std::size_t>{1, 1, 0});
}

TEST_CASE("jacobi violations carry the residual vector") {
    // [e1,e2] = e3 and [e1,e3] = e1 is antisymmetric but fails Jacobi.
    std::vector<Rational> c = dense_constants(3, {{0, 1, 2, 1}, {0, 2, 0, 1}});
    ValidationReport r = validate_lie(3, c);
    REQUIRE_FALSE(r.ok);
    REQUIRE(r.issues.size() == 1);
    CHECK(r.issues[0].check == "jacobi");
    CHECK(r.issues[0].indices == std::vector<std::size_t>{0, 1, 2});
    CHECK(r.issues[0].residual == Vector{Rational(0), Rational(0), Rational(-1)});
    CHECK_THROWS_AS(LieAlgebra(3, c), CheckError);
}

TEST_CASE("shape mismatches are input errors") {
    CHECK_THROWS_AS(validate_lie(3, std::vector<Rational>(26, Rational(0))), InputError);
    CHECK_THROWS_AS(LieAlgebra(2, std::vector<Rational>(8, Rational(0)), {"x"}), InputError);
}

TEST_CASE("bracket is the bilinear extension of the constants") {
    LieAlgebra h3 = make_h3();
    CHECK(bracket(h3, unit_vector(3, 0), unit_vector(3, 1)) == Vector{0, 0, Rational(1)});

    LieAlgebra sl2 = make_sl2();
    CHECK(bracket(sl2, unit_vector(3, 0), unit_vector(3, 2)) == Vector{Rational(-2), 0, 0});
    CHECK(bracket(sl2, unit_vector(3, 1), unit_vector(3, 2)) == Vector{0, Rational(2), 0});

    std::mt19937_64 rng(5531);
    for (int t = 0; t < 20; ++t) {
        Vector x(3), y(3), z(3);
        for (std::size_t i = 0; i < 3; ++i) {
            x[i] = testsupport::random_rational(rng);
            y[i] = testsupport::random_rational(rng);
            z[i] = testsupport::random_rational(rng);
        }
        CHECK(is_zero(bracket(sl2, x, x)));
        // [x + 2y, z] = [x,z] + 2[y,z]
        CHECK(bracket(sl2, add(x, scale(Rational(2), y)), z) ==
              add(bracket(sl2, x, z), scale(Rational(2), bracket(sl2, y, z))));
    }
    CHECK_THROWS_AS(bracket(h3, Vector(2, Rational(0)), Vector(3, Rational(0))), InputError);
}

TEST_CASE("ad maps in both actions") {
    LieAlgebra h3 = make_h3();
    Matrix left = ad_map(h3, unit_vector(3, 0));
    Matrix expect(3, 3);
    expect.at(2, 1) = 1;  // [e1, e2] = e3
    CHECK(left == expect);
    Matrix right = ad_map(h3, unit_vector(3, 0), true);
    CHECK(right == scale(Rational(-1), expect));

    std::mt19937_64 rng(808);
    for (const LieAlgebra& L : {make_h3(), make_sl2()}) {
        for (int t = 0; t < 10; ++t) {
            Vector x(3);
            for (std::size_t i = 0; i < 3; ++i) x[i] = testsupport::random_rational(rng);
            CHECK(is_derivation(L, ad_map(L, x)));
        }
    }
}

TEST_CASE("derivation spaces match the classical dimensions and the elimination oracle") {
    struct Case {
        LieAlgebra L;
        std::size_t dim;
    };
    for (const Case& c : {Case{make_h3(), 6}, Case{make_sl2(), 3}, Case{make_abelian(2), 4},
                          Case{make_abelian(1), 1}}) {
        std::vector<Matrix> basis = derivation_space(c.L);
        CHECK(basis.size() == c.dim);
        CHECK(oracle::derivation_space_dim(c.L.dim(), c.L.constants()) == c.dim);
        for (const Matrix& d : basis) CHECK(is_derivation(c.L, d));
    }
}

TEST_CASE("derivation spaces are closed under the matrix commutator") {
    for (const LieAlgebra& L : {make_h3(), make_sl2()}) {
        std::vector<Matrix> basis = derivation_space(L);
        std::vector<Vector> span;
        for (const Matrix& d : basis) span.push_back(flatten_matrix(d));
        for (const Matrix& a : basis) {
            for (const Matrix& b : basis) {
                Matrix k = commutator(a, b);
                CHECK(is_derivation(L, k));
                CHECK(in_span(span, flatten_matrix(k)));
            }
        }
    }
}

TEST_CASE("invertible derivation check separates its three clauses") {
    LieAlgebra h3 = make_h3();

    InvDerCheck good = check_invder(h3, sample_delta_h3());
    CHECK(good.ok());
    CHECK(good.first_failure().empty());

    // diag(1,1,2) is an invertible derivation but breaks the Inv condition:
    // [de1, de2] = e3 while d^2 [e1,e2] = 4 e3.
    Matrix diag112 = Matrix::identity(3);
    diag112.at(2, 2) = 2;
    InvDerCheck bad = check_invder(h3, diag112);
    CHECK(bad.derivation);
    CHECK(bad.invertible);
    CHECK_FALSE(bad.inv_condition);
    CHECK(bad.first_failure() == "inv_condition");

    Matrix corner = h3_derivation(0, 0, 0, 0, 1, 2);
    InvDerCheck singular = check_invder(h3, corner);
    CHECK(singular.derivation);
    CHECK(singular.first_failure() == "invertible");

    InvDerCheck notder = check_invder(make_sl2(), Matrix::identity(3));
    CHECK(notder.first_failure() == "derivation");
    CHECK_FALSE(notder.ok());
}

TEST_CASE("the inverse-derivation route agrees with the Inv condition") {
    LieAlgebra h3 = make_h3();

    Matrix inv = inverse(sample_delta_h3());
    Matrix frozen(3, 3);
    frozen.at(0, 0) = 1;
    frozen.at(0, 1) = 1;
    frozen.at(1, 0) = -1;
    frozen.at(2, 2) = 1;
    CHECK(inv == frozen);
    CHECK(inverse_is_derivation(h3, sample_delta_h3()));

    Matrix diag112 = Matrix::identity(3);
    diag112.at(2, 2) = 2;
    CHECK_FALSE(inverse_is_derivation(h3, diag112));
    CHECK_THROWS_AS(inverse_is_derivation(h3, h3_derivation(0, 0, 0, 0, 1, 2)), CheckError);

    // Both routes agree across a random sweep of invertible derivations.
    std::mt19937_64 rng(417);
    std::uniform_int_distribution<int> coef(-3, 3);
    int seen = 0;
    while (seen < 30) {
        Matrix d = h3_derivation(coef(rng), coef(rng), coef(rng), coef(rng), coef(rng), coef(rng));
        if (determinant(d) == 0) continue;
        ++seen;
        REQUIRE(is_derivation(h3, d));
        CHECK(check_invder(h3, d).inv_condition == inverse_is_derivation(h3, d));
    }
}

TEST_CASE("structure validation reports the exact Inv residual") {
    LieAlgebra h3 = make_h3();
    Matrix diag112 = Matrix::identity(3);
    diag112.at(2, 2) = 2;
    ValidationReport r = validate_structure(3, h3.constants(), diag112);
    REQUIRE_FALSE(r.ok);
    REQUIRE(r.issues.size() == 1);
    CHECK(r.issues[0].check == "inv_condition");
    CHECK(r.issues[0].indices == std::vector<std::size_t>{0, 1});
    CHECK(r.issues[0].residual == Vector{Rational(0), Rational(0), Rational(-3)});

    ValidationReport ok = validate_structure(3, h3.constants(), sample_delta_h3());
    CHECK(ok.ok);

    ValidationReport sing = validate_structure(3, make_abelian(3).constants(), Matrix(3, 3));
    REQUIRE_FALSE(sing.ok);
    REQUIRE(sing.issues.size() == 1);
    CHECK(sing.issues[0].check == "delta_invertible");
}

TEST_CASE("validated structures reject each failing clause") {
    CHECK_NOTHROW(InvDerStructure::validated(make_h3(), sample_delta_h3()));
    CHECK_NOTHROW(
        InvDerStructure::validated(make_h3(), scale(Rational(2), sample_delta_h3())));
    Matrix diag112 = Matrix::identity(3);
    diag112.at(2, 2) = 2;
    CHECK_THROWS_AS(InvDerStructure::validated(make_h3(), diag112), CheckError);
    CHECK_THROWS_AS(InvDerStructure::validated(make_sl2(), Matrix::identity(3)), CheckError);
}

TEST_CASE("twisting the Heisenberg structure reproduces the same bracket") {
    InvDerStructure S = make_h3_structure();
    LieAlgebra T = twist(S);
    CHECK(T.same_constants(S.algebra()));

    // Twisting by 2 delta doubles the corner constant instead.
    InvDerStructure S2 =
        InvDerStructure::validated(make_h3(), scale(Rational(2), sample_delta_h3()));
    LieAlgebra T2 = twist(S2);
    CHECK(T2.c(0, 1, 2) == 2);
    CHECK_FALSE(T2.same_constants(S.algebra()));
}

TEST_CASE("twists of random abelian structures stay abelian and valid") {
    std::mt19937_64 rng(9203);
    for (std::size_t n : {1u, 2u, 3u, 4u}) {
        for (int t = 0; t < 5; ++t) {
            Matrix d = testsupport::random_invertible(rng, n);
            LieAlgebra ab = make_abelian(n);
            REQUIRE(validate_structure(n, ab.constants(), d).ok);
            InvDerStructure S = InvDerStructure::validated(ab, d);
            LieAlgebra T = twist(S);
            CHECK(T.same_constants(ab));
            CHECK(check_cyclic_identity(S));
        }
    }
}

TEST_CASE("the cyclic compatibility identity holds and both sides vanish") {
    CHECK(check_cyclic_identity(make_h3_structure()));
    CHECK(check_cyclic_identity(
        InvDerStructure::validated(make_h3(), scale(Rational(2), sample_delta_h3()))));
}

TEST_CASE("delta-derivation spaces") {
    // For the Heisenberg structure the compatibility D d = d^2 D pins D to 0.
    CHECK(delta_derivation_space(make_h3_structure()).empty());

    // With the identity twist on an abelian algebra every matrix qualifies.
    InvDerStructure ab2 = InvDerStructure::validated(make_abelian(2), Matrix::identity(2));
    std::vector<Matrix> all = delta_derivation_space(ab2);
    CHECK(all.size() == 4);

    InvDerStructure ab1 = InvDerStructure::validated(make_abelian(1), Matrix::identity(1));
    CHECK(delta_derivation_space(ab1).size() == 1);
}

TEST_CASE("right bracketing with a delta-fixed vector lands in the delta-derivation space") {
    InvDerStructure S = make_h3_structure();
    // Fixed space of the sample delta is spanned by e3; the right action of a
    // fixed vector is a delta-derivation, here the zero map.
    std::vector<Vector> fixed = kernel_basis(S.delta() - Matrix::identity(3));
    REQUIRE(fixed.size() == 1);
    CHECK(fixed[0] == Vector{0, 0, Rational(1)});
    Matrix r = ad_map(S.algebra(), fixed[0], true);
    CHECK(r.is_zero());

    InvDerStructure ab2 = InvDerStructure::validated(make_abelian(2), Matrix::identity(2));
    std::vector<Vector> span;
    for (const Matrix& d : delta_derivation_space(ab2)) span.push_back(flatten_matrix(d));
    CHECK(in_span(span, flatten_matrix(ad_map(ab2.algebra(), unit_vector(2, 0), true))));
}

TEST_CASE("homomorphisms of twisted structures") {
    InvDerStructure S = make_h3_structure();
    InvDerStructure T = InvDerStructure::validated(twist(S), S.delta());
    CHECK(is_homomorphism(S, S, Matrix::identity(3)));
    CHECK(is_homomorphism(S, T, Matrix(3, 3)));  // zero map
    // delta itself intertwines the original and twisted brackets here.
    CHECK(is_homomorphism(S, T, S.delta()));

    // Doubling delta breaks that: the cubic growth of the twisted side wins.
    Matrix two_delta = scale(Rational(2), sample_delta_h3());
    InvDerStructure S2 = InvDerStructure::validated(make_h3(), two_delta);
    InvDerStructure T2 = InvDerStructure::validated(twist(S2), two_delta);
    CHECK_FALSE(is_homomorphism(S2, T2, two_delta));

    CHECK_THROWS_AS(is_homomorphism(S, T, Matrix(2, 3)), InputError);
}
