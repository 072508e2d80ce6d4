// Matrices: entrywise add, the two multiplication modes, the identity
// anomaly, determinants, the commutation condition, and JSON input/output.

#include <doctest.h>

#include <calpanic/expr.hpp>
#include <calpanic/matrix.hpp>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "generators.hpp"

using namespace calpanic;

namespace {

CalpanicNumber V(std::initializer_list<std::pair<int, Coefficient>> terms) {
    CalpanicNumber::TermMap m;
    for (const auto& [order, coeff] : terms) m.emplace(order, coeff);
    return CalpanicNumber::from_terms(std::move(m));
}

CalpanicNumber ev(const std::string& text) { return evaluate(*parse(text)); }

// 2x2 matrix with entries a_rc + b_rc * ka.
CalpanicMatrix affine2(const Rational (&a)[4], const Rational (&b)[4]) {
    CalpanicMatrix m(2, 2, make_real(Coefficient(0)));
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c)
            m.at(r, c) = gen::affine_entry(a[2 * r + c], b[2 * r + c]);
    return m;
}

CalpanicMatrix real2(const Rational (&a)[4]) {
    Rational zeros[4] = {0, 0, 0, 0};
    return affine2(a, zeros);
}

template <typename F>
bool throws_code(F&& f, Errc want) {
    try {
        std::forward<F>(f)();
    } catch (const DomainError& e) {
        return e.code() == want;
    } catch (...) {
        return false;
    }
    return false;
}

} // namespace

TEST_CASE("construction, identity, and shape checks") {
    CalpanicMatrix id = CalpanicMatrix::identity(2);
    CHECK(equals_canonical(id.at(0, 0), V({{0, 1}})));
    CHECK(equals_canonical(id.at(0, 1), V({{-1, 1}}))); // +0 off-diagonal
    CHECK(equals_canonical(id.at(1, 0), V({{-1, 1}})));
    CHECK(equals_canonical(id.at(1, 1), V({{0, 1}})));

    CalpanicMatrix one = CalpanicMatrix::identity(1);
    CHECK(one.rows() == 1);
    CHECK(equals_canonical(one.at(0, 0), V({{0, 1}})));

    CalpanicMatrix three = CalpanicMatrix::identity(3);
    CHECK(equals_canonical(three.at(2, 0), V({{-1, 1}})));
    CHECK(equals_canonical(three.at(2, 2), V({{0, 1}})));

    CHECK(throws_code(
        [] { return CalpanicMatrix(0, 2, make_real(Coefficient(1))); },
        Errc::shape_mismatch));
    CHECK(throws_code([&] { return id.at(2, 0); }, Errc::shape_mismatch));
}

TEST_CASE("entrywise addition uses the core fold") {
    CalpanicMatrix one(1, 1, make_real(Coefficient(1)));
    CalpanicMatrix minus_one(1, 1, make_real(Coefficient(-1)));
    CHECK(equals_canonical(mat_add(one, minus_one).at(0, 0), V({{-1, 1}})));
    // Operand order matters entrywise too: -1 + 1 = -0.
    CHECK(equals_canonical(mat_add(minus_one, one).at(0, 0), V({{-1, -1}})));

    CalpanicMatrix ka_m(1, 1, make_term(Coefficient(1), 1));
    CalpanicMatrix minus_ka(1, 1, make_term(Coefficient(-1), 1));
    CHECK(equals_canonical(mat_add(ka_m, minus_ka).at(0, 0), V({{0, 1}})));

    Rational a[4] = {1, 2, 3, 4};
    Rational b[4] = {10, 20, 30, 40};
    CalpanicMatrix sum = mat_add(real2(a), real2(b));
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c)
            CHECK(real_collapse(sum.at(r, c)) ==
                  Coefficient(a[2 * r + c] + b[2 * r + c]));

    CalpanicMatrix wide(1, 2, make_real(Coefficient(1)));
    CHECK(throws_code([&] { return mat_add(one, wide); },
                      Errc::shape_mismatch));
    CHECK(throws_code(
        [&] { return mat_mul(wide, wide, MulMode::strict_conservation); },
        Errc::shape_mismatch));
}

TEST_CASE("multiplying by the identity reproduces the displayed entries") {
    // Stand-in numeric values, all positive so no cancellation intrudes:
    // a = [[2,3],[5,7]], b = [[11,13],[17,19]].
    Rational a[4] = {2, 3, 5, 7};
    Rational b[4] = {11, 13, 17, 19};
    CalpanicMatrix A = affine2(a, b);
    CalpanicMatrix I = CalpanicMatrix::identity(2);

    SUBCASE("display mode matches the conventional expansion verbatim") {
        CalpanicMatrix AI = mat_mul(A, I, MulMode::paper_display);
        CHECK(equals_canonical(AI.at(0, 0), ev("(2 + 11*ka) + 13")));
        CHECK(equals_canonical(AI.at(0, 1), ev("11 + (3 + 13*ka)")));
        CHECK(equals_canonical(AI.at(1, 0), ev("(5 + 17*ka) + 19")));
        CHECK(equals_canonical(AI.at(1, 1), ev("17 + (7 + 19*ka)")));

        CalpanicMatrix IA = mat_mul(I, A, MulMode::paper_display);
        CHECK(equals_canonical(IA.at(0, 0), ev("(2 + 11*ka) + 17")));
        CHECK(equals_canonical(IA.at(0, 1), ev("19 + (3 + 13*ka)")));
        CHECK(equals_canonical(IA.at(1, 0), ev("(5 + 17*ka) + 11")));
        CHECK(equals_canonical(IA.at(1, 1), ev("13 + (7 + 19*ka)")));
    }

    SUBCASE("strict mode additionally retains the real-times-zero terms") {
        CalpanicMatrix AI = mat_mul(A, I, MulMode::strict_conservation);
        CHECK(equals_canonical(AI.at(0, 0), V({{1, 11}, {0, 15}, {-1, 3}})));
        CHECK(equals_canonical(AI.at(0, 1), V({{1, 13}, {0, 14}, {-1, 2}})));
        CHECK(equals_canonical(AI.at(1, 0), V({{1, 17}, {0, 24}, {-1, 7}})));
        CHECK(equals_canonical(AI.at(1, 1), V({{1, 19}, {0, 24}, {-1, 5}})));
    }

    SUBCASE("the anomaly: AI differs from A whenever some b is nonzero") {
        for (MulMode mode :
             {MulMode::strict_conservation, MulMode::paper_display}) {
            CalpanicMatrix AI = mat_mul(A, I, mode);
            bool some_entry_differs = false;
            for (std::size_t r = 0; r < 2; ++r)
                for (std::size_t c = 0; c < 2; ++c)
                    if (!equals_canonical(AI.at(r, c), A.at(r, c)))
                        some_entry_differs = true;
            CHECK(some_entry_differs);
        }
    }
}

TEST_CASE("property: the anomaly holds for random affine matrices") {
    gen::Rng rng(777u);
    for (int trial = 0; trial < 60; ++trial) {
        Rational a[4];
        Rational b[4] = {0, 0, 0, 0};
        for (auto& v : a) v = gen::rand_rational(rng, -5, 5);
        // Force at least one nonzero ka part.
        while (b[0] == 0 && b[1] == 0 && b[2] == 0 && b[3] == 0)
            for (auto& v : b) v = gen::rand_rational(rng, -3, 3);
        CalpanicMatrix A = affine2(a, b);
        for (MulMode mode :
             {MulMode::strict_conservation, MulMode::paper_display}) {
            CalpanicMatrix AI = mat_mul(A, CalpanicMatrix::identity(2), mode);
            bool some_entry_differs = false;
            for (std::size_t r = 0; r < 2; ++r)
                for (std::size_t c = 0; c < 2; ++c)
                    if (!equals_canonical(AI.at(r, c), A.at(r, c)))
                        some_entry_differs = true;
            CHECK(some_entry_differs);
        }
    }
}

TEST_CASE("property: real matrices embed ordinary matrix arithmetic") {
    gen::Rng rng(2468u);
    for (int trial = 0; trial < 80; ++trial) {
        Rational a[4];
        Rational b[4];
        for (auto& v : a) v = gen::rand_rational(rng, -6, 6);
        for (auto& v : b) v = gen::rand_rational(rng, -6, 6);
        CalpanicMatrix A = real2(a);
        CalpanicMatrix B = real2(b);
        for (MulMode mode :
             {MulMode::strict_conservation, MulMode::paper_display}) {
            CalpanicMatrix P = mat_mul(A, B, mode);
            for (std::size_t r = 0; r < 2; ++r) {
                for (std::size_t c = 0; c < 2; ++c) {
                    Rational expected = a[2 * r] * b[c] +
                                        a[2 * r + 1] * b[2 + c];
                    CHECK(real_collapse(P.at(r, c)) == Coefficient(expected));
                }
            }
        }
        // Determinant at collapse level is the ordinary determinant.
        CHECK(real_collapse(det2(A)) ==
              Coefficient(a[0] * a[3] - a[1] * a[2]));
    }
}

TEST_CASE("determinants follow the fixed expansion order") {
    CHECK(equals_canonical(det2(CalpanicMatrix::identity(2)),
                           V({{0, 1}, {-2, -1}})));

    Rational simple[4] = {2, 1, 1, 1};
    CHECK(equals_canonical(det2(real2(simple)), V({{0, 1}, {-1, 1}})));
    CHECK(real_collapse(det2(real2(simple))) == Coefficient(1));

    // [[ka, 1], [1, +0]]: ka*0 - 1*1 = 1 - 1 = +0.
    CalpanicMatrix m(2, 2, make_real(Coefficient(1)));
    m.at(0, 0) = make_term(Coefficient(1), 1);
    m.at(1, 1) = make_real(Coefficient(0));
    CHECK(equals_canonical(det2(m), V({{-1, 1}})));

    CalpanicMatrix tall(3, 2, make_real(Coefficient(1)));
    CHECK(throws_code([&] { return det2(tall); }, Errc::shape_mismatch));
}

TEST_CASE("determinant multiplicativity fails, and the report shows how") {
    SUBCASE("identity times identity agrees observably, not canonically") {
        CalpanicMatrix I = CalpanicMatrix::identity(2);
        DetProductReport r =
            det_product_check(I, I, MulMode::strict_conservation);
        CHECK(r.equal_observable);
        CHECK(!r.equal_canonical);
        CHECK(equals_canonical(r.lhs,
                               V({{0, 1}, {-2, -2}, {-3, 2}, {-4, 1}})));
        CHECK(equals_canonical(r.rhs, V({{0, 1}, {-2, -2}, {-4, 1}})));
    }

    SUBCASE("an all-ka matrix breaks even observable equality") {
        CalpanicMatrix A(2, 2, make_term(Coefficient(1), 1));
        DetProductReport r = det_product_check(
            A, CalpanicMatrix::identity(2), MulMode::strict_conservation);
        CHECK(!r.equal_observable);
        CHECK(!r.equal_canonical);
        CHECK(equals_canonical(r.lhs, V({{1, 1}, {0, 2}, {-1, 1}})));
        CHECK(equals_canonical(r.rhs, V({{1, 1}, {-1, -1}})));
    }

    SUBCASE("real matrices stay multiplicative at collapse level") {
        gen::Rng rng(13579u);
        for (int trial = 0; trial < 40; ++trial) {
            Rational a[4];
            Rational b[4];
            for (auto& v : a) v = gen::rand_rational(rng, -5, 5);
            for (auto& v : b) v = gen::rand_rational(rng, -5, 5);
            DetProductReport r = det_product_check(
                real2(a), real2(b), MulMode::strict_conservation);
            CHECK(real_collapse(r.lhs) == real_collapse(r.rhs));
        }
    }
}

TEST_CASE("the commutation condition controls observable AI = IA") {
    SUBCASE("condition holds: matching diagonal and cross ka parts") {
        Rational a[4] = {1, 2, 3, 4};
        Rational b[4] = {1, 2, 2, 1};
        CommutationReport r = identity_commutation_check(
            affine2(a, b), MulMode::strict_conservation);
        CHECK(r.condition_holds);
        CHECK(r.observable_equal);
        // The zero dust still differs between the two products.
        CHECK(!r.canonical_equal);
        CHECK(!r.canonical_mismatches.empty());
    }

    SUBCASE("condition broken: a mismatch appears at order >= 0") {
        Rational a[4] = {1, 2, 3, 4};
        Rational b[4] = {1, 2, 3, 1}; // b21 != b12
        CommutationReport r = identity_commutation_check(
            affine2(a, b), MulMode::strict_conservation);
        CHECK(!r.condition_holds);
        CHECK(!r.observable_equal);
    }

    SUBCASE("property: random draws satisfying the condition commute") {
        gen::Rng rng(97531u);
        for (int trial = 0; trial < 60; ++trial) {
            Rational diag = gen::rand_rational(rng, -4, 4);
            Rational cross = gen::rand_rational(rng, -4, 4);
            Rational a[4];
            for (auto& v : a) v = gen::rand_rational(rng, -6, 6);
            Rational b[4] = {diag, cross, cross, diag};
            for (MulMode mode :
                 {MulMode::strict_conservation, MulMode::paper_display}) {
                CommutationReport r =
                    identity_commutation_check(affine2(a, b), mode);
                CHECK(r.condition_holds);
                CHECK(r.observable_equal);
            }
        }
    }
}

TEST_CASE("matrices load from JSON expression grids") {
    CalpanicMatrix m =
        matrix_from_json(R"([["1 + 2*ka","3"],["0","ka"]])");
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 2);
    CHECK(equals_canonical(m.at(0, 0), V({{1, 2}, {0, 1}})));
    CHECK(equals_canonical(m.at(0, 1), V({{0, 3}})));
    CHECK(equals_canonical(m.at(1, 0), V({{-1, 1}})));
    CHECK(equals_canonical(m.at(1, 1), V({{1, 1}})));

    SUBCASE("serialized form reloads to the same matrix") {
        std::string text = matrix_to_json(m);
        CalpanicMatrix reloaded = matrix_from_json(text);
        CHECK(reloaded == m);
        CHECK(text == R"([["2*ka + 1","3"],["+0","ka"]])");
    }

    SUBCASE("malformed input is rejected") {
        CHECK_THROWS_AS(matrix_from_json("not json"), SyntaxError);
        CHECK_THROWS_AS(matrix_from_json(R"([["5 +"]])"), SyntaxError);
        CHECK(throws_code([] { return matrix_from_json("[]"); },
                          Errc::shape_mismatch));
        CHECK(throws_code([] { return matrix_from_json(R"([[]])"); },
                          Errc::shape_mismatch));
        CHECK(throws_code(
            [] { return matrix_from_json(R"([["1","2"],["3"]])"); },
            Errc::shape_mismatch));
        CHECK(throws_code([] { return matrix_from_json(R"([[1,2],[3,4]])"); },
                          Errc::shape_mismatch));
    }
}

TEST_CASE("plain-text rendering aligns columns") {
    CalpanicMatrix id = CalpanicMatrix::identity(2);
    std::string text = matrix_to_text(id);
    CHECK(text == "[ 1    +0 ]\n[ +0   1  ]\n");
}
