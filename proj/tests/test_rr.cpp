#include <doctest.h>

#include <random>
#include <vector>

#include "agcodes/code.hpp"
#include "agcodes/curve.hpp"
#include "agcodes/rr.hpp"

using namespace agcodes;

namespace {

const Curve& gf7_curve() {
    static const Curve curve(7, 1);
    return curve;
}

const Curve& gf49_curve() {
    static const Curve curve(7, 2);
    return curve;
}

std::vector<CurvePoint> finite_points_avoiding(const Curve& curve, const CurvePoint& base) {
    std::vector<CurvePoint> out;
    for (const auto& pt : curve.enumerate_points())
        if (!pt.at_infinity() && pt != base) out.push_back(pt);
    return out;
}

i64 eval_matrix_rank(const Curve& curve, const std::vector<RRFunction>& basis,
                     const std::vector<CurvePoint>& pts) {
    GenMatrix m(curve.field(), static_cast<i64>(basis.size()), static_cast<i64>(pts.size()));
    for (i64 r = 0; r < m.rows(); ++r)
        for (i64 c = 0; c < m.cols(); ++c)
            m.at(r, c) = basis[static_cast<size_t>(r)].eval(pts[static_cast<size_t>(c)]);
    return m.rank();
}

}  // namespace

TEST_CASE("divisor validation") {
    const Curve& curve = gf7_curve();
    const auto f = curve.field();
    CHECK_NOTHROW(OnePointDivisor(curve, curve.infinity(), 5));
    CHECK_NOTHROW(OnePointDivisor(curve, curve.finite(f->one(), f->zero()), 0));
    CHECK_THROWS_AS(OnePointDivisor(curve, curve.infinity(), -1), std::invalid_argument);
    // base must have y = 0
    const Curve& c49 = gf49_curve();
    const auto pts = c49.enumerate_points();
    for (const auto& pt : pts) {
        if (pt.at_infinity() || pt.y().is_zero()) continue;
        CHECK_THROWS_AS(OnePointDivisor(c49, pt, 3), std::invalid_argument);
        break;
    }
}

TEST_CASE("basis at infinity") {
    const Curve& curve = gf7_curve();
    SUBCASE("m = 5 gives {1, x, x^2}") {
        const auto basis = rr_basis(curve, OnePointDivisor(curve, curve.infinity(), 5));
        REQUIRE(basis.size() == 3);
        CHECK(basis[0].str() == "(1)");
        CHECK(basis[1].str() == "(x)");
        CHECK(basis[2].str() == "(x^2)");
        CHECK(rr_dim(curve, OnePointDivisor(curve, curve.infinity(), 5)) == 3);
    }
    SUBCASE("m = 0 gives the constants") {
        const auto basis = rr_basis(curve, OnePointDivisor(curve, curve.infinity(), 0));
        REQUIRE(basis.size() == 1);
        CHECK(basis[0].str() == "(1)");
    }
    SUBCASE("m = 4 = 2g - 2 still has dimension 3 (special divisor)") {
        const OnePointDivisor d(curve, curve.infinity(), 4);
        CHECK(rr_dim(curve, d) == 3);  // not m - g + 1 = 2
        // oracle: the evaluation matrix at 10 points has rank 3
        const auto pts = finite_points_avoiding(gf49_curve(), gf49_curve().infinity());
        const OnePointDivisor d49(gf49_curve(), gf49_curve().infinity(), 4);
        const auto basis = rr_basis(gf49_curve(), d49);
        CHECK(eval_matrix_rank(gf49_curve(), basis,
                               {pts.begin(), pts.begin() + 10}) == 3);
    }
    SUBCASE("y-monomials enter from pole order p onward") {
        const auto basis = rr_basis(curve, OnePointDivisor(curve, curve.infinity(), 7));
        REQUIRE(basis.size() == 5);  // 1, x, x^2, x^3, y with poles 0, 2, 4, 6, 7
        CHECK(basis[3].str() == "(x^3)");
        CHECK(basis[3].pole_order() == 6);
        CHECK(basis[4].str() == "(0) + (1)*y");
        CHECK(basis[4].pole_order() == 7);
    }
}

TEST_CASE("basis at a finite base point") {
    const Curve& curve = gf49_curve();
    const auto f = curve.field();
    const CurvePoint p1 = curve.finite(f->one(), f->zero());

    SUBCASE("m = 7 has dimension 5 = m - 2") {
        const OnePointDivisor d(curve, p1, 7);
        CHECK(rr_dim(curve, d) == 5);
        const auto basis = rr_basis(curve, d);
        // pole orders 0, 2, 4, 6, 7
        const std::vector<i64> expected = {0, 2, 4, 6, 7};
        for (size_t i = 0; i < basis.size(); ++i) CHECK(basis[i].pole_order() == expected[i]);
    }
    SUBCASE("m = 21 has dimension 19") {
        CHECK(rr_dim(curve, OnePointDivisor(curve, p1, 21)) == 19);
    }
    SUBCASE("dimension formula for m > 2g - 2") {
        for (i64 m = 5; m <= 21; ++m)
            CHECK(rr_dim(curve, OnePointDivisor(curve, p1, m)) == m - curve.genus() + 1);
        for (i64 m = 5; m <= 21; ++m)
            CHECK(rr_dim(curve, OnePointDivisor(curve, curve.infinity(), m)) ==
                  m - curve.genus() + 1);
    }
}

TEST_CASE("pole orders are strictly increasing and denominators are bounded") {
    const Curve& curve = gf49_curve();
    const auto f = curve.field();
    for (const CurvePoint base : {curve.infinity(), curve.finite(f->one(), f->zero())}) {
        for (i64 m = 1; m <= 21; ++m) {
            const auto basis = rr_basis(curve, OnePointDivisor(curve, base, m));
            for (size_t i = 0; i < basis.size(); ++i) {
                CHECK(basis[i].pole_order() <= m);
                CHECK(basis[i].c() <= (m + 1) / 2);  // (x-x0)^ceil(m/2) clears denominators
                if (i > 0) CHECK(basis[i - 1].pole_order() < basis[i].pole_order());
            }
        }
    }
}

TEST_CASE("evaluation") {
    const Curve& curve = gf49_curve();
    const auto f = curve.field();
    const CurvePoint p1 = curve.finite(f->one(), f->zero());

    SUBCASE("f = x reads off the x coordinate; f = 1 is constant") {
        const auto basis = rr_basis(curve, OnePointDivisor(curve, curve.infinity(), 5));
        for (const auto& pt : finite_points_avoiding(curve, curve.infinity())) {
            CHECK(basis[0].eval(pt) == f->one());
            CHECK(basis[1].eval(pt) == pt.x());
        }
    }
    SUBCASE("y/(x-1)^4 against an independent evaluation path") {
        const auto basis = rr_basis(curve, OnePointDivisor(curve, p1, 7));
        const RRFunction& g = basis.back();  // pole order 7: y/(x-1)^4
        REQUIRE(g.pole_order() == 7);
        for (const auto& pt : finite_points_avoiding(curve, p1)) {
            if (pt.y().is_zero()) continue;
            const FieldElement direct = pt.y() * (pt.x() - f->one()).inv().pow(4);
            CHECK(g.eval(pt) == direct);
        }
    }
    SUBCASE("evaluation errors") {
        const auto basis = rr_basis(curve, OnePointDivisor(curve, p1, 7));
        CHECK_THROWS_AS(basis[1].eval(p1), std::domain_error);
        CHECK_THROWS_AS(basis[1].eval(curve.infinity()), std::domain_error);
        CHECK(rr_eval(basis[0], curve.finite(f->zero(), f->zero())) == f->one());
    }
}

TEST_CASE("linear independence via evaluation-matrix rank") {
    const Curve& curve = gf49_curve();
    const auto f = curve.field();
    for (const CurvePoint base : {curve.infinity(), curve.finite(f->one(), f->zero())}) {
        const auto pts = finite_points_avoiding(curve, base);
        for (i64 m = 1; m <= 21; ++m) {
            const auto basis = rr_basis(curve, OnePointDivisor(curve, base, m));
            // any deg D + 1 distinct non-base points give full row rank
            const std::vector<CurvePoint> sample(pts.begin(), pts.begin() + m + 1);
            REQUIRE(eval_matrix_rank(curve, basis, sample) == static_cast<i64>(basis.size()));
        }
    }
}

TEST_CASE("every combination evaluates cleanly on the example point sets") {
    std::mt19937 rng(7101);
    const Curve& c49 = gf49_curve();
    const auto f49 = c49.field();
    const CurvePoint p1 = c49.finite(f49->one(), f49->zero());
    const auto basis = rr_basis(c49, OnePointDivisor(c49, p1, 7));

    std::vector<CurvePoint> e;  // the orbit complement: points with y != 0
    for (const auto& pt : c49.enumerate_points())
        if (!pt.at_infinity() && !pt.y().is_zero()) e.push_back(pt);
    REQUIRE(e.size() == 84);

    std::uniform_int_distribution<i64> coeff(0, 6);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<FieldElement> coeffs;
        for (size_t i = 0; i < basis.size(); ++i)
            coeffs.push_back(f49->element({coeff(rng), coeff(rng)}));
        for (const auto& pt : e) {
            FieldElement acc = f49->zero();
            for (size_t i = 0; i < basis.size(); ++i)
                acc = acc + coeffs[i] * basis[i].eval(pt);  // must not throw
            (void)acc;
        }
    }
    CHECK(true);
}
