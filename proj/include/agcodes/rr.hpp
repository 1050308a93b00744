#pragma once

#include <string>
#include <vector>

#include "agcodes/curve.hpp"
#include "agcodes/gf.hpp"

namespace agcodes {

/// The one-point divisor m*P for P the point at infinity or a finite point
/// with y = 0 (the fixed points of the hyperelliptic involution, where the
/// pole-order bookkeeping below is exact).
class OnePointDivisor {
public:
    OnePointDivisor(const Curve& curve, CurvePoint base, i64 m);

    const CurvePoint& base() const { return base_; }
    i64 m() const { return m_; }
    i64 degree() const { return m_; }

    std::string str() const;

private:
    CurvePoint base_;
    i64 m_;
};

/// A function of the space L(m*base) in the form (A(x) + B(x)*y)/(x-x0)^c.
/// For base = infinity the denominator is absent (c = 0) and the function is
/// a polynomial in x and x*y monomials.
///
/// Pole orders at the base: 2i for (x-x0)^(-i) terms and 2j-1 for
/// y*(x-x0)^(-j) terms at a finite base; 2i for x^i and 2j+p for x^j*y at
/// infinity.
class RRFunction {
public:
    RRFunction(const Curve& curve, CurvePoint base, Poly a, Poly b, i64 c);

    const Poly& a() const { return a_; }
    const Poly& b() const { return b_; }
    i64 c() const { return c_; }
    const CurvePoint& base() const { return base_; }

    /// Pole order at the base point (0 for constants).
    i64 pole_order() const;

    /// Exact evaluation at a finite point distinct from the base.
    FieldElement eval(const CurvePoint& pt) const;

    /// "(A) + (B)*y over (x - x0)^c"; the denominator is omitted when the
    /// base is infinity, the "+ (B)*y" part when B = 0.
    std::string str() const;

private:
    Curve curve_;
    CurvePoint base_;
    Poly a_, b_;
    i64 c_;
};

/// Basis of L(D) sorted by strictly increasing pole order at the base.
/// At infinity: { x^i : 2i <= m } and { x^j*y : 2j + p <= m }.
/// At a finite base (x0, 0): { (x-x0)^(-i) : 0 <= 2i <= m } and
/// { y*(x-x0)^(-j) : (p+1)/2 <= j, 2j-1 <= m }.
/// The size equals m - g + 1 whenever m > 2g - 2.
std::vector<RRFunction> rr_basis(const Curve& curve, const OnePointDivisor& d);

/// Dimension of L(D); asserts the m - g + 1 formula for m > 2g - 2.
i64 rr_dim(const Curve& curve, const OnePointDivisor& d);

/// Free-function form of RRFunction::eval.
FieldElement rr_eval(const RRFunction& f, const CurvePoint& pt);

}  // namespace agcodes
