#include "agcodes/rr.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace agcodes {

OnePointDivisor::OnePointDivisor(const Curve& curve, CurvePoint base, i64 m)
    : base_(std::move(base)), m_(m) {
    if (m < 0) throw std::invalid_argument("divisor multiplicity must be nonnegative");
    if (!base_.at_infinity()) {
        if (!base_.x().ctx()->same(*curve.field()))
            throw std::invalid_argument("divisor base not over the curve's field");
        if (!curve.on_curve(base_.x(), base_.y()))
            throw std::invalid_argument("divisor base is not on the curve");
        if (!base_.y().is_zero())
            throw std::invalid_argument("divisor base must have y = 0 or be the point at infinity");
    }
}

std::string OnePointDivisor::str() const {
    return std::to_string(m_) + " * " + base_.str();
}

RRFunction::RRFunction(const Curve& curve, CurvePoint base, Poly a, Poly b, i64 c)
    : curve_(curve), base_(std::move(base)), a_(std::move(a)), b_(std::move(b)), c_(c) {
    if (c_ < 0) throw std::invalid_argument("denominator exponent must be nonnegative");
    if (base_.at_infinity() && c_ != 0)
        throw std::invalid_argument("no denominator term is allowed at an infinite base");
    if (a_.is_zero() && b_.is_zero() && c_ != 0)
        throw std::invalid_argument("zero numerator with a denominator");
}

i64 RRFunction::pole_order() const {
    // Pole orders of the two parts have opposite parity, so no cancellation.
    const i64 p = curve_.p();
    i64 ord = 0;
    if (base_.at_infinity()) {
        if (!a_.is_zero()) ord = std::max(ord, 2 * a_.degree());
        if (!b_.is_zero()) ord = std::max(ord, 2 * b_.degree() + p);
        return ord;
    }
    const FieldElement x0 = base_.x();
    const auto mult_at_x0 = [&](const Poly& f) {
        Poly g = f;
        const Poly lin = Poly::x(f.ctx()) - Poly::constant(x0);
        i64 v = 0;
        while (!g.is_zero()) {
            auto [q, r] = g.divmod(lin);
            if (!r.is_zero()) break;
            ++v;
            g = q;
        }
        return v;
    };
    if (!a_.is_zero()) ord = std::max(ord, 2 * (c_ - mult_at_x0(a_)));
    if (!b_.is_zero()) ord = std::max(ord, 2 * (c_ - mult_at_x0(b_)) - 1);
    return std::max<i64>(ord, 0);
}

FieldElement RRFunction::eval(const CurvePoint& pt) const {
    if (pt.at_infinity()) throw std::domain_error("cannot evaluate at the point at infinity");
    if (pt == base_) throw std::domain_error("cannot evaluate at the base point of the divisor");
    FieldElement v = a_.eval(pt.x()) + b_.eval(pt.x()) * pt.y();
    if (c_ > 0) {
        const FieldElement den = pt.x() - base_.x();
        // den = 0 would force y^2 = x0^p - x0 = 0, i.e. pt == base
        v = v * den.inv().pow(c_);
    }
    return v;
}

std::string RRFunction::str() const {
    std::ostringstream os;
    os << "(" << a_.str() << ")";
    if (!b_.is_zero()) os << " + (" << b_.str() << ")*y";
    if (c_ > 0) {
        const std::string x0 = base_.x().str();
        os << " over (x - " << (curve_.ext() > 1 ? "(" + x0 + ")" : x0) << ")^" << c_;
    }
    return os.str();
}

std::vector<RRFunction> rr_basis(const Curve& curve, const OnePointDivisor& d) {
    const i64 p = curve.p();
    const i64 m = d.m();
    const auto& F = curve.field();
    std::vector<std::pair<i64, RRFunction>> ranked;

    if (d.base().at_infinity()) {
        for (i64 i = 0; 2 * i <= m; ++i)
            ranked.emplace_back(2 * i, RRFunction(curve, d.base(), Poly::monomial(F->one(), i),
                                                  Poly(F), 0));
        for (i64 j = 0; 2 * j + p <= m; ++j)
            ranked.emplace_back(2 * j + p, RRFunction(curve, d.base(), Poly(F),
                                                      Poly::monomial(F->one(), j), 0));
    } else {
        const Poly one = Poly::constant(F->one());
        for (i64 i = 0; 2 * i <= m; ++i)
            ranked.emplace_back(2 * i, RRFunction(curve, d.base(), one, Poly(F), i));
        for (i64 j = curve.h(); 2 * j - 1 <= m; ++j)
            ranked.emplace_back(2 * j - 1, RRFunction(curve, d.base(), Poly(F), one, j));
    }

    std::sort(ranked.begin(), ranked.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<RRFunction> basis;
    basis.reserve(ranked.size());
    for (auto& [ord, f] : ranked) basis.push_back(std::move(f));
    return basis;
}

i64 rr_dim(const Curve& curve, const OnePointDivisor& d) {
    const i64 dim = static_cast<i64>(rr_basis(curve, d).size());
    if (d.m() > 2 * curve.genus() - 2 && dim != d.m() - curve.genus() + 1)
        throw std::logic_error("basis size disagrees with m - g + 1 (internal bug)");
    return dim;
}

FieldElement rr_eval(const RRFunction& f, const CurvePoint& pt) { return f.eval(pt); }

}  // namespace agcodes
