#include "agcodes/curve.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "agcodes/errors.hpp"

namespace agcodes {

namespace {

i64 mod_norm(i64 v, i64 p) {
    v %= p;
    return v < 0 ? v + p : v;
}

i64 mod_pow(i64 b, i64 e, i64 p) {
    b = mod_norm(b, p);
    i64 r = 1 % p;
    while (e > 0) {
        if (e & 1) r = (r * b) % p;
        b = (b * b) % p;
        e >>= 1;
    }
    return r;
}

using AutKey = std::pair<std::array<i64, 4>, std::vector<i64>>;

AutKey key_of(const AutElement& t) { return {t.m(), t.e().coeffs()}; }

}  // namespace

// ---------------------------------------------------------------------------
// CurvePoint

CurvePoint::CurvePoint(bool inf, FieldElement x, FieldElement y)
    : inf_(inf), x_(std::move(x)), y_(std::move(y)) {}

CurvePoint CurvePoint::infinity(const FieldCtxPtr& ctx) {
    return CurvePoint(true, ctx->zero(), ctx->zero());
}

CurvePoint CurvePoint::finite(FieldElement x, FieldElement y) {
    if (!x.ctx()->same(*y.ctx())) throw std::invalid_argument("point coordinate context mismatch");
    return CurvePoint(false, std::move(x), std::move(y));
}

const FieldElement& CurvePoint::x() const {
    if (inf_) throw std::domain_error("point at infinity has no affine coordinates");
    return x_;
}

const FieldElement& CurvePoint::y() const {
    if (inf_) throw std::domain_error("point at infinity has no affine coordinates");
    return y_;
}

bool CurvePoint::operator==(const CurvePoint& o) const {
    if (inf_ != o.inf_) return false;
    if (inf_) return true;
    return x_ == o.x_ && y_ == o.y_;
}

bool CurvePoint::operator<(const CurvePoint& o) const {
    if (inf_ != o.inf_) return inf_;  // infinity sorts first
    if (inf_) return false;
    if (x_ != o.x_) return x_ < o.x_;
    return y_ < o.y_;
}

std::string CurvePoint::str() const {
    if (inf_) return "inf";
    return "(" + x_.str() + ", " + y_.str() + ")";
}

// ---------------------------------------------------------------------------
// Curve

Curve::Curve(i64 p, int ext) : p_(p), ext_(ext) {
    if (p <= 3) throw std::invalid_argument("curve requires p > 3");
    if (p % 4 != 3) throw std::invalid_argument("curve requires p = 3 (mod 4)");
    if (ext != 1 && ext != 2) throw std::invalid_argument("extension degree must be 1 or 2");
    prime_ = FieldCtx::prime(p);
    field_ = ext == 1 ? prime_ : FieldCtx::quadratic(p);
    h_ = (p + 1) / 2;
    genus_ = (p - 1) / 2;
}

bool Curve::on_curve(const FieldElement& x, const FieldElement& y) const {
    return y * y == x.pow(p_) - x;
}

CurvePoint Curve::finite(const FieldElement& x, const FieldElement& y) const {
    if (!x.ctx()->same(*field_)) throw std::invalid_argument("point not over the curve's field");
    if (!on_curve(x, y))
        throw std::invalid_argument("point (" + x.str() + ", " + y.str() + ") is not on " + str());
    return CurvePoint::finite(x, y);
}

std::vector<CurvePoint> Curve::enumerate_points() const {
    std::vector<CurvePoint> pts;
    pts.push_back(infinity());
    const auto elems = field_->elements();
    for (const auto& x : elems) {
        const FieldElement v = x.pow(p_) - x;
        for (const auto& y : elems)
            if (y * y == v) pts.push_back(CurvePoint::finite(x, y));
    }
    return pts;  // canonical: infinity first, then (x, y) lex by construction
}

std::string Curve::str() const {
    std::ostringstream os;
    os << "y^2 = x^" << p_ << " - x over GF(" << field_->order() << ")";
    return os.str();
}

// ---------------------------------------------------------------------------
// AutElement

AutElement::AutElement(Curve curve, std::array<i64, 4> m, FieldElement e)
    : curve_(std::move(curve)), m_(m), e_(std::move(e)) {}

AutElement AutElement::make(const Curve& curve, std::array<i64, 4> m, FieldElement e) {
    const i64 p = curve.p();
    for (auto& v : m) v = mod_norm(v, p);
    if (!e.ctx()->same(*curve.field()))
        throw std::invalid_argument("automorphism scale factor not over the curve's field");

    const i64 det = mod_norm(m[0] * m[3] - m[1] * m[2], p);
    if (det == 0) throw std::invalid_argument("automorphism matrix is singular");

    // normalize: first nonzero row-major entry becomes 1, e scales by lambda^h
    i64 first = 0;
    for (i64 v : m)
        if (v != 0) {
            first = v;
            break;
        }
    const i64 lambda = mod_pow(first, p - 2, p);
    if (lambda != 1) {
        for (auto& v : m) v = (v * lambda) % p;
        e = e * curve.field()->from_int(mod_pow(lambda, curve.h(), p));
    }

    const i64 det_c = mod_norm(m[0] * m[3] - m[1] * m[2], p);
    if (e * e != curve.field()->from_int(det_c))
        throw std::invalid_argument("e^2 = det M violated for e = " + e.str());

    // exact curve-preservation identity (never sampled):
    //   e^2 (x^p - x) / (cx+d)^(p+1)  ==  phi^p - phi,  phi = (ax+b)/(cx+d)
    const auto& F = curve.field();
    const Poly X = Poly::x(F);
    const Poly axb = Poly::monomial(F->from_int(m[0]), 1) + Poly::constant(F->from_int(m[1]));
    const Poly cxd = Poly::monomial(F->from_int(m[2]), 1) + Poly::constant(F->from_int(m[3]));
    const Poly xpx = X.pow(p) - X;
    const Poly den = cxd.pow(p + 1);
    const Poly lhs_num = Poly::constant(e * e) * xpx;
    const Poly rhs_num = axb.pow(p) * cxd - axb * cxd.pow(p);
    if (!rational_identity_check(lhs_num, den, rhs_num, den))
        throw std::logic_error("curve-preservation identity failed (internal bug)");

    return AutElement(curve, m, std::move(e));
}

AutElement AutElement::identity(const Curve& curve) {
    return make(curve, {1, 0, 0, 1}, curve.field()->one());
}

i64 AutElement::det() const {
    const i64 p = curve_.p();
    return mod_norm(m_[0] * m_[3] - m_[1] * m_[2], p);
}

bool AutElement::is_identity() const {
    return m_ == std::array<i64, 4>{1, 0, 0, 1} && e_.is_one();
}

CurvePoint AutElement::apply(const CurvePoint& pt) const {
    const auto& F = curve_.field();
    const i64 p = curve_.p();
    if (pt.at_infinity()) {
        // [1:0:0] -> [a : 0 : c]
        if (m_[2] % p == 0) return curve_.infinity();
        const FieldElement x = F->from_int(m_[0]) / F->from_int(m_[2]);
        return CurvePoint::finite(x, F->zero());
    }
    const FieldElement num = F->from_int(m_[0]) * pt.x() + F->from_int(m_[1]);
    const FieldElement den = F->from_int(m_[2]) * pt.x() + F->from_int(m_[3]);
    if (den.is_zero()) {
        // cx+d vanishes only at a prime-subfield x, where y = 0; the image
        // is [ax+b : 0 : 0] = infinity
        return curve_.infinity();
    }
    const FieldElement dinv = den.inv();
    const FieldElement x2 = num * dinv;
    const FieldElement y2 = e_ * pt.y() * dinv.pow(curve_.h());
    return CurvePoint::finite(x2, y2);
}

AutElement AutElement::compose(const AutElement& o) const {
    if (curve_ != o.curve_) throw std::invalid_argument("automorphisms of different curves");
    const i64 p = curve_.p();
    const auto& s = m_;
    const auto& t = o.m_;
    std::array<i64, 4> m = {
        mod_norm(s[0] * t[0] + s[1] * t[2], p), mod_norm(s[0] * t[1] + s[1] * t[3], p),
        mod_norm(s[2] * t[0] + s[3] * t[2], p), mod_norm(s[2] * t[1] + s[3] * t[3], p)};
    return make(curve_, m, e_ * o.e_);
}

AutElement AutElement::inverse() const {
    const i64 p = curve_.p();
    const i64 dinv = mod_pow(det(), p - 2, p);
    std::array<i64, 4> m = {mod_norm(m_[3] * dinv, p), mod_norm(-m_[1] * dinv, p),
                            mod_norm(-m_[2] * dinv, p), mod_norm(m_[0] * dinv, p)};
    return make(curve_, m, e_.inv());
}

bool AutElement::operator==(const AutElement& o) const {
    return curve_ == o.curve_ && m_ == o.m_ && e_ == o.e_;
}

bool AutElement::operator<(const AutElement& o) const {
    if (m_ != o.m_) return m_ < o.m_;
    return e_ < o.e_;
}

std::string AutElement::str() const {
    std::ostringstream os;
    os << "M=[[" << m_[0] << "," << m_[1] << "],[" << m_[2] << "," << m_[3] << "]] e=" << e_.str();
    return os.str();
}

// ---------------------------------------------------------------------------
// group construction

std::vector<AutElement> standard_generators(const Curve& curve, const FieldElement& a) {
    const auto& F = curve.field();
    if (!a.ctx()->same(*F)) throw std::invalid_argument("gamma2 parameter not over the curve's field");
    if (a.is_zero()) throw std::invalid_argument("gamma2 parameter must be nonzero");
    const FieldElement a2 = a * a;
    if (!a2.in_prime_subfield())
        throw std::invalid_argument("gamma2 parameter invalid: a^2 = " + a2.str() +
                                    " is not in the prime subfield (need a^(2(p-1)) = 1)");
    std::vector<AutElement> gens;
    gens.push_back(AutElement::make(curve, {1, 0, 0, 1}, -F->one()));          // gamma1
    gens.push_back(AutElement::make(curve, {a2.as_int(), 0, 0, 1}, a));        // gamma2(a)
    gens.push_back(AutElement::make(curve, {1, 1, 0, 1}, F->one()));           // gamma3
    gens.push_back(AutElement::make(curve, {0, -1, 1, 0}, F->one()));          // gamma4
    return gens;
}

FieldElement default_gamma2_parameter(const Curve& curve) {
    const i64 d = curve.ext() == 1 ? curve.p() - 1 : 2 * (curve.p() - 1);
    return element_of_order(curve.field(), d);
}

std::vector<AutElement> enumerate_aut_group(const Curve& curve) {
    const i64 p = curve.p();
    // square roots in the curve's field, keyed by the squared value
    std::map<std::vector<i64>, std::vector<FieldElement>> roots;
    for (const auto& e : curve.field()->elements()) roots[(e * e).coeffs()].push_back(e);

    std::vector<AutElement> out;
    std::array<i64, 4> m{};
    for (m[0] = 0; m[0] < p; ++m[0])
        for (m[1] = 0; m[1] < p; ++m[1])
            for (m[2] = 0; m[2] < p; ++m[2])
                for (m[3] = 0; m[3] < p; ++m[3]) {
                    i64 first = 0;
                    for (i64 v : m)
                        if (v != 0) {
                            first = v;
                            break;
                        }
                    if (first != 1) continue;  // canonical representatives only
                    const i64 det = mod_norm(m[0] * m[3] - m[1] * m[2], p);
                    if (det == 0) continue;
                    const auto it = roots.find(curve.field()->from_int(det).coeffs());
                    if (it == roots.end()) continue;
                    for (const auto& e : it->second) out.push_back(AutElement::make(curve, m, e));
                }
    return out;
}

std::vector<AutElement> closure_from_generators(const std::vector<AutElement>& gens, i64 cap) {
    if (gens.empty()) throw std::invalid_argument("closure needs at least one generator");
    const Curve& curve = gens.front().curve();
    std::set<AutKey> seen;
    std::vector<AutElement> out;
    std::vector<AutElement> frontier;

    const AutElement id = AutElement::identity(curve);
    seen.insert(key_of(id));
    out.push_back(id);
    frontier.push_back(id);
    while (!frontier.empty()) {
        std::vector<AutElement> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                AutElement y = x.compose(g);
                if (seen.insert(key_of(y)).second) {
                    if (static_cast<i64>(seen.size()) > cap)
                        throw CapExceeded("automorphism closure exceeded cap of " + std::to_string(cap));
                    out.push_back(y);
                    next.push_back(std::move(y));
                }
            }
        frontier = std::move(next);
    }
    return out;
}

std::vector<CurvePoint> orbit(const std::vector<AutElement>& group, const CurvePoint& pt) {
    std::set<CurvePoint> seen;
    for (const auto& t : group) seen.insert(t.apply(pt));
    return {seen.begin(), seen.end()};
}

std::vector<AutElement> stabilizer(const std::vector<AutElement>& group, const CurvePoint& pt) {
    std::vector<AutElement> out;
    for (const auto& t : group)
        if (t.apply(pt) == pt) out.push_back(t);
    return out;
}

std::vector<std::vector<CurvePoint>> orbit_partition(const std::vector<CurvePoint>& points,
                                                     const std::vector<AutElement>& group) {
    std::vector<std::vector<CurvePoint>> parts;
    std::set<CurvePoint> seen;
    for (const auto& pt : points) {
        if (seen.count(pt)) continue;
        auto orb = orbit(group, pt);
        for (const auto& q : orb) seen.insert(q);
        parts.push_back(std::move(orb));
    }
    return parts;
}

bool is_abelian(const std::vector<AutElement>& group) {
    for (const auto& s : group)
        for (const auto& t : group)
            if (s.compose(t) != t.compose(s)) return false;
    return true;
}

std::vector<AutElement> aut_center(const std::vector<AutElement>& group) {
    std::vector<AutElement> out;
    for (const auto& z : group) {
        bool commutes = true;
        for (const auto& t : group)
            if (z.compose(t) != t.compose(z)) {
                commutes = false;
                break;
            }
        if (commutes) out.push_back(z);
    }
    return out;
}

}  // namespace agcodes
