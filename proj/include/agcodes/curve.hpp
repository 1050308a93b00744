#pragma once

#include <array>
#include <string>
#include <vector>

#include "agcodes/gf.hpp"

namespace agcodes {

class Curve;

/// A rational point of the curve: a finite affine point (x, y) or the unique
/// point at infinity [1:0:0] of the weighted projective model. Canonical
/// order places infinity first, then finite points by (x, y).
class CurvePoint {
public:
    static CurvePoint infinity(const FieldCtxPtr& ctx);
    static CurvePoint finite(FieldElement x, FieldElement y);

    bool at_infinity() const { return inf_; }
    const FieldElement& x() const;
    const FieldElement& y() const;

    bool operator==(const CurvePoint& o) const;
    bool operator!=(const CurvePoint& o) const { return !(*this == o); }
    bool operator<(const CurvePoint& o) const;

    std::string str() const;  // "inf" or "(x, y)"

private:
    CurvePoint(bool inf, FieldElement x, FieldElement y);

    bool inf_;
    FieldElement x_, y_;
};

/// The hyperelliptic curve y^2 = x^p - x over GF(p) or GF(p^2), for prime
/// p > 3 with p = 3 (mod 4). In the weighted projective model
/// Y^2 = X^p Z - X Z^p the coordinate weights are (1, (p+1)/2, 1) and the
/// point at infinity is [1:0:0]. The genus is (p-1)/2.
class Curve {
public:
    Curve(i64 p, int ext);

    i64 p() const { return p_; }
    int ext() const { return ext_; }
    /// Weight of the y coordinate, (p+1)/2.
    i64 h() const { return h_; }
    i64 genus() const { return genus_; }
    const FieldCtxPtr& field() const { return field_; }
    const FieldCtxPtr& prime_field() const { return prime_; }

    bool on_curve(const FieldElement& x, const FieldElement& y) const;
    CurvePoint infinity() const { return CurvePoint::infinity(field_); }
    /// Validating constructor for finite points.
    CurvePoint finite(const FieldElement& x, const FieldElement& y) const;

    /// All rational points in canonical order (infinity first). The count is
    /// a brute-force scan over all (x, y) pairs plus one.
    std::vector<CurvePoint> enumerate_points() const;

    bool operator==(const Curve& o) const { return p_ == o.p_ && ext_ == o.ext_; }
    bool operator!=(const Curve& o) const { return !(*this == o); }

    std::string str() const;  // "y^2 = x^p - x over GF(q)"

private:
    i64 p_;
    int ext_;
    FieldCtxPtr field_;
    FieldCtxPtr prime_;
    i64 h_;
    i64 genus_;
};

/// A curve automorphism in the canonical (M, e) form: M is an invertible
/// 2x2 matrix over the prime subfield GF(p), e an element of the curve's
/// field with e^2 = det M. The action on weighted coordinates is
/// [X:Y:Z] -> [aX+bZ : eY : cX+dZ]. Pairs are normalized so the first
/// nonzero entry of M in row-major order is 1, which quotients out the
/// scaling equivalence (M, e) ~ (lambda M, lambda^h e).
///
/// Construction validates the curve-preservation identity
/// psi(x)^2 (x^p - x) = phi(x)^p - phi(x) with phi = (ax+b)/(cx+d) and
/// psi = e/(cx+d)^h by exact polynomial cross-multiplication.
class AutElement {
public:
    static AutElement make(const Curve& curve, std::array<i64, 4> m, FieldElement e);
    static AutElement identity(const Curve& curve);

    const Curve& curve() const { return curve_; }
    const std::array<i64, 4>& m() const { return m_; }
    const FieldElement& e() const { return e_; }
    i64 det() const;
    bool is_identity() const;

    CurvePoint apply(const CurvePoint& pt) const;
    AutElement compose(const AutElement& o) const;  // this after o
    AutElement inverse() const;

    bool operator==(const AutElement& o) const;
    bool operator!=(const AutElement& o) const { return !(*this == o); }
    bool operator<(const AutElement& o) const;

    std::string str() const;  // "M=[[a,b],[c,d]] e=<element>"

private:
    AutElement(Curve curve, std::array<i64, 4> m, FieldElement e);

    Curve curve_;
    std::array<i64, 4> m_;
    FieldElement e_;
};

/// The four standard generators, in order:
///   gamma1 = (I, -1)                 the hyperelliptic involution y -> -y
///   gamma2(a) = (diag(a^2, 1), a)    x -> a^2 x, y -> a y
///   gamma3 = ((1,1;0,1), 1)          x -> x + 1
///   gamma4 = ((0,-1;1,0), 1)         x -> -1/x, y -> y/x^h
/// Requires a != 0 with a^2 in the prime subfield (equivalently
/// a^(2(p-1)) = 1), so that diag(a^2, 1) is defined over GF(p).
std::vector<AutElement> standard_generators(const Curve& curve, const FieldElement& a);

/// Default gamma2 parameter: the canonically smallest element of maximal
/// valid order, p-1 over GF(p) and 2(p-1) over GF(p^2).
FieldElement default_gamma2_parameter(const Curve& curve);

/// Direct classification of the full automorphism group: all canonical
/// (M, e) pairs with det M != 0 and e^2 = det M, in lexicographic order of
/// (m00, m01, m10, m11, e).
std::vector<AutElement> enumerate_aut_group(const Curve& curve);

/// BFS closure under composition. Throws CapExceeded past cap elements.
std::vector<AutElement> closure_from_generators(const std::vector<AutElement>& gens, i64 cap);

/// Orbit of a point under a (closed) group, in canonical point order.
std::vector<CurvePoint> orbit(const std::vector<AutElement>& group, const CurvePoint& pt);

/// Elements fixing the point, in group order.
std::vector<AutElement> stabilizer(const std::vector<AutElement>& group, const CurvePoint& pt);

/// Orbit decomposition of the full point set, ordered by canonical orbit
/// representative.
std::vector<std::vector<CurvePoint>> orbit_partition(const std::vector<CurvePoint>& points,
                                                     const std::vector<AutElement>& group);

bool is_abelian(const std::vector<AutElement>& group);

/// Elements commuting with every member of the group.
std::vector<AutElement> aut_center(const std::vector<AutElement>& group);

}  // namespace agcodes
