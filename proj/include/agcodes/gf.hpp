#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace agcodes {

using i64 = std::int64_t;

class FieldCtx;
using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

/// An element of GF(p^k), stored as the coefficient vector of its residue
/// polynomial: coeffs[i] is the coefficient of t^i, reduced into [0, p).
/// Elements are immutable values; arithmetic returns fresh elements.
///
/// Ordering is coefficient-lexicographic with the constant coefficient
/// compared first; this is the order used whenever a "smallest" element
/// or a sorted listing is required.
class FieldElement {
public:
    FieldElement(FieldCtxPtr ctx, std::vector<i64> coeffs);

    const FieldCtxPtr& ctx() const { return ctx_; }
    const std::vector<i64>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    /// True if the element lies in the prime subfield GF(p).
    bool in_prime_subfield() const;
    /// The residue in [0, p) of a prime-subfield element.
    i64 as_int() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inv() const;
    FieldElement pow(i64 e) const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
    bool operator<(const FieldElement& o) const;

    /// "3" for prime fields, "c0+c1*t" for quadratic extensions,
    /// "c0+c1*t+c2*t^2+..." beyond.
    std::string str() const;

private:
    void require_same_ctx(const FieldElement& o) const;

    FieldCtxPtr ctx_;
    std::vector<i64> c_;
};

/// Description of GF(p^k): characteristic, extension degree, and the monic
/// irreducible modulus (length k+1 coefficient vector over GF(p)).
///
/// For k = 2 the modulus is always t^2 - n with n the smallest positive
/// quadratic nonresidue mod p, so every printed element and derived
/// constant is reproducible. Contexts are created through the factories
/// and shared via FieldCtxPtr.
class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
public:
    static FieldCtxPtr prime(i64 p);
    static FieldCtxPtr quadratic(i64 p);
    /// k = 1 or 2 use the deterministic constructions above; larger k scans
    /// monic polynomials in lexicographic order for the first irreducible.
    static FieldCtxPtr extension(i64 p, int k);
    /// Rebuild a context from the field size q = p or q = p^2.
    static FieldCtxPtr from_order(i64 q);

    i64 p() const { return p_; }
    int k() const { return k_; }
    const std::vector<i64>& modulus() const { return mod_; }
    /// p^k; throws std::overflow_error if it does not fit in i64.
    i64 order() const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_int(i64 v) const;
    FieldElement element(std::vector<i64> coeffs) const;
    /// All field elements in canonical (coefficient-lex) order.
    std::vector<FieldElement> elements() const;

    bool same(const FieldCtx& o) const;

private:
    FieldCtx(i64 p, int k, std::vector<i64> mod) : p_(p), k_(k), mod_(std::move(mod)) {}

    i64 p_;
    int k_;
    std::vector<i64> mod_;
};

/// Least d >= 1 with a^d = 1. Throws std::domain_error for a = 0.
i64 multiplicative_order(const FieldElement& a);

/// The canonically smallest element of exact multiplicative order d.
/// Throws std::invalid_argument unless d divides p^k - 1.
FieldElement element_of_order(const FieldCtxPtr& ctx, i64 d);

/// Parse an element from its text rendering ("5", "-2", "1+2*t", "3*t").
FieldElement parse_element(const FieldCtxPtr& ctx, const std::string& text);

/// Univariate polynomial over a FieldCtx. Coefficient vector carries no
/// trailing zeros; the zero polynomial has an empty vector and degree -1.
class Poly {
public:
    explicit Poly(FieldCtxPtr ctx) : ctx_(std::move(ctx)) {}
    Poly(FieldCtxPtr ctx, std::vector<FieldElement> coeffs);

    static Poly constant(const FieldElement& c);
    static Poly x(const FieldCtxPtr& ctx);
    static Poly monomial(const FieldElement& coeff, i64 deg);

    const FieldCtxPtr& ctx() const { return ctx_; }
    i64 degree() const { return static_cast<i64>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    /// Coefficient of x^i (zero beyond the degree).
    FieldElement coeff(i64 i) const;
    FieldElement leading() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    /// Quotient and remainder with deg r < deg g. Throws on zero divisor.
    std::pair<Poly, Poly> divmod(const Poly& g) const;
    Poly pow(i64 e) const;
    FieldElement eval(const FieldElement& at) const;
    Poly monic() const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::string str() const;

private:
    void trim();

    FieldCtxPtr ctx_;
    std::vector<FieldElement> c_;
};

/// Monic gcd by the Euclidean algorithm. g must be nonzero.
Poly poly_gcd(const Poly& f, const Poly& g);

/// Exact cross-multiplication test: lhs_num/lhs_den == rhs_num/rhs_den as
/// rational functions. Throws std::invalid_argument on a zero denominator.
bool rational_identity_check(const Poly& lhs_num, const Poly& lhs_den,
                             const Poly& rhs_num, const Poly& rhs_den);

}  // namespace agcodes
