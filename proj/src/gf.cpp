#include "agcodes/gf.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace agcodes {

namespace {

bool is_prime_i64(i64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (i64 d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

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

i64 mod_inv(i64 a, i64 p) {
    a = mod_norm(a, p);
    if (a == 0) throw std::domain_error("division by zero in GF(p)");
    return mod_pow(a, p - 2, p);
}

// Dense polynomials over GF(p) as plain coefficient vectors; used for the
// modulus machinery (reduction, inversion, irreducibility) below the
// FieldElement layer.
using PfPoly = std::vector<i64>;

void pf_trim(PfPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PfPoly pf_mul(const PfPoly& a, const PfPoly& b, i64 p) {
    if (a.empty() || b.empty()) return {};
    PfPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    pf_trim(r);
    return r;
}

PfPoly pf_sub(PfPoly a, const PfPoly& b, i64 p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = mod_norm(a[i] - b[i], p);
    pf_trim(a);
    return a;
}

// Remainder of a modulo monic m.
PfPoly pf_mod(PfPoly a, const PfPoly& m, i64 p) {
    pf_trim(a);
    const i64 dm = static_cast<i64>(m.size()) - 1;
    while (static_cast<i64>(a.size()) - 1 >= dm) {
        const i64 d = static_cast<i64>(a.size()) - 1;
        const i64 c = a[d];
        if (c != 0)
            for (i64 i = 0; i <= dm; ++i)
                a[d - dm + i] = mod_norm(a[d - dm + i] - c * m[i] % p, p);
        a.pop_back();
        pf_trim(a);
    }
    return a;
}

// Division with remainder; b nonzero.
std::pair<PfPoly, PfPoly> pf_divmod(PfPoly a, PfPoly b, i64 p) {
    pf_trim(a);
    pf_trim(b);
    if (b.empty()) throw std::domain_error("division by zero polynomial");
    PfPoly q(a.size() > b.size() ? a.size() - b.size() + 1 : 1, 0);
    const i64 linv = mod_inv(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
        const i64 d = static_cast<i64>(a.size() - b.size());
        const i64 c = (a.back() * linv) % p;
        q[d] = c;
        for (size_t i = 0; i < b.size(); ++i)
            a[d + i] = mod_norm(a[d + i] - c * b[i] % p, p);
        pf_trim(a);
    }
    pf_trim(q);
    return {q, a};
}

// u with u*a == 1 (mod m); a nonzero mod m, m monic irreducible.
PfPoly pf_invmod(const PfPoly& a, const PfPoly& m, i64 p) {
    PfPoly r0 = m, r1 = pf_mod(a, m, p);
    if (r1.empty()) throw std::domain_error("division by zero in extension field");
    PfPoly s0 = {}, s1 = {1};
    while (!r1.empty()) {
        auto [q, r] = pf_divmod(r0, r1, p);
        r0 = r1;
        r1 = r;
        PfPoly s2 = pf_sub(s0, pf_mul(q, s1, p), p);
        s0 = s1;
        s1 = s2;
    }
    // r0 = gcd, a unit for irreducible m
    if (r0.size() != 1) throw std::logic_error("modulus not irreducible");
    const i64 ginv = mod_inv(r0[0], p);
    for (auto& c : s0) c = (c * ginv) % p;
    pf_trim(s0);
    return pf_mod(s0, m, p);
}

PfPoly pf_gcd(PfPoly a, PfPoly b, i64 p) {
    pf_trim(a);
    pf_trim(b);
    while (!b.empty()) {
        auto r = pf_divmod(a, b, p).second;
        a = b;
        b = r;
    }
    return a;
}

// x^(p^j) mod f by iterated Frobenius.
PfPoly pf_frobenius_power(const PfPoly& f, i64 p, int j) {
    PfPoly x = pf_mod({0, 1}, f, p);
    PfPoly acc = x;
    for (int step = 0; step < j; ++step) {
        // acc <- acc^p mod f
        PfPoly r = {1};
        PfPoly base = acc;
        i64 e = p;
        while (e > 0) {
            if (e & 1) r = pf_mod(pf_mul(r, base, p), f, p);
            base = pf_mod(pf_mul(base, base, p), f, p);
            e >>= 1;
        }
        acc = r;
    }
    return acc;
}

// Rabin's criterion: f (monic, degree k) is irreducible over GF(p) iff
// x^(p^k) == x mod f and gcd(x^(p^(k/l)) - x, f) = 1 for prime l | k.
bool pf_irreducible(const PfPoly& f, i64 p) {
    const int k = static_cast<int>(f.size()) - 1;
    if (k < 1) return false;
    PfPoly x = pf_mod({0, 1}, f, p);
    if (pf_frobenius_power(f, p, k) != x) return false;
    int rem = k;
    for (int l = 2; l <= rem; ++l) {
        if (rem % l != 0) continue;
        while (rem % l == 0) rem /= l;
        PfPoly g = pf_gcd(pf_sub(pf_frobenius_power(f, p, k / l), x, p), f, p);
        pf_trim(g);
        if (g.size() != 1) return false;
    }
    return true;
}

i64 smallest_nonresidue(i64 p) {
    for (i64 n = 2; n < p; ++n)
        if (mod_pow(n, (p - 1) / 2, p) == p - 1) return n;
    throw std::invalid_argument("no quadratic nonresidue (p must be an odd prime)");
}

void check_prime_arg(i64 p) {
    if (p >= (i64{1} << 31)) throw std::invalid_argument("characteristic too large");
    if (!is_prime_i64(p)) throw std::invalid_argument("characteristic must be prime");
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(FieldCtxPtr ctx, std::vector<i64> coeffs) : ctx_(std::move(ctx)) {
    if (!ctx_) throw std::invalid_argument("null field context");
    const i64 p = ctx_->p();
    for (auto& c : coeffs) c = mod_norm(c, p);
    if (static_cast<int>(coeffs.size()) > ctx_->k()) coeffs = pf_mod(coeffs, ctx_->modulus(), p);
    coeffs.resize(ctx_->k(), 0);
    c_ = std::move(coeffs);
}

bool FieldElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](i64 v) { return v == 0; });
}

bool FieldElement::is_one() const {
    if (c_[0] != 1) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](i64 v) { return v == 0; });
}

bool FieldElement::in_prime_subfield() const {
    return std::all_of(c_.begin() + 1, c_.end(), [](i64 v) { return v == 0; });
}

i64 FieldElement::as_int() const {
    if (!in_prime_subfield()) throw std::domain_error("element not in the prime subfield");
    return c_[0];
}

void FieldElement::require_same_ctx(const FieldElement& o) const {
    if (ctx_.get() == o.ctx_.get()) return;
    if (!ctx_->same(*o.ctx_)) throw std::invalid_argument("field context mismatch");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same_ctx(o);
    std::vector<i64> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = mod_norm(c_[i] + o.c_[i], ctx_->p());
    return FieldElement(ctx_, std::move(r));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    require_same_ctx(o);
    std::vector<i64> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = mod_norm(c_[i] - o.c_[i], ctx_->p());
    return FieldElement(ctx_, std::move(r));
}

FieldElement FieldElement::operator-() const {
    std::vector<i64> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = mod_norm(-c_[i], ctx_->p());
    return FieldElement(ctx_, std::move(r));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same_ctx(o);
    const i64 p = ctx_->p();
    if (ctx_->k() == 1) return FieldElement(ctx_, {(c_[0] * o.c_[0]) % p});
    PfPoly prod = pf_mul(c_, o.c_, p);
    return FieldElement(ctx_, pf_mod(std::move(prod), ctx_->modulus(), p));
}

FieldElement FieldElement::inv() const {
    const i64 p = ctx_->p();
    if (is_zero()) throw std::domain_error("division by zero");
    if (ctx_->k() == 1) return FieldElement(ctx_, {mod_inv(c_[0], p)});
    return FieldElement(ctx_, pf_invmod(c_, ctx_->modulus(), p));
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inv(); }

FieldElement FieldElement::pow(i64 e) const {
    if (e < 0) return inv().pow(-e);
    FieldElement base = *this;
    FieldElement r = ctx_->one();
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

bool FieldElement::operator==(const FieldElement& o) const {
    require_same_ctx(o);
    return c_ == o.c_;
}

bool FieldElement::operator<(const FieldElement& o) const {
    require_same_ctx(o);
    return c_ < o.c_;
}

std::string FieldElement::str() const {
    if (ctx_->k() == 1) return std::to_string(c_[0]);
    std::ostringstream os;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i > 0) os << "+";
        os << c_[i];
        if (i == 1) os << "*t";
        if (i > 1) os << "*t^" << i;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// FieldCtx

FieldCtxPtr FieldCtx::prime(i64 p) {
    check_prime_arg(p);
    return FieldCtxPtr(new FieldCtx(p, 1, {0, 1}));
}

FieldCtxPtr FieldCtx::quadratic(i64 p) {
    check_prime_arg(p);
    if (p == 2) throw std::invalid_argument("quadratic() requires odd p; use extension(2, 2)");
    const i64 n = smallest_nonresidue(p);
    return FieldCtxPtr(new FieldCtx(p, 2, {mod_norm(-n, p), 0, 1}));
}

FieldCtxPtr FieldCtx::extension(i64 p, int k) {
    check_prime_arg(p);
    if (k < 1) throw std::invalid_argument("extension degree must be >= 1");
    if (k == 1) return prime(p);
    if (k == 2 && p != 2) return quadratic(p);
    // first monic irreducible of degree k in lexicographic coefficient order
    std::vector<i64> low(k, 0);
    while (true) {
        PfPoly f = low;
        f.push_back(1);
        if (pf_irreducible(f, p)) return FieldCtxPtr(new FieldCtx(p, k, std::move(f)));
        int i = k - 1;
        while (i >= 0 && low[i] == p - 1) low[i--] = 0;
        if (i < 0) throw std::logic_error("no irreducible polynomial found");
        ++low[i];
    }
}

FieldCtxPtr FieldCtx::from_order(i64 q) {
    if (q < 2) throw std::invalid_argument("field order must be >= 2");
    i64 p = q;
    for (i64 d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    int k = 0;
    i64 acc = 1;
    while (acc < q) {
        acc *= p;
        ++k;
    }
    if (acc != q) throw std::invalid_argument("field order is not a prime power");
    return extension(p, k);
}

i64 FieldCtx::order() const {
    i64 acc = 1;
    for (int i = 0; i < k_; ++i) {
        if (acc > (i64{1} << 62) / p_) throw std::overflow_error("field order exceeds i64");
        acc *= p_;
    }
    return acc;
}

FieldElement FieldCtx::zero() const { return FieldElement(shared_from_this(), {}); }

FieldElement FieldCtx::one() const { return FieldElement(shared_from_this(), {1}); }

FieldElement FieldCtx::from_int(i64 v) const { return FieldElement(shared_from_this(), {v}); }

FieldElement FieldCtx::element(std::vector<i64> coeffs) const {
    return FieldElement(shared_from_this(), std::move(coeffs));
}

std::vector<FieldElement> FieldCtx::elements() const {
    const i64 q = order();
    std::vector<FieldElement> out;
    out.reserve(static_cast<size_t>(q));
    std::vector<i64> c(k_, 0);
    for (i64 count = 0; count < q; ++count) {
        out.push_back(element(c));
        int i = k_ - 1;  // last coefficient varies fastest: lex order, c0 major
        while (i >= 0 && c[i] == p_ - 1) c[i--] = 0;
        if (i >= 0) ++c[i];
    }
    return out;
}

bool FieldCtx::same(const FieldCtx& o) const {
    return p_ == o.p_ && k_ == o.k_ && mod_ == o.mod_;
}

// ---------------------------------------------------------------------------
// element orders

i64 multiplicative_order(const FieldElement& a) {
    if (a.is_zero()) throw std::domain_error("zero has no multiplicative order");
    const i64 bound = a.ctx()->order();
    FieldElement x = a;
    i64 d = 1;
    while (!x.is_one()) {
        x = x * a;
        if (++d > bound) throw std::logic_error("order loop did not terminate");
    }
    return d;
}

FieldElement element_of_order(const FieldCtxPtr& ctx, i64 d) {
    const i64 group = ctx->order() - 1;
    if (d < 1 || group % d != 0)
        throw std::invalid_argument("no element of order " + std::to_string(d) + " in GF(" +
                                    std::to_string(ctx->order()) + ")");
    for (const auto& a : ctx->elements()) {
        if (a.is_zero()) continue;
        if (multiplicative_order(a) == d) return a;
    }
    throw std::logic_error("cyclic group missing an element of a dividing order");
}

FieldElement parse_element(const FieldCtxPtr& ctx, const std::string& text) {
    std::vector<i64> coeffs;
    size_t i = 0;
    const auto fail = [&]() { throw std::invalid_argument("cannot parse field element '" + text + "'"); };
    const auto skip_ws = [&]() {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i == text.size()) fail();
    bool first = true;
    while (i < text.size()) {
        i64 sign = 1;
        skip_ws();
        if (!first || text[i] == '+' || text[i] == '-') {
            if (i >= text.size() || (text[i] != '+' && text[i] != '-')) fail();
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        }
        first = false;
        i64 value = 1;
        bool saw_digits = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            value = 0;
            saw_digits = true;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                value = value * 10 + (text[i++] - '0');
        }
        skip_ws();
        i64 deg = 0;
        if (i < text.size() && (text[i] == '*' || text[i] == 't')) {
            if (text[i] == '*') {
                ++i;
                skip_ws();
            }
            if (i >= text.size() || text[i] != 't') fail();
            ++i;
            deg = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) fail();
                deg = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                    deg = deg * 10 + (text[i++] - '0');
            }
        } else if (!saw_digits) {
            fail();
        }
        if (deg > 64) fail();
        if (static_cast<size_t>(deg) >= coeffs.size()) coeffs.resize(deg + 1, 0);
        coeffs[deg] += sign * value;
        skip_ws();
    }
    return ctx->element(std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(FieldCtxPtr ctx, std::vector<FieldElement> coeffs)
    : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    for (const auto& c : c_)
        if (!c.ctx()->same(*ctx_)) throw std::invalid_argument("polynomial coefficient context mismatch");
    trim();
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const FieldElement& c) { return Poly(c.ctx(), {c}); }

Poly Poly::x(const FieldCtxPtr& ctx) { return Poly(ctx, {ctx->zero(), ctx->one()}); }

Poly Poly::monomial(const FieldElement& coeff, i64 deg) {
    std::vector<FieldElement> c(static_cast<size_t>(deg), coeff.ctx()->zero());
    c.push_back(coeff);
    return Poly(coeff.ctx(), std::move(c));
}

FieldElement Poly::coeff(i64 i) const {
    if (i < 0 || i >= static_cast<i64>(c_.size())) return ctx_->zero();
    return c_[static_cast<size_t>(i)];
}

FieldElement Poly::leading() const {
    if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
    return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<FieldElement> r;
    const size_t n = std::max(c_.size(), o.c_.size());
    r.reserve(n);
    for (size_t i = 0; i < n; ++i) r.push_back(coeff(i) + o.coeff(i));
    return Poly(ctx_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<FieldElement> r;
    const size_t n = std::max(c_.size(), o.c_.size());
    r.reserve(n);
    for (size_t i = 0; i < n; ++i) r.push_back(coeff(i) - o.coeff(i));
    return Poly(ctx_, std::move(r));
}

Poly Poly::operator-() const {
    std::vector<FieldElement> r;
    r.reserve(c_.size());
    for (const auto& c : c_) r.push_back(-c);
    return Poly(ctx_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(ctx_);
    std::vector<FieldElement> r(c_.size() + o.c_.size() - 1, ctx_->zero());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    return Poly(ctx_, std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& g) const {
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    Poly r = *this;
    if (r.degree() < g.degree()) return {Poly(ctx_), r};
    std::vector<FieldElement> q(static_cast<size_t>(r.degree() - g.degree()) + 1, ctx_->zero());
    const FieldElement linv = g.leading().inv();
    while (!r.is_zero() && r.degree() >= g.degree()) {
        const i64 d = r.degree() - g.degree();
        const FieldElement c = r.leading() * linv;
        q[static_cast<size_t>(d)] = c;
        r = r - Poly::monomial(c, d) * g;
    }
    return {Poly(ctx_, std::move(q)), r};
}

Poly Poly::pow(i64 e) const {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    Poly r = Poly::constant(ctx_->one());
    Poly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

FieldElement Poly::eval(const FieldElement& at) const {
    FieldElement acc = ctx_->zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    const FieldElement linv = leading().inv();
    std::vector<FieldElement> r;
    r.reserve(c_.size());
    for (const auto& c : c_) r.push_back(c * linv);
    return Poly(ctx_, std::move(r));
}

bool Poly::operator==(const Poly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (i64 d = degree(); d >= 0; --d) {
        const FieldElement c = coeff(d);
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const bool ext = ctx_->k() > 1;
        if (d == 0) {
            os << (ext ? "(" + c.str() + ")" : c.str());
            continue;
        }
        if (!c.is_one()) os << (ext ? "(" + c.str() + ")" : c.str()) << "*";
        os << "x";
        if (d > 1) os << "^" << d;
    }
    return os.str();
}

Poly poly_gcd(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw std::invalid_argument("gcd with zero polynomial");
    Poly a = f, b = g;
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = b;
        b = r;
    }
    return a.monic();
}

bool rational_identity_check(const Poly& lhs_num, const Poly& lhs_den,
                             const Poly& rhs_num, const Poly& rhs_den) {
    if (lhs_den.is_zero() || rhs_den.is_zero())
        throw std::invalid_argument("zero denominator in rational identity");
    return lhs_num * rhs_den == rhs_num * lhs_den;
}

}  // namespace agcodes
