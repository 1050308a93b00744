#include "agcodes/code.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "agcodes/errors.hpp"

namespace agcodes {

GenMatrix::GenMatrix(FieldCtxPtr ctx, i64 rows, i64 cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    a_.assign(static_cast<size_t>(rows * cols), ctx_->zero());
}

FieldElement& GenMatrix::at(i64 r, i64 c) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
    return a_[static_cast<size_t>(r * cols_ + c)];
}

const FieldElement& GenMatrix::at(i64 r, i64 c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
    return a_[static_cast<size_t>(r * cols_ + c)];
}

GenMatrix GenMatrix::rref() const {
    GenMatrix m = *this;
    i64 lead = 0;
    for (i64 col = 0; col < cols_ && lead < rows_; ++col) {
        i64 piv = -1;
        for (i64 r = lead; r < rows_; ++r)
            if (!m.at(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        for (i64 c = 0; c < cols_; ++c) std::swap(m.at(lead, c), m.at(piv, c));
        const FieldElement inv = m.at(lead, col).inv();
        for (i64 c = 0; c < cols_; ++c) m.at(lead, c) = m.at(lead, c) * inv;
        for (i64 r = 0; r < rows_; ++r) {
            if (r == lead || m.at(r, col).is_zero()) continue;
            const FieldElement f = m.at(r, col);
            for (i64 c = 0; c < cols_; ++c) m.at(r, c) = m.at(r, c) - f * m.at(lead, c);
        }
        ++lead;
    }
    GenMatrix out(ctx_, lead, cols_);
    for (i64 r = 0; r < lead; ++r)
        for (i64 c = 0; c < cols_; ++c) out.at(r, c) = m.at(r, c);
    return out;
}

bool GenMatrix::operator==(const GenMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || !ctx_->same(*o.ctx_)) return false;
    for (size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

LinearCode::LinearCode(GenMatrix gen) : gen_(std::move(gen)), rref_(gen_.rref()) {}

LinearCode build_ag_code(const Curve& curve, const OnePointDivisor& d,
                         const std::vector<CurvePoint>& e) {
    if (e.empty()) throw std::invalid_argument("evaluation set is empty");
    std::set<CurvePoint> distinct;
    for (const auto& pt : e) {
        if (pt.at_infinity()) throw std::invalid_argument("evaluation points must be finite");
        if (!pt.x().ctx()->same(*curve.field()))
            throw std::invalid_argument("evaluation point not over the curve's field");
        if (!curve.on_curve(pt.x(), pt.y()))
            throw std::invalid_argument("evaluation point " + pt.str() + " is not on the curve");
        if (pt == d.base())
            throw std::invalid_argument("evaluation set meets the support of the divisor");
        if (!distinct.insert(pt).second)
            throw std::invalid_argument("duplicate evaluation point " + pt.str());
    }
    const auto basis = rr_basis(curve, d);
    GenMatrix g(curve.field(), static_cast<i64>(basis.size()), static_cast<i64>(e.size()));
    for (i64 r = 0; r < g.rows(); ++r)
        for (i64 c = 0; c < g.cols(); ++c)
            g.at(r, c) = basis[static_cast<size_t>(r)].eval(e[static_cast<size_t>(c)]);
    return LinearCode(std::move(g));
}

i64 min_distance_exact(const LinearCode& code, i64 cap) {
    const i64 k = code.k();
    const i64 n = code.n();
    if (k == 0) throw std::invalid_argument("minimum distance of the zero code is undefined");
    const i64 q = code.ctx()->order();

    BigInt count = (boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(k)) - 1) / (q - 1);
    if (count > cap)
        throw CapExceeded("minimum-distance enumeration needs " + count.str() +
                          " projective messages, cap is " + std::to_string(cap) +
                          "; fall back to the designed distance");

    const GenMatrix& g = code.rref();
    const auto elems = code.ctx()->elements();
    const FieldElement zero = code.ctx()->zero();
    const FieldElement one = code.ctx()->one();
    i64 best = n;

    // messages with first nonzero coordinate at position `lead`, fixed to 1
    std::vector<FieldElement> msg(static_cast<size_t>(k), zero);
    std::vector<FieldElement> word(static_cast<size_t>(n), zero);
    for (i64 lead = 0; lead < k; ++lead) {
        std::vector<size_t> odom(static_cast<size_t>(k - lead - 1), 0);
        for (i64 i = 0; i < k; ++i) msg[static_cast<size_t>(i)] = i == lead ? one : zero;
        while (true) {
            for (i64 j = 0; j < n; ++j) {
                FieldElement s = g.at(lead, j);
                for (i64 i = lead + 1; i < k; ++i)
                    if (!msg[static_cast<size_t>(i)].is_zero())
                        s = s + msg[static_cast<size_t>(i)] * g.at(i, j);
                word[static_cast<size_t>(j)] = s;
            }
            i64 w = 0;
            for (const auto& v : word)
                if (!v.is_zero()) ++w;
            best = std::min(best, w);

            // odometer over the free coordinates
            size_t pos = odom.size();
            while (pos > 0 && odom[pos - 1] + 1 == static_cast<size_t>(q)) odom[--pos] = 0;
            if (pos == 0) break;
            ++odom[pos - 1];
            for (size_t t = 0; t < odom.size(); ++t)
                msg[static_cast<size_t>(lead) + 1 + t] = elems[odom[t]];
        }
    }
    return best;
}

i64 d_designed(i64 deg_e, i64 deg_d) {
    if (deg_e <= deg_d)
        throw std::invalid_argument("designed distance requires deg E > deg D");
    return deg_e - deg_d;
}

CodeParams make_code_params(i64 n, i64 k, i64 d_lower, std::optional<i64> d_exact) {
    if (d_exact && !(d_lower <= *d_exact && *d_exact <= n - k + 1))
        throw std::logic_error("distance bounds violated: designed " + std::to_string(d_lower) +
                               ", exact " + std::to_string(*d_exact) + ", Singleton " +
                               std::to_string(n - k + 1));
    return CodeParams{n, k, d_exact, d_lower};
}

LinearCode permute_coords(const LinearCode& code, const Permutation& pi) {
    if (pi.size() != code.n()) throw std::invalid_argument("permutation length differs from n");
    const GenMatrix& g = code.gen();
    GenMatrix out(code.ctx(), g.rows(), g.cols());
    for (i64 r = 0; r < g.rows(); ++r)
        for (i64 c = 0; c < g.cols(); ++c)
            out.at(r, static_cast<i64>(pi.apply(static_cast<int>(c) + 1)) - 1) = g.at(r, c);
    return LinearCode(std::move(out));
}

GvResult gv_check(i64 n, i64 k, i64 d, i64 q) {
    if (n < 1 || d < 1 || d > n || k < 1 || k > n || q < 2)
        throw std::invalid_argument("gv_check requires 1 <= d <= n, 1 <= k <= n, q >= 2");
    GvResult res;
    BigInt binom = 1;  // C(n-1, i), updated multiplicatively
    BigInt qm1_pow = 1;
    res.sphere_sum = 0;
    for (i64 i = 0; i <= d - 2; ++i) {
        res.sphere_sum += binom * qm1_pow;
        binom = binom * (n - 1 - i) / (i + 1);
        qm1_pow *= (q - 1);
    }
    res.q_power = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(n - k));
    res.beats = res.sphere_sum >= res.q_power;
    return res;
}

void write_generator_matrix(std::ostream& os, const GenMatrix& m) {
    os << m.ctx()->order() << " " << m.cols() << " " << m.rows() << "\n";
    for (i64 r = 0; r < m.rows(); ++r) {
        for (i64 c = 0; c < m.cols(); ++c) {
            if (c) os << " ";
            os << m.at(r, c).str();
        }
        os << "\n";
    }
}

GenMatrix read_generator_matrix(std::istream& is) {
    i64 q = 0, n = 0, k = 0;
    if (!(is >> q >> n >> k)) throw std::invalid_argument("bad generator matrix header");
    const FieldCtxPtr ctx = FieldCtx::from_order(q);
    GenMatrix m(ctx, k, n);
    for (i64 r = 0; r < k; ++r)
        for (i64 c = 0; c < n; ++c) {
            std::string tok;
            if (!(is >> tok)) throw std::invalid_argument("truncated generator matrix");
            m.at(r, c) = parse_element(ctx, tok);
        }
    return m;
}

}  // namespace agcodes
