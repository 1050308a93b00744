#include "agcodes/autcode.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "agcodes/errors.hpp"

namespace agcodes {

ActionContext::ActionContext(Curve curve, OnePointDivisor d, std::vector<CurvePoint> e,
                             std::vector<AutElement> stab, LinearCode code)
    : curve_(std::move(curve)), d_(std::move(d)), e_(std::move(e)), stab_(std::move(stab)),
      code_(std::move(code)) {
    for (size_t i = 0; i < e_.size(); ++i) index_[e_[i]] = static_cast<int>(i) + 1;
}

ActionContext ActionContext::build(const Curve& curve, const OnePointDivisor& d,
                                   std::vector<CurvePoint> e,
                                   const std::vector<AutElement>& full_group) {
    if (static_cast<i64>(e.size()) <= d.degree())
        throw std::invalid_argument("need n > deg D for an injective evaluation map");
    LinearCode code = build_ag_code(curve, d, e);

    const std::set<CurvePoint> eset(e.begin(), e.end());
    std::vector<AutElement> stab;
    for (const auto& t : full_group) {
        if (t.apply(d.base()) != d.base()) continue;
        bool permutes = true;
        for (const auto& pt : e)
            if (!eset.count(t.apply(pt))) {
                permutes = false;
                break;
            }
        if (permutes) stab.push_back(t);
    }
    return ActionContext(curve, d, std::move(e), std::move(stab), std::move(code));
}

int ActionContext::index_of(const CurvePoint& pt) const {
    const auto it = index_.find(pt);
    if (it == index_.end())
        throw std::invalid_argument("point " + pt.str() + " is not an evaluation point");
    return it->second;
}

Permutation rho(const ActionContext& ctx, const AutElement& t) {
    if (t.apply(ctx.divisor().base()) != ctx.divisor().base())
        throw std::invalid_argument("automorphism moves the base point of the divisor");
    const auto& pts = ctx.points();
    std::vector<int> img(pts.size());
    for (size_t i = 0; i < pts.size(); ++i)
        img[i] = ctx.index_of(t.apply(pts[i]));  // throws if E is not permuted
    return Permutation(std::move(img));
}

bool is_code_automorphism(const LinearCode& code, const Permutation& pi) {
    if (pi.size() != code.n()) throw std::invalid_argument("permutation length differs from n");
    return permute_coords(code, pi) == code;
}

namespace {

void assert_closed(const PermGroup& g) {
    if (g.elements.empty()) throw std::logic_error("empty permutation set is not a group");
    if (g.order() <= 1000) {
        for (const auto& a : g.elements)
            for (const auto& b : g.elements)
                if (!g.contains(a * b)) throw std::logic_error("permutation set is not closed");
        return;
    }
    std::mt19937 rng(20240901);
    std::uniform_int_distribution<size_t> pick(0, g.elements.size() - 1);
    for (int trial = 0; trial < 2000; ++trial)
        if (!g.contains(g.elements[pick(rng)] * g.elements[pick(rng)]))
            throw std::logic_error("permutation set is not closed");
}

}  // namespace

PermGroup paut_exhaustive(const LinearCode& code, int cap_n) {
    const i64 n = code.n();
    if (n > cap_n)
        throw CapExceeded("exhaustive coordinate-permutation search capped at n = " +
                          std::to_string(cap_n) + ", code has n = " + std::to_string(n));
    std::vector<int> img(static_cast<size_t>(n));
    for (i64 i = 0; i < n; ++i) img[static_cast<size_t>(i)] = static_cast<int>(i) + 1;
    PermGroup out;
    out.n = static_cast<int>(n);
    do {
        Permutation pi(img);
        if (is_code_automorphism(code, pi)) out.elements.push_back(std::move(pi));
    } while (std::next_permutation(img.begin(), img.end()));
    out.generators = out.elements;  // lexicographic enumeration is already sorted
    assert_closed(out);
    return out;
}

RhoImageKernel rho_image_and_kernel(const ActionContext& ctx) {
    std::set<Permutation> image;
    std::vector<AutElement> kernel;
    for (const auto& t : ctx.stab()) {
        Permutation pi = rho(ctx, t);
        if (pi.is_identity()) kernel.push_back(t);
        image.insert(std::move(pi));
    }
    RhoImageKernel out;
    out.image.n = static_cast<int>(ctx.points().size());
    out.image.elements.assign(image.begin(), image.end());
    out.image.generators = out.image.elements;
    out.kernel = std::move(kernel);
    if (out.image.order() * static_cast<i64>(out.kernel.size()) !=
        static_cast<i64>(ctx.stab().size()))
        throw std::logic_error("|stab| != |image| * |kernel| (internal bug)");
    return out;
}

bool corollary_applies(i64 genus, i64 deg_d, i64 n) {
    if (genus < 0 || deg_d < 0 || n < 0) throw std::invalid_argument("negative parameter");
    return deg_d >= 2 * genus + 1 && n >= (1 + genus) * deg_d;
}

CorrespondenceReport verify_correspondence(const ActionContext& ctx, int paut_cap_n) {
    CorrespondenceReport rep;
    rep.n = ctx.code().n();
    rep.k = ctx.code().k();
    rep.dim_ld = rr_dim(ctx.curve(), ctx.divisor());
    rep.stab_order = static_cast<i64>(ctx.stab().size());

    auto ik = rho_image_and_kernel(ctx);
    rep.image_order = ik.image.order();
    rep.kernel_order = static_cast<i64>(ik.kernel.size());
    rep.kernel_elements = std::move(ik.kernel);

    // every transported permutation must preserve the code
    for (const auto& pi : ik.image.elements)
        if (!is_code_automorphism(ctx.code(), pi))
            throw std::logic_error("transported permutation is not a code automorphism");

    rep.corollary = corollary_applies(ctx.curve().genus(), ctx.divisor().degree(), rep.n);

    if (rep.n <= paut_cap_n) {
        const PermGroup paut = paut_exhaustive(ctx.code(), paut_cap_n);
        rep.paut_order = paut.order();
        const bool injective = rep.kernel_order == 1;
        rep.verdict = (injective && rep.image_order == paut.order()) ? "isomorphic"
                                                                     : "proper_subgroup";
    } else {
        rep.verdict = "lower_bound_only";
    }
    return rep;
}

}  // namespace agcodes
