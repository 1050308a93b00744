#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "agcodes/code.hpp"
#include "agcodes/curve.hpp"
#include "agcodes/perm.hpp"
#include "agcodes/rr.hpp"

namespace agcodes {

/// Everything needed to transport curve automorphisms to code coordinate
/// permutations: the curve, a one-point divisor D, the ordered evaluation
/// points E, the group of automorphisms fixing the base of D and permuting
/// E as a set, and the evaluation code itself. Requires n > deg D so that
/// evaluation is injective.
class ActionContext {
public:
    static ActionContext build(const Curve& curve, const OnePointDivisor& d,
                               std::vector<CurvePoint> e,
                               const std::vector<AutElement>& full_group);

    const Curve& curve() const { return curve_; }
    const OnePointDivisor& divisor() const { return d_; }
    const std::vector<CurvePoint>& points() const { return e_; }
    const std::vector<AutElement>& stab() const { return stab_; }
    const LinearCode& code() const { return code_; }

    /// 1-based position of an evaluation point; throws if absent.
    int index_of(const CurvePoint& pt) const;

private:
    ActionContext(Curve curve, OnePointDivisor d, std::vector<CurvePoint> e,
                  std::vector<AutElement> stab, LinearCode code);

    Curve curve_;
    OnePointDivisor d_;
    std::vector<CurvePoint> e_;
    std::vector<AutElement> stab_;
    LinearCode code_;
    std::map<CurvePoint, int> index_;
};

/// The induced coordinate permutation of T: pi(i) = j where T(P_i) = P_j.
/// With the (sigma o tau)(i) = sigma(tau(i)) convention this makes
/// rho(T compose S) = rho(T) * rho(S); the codeword action it induces is
/// c'_i = c_{pi^-1(i)}. Throws if T moves the base or does not permute E.
Permutation rho(const ActionContext& ctx, const AutElement& t);

/// True iff the permuted code has the same RREF as the original.
bool is_code_automorphism(const LinearCode& code, const Permutation& pi);

/// All of S_n tested one RREF comparison at a time; n <= cap_n only.
PermGroup paut_exhaustive(const LinearCode& code, int cap_n = 8);

struct RhoImageKernel {
    PermGroup image;
    std::vector<AutElement> kernel;
};

/// Image and kernel of rho over the full stabilizer; checks the counting
/// identity |stab| = |image| * |kernel|.
RhoImageKernel rho_image_and_kernel(const ActionContext& ctx);

/// Hypothesis of the correspondence guarantee for genus-g curves:
/// deg D >= 2g+1 and n >= (1+g) deg D.
bool corollary_applies(i64 genus, i64 deg_d, i64 n);

struct Discrepancy {
    std::string id;
    std::string computed;
    std::string claimed;
    std::string note;
};

struct CorrespondenceReport {
    i64 stab_order = 0;
    i64 image_order = 0;
    i64 kernel_order = 0;
    std::vector<AutElement> kernel_elements;
    std::optional<i64> paut_order;  // absent when n exceeds the exhaustive cap
    bool corollary = false;
    std::string verdict;  // "isomorphic" | "proper_subgroup" | "lower_bound_only"
    std::vector<Discrepancy> discrepancies;
    i64 n = 0;
    i64 k = 0;
    i64 dim_ld = 0;
};

/// Full audit of one context: group orders on both sides, kernel, the
/// hypothesis flag, and - when n is small enough for the exhaustive search -
/// the verdict image = PAut vs image < PAut. For larger n only the lower
/// bound |PAut| >= |image| is certified ("lower_bound_only").
CorrespondenceReport verify_correspondence(const ActionContext& ctx, int paut_cap_n = 8);

}  // namespace agcodes
