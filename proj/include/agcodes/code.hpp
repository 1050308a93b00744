#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "agcodes/curve.hpp"
#include "agcodes/gf.hpp"
#include "agcodes/perm.hpp"
#include "agcodes/rr.hpp"

namespace agcodes {

using BigInt = boost::multiprecision::cpp_int;

/// Dense matrix over a finite field.
class GenMatrix {
public:
    GenMatrix(FieldCtxPtr ctx, i64 rows, i64 cols);

    i64 rows() const { return rows_; }
    i64 cols() const { return cols_; }
    const FieldCtxPtr& ctx() const { return ctx_; }

    FieldElement& at(i64 r, i64 c);
    const FieldElement& at(i64 r, i64 c) const;

    /// Reduced row echelon form with zero rows dropped; the canonical
    /// representative of the row space (idempotent).
    GenMatrix rref() const;
    i64 rank() const { return rref().rows(); }

    bool operator==(const GenMatrix& o) const;
    bool operator!=(const GenMatrix& o) const { return !(*this == o); }

private:
    FieldCtxPtr ctx_;
    i64 rows_, cols_;
    std::vector<FieldElement> a_;
};

/// A linear code presented by a generator matrix. n is the length, k the
/// rank. Two codes are equal iff their RREFs are identical (row-space
/// equality).
class LinearCode {
public:
    explicit LinearCode(GenMatrix gen);

    i64 n() const { return gen_.cols(); }
    i64 k() const { return rref_.rows(); }
    const FieldCtxPtr& ctx() const { return gen_.ctx(); }
    const GenMatrix& gen() const { return gen_; }
    const GenMatrix& rref() const { return rref_; }

    bool operator==(const LinearCode& o) const { return rref_ == o.rref_; }
    bool operator!=(const LinearCode& o) const { return !(*this == o); }

private:
    GenMatrix gen_;
    GenMatrix rref_;
};

struct CodeParams {
    i64 n = 0;
    i64 k = 0;
    std::optional<i64> d_exact;
    i64 d_lower = 0;  // designed distance
};

/// Assembles CodeParams and enforces d_lower <= d_exact <= n - k + 1 when an
/// exact distance is present (a violation is an internal inconsistency).
CodeParams make_code_params(i64 n, i64 k, i64 d_lower, std::optional<i64> d_exact);

/// Evaluation code: rows are the rr_basis functions of L(D) evaluated at the
/// points of E in order. E must consist of distinct finite points on the
/// curve, disjoint from the support of D. When n > deg D the evaluation map
/// is injective and the rank equals dim L(D).
LinearCode build_ag_code(const Curve& curve, const OnePointDivisor& d,
                         const std::vector<CurvePoint>& e);

/// Exact minimum distance by enumerating projective message representatives
/// (first nonzero coordinate fixed to 1); scalar multiples share a weight.
/// Throws CapExceeded when (q^k - 1)/(q - 1) exceeds the cap.
i64 min_distance_exact(const LinearCode& code, i64 cap = 10'000'000);

/// Designed (Goppa) distance deg E - deg D; requires deg E > deg D.
i64 d_designed(i64 deg_e, i64 deg_d);

/// Column i of the generator matrix moves to position pi(i).
LinearCode permute_coords(const LinearCode& code, const Permutation& pi);

struct GvResult {
    bool beats = false;   // true iff the existence condition fails at (n,k,d)
    BigInt sphere_sum;    // sum_{i=0}^{d-2} C(n-1, i) (q-1)^i
    BigInt q_power;       // q^(n-k)
};

/// Parameters meet-or-beat the Gilbert-Varshamov guarantee: true iff
/// sum_{i=0}^{d-2} C(n-1,i)(q-1)^i >= q^(n-k). The empty sum at d = 1 is 0,
/// so the result there is false. All arithmetic is arbitrary precision.
GvResult gv_check(i64 n, i64 k, i64 d, i64 q);

/// Text format: header "q n k", then k rows of n space-separated elements.
void write_generator_matrix(std::ostream& os, const GenMatrix& m);
GenMatrix read_generator_matrix(std::istream& is);

}  // namespace agcodes
