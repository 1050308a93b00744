#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace agcodes {

using i64 = std::int64_t;

/// A permutation of {1..n}. img(i) = pi(i) with 1-based points; composition
/// follows (sigma o tau)(i) = sigma(tau(i)).
class Permutation {
public:
    explicit Permutation(std::vector<int> image);
    static Permutation identity(int n);
    /// Build from disjoint cycles; entries must be distinct and in 1..n.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int size() const { return static_cast<int>(img_.size()); }
    int apply(int i) const;
    bool is_identity() const;

    Permutation operator*(const Permutation& o) const;  // (*this o o)(i) = this(o(i))
    Permutation inverse() const;

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator!=(const Permutation& o) const { return img_ != o.img_; }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

    /// Canonical cycle form: cycles sorted by smallest element, each cycle
    /// rotated to start at its smallest element, fixed points omitted.
    std::vector<std::vector<int>> to_cycles() const;
    /// "(2,5,3)(4,6,7)"; the identity renders as "()".
    std::string str() const;

private:
    std::vector<int> img_;
};

/// Parse cycle notation, e.g. "(2,5,3)(4,6,7)" or "()".
Permutation parse_cycles(int n, const std::string& text);

/// A finite permutation group: generators plus the fully enumerated element
/// set (deduplicated, sorted). All groups in scope are small enough that
/// full enumeration is the algorithm of record.
struct PermGroup {
    int n = 0;
    std::vector<Permutation> generators;
    std::vector<Permutation> elements;

    i64 order() const { return static_cast<i64>(elements.size()); }
    bool contains(const Permutation& p) const;
};

/// BFS closure of the generators. Throws CapExceeded past cap elements.
PermGroup group_closure(int n, const std::vector<Permutation>& gens, i64 cap = 100000);

/// Elements commuting with every generator (hence with the whole group).
PermGroup center(const PermGroup& g);

/// Checks g h g^-1 in H for generators g of G and h of H. H must be a
/// subgroup of G.
bool is_normal(const PermGroup& g, const PermGroup& h);

/// Subgroup fixing the point i.
PermGroup stabilizer_of_index(const PermGroup& g, int i);

/// Kernel of a homomorphism given by image_of: all elements whose image is
/// the identity. The homomorphism property is spot-checked on random pairs
/// and the kernel is verified normal under conjugation by random elements.
template <typename Elem, typename ImageFn, typename ComposeFn, typename InverseFn>
std::vector<Elem> kernel_of_map(const std::vector<Elem>& group, ImageFn image_of,
                                ComposeFn compose, InverseFn inverse,
                                unsigned seed = 20240901) {
    std::mt19937 rng(seed);
    if (!group.empty()) {
        std::uniform_int_distribution<size_t> pick(0, group.size() - 1);
        for (int trial = 0; trial < 64; ++trial) {
            const Elem& a = group[pick(rng)];
            const Elem& b = group[pick(rng)];
            if (image_of(compose(a, b)) != image_of(a) * image_of(b))
                throw std::invalid_argument("image_of is not a homomorphism");
        }
    }
    std::vector<Elem> kernel;
    for (const auto& g : group)
        if (image_of(g).is_identity()) kernel.push_back(g);
    if (!group.empty() && !kernel.empty()) {
        std::uniform_int_distribution<size_t> pickg(0, group.size() - 1);
        std::uniform_int_distribution<size_t> pickk(0, kernel.size() - 1);
        for (int trial = 0; trial < 64; ++trial) {
            const Elem& g = group[pickg(rng)];
            const Elem conj = compose(compose(g, kernel[pickk(rng)]), inverse(g));
            if (!image_of(conj).is_identity())
                throw std::logic_error("kernel is not normal");
        }
    }
    return kernel;
}

}  // namespace agcodes
