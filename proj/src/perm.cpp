#include "agcodes/perm.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "agcodes/errors.hpp"

namespace agcodes {

Permutation::Permutation(std::vector<int> image) : img_(std::move(image)) {
    const int n = size();
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int v : img_) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v - 1)])
            throw std::invalid_argument("image array is not a bijection on {1..n}");
        seen[static_cast<size_t>(v - 1)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i + 1;
    return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i + 1;
    std::vector<bool> used(static_cast<size_t>(n), false);
    for (const auto& cyc : cycles) {
        for (size_t j = 0; j < cyc.size(); ++j) {
            const int a = cyc[j];
            const int b = cyc[(j + 1) % cyc.size()];
            if (a < 1 || a > n) throw std::invalid_argument("cycle entry out of range");
            if (used[static_cast<size_t>(a - 1)])
                throw std::invalid_argument("cycle entries are not distinct");
            used[static_cast<size_t>(a - 1)] = true;
            img[static_cast<size_t>(a - 1)] = b;
        }
    }
    return Permutation(std::move(img));
}

int Permutation::apply(int i) const {
    if (i < 1 || i > size()) throw std::out_of_range("permutation point out of range");
    return img_[static_cast<size_t>(i - 1)];
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= size(); ++i)
        if (apply(i) != i) return false;
    return true;
}

Permutation Permutation::operator*(const Permutation& o) const {
    if (size() != o.size()) throw std::invalid_argument("permutation size mismatch");
    std::vector<int> img(img_.size());
    for (int i = 1; i <= size(); ++i) img[static_cast<size_t>(i - 1)] = apply(o.apply(i));
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> img(img_.size());
    for (int i = 1; i <= size(); ++i) img[static_cast<size_t>(apply(i) - 1)] = i;
    return Permutation(std::move(img));
}

std::vector<std::vector<int>> Permutation::to_cycles() const {
    std::vector<std::vector<int>> cycles;
    std::vector<bool> seen(img_.size(), false);
    for (int start = 1; start <= size(); ++start) {
        if (seen[static_cast<size_t>(start - 1)] || apply(start) == start) continue;
        std::vector<int> cyc;
        int cur = start;
        do {
            seen[static_cast<size_t>(cur - 1)] = true;
            cyc.push_back(cur);
            cur = apply(cur);
        } while (cur != start);
        cycles.push_back(std::move(cyc));  // starts at its smallest element by scan order
    }
    return cycles;
}

std::string Permutation::str() const {
    const auto cycles = to_cycles();
    if (cycles.empty()) return "()";
    std::ostringstream os;
    for (const auto& cyc : cycles) {
        os << "(";
        for (size_t i = 0; i < cyc.size(); ++i) {
            if (i) os << ",";
            os << cyc[i];
        }
        os << ")";
    }
    return os.str();
}

Permutation parse_cycles(int n, const std::string& text) {
    std::vector<std::vector<int>> cycles;
    size_t i = 0;
    const auto skip_ws = [&]() {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle notation");
        ++i;
        std::vector<int> cyc;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw std::invalid_argument("expected integer in cycle notation");
            int v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                v = v * 10 + (text[i++] - '0');
            cyc.push_back(v);
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
                skip_ws();
            }
        }
        if (i >= text.size()) throw std::invalid_argument("unterminated cycle");
        ++i;  // ')'
        if (!cyc.empty()) cycles.push_back(std::move(cyc));
        skip_ws();
    }
    return Permutation::from_cycles(n, cycles);
}

bool PermGroup::contains(const Permutation& p) const {
    return std::binary_search(elements.begin(), elements.end(), p);
}

PermGroup group_closure(int n, const std::vector<Permutation>& gens, i64 cap) {
    for (const auto& g : gens)
        if (g.size() != n) throw std::invalid_argument("generator size mismatch");
    std::set<Permutation> seen;
    std::vector<Permutation> frontier;
    seen.insert(Permutation::identity(n));
    frontier.push_back(Permutation::identity(n));
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                Permutation y = x * g;
                if (seen.insert(y).second) {
                    if (static_cast<i64>(seen.size()) > cap)
                        throw CapExceeded("group closure exceeded cap of " + std::to_string(cap));
                    next.push_back(std::move(y));
                }
            }
        frontier = std::move(next);
    }
    PermGroup out;
    out.n = n;
    out.generators = gens;
    out.elements.assign(seen.begin(), seen.end());
    return out;
}

PermGroup center(const PermGroup& g) {
    PermGroup out;
    out.n = g.n;
    for (const auto& z : g.elements) {
        bool commutes = true;
        for (const auto& h : g.generators)
            if (z * h != h * z) {
                commutes = false;
                break;
            }
        if (commutes) out.elements.push_back(z);
    }
    out.generators = out.elements;
    return out;
}

bool is_normal(const PermGroup& g, const PermGroup& h) {
    for (const auto& x : h.elements)
        if (!g.contains(x)) throw std::invalid_argument("is_normal: H is not a subgroup of G");
    for (const auto& gg : g.generators)
        for (const auto& hh : h.generators)
            if (!h.contains(gg * hh * gg.inverse())) return false;
    return true;
}

PermGroup stabilizer_of_index(const PermGroup& g, int i) {
    PermGroup out;
    out.n = g.n;
    for (const auto& x : g.elements)
        if (x.apply(i) == i) out.elements.push_back(x);
    out.generators = out.elements;
    return out;
}

}  // namespace agcodes
