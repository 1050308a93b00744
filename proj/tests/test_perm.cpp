#include <doctest.h>

#include <random>

#include "agcodes/errors.hpp"
#include "agcodes/perm.hpp"

using namespace agcodes;

namespace {

// the three order-42 group generators on 7 points
Permutation g1() { return parse_cycles(7, "(2,7)(3,6)(4,5)"); }
Permutation g2() { return parse_cycles(7, "(2,5,3)(4,6,7)"); }
Permutation g3() { return parse_cycles(7, "(1,2,3,4,5,6,7)"); }

Permutation random_perm(int n, std::mt19937& rng) {
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i + 1;
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation(std::move(img));
}

}  // namespace

TEST_CASE("cycle notation round-trips") {
    CHECK(g3().str() == "(1,2,3,4,5,6,7)");
    CHECK(g1().str() == "(2,7)(3,6)(4,5)");
    CHECK(g2().str() == "(2,5,3)(4,6,7)");
    CHECK(Permutation::from_cycles(7, {}).is_identity());
    CHECK(Permutation::from_cycles(7, {}).str() == "()");
    CHECK(parse_cycles(5, "()").is_identity());
    // canonical form: sorted by smallest element, rotated to the smallest
    CHECK(parse_cycles(7, "(6,7,4)(3,2,5)").str() == "(2,5,3)(4,6,7)");

    std::mt19937 rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        const Permutation p = random_perm(8, rng);
        CHECK(Permutation::from_cycles(8, p.to_cycles()) == p);
        CHECK(parse_cycles(8, p.str()) == p);
    }
}

TEST_CASE("malformed cycles are rejected") {
    CHECK_THROWS_AS(Permutation::from_cycles(7, {{1, 8}}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_cycles(7, {{1, 2}, {2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_cycles(7, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(parse_cycles(7, "(1,2"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation(std::vector<int>{1, 1, 3}), std::invalid_argument);
}

TEST_CASE("composition convention (sigma tau)(i) = sigma(tau(i))") {
    const Permutation s = parse_cycles(3, "(1,2)");
    const Permutation t = parse_cycles(3, "(2,3)");
    CHECK((s * t).apply(2) == s.apply(t.apply(2)));
    CHECK((s * t).str() == "(1,2,3)");  // t first: 2->3, then s leaves 3
    std::mt19937 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        const Permutation a = random_perm(7, rng);
        const Permutation b = random_perm(7, rng);
        CHECK((a * b).inverse() == b.inverse() * a.inverse());
        CHECK((a * a.inverse()).is_identity());
    }
}

TEST_CASE("group closure orders") {
    const auto n21 = group_closure(7, {g2(), g3()});
    CHECK(n21.order() == 21);
    bool abelian = true;
    for (const auto& a : n21.elements)
        for (const auto& b : n21.elements)
            if (a * b != b * a) abelian = false;
    CHECK_FALSE(abelian);

    CHECK(group_closure(7, {g3()}).order() == 7);

    const auto g42 = group_closure(7, {g1(), g2(), g3()});
    CHECK(g42.order() == 42);
    for (const auto& x : n21.elements) CHECK(g42.contains(x));
    CHECK(g42.order() % n21.order() == 0);  // Lagrange

    CHECK_THROWS_AS(group_closure(7, {g1(), g2(), g3()}, 10), CapExceeded);
}

TEST_CASE("closure output is closed under composition") {
    for (const auto& grp : {group_closure(7, {g2(), g3()}), group_closure(7, {g1(), g2(), g3()})})
        for (const auto& a : grp.elements)
            for (const auto& b : grp.elements) CHECK(grp.contains(a * b));
}

TEST_CASE("center computations") {
    const auto s3 = group_closure(3, {parse_cycles(3, "(1,2)"), parse_cycles(3, "(1,2,3)")});
    CHECK(s3.order() == 6);
    CHECK(center(s3).order() == 1);

    const auto c7 = group_closure(7, {g3()});
    CHECK(center(c7).order() == 7);
}

TEST_CASE("normality and point stabilizers") {
    const auto g42 = group_closure(7, {g1(), g2(), g3()});
    const auto n21 = group_closure(7, {g2(), g3()});
    CHECK(is_normal(g42, n21));

    const auto fix1 = stabilizer_of_index(g42, 1);
    CHECK(fix1.order() == 6);  // point stabilizer in a sharply 2-transitive group of order 42
    CHECK(g42.order() % fix1.order() == 0);

    const auto outside = group_closure(7, {parse_cycles(7, "(1,2)")});
    CHECK_THROWS_AS(is_normal(n21, outside), std::invalid_argument);
}

TEST_CASE("kernel_of_map") {
    const auto g42 = group_closure(7, {g1(), g2(), g3()});
    const auto compose = [](const Permutation& a, const Permutation& b) { return a * b; };
    const auto invert = [](const Permutation& a) { return a.inverse(); };

    const auto all = kernel_of_map(
        g42.elements, [&](const Permutation&) { return Permutation::identity(7); }, compose,
        invert);
    CHECK(all.size() == g42.elements.size());

    const auto trivial = kernel_of_map(
        g42.elements, [](const Permutation& x) { return x; }, compose, invert);
    REQUIRE(trivial.size() == 1);
    CHECK(trivial.front().is_identity());

    // a non-homomorphism is detected (constant nonidentity map: c*c != c)
    const auto bogus = [&](const Permutation&) { return g3(); };
    CHECK_THROWS_AS(kernel_of_map(g42.elements, bogus, compose, invert), std::invalid_argument);
}
