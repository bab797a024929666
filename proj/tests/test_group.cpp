#include <catch2/catch_amalgamated.hpp>

#include <qoco/group.hpp>

#include <set>

using namespace qoco;

namespace {

// Brute-force group law check against the multiplication map itself.
void check_axioms(const Group& g) {
    int n = g.order();
    for (int a = 0; a < n; ++a) {
        REQUIRE(g.mul(0, a) == a);
        REQUIRE(g.mul(a, 0) == a);
        REQUIRE(g.mul(a, g.inv(a)) == 0);
        REQUIRE(g.mul(g.inv(a), a) == 0);
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            REQUIRE(g.mul(a, b) >= 0);
            REQUIRE(g.mul(a, b) < n);
            for (int c = 0; c < n; ++c)
                REQUIRE(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
        }
}

}  // namespace

TEST_CASE("abelian products satisfy the group law") {
    for (auto spec : {std::vector<int>{6}, {2, 3}, {10}, {2, 5}, {6, 3}}) {
        auto g = build_abelian(spec);
        check_axioms(*g);
        REQUIRE(g->abelian());
    }
}

TEST_CASE("dihedral groups satisfy the group law and relations") {
    for (int n : {2, 3, 4, 5, 6}) {
        auto g = build_dihedral(n);
        REQUIRE(g->order() == 2 * n);
        check_axioms(*g);
        // a = element 1, b = element n; relations a^n = b^2 = 1, b a b^-1 = a^-1
        REQUIRE(g->pow(1, n) == 0);
        REQUIRE(g->mul(n, n) == 0);
        REQUIRE(g->mul(g->mul(n, 1), g->inv(n)) == g->inv(1));
        // order 4 is the Klein group; every larger dihedral group is non-abelian
        REQUIRE(g->abelian() == (n == 2));
    }
}

TEST_CASE("dicyclic groups satisfy the group law and relations") {
    for (int t : {1, 2, 3}) {
        auto g = build_dicyclic(t);
        REQUIRE(g->order() == 8 * t);
        check_axioms(*g);
        Elem x = 1, y = 4 * t;
        // x^{2t} = y^2, y^4 = 1, y^-1 x y = x^-1
        REQUIRE(g->pow(x, 2 * t) == g->mul(y, y));
        REQUIRE(g->pow(y, 4) == 0);
        REQUIRE(g->mul(g->mul(g->inv(y), x), y) == g->inv(x));
        REQUIRE(g->element_order(y) == 4);
        REQUIRE(g->element_order(x) == 4 * t);
    }
}

TEST_CASE("group spec strings round-trip through the parser") {
    REQUIRE(build_group("a:6")->order() == 6);
    REQUIRE(build_group("a:2x3")->order() == 6);
    REQUIRE(build_group("d:3")->order() == 6);
    REQUIRE(build_group("q:2")->order() == 16);
    REQUIRE(build_group("a:6")->label() == "a:6");
    REQUIRE_THROWS_AS(build_group("a:1"), usage_error);
    REQUIRE_THROWS_AS(build_group("nonsense"), usage_error);
}

TEST_CASE("mixed-radix helpers invert each other") {
    std::vector<int> s{2, 3, 3};
    for (int i = 0; i < 18; ++i) {
        auto d = detail::radix_digits(i, s);
        REQUIRE(detail::radix_index(d, s) == i);
    }
    REQUIRE(detail::radix_add(4, 5, {2, 3}) == detail::radix_add(5, 4, {2, 3}));
}

TEST_CASE("direct product with Z_2 doubles the order and keeps the law") {
    auto g = direct_with_z2(build_cyclic(6));
    REQUIRE(g->order() == 12);
    check_axioms(*g);
    // (1, g)(1, h) = (0, gh)
    REQUIRE(g->mul(6 + 2, 6 + 3) == (2 + 3) % 6);
}

TEST_CASE("expansion triple for s=(2,3), z=(1,0)") {
    auto x = build_expansion({2, 3}, {1, 0});
    REQUIRE(x.base->order() == 6);
    REQUIRE(x.big->order() == 12);   // Z_4 x Z_3
    REQUIRE(x.H.size() == 2);
    REQUIRE(x.K.size() == 1);
    REQUIRE(x.K[0] == 0);
    // H = {0, (2,0)} inside Z_4 x Z_3
    REQUIRE(x.H == std::vector<Elem>{0, 2 * 3});
    REQUIRE(x.quotient->order() == 12);
    check_axioms(*x.quotient);
    // the forbidden generator is the image of H \ K and has order 2
    REQUIRE(x.forbidden_gen > 0);
    REQUIRE(x.quotient->element_order(x.forbidden_gen) == 2);
    // embed is an injective section of the digit tuple
    std::set<Elem> seen(x.embed.begin(), x.embed.end());
    REQUIRE(seen.size() == 6);
}

TEST_CASE("expansion triple quotient collapses K", "[expansion]") {
    auto x = build_expansion({2, 3}, {1, 1});
    REQUIRE(x.big->order() == 24);  // Z_4 x Z_6
    REQUIRE(x.H.size() == 4);
    REQUIRE(x.K.size() == 2);
    REQUIRE(x.quotient->order() == 12);
    check_axioms(*x.quotient);
    // quotient map is a homomorphism
    for (int a = 0; a < 24; ++a)
        for (int b = 0; b < 24; ++b)
            REQUIRE(x.coset_index[std::size_t(x.big->mul(a, b))] ==
                    x.quotient->mul(x.coset_index[std::size_t(a)],
                                    x.coset_index[std::size_t(b)]));
    // K maps to the identity coset
    for (Elem k : x.K) REQUIRE(x.coset_index[std::size_t(k)] == 0);
}

TEST_CASE("element names are printable and distinct") {
    for (auto label : {"a:2x3", "d:3", "q:1"}) {
        auto g = build_group(label);
        std::set<std::string> names;
        for (int a = 0; a < g->order(); ++a) names.insert(g->element_name(a));
        REQUIRE(int(names.size()) == g->order());
    }
}
