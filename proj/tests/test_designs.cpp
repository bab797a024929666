#include <catch2/catch_amalgamated.hpp>

#include <qoco/array.hpp>
#include <qoco/cocycle.hpp>
#include <qoco/excess.hpp>
#include <qoco/pairs.hpp>
#include <qoco/search.hpp>

#include "fixtures.hpp"

using namespace qoco;

namespace {

// All cocycles over the cyclic group of order m = 4t+2.
std::vector<Cocycle> full_cyclic_space(int m) {
    auto g = build_cyclic(m);
    auto basis = coboundary_basis(g);
    std::vector<Cocycle> out;
    for (int a = 0; a < 2; ++a)
        for (std::uint32_t mask = 0; mask < (1u << basis.size()); ++mask) {
            std::vector<Elem> subset;
            for (std::size_t j = 0; j < basis.size(); ++j)
                if (mask >> j & 1) subset.push_back(basis[j]);
            auto c = coboundary_product(g, subset);
            if (a) c = hadamard(gamma_cocycle(m), c);
            out.push_back(std::move(c));
        }
    return out;
}

SignVector phi_from_mask(int n, std::uint32_t mask) {
    SignVector v(std::size_t(n), +1);
    for (int i = 1; i < n; ++i)
        if (mask >> (i - 1) & 1) v[std::size_t(i)] = -1;
    return v;
}

}  // namespace

TEST_CASE("central extension certificates decide quasi-orthogonality") {
    for (const auto& c : full_cyclic_space(6)) {
        auto cert = verify_design(cocycle_rqds_certificate(c));
        bool qo = is_quasi_orthogonal(c);
        REQUIRE(cert.verified == qo);
        if (!qo) continue;
        auto prof = excess_profile(c);
        REQUIRE(cert.extremal == prof.in_b2);
        // the exceptional set is exactly the rows of zero sum
        std::vector<Elem> zero_rows =
            prof.x.count(0) ? prof.x.at(0) : std::vector<Elem>{};
        REQUIRE(cert.s_set == zero_rows);
    }
}

TEST_CASE("quotient certificates verify the first worked map and its siblings") {
    for (std::size_t i = 0; i < fixtures::example1_phi.size(); ++i) {
        auto a = make_array({2, 3}, parse_signs(fixtures::example1_phi[i]));
        auto cert = verify_design(goba_rqds_certificate(a, fixtures::example1_z[i]));
        REQUIRE(cert.verified);
        // with a doubled first coordinate the exceptional set is nonempty
        REQUIRE(cert.extremal == (fixtures::example1_z[i][0] == 0));
    }
}

TEST_CASE("the complement of a verified difference set also verifies") {
    auto a = make_array({2, 3}, parse_signs(fixtures::example1_phi[0]));
    auto cert = goba_rqds_certificate(a, {1, 0});
    auto verified = verify_design(cert);
    REQUIRE(verified.verified);
    // swap the subset for its transversal complement: positives instead
    auto x = build_expansion({2, 3}, {1, 0});
    auto ex = expand(a, {1, 0});
    std::vector<char> in_d(std::size_t(x.quotient->order()), 0);
    for (Elem e : verified.subset) in_d[std::size_t(e)] = 1;
    DesignCertificate comp = cert;
    comp.subset.clear();
    for (Elem q = 0; q < x.quotient->order(); ++q)
        if (!in_d[std::size_t(q)]) {
            // keep one representative per forbidden coset: the positives
            Elem rep = x.coset_rep[std::size_t(q)];
            if (ex.big.values[std::size_t(rep)] > 0) comp.subset.push_back(q);
        }
    comp = verify_design(comp);
    REQUIRE(comp.verified);
}

TEST_CASE("three-way equivalence over s=(2,3): array law, cocycle, certificate") {
    auto g = build_abelian({2, 3});
    for (const auto& z : {std::vector<int>{1, 0}, {0, 1}, {1, 1}}) {
        auto rep = f_z_cocycle({2, 3}, z);
        for (std::uint32_t mask = 0; mask < 32; ++mask) {
            auto phi = phi_from_mask(6, mask);
            auto a = make_array({2, 3}, phi);
            bool goba = classify(a, z).goba == Tri::yes;
            bool qo = is_quasi_orthogonal(hadamard(rep, coboundary(g, phi)));
            bool cert = verify_design(goba_rqds_certificate(a, z)).verified;
            REQUIRE(goba == qo);
            REQUIRE(qo == cert);
        }
    }
}

TEST_CASE("sequence law equivalences over Z_6 and Z_10, exhaustive") {
    for (int m : {6, 10}) {
        auto g = build_cyclic(m);
        int t = (m - 2) / 4;
        for (std::uint32_t mask = 0; mask < (1u << (m - 1)); ++mask) {
            auto phi = phi_from_mask(m, mask);
            bool qo = is_quasi_orthogonal(coboundary(g, phi));
            bool oba = classify(sequence_array(phi), {0}).oba == Tri::yes;
            auto ads = verify_design(ads_certificate(g, phi));
            auto graph = verify_design(graph_rqds_certificate(g, phi));
            REQUIRE(qo == oba);
            REQUIRE(oba == ads.verified);
            REQUIRE(ads.verified == (graph.verified && graph.extremal));
            if (ads.verified) {
                long long k = ads.k;
                REQUIRE(ads.lambda == k - (t + 1));
                REQUIRE(ads.extra == (4 * t + 1) * (k - t) - k * (k - 1));
            }
        }
    }
}

TEST_CASE("square-order difference sets from perfectly uncorrelated maps") {
    for (auto spec : {std::vector<int>{4}, {2, 2}}) {
        auto g = build_abelian(spec);
        SignVector phi(4, +1);
        phi[3] = -1;
        REQUIRE(is_perfect_nonlinear(make_array(spec, phi)));
        auto menon = verify_design(menon_certificate(g, phi, 1));
        REQUIRE(menon.verified);
        REQUIRE(menon.k == 1);
        REQUIRE(menon.lambda == 0);
        auto graph = verify_design(graph_rds_certificate(g, phi));
        REQUIRE(graph.verified);
        REQUIRE(graph.lambda == 2);
    }
}

TEST_CASE("a correlated map fails the square-order certificates") {
    auto g = build_cyclic(4);
    SignVector phi = parse_signs("+--+");
    REQUIRE_FALSE(is_perfect_nonlinear(make_array({4}, phi)));
    REQUIRE_FALSE(verify_design(menon_certificate(g, phi, 1)).verified);
    REQUIRE_FALSE(verify_design(graph_rds_certificate(g, phi)).verified);
}

TEST_CASE("verify_design reports reasons on malformed certificates") {
    auto c = gamma_cocycle(6);
    auto cert = cocycle_rqds_certificate(c);
    cert.subset.pop_back();  // no longer a transversal
    auto out = verify_design(cert);
    REQUIRE_FALSE(out.verified);
    REQUIRE_FALSE(out.reason.empty());
}
