// Sweeps the coboundary coset of the back-negacyclic cocycle over Z_10 and
// prints every quasi-orthogonal hit, then reproduces one length-6 map from an
// array type and a coboundary.
#include <qoco/qoco.hpp>

#include <cstdio>

using namespace qoco;

int main() {
    auto g = build_cyclic(10);
    SearchSpace sp = make_search_space(g, gamma_cocycle(10));
    SearchResult res = enumerate_quasiorthogonal(sp);

    std::printf("group %s, target excess %lld, %lld subsets tested\n",
                g->label().c_str(), res.target_re, res.subsets_tested);
    for (const SearchHit& hit : res.hits) {
        std::printf("  subset {");
        for (std::size_t i = 0; i < hit.subset.size(); ++i)
            std::printf("%s%d", i ? "," : "", hit.subset[i]);
        std::printf("} row sums ");
        for (int s : hit.row_sums) std::printf("%+d", s);
        std::printf("\n");
    }
    std::printf("%zu quasi-orthogonal cocycles in the coset\n\n", res.hits.size());

    // pointwise product of a type cocycle with a coboundary gives a
    // quasi-orthogonal length-6 matrix
    auto g6 = build_abelian({2, 3});
    Cocycle c = hadamard(f_z_cocycle({2, 3}, {1, 0}), coboundary(g6, parse_signs("+-++++")));
    std::printf("f_z * coboundary on %s:\n", g6->label().c_str());
    for (int r = 0; r < c.m.n(); ++r) std::printf("  %s\n", c.m.row_string(r).c_str());
    std::printf("quasi-orthogonal: %s\n", is_quasi_orthogonal(c) ? "yes" : "no");
    return 0;
}
