// Counts negaperiodic Golay pairs at small odd lengths, reduces them to
// equivalence classes, and expands one published pair into its dicyclic
// difference set.
#include <qoco/qoco.hpp>

#include <cstdio>

using namespace qoco;

int main() {
    std::printf("%4s %10s %10s %4s %5s\n", "k", "n", "nhat", "d", "dhat");
    for (int k : {3, 5, 7}) {
        NgpSet all = enumerate_ngps(k, "all", true);
        NgpSet gobs = enumerate_ngps(k, "gobs", true);
        std::printf("%4d %10lld %10lld %4lld %5lld\n", k, all.count, gobs.count,
                    classify_ngps(all).orbit_count, classify_ngps(gobs).orbit_count);
    }

    NGPair p{rl_decode("1^2,4", 6), rl_decode("2,1,3", 6)};
    std::printf("\npair %s / %s: ngp %s\n", signs_to_string(p.phi1).c_str(),
                signs_to_string(p.phi2).c_str(), is_ngp(p) ? "yes" : "no");

    DesignCertificate cert = ngp_to_rds(p);
    std::printf("difference set in %s: (%lld,%lld,%lld,%lld), verified %s\n",
                cert.ambient->label().c_str(), cert.v, cert.m, cert.k, cert.lambda,
                cert.verified ? "yes" : "no");
    std::printf("subset {");
    for (std::size_t i = 0; i < cert.subset.size(); ++i)
        std::printf("%s%d", i ? "," : "", cert.subset[i]);
    std::printf("}\n");
    return 0;
}
