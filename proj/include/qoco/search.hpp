#pragma once
// Exhaustive search for quasi-orthogonal cocycles over a fixed representative
// times the span of elementary coboundaries.  Subsets are walked in Gray-code
// order inside fixed high-bit partitions, so runs parallelize, resume, and
// emit hits in one canonical order regardless of worker count.  For cyclic
// groups with the back-negacyclic representative there is also a row-census
// test that decides quasi-orthogonality without building the matrix.

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "qoco/array.hpp"
#include "qoco/cocycle.hpp"
#include "qoco/errors.hpp"
#include "qoco/excess.hpp"
#include "qoco/group.hpp"

namespace qoco {

struct SearchSpace {
    GroupPtr group;
    Cocycle representative;
    std::vector<Elem> basis;     // canonical independent elementary coboundaries
    bool rep_is_coboundary = false;
    bool cyclic_gamma = false;   // cyclic group with the back-negacyclic rep
    int w_min = 0, w_max = 0;    // subset weights worth testing
};

// The weight window below is a proven pruning rule for the back-negacyclic
// representative over a cyclic group; everywhere else all weights stay live.
inline SearchSpace make_search_space(GroupPtr g, Cocycle rep) {
    if (!same_group(*g, *rep.group)) throw usage_error("representative lives on another group");
    if (!is_cocycle(rep)) throw usage_error("representative is not a cocycle");
    SearchSpace sp;
    sp.group = g;
    sp.representative = std::move(rep);
    sp.basis = coboundary_basis(g);
    sp.rep_is_coboundary = decompose_coboundary(sp.representative).has_value();
    int n = g->order();
    sp.cyclic_gamma = g->radices().size() == 1 &&
                      sp.representative.m == gamma_cocycle(n).m;
    if (sp.cyclic_gamma && n % 4 == 2 && n > 2) {
        int t = (n - 2) / 4;
        sp.w_min = t;
        sp.w_max = 3 * t + 1;
    } else {
        sp.w_min = 0;
        sp.w_max = int(sp.basis.size());
    }
    return sp;
}

struct SearchHit {
    std::vector<Elem> subset;   // elementary coboundary positions, ascending
    std::vector<int> row_sums;  // of the full cocyclic matrix
    long long re = 0;
};

struct SearchResult {
    long long target_re = 0;
    long long subsets_visited = 0;
    long long subsets_tested = 0;  // inside the weight window
    int partitions = 0;
    int resumed_from = 0;
    std::vector<SearchHit> hits;   // ascending by subset bitmask
};

struct SearchOptions {
    int workers = 1;
    int resume = 0;       // completed partitions to skip
    int prefix_bits = -1; // -1 picks min(8, basis size)
};

namespace detail {

// Cocyclic matrix under elementary coboundary toggles.  Toggling position k
// flips row k outside columns {0, k} and, in every other row g >= 1, exactly
// the two columns {k, g^-1 k}; row sums and the excess follow each flip.
struct ToggleEngine {
    const Group* g = nullptr;
    SignMatrix m;
    std::vector<int> sums;
    long long re = 0;

    explicit ToggleEngine(const Cocycle& rep) : g(rep.group.get()), m(rep.m) {
        sums = m.row_sums();
        for (int r = 1; r < g->order(); ++r) re += std::abs(sums[std::size_t(r)]);
    }

    void toggle(Elem k) {
        int n = g->order();
        for (int row = 1; row < n; ++row) {
            int& sum = sums[std::size_t(row)];
            re -= std::abs(sum);
            if (row == k) {
                for (int col = 0; col < n; ++col) {
                    if (col == 0 || col == k) continue;
                    sum -= 2 * m.at(row, col);
                    m.at(row, col) = std::int8_t(-m.at(row, col));
                }
            } else {
                int c2 = g->mul(g->inv(row), k);
                sum -= 2 * m.at(row, k);
                m.at(row, k) = std::int8_t(-m.at(row, k));
                sum -= 2 * m.at(row, c2);
                m.at(row, c2) = std::int8_t(-m.at(row, c2));
            }
            re += std::abs(sum);
        }
    }
};

}  // namespace detail

// Every quasi-orthogonal cocycle rep * prod_{k in S} d_k, S over subsets of
// the canonical basis.  The excess target is fixed per space: 4t when the
// product stays outside the coboundary subgroup, 8t + 2 when it lands inside.
inline SearchResult enumerate_quasiorthogonal(const SearchSpace& sp,
                                              const SearchOptions& opt = {}) {
    int n = sp.group->order();
    if (n % 4 != 2 || n < 6)
        throw usage_error("quasi-orthogonality needs order 4t+2 with t >= 1");
    int t = (n - 2) / 4;
    long long target = sp.rep_is_coboundary ? 8LL * t + 2 : 4LL * t;
    int bcount = int(sp.basis.size());
    if (bcount > 40) throw resource_error("basis too large to enumerate");
    int p = opt.prefix_bits >= 0 ? opt.prefix_bits : std::min(8, bcount);
    if (p > bcount) throw usage_error("prefix bits exceed the basis size");
    int low = bcount - p;
    int parts = 1 << p;
    if (opt.resume < 0 || opt.resume > parts) throw usage_error("resume point out of range");
    int workers = std::max(1, opt.workers);

    struct PartOut {
        std::vector<std::pair<std::uint64_t, SearchHit>> hits;
        long long visited = 0, tested = 0;
    };
    std::vector<PartOut> out;
    out.resize(std::size_t(parts));
    std::atomic<int> next{opt.resume};

    auto run_partition = [&](int part) {
        PartOut& po = out[std::size_t(part)];
        std::uint64_t base = std::uint64_t(part) << low;
        detail::ToggleEngine eng(sp.representative);
        int weight = 0;
        for (int j = 0; j < bcount; ++j)
            if (base >> j & 1) {
                eng.toggle(sp.basis[std::size_t(j)]);
                ++weight;
            }
        std::uint64_t gray = 0;
        std::uint64_t steps = 1ULL << low;
        for (std::uint64_t i = 0;; ++i) {
            ++po.visited;
            if (weight >= sp.w_min && weight <= sp.w_max) {
                ++po.tested;
                if (eng.re == target) {
                    SearchHit hit;
                    for (int j = 0; j < bcount; ++j)
                        if ((base | gray) >> j & 1) hit.subset.push_back(sp.basis[std::size_t(j)]);
                    hit.row_sums = eng.sums;
                    hit.re = eng.re;
                    po.hits.emplace_back(base | gray, std::move(hit));
                }
            }
            if (i + 1 == steps) break;
            std::uint64_t next_gray = (i + 1) ^ ((i + 1) >> 1);
            int j = 0;
            std::uint64_t diff = gray ^ next_gray;
            while (!(diff >> j & 1)) ++j;
            gray = next_gray;
            weight += (gray >> j & 1) ? 1 : -1;
            eng.toggle(sp.basis[std::size_t(j)]);
        }
        std::sort(po.hits.begin(), po.hits.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    };

    if (workers == 1) {
        for (int part = opt.resume; part < parts; ++part) run_partition(part);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(std::size_t(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (;;) {
                    int part = next.fetch_add(1);
                    if (part >= parts) return;
                    run_partition(part);
                }
            });
        for (auto& th : pool) th.join();
    }

    SearchResult res;
    res.target_re = target;
    res.partitions = parts;
    res.resumed_from = opt.resume;
    for (auto& po : out) {
        res.subsets_visited += po.visited;
        res.subsets_tested += po.tested;
        for (auto& [mask, hit] : po.hits) res.hits.push_back(std::move(hit));
    }
    return res;
}

// The order-two character of prod Z_{s_i}: -1 exactly where the digit sum
// over even radices is odd.  Multiplying a map by it fixes its coboundary.
inline SignVector order_two_character(const std::vector<int>& s) {
    bool any_even = false;
    for (int si : s) any_even |= si % 2 == 0;
    if (!any_even) throw usage_error("no order-two character over odd radices");
    int n = 1;
    for (int si : s) n *= si;
    SignVector chi(std::size_t(n), +1);
    for (int gx = 0; gx < n; ++gx) {
        auto d = detail::radix_digits(gx, s);
        int acc = 0;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (s[i] % 2 == 0) acc += d[i];
        chi[std::size_t(gx)] = acc % 2 ? -1 : +1;
    }
    return chi;
}

struct GobaSearchResult {
    SearchResult search;
    std::vector<BinaryArray> arrays;  // two normalized arrays per hit, in hit order
};

// All arrays with the given radices whose expansion of type z has the
// generalized optimal autocorrelation profile.  Each search hit yields the
// two normalized sign maps sharing its coboundary.
inline GobaSearchResult goba_search(const std::vector<int>& s, const std::vector<int>& z,
                                    const SearchOptions& opt = {}) {
    check_type_vector(z, s.size());
    bool z_zero = true;
    for (int zi : z) z_zero &= zi == 0;
    if (z_zero)
        throw usage_error("type (0,...,0) reduces to plain optimal arrays; search those directly");
    if (s.empty() || s[0] % 4 != 2)
        throw usage_error("first radix must be 2 mod 4");
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] % 2 == 0) throw usage_error("radices after the first must be odd");

    GobaSearchResult res;
    auto g = build_abelian(s);
    auto sp = make_search_space(g, f_z_cocycle(s, z));
    res.search = enumerate_quasiorthogonal(sp, opt);
    SignVector chi = order_two_character(s);
    int n = g->order();
    for (const auto& hit : res.search.hits) {
        SignVector phi(std::size_t(n), +1);
        for (Elem k : hit.subset) phi[std::size_t(k)] = -1;
        res.arrays.push_back(make_array(s, phi));
        SignVector twin(phi);
        for (int gx = 0; gx < n; ++gx) twin[std::size_t(gx)] *= chi[std::size_t(gx)];
        res.arrays.push_back(make_array(s, std::move(twin)));
    }
    return res;
}

// --- cyclic row census --------------------------------------------------------

struct PathCensus {
    long long chains = 0;   // maximal runs the row decomposes into
    long long boundary = 0; // negated columns falling in the wrap window
};

namespace detail {

inline std::vector<char> subset_membership(const std::vector<int>& subset_one_based, int m) {
    std::vector<char> in(std::size_t(m), 0);
    for (int v : subset_one_based) {
        if (v < 2 || v > m) throw usage_error("subset entries must lie in 2..4t+2");
        if (in[std::size_t(v - 1)]) throw usage_error("subset entries must be distinct");
        in[std::size_t(v - 1)] = 1;
    }
    return in;
}

}  // namespace detail

// For the cyclic matrix gamma * prod_{i in subset} d_i (positions 1-based in
// 2..4t+2) and a row r in the same indexing: the number of maximal chains the
// negated columns split into, and how many fall among the last r - 1 columns.
inline PathCensus path_census(const std::vector<int>& subset_one_based, int t, int r) {
    if (t < 1) throw usage_error("t must be at least 1");
    int m = 4 * t + 2;
    if (r < 2 || r > m) throw usage_error("row must lie in 2..4t+2");
    auto in = detail::subset_membership(subset_one_based, m);
    int row = r - 1;
    long long w = 0, overlap = 0;
    for (int x = 0; x < m; ++x)
        if (in[std::size_t(x)]) {
            ++w;
            if (in[std::size_t((x + row) % m)]) ++overlap;
        }
    PathCensus pc;
    pc.chains = w - overlap;
    // column c carries -1 exactly when membership of c and c + row differ
    for (int col = m - row; col < m; ++col)
        if (in[std::size_t(col)] != in[std::size_t((col + row) % m)]) ++pc.boundary;
    return pc;
}

// Quasi-orthogonality of gamma * prod d_i over Z_{4t+2} from the subset
// alone: a weight window plus one census identity per row 2..2t+1.  Even
// rows pin the chain count exactly; odd rows allow a one-step slack.
inline bool fast_quasiorthogonal_test(const std::vector<int>& subset_one_based, int t) {
    if (t < 1) throw usage_error("t must be at least 1");
    int m = 4 * t + 2;
    detail::subset_membership(subset_one_based, m);  // validates
    long long w = static_cast<long long>(subset_one_based.size());
    if (w < t || w > 3 * t + 1) return false;
    for (int r = 2; r <= 2 * t + 1; ++r) {
        PathCensus pc = path_census(subset_one_based, t, r);
        if (r % 2 == 0) {
            if (pc.chains != pc.boundary + t + 1 - r / 2) return false;
        } else {
            long long lo = pc.boundary + t + (1 - r) / 2;
            if (pc.chains != lo && pc.chains != lo + 1) return false;
        }
    }
    return true;
}

}  // namespace qoco
