#pragma once
// Row-excess analysis of cocyclic matrices: excess profiles, orthogonality
// and quasi-orthogonality, Grammians (always computed by two independent
// routes), normality, and exact determinants.

#include <cstdlib>
#include <map>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qoco/cocycle.hpp"
#include "qoco/errors.hpp"
#include "qoco/sign_matrix.hpp"

namespace qoco {

using bigint = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<long long>>;

struct ExcessProfile {
    std::vector<int> row_sums;           // indexed by group element
    long long re = 0;                    // sum of |row sum| over non-identity rows
    std::map<int, std::vector<Elem>> x;  // X_m census: value -> elements (all rows)
    bool in_b2 = false;                  // coboundary?
};

inline ExcessProfile excess_profile(const Cocycle& c) {
    ExcessProfile p;
    p.row_sums = c.m.row_sums();
    for (Elem g = 0; g < c.m.n(); ++g) {
        if (g != 0) p.re += std::abs(p.row_sums[std::size_t(g)]);
        p.x[p.row_sums[std::size_t(g)]].push_back(g);
    }
    p.in_b2 = decompose_coboundary(c).has_value();
    return p;
}

inline bool is_orthogonal(const Cocycle& c) {
    auto rs = c.m.row_sums();
    for (Elem g = 1; g < c.m.n(); ++g)
        if (rs[std::size_t(g)] != 0) return false;
    return true;
}

// Defined over groups of order 4t+2, t >= 1: a cocycle is quasi-orthogonal
// when it meets the minimum possible row excess for its cohomology class,
// 4t outside B^2 and 8t+2 inside.
inline bool is_quasi_orthogonal(const Cocycle& c) {
    int n = c.group->order();
    if (n % 4 != 2 || n < 6)
        throw usage_error("quasi-orthogonality needs group order 4t+2 with t >= 1");
    int t = (n - 2) / 4;
    auto rs = c.m.row_sums();
    long long re = 0;
    for (Elem g = 1; g < n; ++g) re += std::abs(rs[std::size_t(g)]);
    long long target = decompose_coboundary(c) ? 8LL * t + 2 : 4LL * t;
    return re == target;
}

// --- Grammians ---------------------------------------------------------------

struct Grammians {
    IntMatrix mm;   // M M^T
    IntMatrix mtm;  // M^T M
};

namespace detail {

inline IntMatrix direct_gram(const SignMatrix& m, bool transpose_first) {
    int n = m.n();
    IntMatrix g(std::size_t(n), std::vector<long long>(std::size_t(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            long long acc = 0;
            for (int k = 0; k < n; ++k)
                acc += transpose_first ? int(m(k, i)) * m(k, j) : int(m(i, k)) * m(j, k);
            g[std::size_t(i)][std::size_t(j)] = acc;
        }
    return g;
}

// Closed forms: (M M^T)_{ij} = psi(g_i g_j^-1, g_j) * sum_g psi(g_i g_j^-1, g)
//               (M^T M)_{ij} = psi(g_i, g_i^-1 g_j) * sum_g psi(g, g_i^-1 g_j)
inline IntMatrix closed_gram(const Cocycle& c, bool transpose_first) {
    const Group& gr = *c.group;
    int n = gr.order();
    auto rs = c.m.row_sums();
    auto cs = c.m.col_sums();
    IntMatrix g(std::size_t(n), std::vector<long long>(std::size_t(n), 0));
    for (Elem i = 0; i < n; ++i)
        for (Elem j = 0; j < n; ++j) {
            if (!transpose_first) {
                Elem d = gr.mul(i, gr.inv(j));
                g[std::size_t(i)][std::size_t(j)] = int(c.m(d, j)) * rs[std::size_t(d)];
            } else {
                Elem d = gr.mul(gr.inv(i), j);
                g[std::size_t(i)][std::size_t(j)] = int(c.m(i, d)) * cs[std::size_t(d)];
            }
        }
    return g;
}

}  // namespace detail

// Both Grammians, each computed directly and from the closed form. The two
// routes must agree entry-for-entry; a mismatch means a broken cocycle.
inline Grammians grammians(const Cocycle& c) {
    Grammians g;
    g.mm = detail::direct_gram(c.m, false);
    g.mtm = detail::direct_gram(c.m, true);
    if (g.mm != detail::closed_gram(c, false) || g.mtm != detail::closed_gram(c, true))
        throw std::logic_error("Grammian closed form disagrees with the direct product");
    return g;
}

inline bool is_normal(const Cocycle& c) {
    auto g = grammians(c);
    return g.mm == g.mtm;
}

// --- exact determinant -------------------------------------------------------

// Fraction-free (Bareiss) elimination; every division below is exact.
inline bigint abs_determinant(const SignMatrix& m) {
    int n = m.n();
    if (n > 32) throw resource_error("determinants are limited to order 32");
    if (n == 0) return 0;
    std::vector<std::vector<bigint>> a(std::size_t(n), std::vector<bigint>(std::size_t(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[std::size_t(i)][std::size_t(j)] = int(m(i, j));
    bigint prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[std::size_t(k)][std::size_t(k)] == 0) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (a[std::size_t(r)][std::size_t(k)] != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return 0;
            std::swap(a[std::size_t(k)], a[std::size_t(pivot)]);  // sign change irrelevant: |det|
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                a[std::size_t(i)][std::size_t(j)] =
                    (a[std::size_t(i)][std::size_t(j)] * a[std::size_t(k)][std::size_t(k)] -
                     a[std::size_t(i)][std::size_t(k)] * a[std::size_t(k)][std::size_t(j)]) /
                    prev;
            }
        prev = a[std::size_t(k)][std::size_t(k)];
    }
    bigint d = a[std::size_t(n - 1)][std::size_t(n - 1)];
    return d < 0 ? bigint(-d) : d;
}

}  // namespace qoco
