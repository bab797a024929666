#pragma once
// Two-cocycles G x G -> {+1,-1} with trivial action, normalized so that
// psi(1,1) = +1. A cocycle is stored as the full matrix psi(g_i, g_j); the
// defining identity is psi(g,h) psi(gh,k) = psi(g,hk) psi(h,k).

#include <algorithm>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qoco/errors.hpp"
#include "qoco/gf2.hpp"
#include "qoco/group.hpp"
#include "qoco/sign_matrix.hpp"

namespace qoco {

struct Cocycle {
    GroupPtr group;
    SignMatrix m;

    std::int8_t operator()(Elem g, Elem h) const { return m(g, h); }
};

inline bool is_cocycle(const Group& g, const SignMatrix& m) {
    int n = g.order();
    if (m.n() != n) return false;
    if (m(0, 0) != +1) return false;
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            Elem ab = g.mul(a, b);
            for (Elem c = 0; c < n; ++c) {
                // psi(a,b) psi(ab,c) == psi(a,bc) psi(b,c)
                if (int(m(a, b)) * m(ab, c) != int(m(a, g.mul(b, c))) * m(b, c)) return false;
            }
        }
    return true;
}

inline bool is_cocycle(const Cocycle& c) { return is_cocycle(*c.group, c.m); }

inline Cocycle trivial_cocycle(GroupPtr g) {
    return Cocycle{g, SignMatrix(g->order(), +1)};
}

// d(phi)(g,h) = phi(g) phi(h) phi(gh) for a normalized map phi (phi(1)=+1).
inline Cocycle coboundary(GroupPtr g, const SignVector& phi) {
    int n = g->order();
    if (int(phi.size()) != n) throw usage_error("map length must equal group order");
    if (phi[0] != +1) throw usage_error("map must be normalized: phi(identity) = +1");
    Cocycle c{g, SignMatrix(n)};
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            c.m.at(a, b) = std::int8_t(int(phi[a]) * phi[b] * phi[g->mul(a, b)]);
    return c;
}

// Coboundary of the indicator map that is -1 exactly at element k.
inline Cocycle elementary_coboundary(GroupPtr g, Elem k) {
    if (k <= 0 || k >= g->order()) throw usage_error("elementary coboundary index out of range");
    SignVector phi(g->order(), +1);
    phi[std::size_t(k)] = -1;
    return coboundary(std::move(g), phi);
}

// gamma_m(j,k) = (-1)^floor((j+k)/m) on 0 <= j,k < m: the back-negacyclic sign.
inline int gamma_entry(int m, int j, int k) { return j + k >= m ? -1 : +1; }

inline Cocycle gamma_cocycle(int m) {
    if (m < 2) throw usage_error("gamma needs a cyclic group of order >= 2");
    auto g = build_cyclic(m);
    Cocycle c{g, SignMatrix(m)};
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k) c.m.at(j, k) = std::int8_t(gamma_entry(m, j, k));
    return c;
}

// f_z(x,y) = prod over {i : z_i = 1} of gamma_{s_i}(x_i, y_i), on prod Z_{s_i}.
inline Cocycle f_z_cocycle(const std::vector<int>& s, const std::vector<int>& z) {
    if (s.size() != z.size()) throw usage_error("type vector length must match radices");
    auto g = build_abelian(s);
    int n = g->order();
    Cocycle c{g, SignMatrix(n)};
    for (Elem a = 0; a < n; ++a) {
        auto da = detail::radix_digits(a, s);
        for (Elem b = 0; b < n; ++b) {
            auto db = detail::radix_digits(b, s);
            int v = +1;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (z[i]) v *= gamma_entry(s[i], da[i], db[i]);
            c.m.at(a, b) = std::int8_t(v);
        }
    }
    return c;
}

// Cocycle over D_{2n} (elements 1, a, ..., a^{n-1}, b, ab, ..., a^{n-1}b)
// whose matrix is [[A, A], [B, -B]] with A back-negacyclic of order n and
// B the top-to-bottom row reversal of A.
inline Cocycle dihedral_lambda(int n) {
    if (n < 1) throw usage_error("dihedral parameter must be >= 1");
    auto g = build_dihedral(n);
    Cocycle c{g, SignMatrix(2 * n)};
    for (int p = 0; p < 2 * n; ++p) {
        int i = p < n ? p : p - n;
        bool flip = p >= n;
        int row = flip ? n - 1 - i : i;  // B takes A's rows in reverse order
        for (int q = 0; q < 2 * n; ++q) {
            int j = q < n ? q : q - n;
            int v = gamma_entry(n, row, j);
            if (flip && q >= n) v = -v;
            c.m.at(p, q) = std::int8_t(v);
        }
    }
    return c;
}

// Cocycle over D_{2n} pulled back from the reflection sign: -1 exactly when
// both arguments are reflections.  Not a coboundary for odd n, so it
// represents the nontrivial cohomology class there.
inline Cocycle dihedral_beta(int n) {
    if (n < 1) throw usage_error("dihedral parameter must be >= 1");
    auto g = build_dihedral(n);
    Cocycle c{g, SignMatrix(2 * n)};
    for (int p = n; p < 2 * n; ++p)
        for (int q = n; q < 2 * n; ++q) c.m.at(p, q) = -1;
    return c;
}

inline Cocycle hadamard(const Cocycle& a, const Cocycle& b) {
    if (!same_group(*a.group, *b.group))
        throw usage_error("cocycle product requires the same group");
    return Cocycle{a.group, hadamard(a.m, b.m)};
}

// --- coboundary decomposition over GF(2) ------------------------------------

// Greedy maximal independent subset of the elementary coboundaries, taken in
// element order. For Z_{4t+2} this keeps elements 1..4t and drops the last
// one (the product of the coboundaries at odd elements is trivial).
inline std::vector<Elem> coboundary_basis(GroupPtr g) {
    int n = g->order();
    gf2::Eliminator el(std::size_t(n) * n, std::size_t(n));
    std::vector<Elem> basis;
    for (Elem k = 1; k < n; ++k)
        if (el.add(elementary_coboundary(g, k).m.to_bits())) basis.push_back(k);
    return basis;
}

// If c is a coboundary, the sorted canonical-basis subset whose elementary
// coboundaries multiply to c; otherwise absent.
inline std::optional<std::vector<Elem>> decompose_coboundary(const Cocycle& c) {
    GroupPtr g = c.group;
    int n = g->order();
    gf2::Eliminator el(std::size_t(n) * n, std::size_t(n));
    std::vector<Elem> basis;
    for (Elem k = 1; k < n; ++k)
        if (el.add(elementary_coboundary(g, k).m.to_bits())) basis.push_back(k);
    auto combo = el.solve(c.m.to_bits());
    if (!combo) return std::nullopt;
    std::vector<Elem> subset;
    subset.reserve(combo->size());
    for (auto ordinal : *combo) subset.push_back(basis[ordinal]);
    std::sort(subset.begin(), subset.end());
    return subset;
}

inline Cocycle coboundary_product(GroupPtr g, const std::vector<Elem>& subset) {
    SignVector phi(g->order(), +1);
    for (Elem k : subset) {
        if (k <= 0 || k >= g->order()) throw usage_error("coboundary index out of range");
        phi[std::size_t(k)] = std::int8_t(-phi[std::size_t(k)]);
    }
    return coboundary(std::move(g), phi);
}

// --- relabeling along an isomorphism ----------------------------------------

// map[i] = source element corresponding to target element i. Checked to be a
// bijective homomorphism before transporting entries.
inline Cocycle reindex_cocycle(const Cocycle& c, GroupPtr target, const std::vector<Elem>& map) {
    const Group& hs = *c.group;
    const Group& ht = *target;
    int n = ht.order();
    if (hs.order() != n || int(map.size()) != n) throw usage_error("reindex size mismatch");
    std::vector<char> seen(n, 0);
    for (Elem i = 0; i < n; ++i) {
        if (map[i] < 0 || map[i] >= n || seen[map[i]]) throw usage_error("reindex map not bijective");
        seen[map[i]] = 1;
    }
    for (Elem i = 0; i < n; ++i)
        for (Elem j = 0; j < n; ++j)
            if (map[ht.mul(i, j)] != hs.mul(map[i], map[j]))
                throw usage_error("reindex map is not a homomorphism");
    Cocycle out{target, SignMatrix(n)};
    for (Elem i = 0; i < n; ++i)
        for (Elem j = 0; j < n; ++j) out.m.at(i, j) = c.m(map[i], map[j]);
    return out;
}

// Isomorphism Z_m -> prod Z_{s_i} for pairwise coprime radices with prod = m,
// in the form needed by reindex_cocycle (target cyclic, source the product).
inline std::vector<Elem> crt_map(int m, const std::vector<int>& s) {
    long long prod = 1;
    for (int si : s) prod *= si;
    if (prod != m) throw usage_error("radices do not multiply to the cyclic order");
    std::vector<Elem> map(m);
    std::vector<int> d(s.size());
    for (int x = 0; x < m; ++x) {
        for (std::size_t i = 0; i < s.size(); ++i) d[i] = x % s[i];
        map[x] = detail::radix_index(d, s);
    }
    return map;
}

// --- central extension E_psi -------------------------------------------------

// Elements (u, g) with u in {+1,-1}, indexed u=+1 block first, and product
// (u,g)(v,h) = (uv psi(g,h), gh). Requires a table-size group.
inline GroupPtr central_extension(const Cocycle& c) {
    const Group& g = *c.group;
    int n = g.order();
    if (2 * n > Group::max_table_order)
        throw resource_error("central extension exceeds the table limit");
    int N = 2 * n;
    std::vector<std::uint16_t> table(std::size_t(N) * N);
    for (int u = 0; u < 2; ++u)
        for (Elem a = 0; a < n; ++a)
            for (int v = 0; v < 2; ++v)
                for (Elem b = 0; b < n; ++b) {
                    int w = u ^ v ^ (c.m(a, b) < 0 ? 1 : 0);
                    table[std::size_t(u * n + a) * N + (v * n + b)] =
                        std::uint16_t(w * n + g.mul(a, b));
                }
    std::vector<std::string> names(N);
    for (Elem a = 0; a < n; ++a) {
        names[a] = "(+," + g.element_name(a) + ")";
        names[n + a] = "(-," + g.element_name(a) + ")";
    }
    // cocycle bits participate in the label so distinct extensions of the
    // same base group compare as different groups
    auto bits = c.m.to_bits();
    std::uint64_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        h ^= std::uint64_t(bits.get(i)) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    std::ostringstream os;
    os << "cext:" << g.label() << ':' << std::hex << (h & 0xffffffffull);
    return Group::from_table(os.str(), std::move(table), std::move(names));
}

}  // namespace qoco
