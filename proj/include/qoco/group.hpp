#pragma once
// Finite groups as indexed element sets. Element 0 is always the identity.
// Small groups carry an explicit product table; the named families (abelian
// products, dihedral, dicyclic) fall back to their product rule beyond the
// table limit. Abelian products index tuples in mixed-radix order:
// (x_1,...,x_r) -> x_1*s_2*...*s_r + ... + x_{r-1}*s_r + x_r.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "qoco/errors.hpp"

namespace qoco {

using Elem = int;

struct GroupSpec {
    enum class Kind { abelian, dihedral, dicyclic, extension };

    Kind kind = Kind::abelian;
    std::vector<int> s;  // abelian radices, or extension base radices
    std::vector<int> z;  // extension type bits (0/1), parallel to s
    int n = 0;           // dihedral parameter: D_{2n} has order 2n
    int t = 0;           // dicyclic parameter: Q_{8t} has order 8t

    // Grammar: "a:2x3", "d:3", "q:2", "ext:2x3/10".
    static GroupSpec parse(const std::string& text);
    std::string str() const;
};

namespace detail {

inline std::vector<int> radix_digits(int idx, const std::vector<int>& s) {
    std::vector<int> d(s.size());
    for (std::size_t i = s.size(); i-- > 0;) {
        d[i] = idx % s[i];
        idx /= s[i];
    }
    return d;
}

inline int radix_index(const std::vector<int>& d, const std::vector<int>& s) {
    int idx = 0;
    for (std::size_t i = 0; i < s.size(); ++i) idx = idx * s[i] + d[i];
    return idx;
}

inline int radix_add(int a, int b, const std::vector<int>& s) {
    auto da = radix_digits(a, s);
    auto db = radix_digits(b, s);
    for (std::size_t i = 0; i < s.size(); ++i) da[i] = (da[i] + db[i]) % s[i];
    return radix_index(da, s);
}

inline int radix_neg(int a, const std::vector<int>& s) {
    auto d = radix_digits(a, s);
    for (std::size_t i = 0; i < s.size(); ++i) d[i] = (s[i] - d[i]) % s[i];
    return radix_index(d, s);
}

}  // namespace detail

class Group {
public:
    static constexpr int max_table_order = 256;

    int order() const { return n_; }
    const std::string& label() const { return label_; }
    bool abelian() const { return abelian_; }

    Elem mul(Elem a, Elem b) const {
        return table_.empty() ? rule_mul(a, b) : table_[std::size_t(a) * n_ + b];
    }

    Elem inv(Elem a) const { return inv_[std::size_t(a)]; }

    Elem pow(Elem a, long e) const {
        int ord = n_;  // exponent can always be reduced mod element order <= n
        e %= ord * 2L;
        Elem r = 0;
        Elem base = e < 0 ? inv(a) : a;
        long k = e < 0 ? -e : e;
        for (; k > 0; --k) r = mul(r, base);
        return r;
    }

    int element_order(Elem a) const {
        Elem x = a;
        int k = 1;
        while (x != 0) {
            x = mul(x, a);
            ++k;
        }
        return k;
    }

    std::string element_name(Elem a) const;

    // Mixed radices of an abelian product group; empty for other kinds.
    const std::vector<int>& radices() const { return radices_; }

    // --- construction (use the build_* helpers below) ---
    enum class Rule { table, abelian, dihedral, dicyclic };

    static std::shared_ptr<const Group> from_table(std::string label,
                                                   std::vector<std::uint16_t> table,
                                                   std::vector<std::string> names);
    static std::shared_ptr<const Group> from_rule(std::string label, Rule rule,
                                                  std::vector<int> params);

private:
    Group() = default;
    Elem rule_mul(Elem a, Elem b) const;
    void finish();  // fills table (when small), inverses, sanity checks

    int n_ = 0;
    std::string label_;
    bool abelian_ = false;
    Rule rule_ = Rule::table;
    std::vector<int> radices_;   // abelian
    int dn_ = 0;                 // dihedral n
    int dt_ = 0;                 // dicyclic t
    std::vector<std::uint16_t> table_;
    std::vector<std::uint16_t> inv_;
    std::vector<std::string> names_;  // may be empty for rule groups
};

using GroupPtr = std::shared_ptr<const Group>;

inline Elem Group::rule_mul(Elem a, Elem b) const {
    switch (rule_) {
        case Rule::abelian: {
            auto da = detail::radix_digits(a, radices_);
            auto db = detail::radix_digits(b, radices_);
            for (std::size_t i = 0; i < radices_.size(); ++i)
                da[i] = (da[i] + db[i]) % radices_[i];
            return detail::radix_index(da, radices_);
        }
        case Rule::dihedral: {
            int n = dn_;
            bool fa = a >= n, fb = b >= n;
            int i = fa ? a - n : a, j = fb ? b - n : b;
            int k = fa ? ((i - j) % n + n) % n : (i + j) % n;
            return (fa != fb) ? n + k : k;
        }
        case Rule::dicyclic: {
            int m = 4 * dt_;
            bool fa = a >= m, fb = b >= m;
            int i = fa ? a - m : a, j = fb ? b - m : b;
            if (!fa && !fb) return (i + j) % m;
            if (!fa && fb) return m + (i + j) % m;
            if (fa && !fb) return m + ((i - j) % m + m) % m;
            return ((i - j + 2 * dt_) % m + m) % m;  // (x^i y)(x^j y) = x^{i-j+2t}
        }
        case Rule::table: break;
    }
    throw usage_error("group has no product rule");
}

inline void Group::finish() {
    if (n_ <= 0) throw usage_error("empty group");
    if (rule_ == Rule::table || n_ <= max_table_order) {
        if (table_.empty()) {
            table_.resize(std::size_t(n_) * n_);
            for (Elem a = 0; a < n_; ++a)
                for (Elem b = 0; b < n_; ++b)
                    table_[std::size_t(a) * n_ + b] = std::uint16_t(rule_mul(a, b));
        }
        // identity sanity: row/column 0 must be the identity permutation
        for (Elem a = 0; a < n_; ++a) {
            if (table_[std::size_t(a) * n_] != a || table_[std::size_t(a)] != a)
                throw usage_error("element 0 is not an identity in group table");
        }
    }
    inv_.resize(n_);
    if (!table_.empty()) {
        for (Elem a = 0; a < n_; ++a) {
            Elem found = -1;
            for (Elem b = 0; b < n_; ++b)
                if (mul(a, b) == 0) {
                    found = b;
                    break;
                }
            if (found < 0) throw usage_error("group table has no inverse for some element");
            inv_[a] = std::uint16_t(found);
        }
    } else {
        // closed-form inverses for the rule families
        for (Elem a = 0; a < n_; ++a) {
            Elem r;
            switch (rule_) {
                case Rule::abelian: r = detail::radix_neg(a, radices_); break;
                case Rule::dihedral: r = a < dn_ ? (dn_ - a) % dn_ : a; break;
                case Rule::dicyclic: {
                    int m = 4 * dt_;
                    r = a < m ? (m - a) % m : m + (a - m + 2 * dt_) % m;
                    break;
                }
                default: throw usage_error("rule group without rule");
            }
            inv_[a] = std::uint16_t(r);
        }
    }
    if (!table_.empty()) {
        abelian_ = true;
        for (Elem a = 0; a < n_ && abelian_; ++a)
            for (Elem b = a + 1; b < n_; ++b)
                if (mul(a, b) != mul(b, a)) {
                    abelian_ = false;
                    break;
                }
    }
}

inline std::shared_ptr<const Group> Group::from_table(std::string label,
                                                      std::vector<std::uint16_t> table,
                                                      std::vector<std::string> names) {
    auto g = std::shared_ptr<Group>(new Group());
    std::size_t n = names.size();
    if (n == 0 || table.size() != n * n)
        throw usage_error("group table size does not match element count");
    if (n > max_table_order)
        throw resource_error("explicit group tables are limited to order 256");
    g->n_ = int(n);
    g->label_ = std::move(label);
    g->rule_ = Rule::table;
    g->table_ = std::move(table);
    g->names_ = std::move(names);
    g->finish();
    return g;
}

inline std::shared_ptr<const Group> Group::from_rule(std::string label, Rule rule,
                                                     std::vector<int> params) {
    auto g = std::shared_ptr<Group>(new Group());
    g->label_ = std::move(label);
    g->rule_ = rule;
    switch (rule) {
        case Rule::abelian: {
            g->radices_ = params;
            long long n = 1;
            for (int s : params) {
                if (s < 2) throw usage_error("abelian radices must all be >= 2");
                n *= s;
                if (n > 65535) throw resource_error("group order limit exceeded");
            }
            g->n_ = int(n);
            g->abelian_ = true;
            break;
        }
        case Rule::dihedral: {
            int n = params.at(0);
            if (n < 1) throw usage_error("dihedral parameter must be >= 1");
            if (n > 32767) throw resource_error("group order limit exceeded");
            g->dn_ = n;
            g->n_ = 2 * n;
            break;
        }
        case Rule::dicyclic: {
            int t = params.at(0);
            if (t < 1) throw usage_error("dicyclic parameter must be >= 1");
            if (t > 8191) throw resource_error("group order limit exceeded");
            g->dt_ = t;
            g->n_ = 8 * t;
            break;
        }
        case Rule::table:
            throw usage_error("from_rule cannot build table groups");
    }
    g->finish();
    return g;
}

inline std::string Group::element_name(Elem a) const {
    if (!names_.empty()) return names_[std::size_t(a)];
    switch (rule_) {
        case Rule::abelian: {
            auto d = detail::radix_digits(a, radices_);
            if (d.size() == 1) return std::to_string(d[0]);
            std::ostringstream os;
            os << '(';
            for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
            os << ')';
            return os.str();
        }
        case Rule::dihedral: {
            int n = dn_;
            int i = a % n;
            bool f = a >= n;
            std::string p = i == 0 ? "" : (i == 1 ? "a" : "a^" + std::to_string(i));
            if (!f) return p.empty() ? "1" : p;
            return p.empty() ? "b" : p + "*b";
        }
        case Rule::dicyclic: {
            int m = 4 * dt_;
            int i = a % m;
            bool f = a >= m;
            std::string p = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
            if (!f) return p.empty() ? "1" : p;
            return p.empty() ? "y" : p + "*y";
        }
        case Rule::table: break;
    }
    return "g" + std::to_string(a);
}

inline bool same_group(const Group& g, const Group& h) {
    return &g == &h || (g.order() == h.order() && g.label() == h.label());
}

// --- named builders --------------------------------------------------------

inline GroupPtr build_abelian(std::vector<int> s) {
    if (s.empty()) throw usage_error("abelian group needs at least one radix");
    std::ostringstream os;
    os << "a:";
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "x" : "") << s[i];
    return Group::from_rule(os.str(), Group::Rule::abelian, s);
}

inline GroupPtr build_cyclic(int m) { return build_abelian({m}); }

inline GroupPtr build_dihedral(int n) {
    return Group::from_rule("d:" + std::to_string(n), Group::Rule::dihedral, {n});
}

inline GroupPtr build_dicyclic(int t) {
    return Group::from_rule("q:" + std::to_string(t), Group::Rule::dicyclic, {t});
}

// Z_2 x G as a table group; (u, g) gets index u * |G| + g.
inline GroupPtr direct_with_z2(const GroupPtr& g) {
    int n = g->order();
    if (2 * n > Group::max_table_order)
        throw resource_error("Z_2 x G exceeds the table limit");
    std::vector<std::uint16_t> table(std::size_t(2 * n) * std::size_t(2 * n));
    for (int a = 0; a < 2 * n; ++a)
        for (int b = 0; b < 2 * n; ++b) {
            int u = (a / n + b / n) % 2;
            table[std::size_t(a) * std::size_t(2 * n) + std::size_t(b)] =
                std::uint16_t(u * n + g->mul(a % n, b % n));
        }
    std::vector<std::string> names(std::size_t(2 * n));
    for (int a = 0; a < 2 * n; ++a)
        names[std::size_t(a)] =
            "(" + std::to_string(a / n) + "," + g->element_name(a % n) + ")";
    return Group::from_table("z2*" + g->label(), std::move(table), std::move(names));
}

// --- expansion triple E > H > K and the quotient E/K ------------------------

struct ExpansionTriple {
    std::vector<int> s, z;
    GroupPtr base;              // G = prod Z_{s_i}
    GroupPtr big;               // E = prod Z_{(z_i+1) s_i}
    std::vector<Elem> H, K;     // subgroup element indices in E, sorted
    std::vector<Elem> embed;    // base index -> E index of the same digit tuple

    // Present only when z != 0 (H/K is trivial otherwise and the short exact
    // sequence degenerates).
    GroupPtr quotient;               // E/K; element 0 is the coset K
    std::vector<int> coset_index;    // E index -> quotient element
    std::vector<Elem> coset_rep;     // quotient element -> minimal E index
    Elem forbidden_gen = -1;         // quotient image of H \ K, order 2
};

inline ExpansionTriple build_expansion(std::vector<int> s, std::vector<int> z) {
    if (s.size() != z.size()) throw usage_error("type vector length must match radices");
    for (int b : z)
        if (b != 0 && b != 1) throw usage_error("type vector entries must be 0 or 1");

    ExpansionTriple x;
    x.s = s;
    x.z = z;
    x.base = build_abelian(s);
    std::vector<int> es(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) es[i] = (z[i] + 1) * s[i];
    x.big = build_abelian(es);

    int ne = x.big->order();
    bool z_zero = std::all_of(z.begin(), z.end(), [](int b) { return b == 0; });

    // H = {h : h_i = 0 where z_i = 0, h_i in {0, s_i} where z_i = 1}
    std::vector<int> digits(s.size(), 0);
    int w = 0;
    for (int b : z) w += b;
    for (int mask = 0; mask < (1 << w); ++mask) {
        int bit = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            digits[i] = 0;
            if (z[i]) {
                if ((mask >> bit) & 1) digits[i] = s[i];
                ++bit;
            }
        }
        Elem e = detail::radix_index(digits, es);
        x.H.push_back(e);
        if (__builtin_popcount(unsigned(mask)) % 2 == 0) x.K.push_back(e);
    }
    std::sort(x.H.begin(), x.H.end());
    std::sort(x.K.begin(), x.K.end());

    x.embed.resize(x.base->order());
    for (Elem g = 0; g < x.base->order(); ++g)
        x.embed[g] = detail::radix_index(detail::radix_digits(g, s), es);

    if (z_zero) return x;  // quotient intentionally absent

    // cosets of K in E, labeled by minimal member, identity coset first
    x.coset_index.assign(ne, -1);
    for (Elem e = 0; e < ne; ++e) {
        if (x.coset_index[e] >= 0) continue;
        int c = int(x.coset_rep.size());
        x.coset_rep.push_back(e);
        for (Elem k : x.K) {
            Elem ek = x.big->mul(e, k);
            x.coset_index[ek] = c;
        }
    }
    int nq = int(x.coset_rep.size());
    if (nq > Group::max_table_order)
        throw resource_error("quotient group exceeds the table limit");
    std::vector<std::uint16_t> table(std::size_t(nq) * nq);
    for (int a = 0; a < nq; ++a)
        for (int b = 0; b < nq; ++b)
            table[std::size_t(a) * nq + b] =
                std::uint16_t(x.coset_index[x.big->mul(x.coset_rep[a], x.coset_rep[b])]);
    std::vector<std::string> names(nq);
    for (int c = 0; c < nq; ++c) names[c] = x.big->element_name(x.coset_rep[c]) + "+K";

    std::ostringstream os;
    os << "ext:";
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "x" : "") << s[i];
    os << '/';
    for (int b : z) os << b;
    x.quotient = Group::from_table(os.str(), std::move(table), std::move(names));

    for (Elem h : x.H)
        if (x.coset_index[h] != 0) {
            x.forbidden_gen = x.coset_index[h];
            break;
        }
    return x;
}

// --- spec string grammar ----------------------------------------------------

inline GroupSpec GroupSpec::parse(const std::string& text) {
    auto bad = [&] { return usage_error("bad group spec: '" + text + "'"); };
    auto colon = text.find(':');
    if (colon == std::string::npos) throw bad();
    std::string head = text.substr(0, colon), rest = text.substr(colon + 1);
    if (rest.empty()) throw bad();

    auto parse_radices = [&](const std::string& part) {
        std::vector<int> out;
        std::size_t pos = 0;
        while (pos < part.size()) {
            std::size_t next = part.find('x', pos);
            std::string tok = part.substr(pos, next == std::string::npos ? next : next - pos);
            if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
                throw bad();
            out.push_back(std::stoi(tok));
            if (next == std::string::npos) break;
            pos = next + 1;
        }
        if (out.empty()) throw bad();
        return out;
    };

    GroupSpec spec;
    if (head == "a") {
        spec.kind = Kind::abelian;
        spec.s = parse_radices(rest);
    } else if (head == "d" || head == "q") {
        if (rest.find_first_not_of("0123456789") != std::string::npos) throw bad();
        int v = std::stoi(rest);
        if (head == "d") {
            spec.kind = Kind::dihedral;
            spec.n = v;
        } else {
            spec.kind = Kind::dicyclic;
            spec.t = v;
        }
    } else if (head == "ext") {
        auto slash = rest.find('/');
        if (slash == std::string::npos) throw bad();
        spec.kind = Kind::extension;
        spec.s = parse_radices(rest.substr(0, slash));
        std::string bits = rest.substr(slash + 1);
        if (bits.size() != spec.s.size()) throw bad();
        for (char c : bits) {
            if (c != '0' && c != '1') throw bad();
            spec.z.push_back(c - '0');
        }
    } else {
        throw bad();
    }
    return spec;
}

inline std::string GroupSpec::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::abelian:
            os << "a:";
            for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "x" : "") << s[i];
            break;
        case Kind::dihedral:
            os << "d:" << n;
            break;
        case Kind::dicyclic:
            os << "q:" << t;
            break;
        case Kind::extension:
            os << "ext:";
            for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "x" : "") << s[i];
            os << '/';
            for (int b : z) os << b;
            break;
    }
    return os.str();
}

inline GroupPtr build_group(const GroupSpec& spec) {
    switch (spec.kind) {
        case GroupSpec::Kind::abelian: return build_abelian(spec.s);
        case GroupSpec::Kind::dihedral: return build_dihedral(spec.n);
        case GroupSpec::Kind::dicyclic: return build_dicyclic(spec.t);
        case GroupSpec::Kind::extension: {
            bool all_zero = std::all_of(spec.z.begin(), spec.z.end(), [](int b) { return b == 0; });
            if (all_zero)
                throw usage_error("extension quotient requires a nonzero type vector");
            return build_expansion(spec.s, spec.z).quotient;
        }
    }
    throw usage_error("unknown group spec kind");
}

inline GroupPtr build_group(const std::string& text) { return build_group(GroupSpec::parse(text)); }

}  // namespace qoco
