#pragma once
// Binary s-arrays over products of cyclic groups: type-vector expansion,
// periodic autocorrelation, the predicate family (perfect, optimal, PBA,
// OBA, GPBA, GOBA, GOBS), and the run-length codec for sequences.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qoco/errors.hpp"
#include "qoco/group.hpp"
#include "qoco/sign_matrix.hpp"

namespace qoco {

struct BinaryArray {
    std::vector<int> s;  // sizes, each >= 2
    SignVector values;   // one sign per element of prod Z_{s_i}, mixed-radix order

    int energy() const { return int(values.size()); }
    int dims() const { return int(s.size()); }
};

inline BinaryArray make_array(std::vector<int> s, SignVector values) {
    if (s.empty()) throw usage_error("array needs a nonempty size vector");
    long long n = 1;
    for (int si : s) {
        if (si < 2) throw usage_error("array sizes must be at least 2");
        n *= si;
        if (n > (1 << 20)) throw resource_error("array energy is limited to 2^20");
    }
    if (static_cast<long long>(values.size()) != n)
        throw usage_error("array value count must equal the energy");
    for (auto v : values)
        if (v != 1 && v != -1) throw usage_error("array values must be +1 or -1");
    return BinaryArray{std::move(s), std::move(values)};
}

inline BinaryArray sequence_array(SignVector v) {
    int n = int(v.size());
    return make_array({n}, std::move(v));
}

// R_phi(x) = sum_g phi(g) phi(g+x), exact.
inline long long autocorrelation(const BinaryArray& a, int x) {
    long long acc = 0;
    for (int g = 0; g < a.energy(); ++g)
        acc += int(a.values[std::size_t(g)]) *
               a.values[std::size_t(detail::radix_add(g, x, a.s))];
    return acc;
}

// Same value by counting the negative support N: |A| + 4(|N ∩ (x+N)| - |N|).
inline long long autocorrelation_by_counting(const BinaryArray& a, int x) {
    int n = a.energy();
    long long neg = 0, d = 0;
    for (int g = 0; g < n; ++g)
        if (a.values[std::size_t(g)] < 0) {
            ++neg;
            if (a.values[std::size_t(detail::radix_add(g, x, a.s))] < 0) ++d;
        }
    return n + 4 * (d - neg);
}

inline std::vector<long long> autocorrelation_profile(const BinaryArray& a) {
    std::vector<long long> r(std::size_t(a.energy()));
    for (int x = 0; x < a.energy(); ++x) r[std::size_t(x)] = autocorrelation(a, x);
    return r;
}

// Smallest possible max_{0<w<n} |R(w)| for a +-1 sequence of length n.
inline int autocorrelation_floor(int n) {
    switch (n % 4) {
        case 0: return 0;
        case 2: return 2;
        default: return 1;
    }
}

// Distance-to-linearity measure max_{g != 0} (n + |R(g)|) / 2n as a reduced
// fraction {num, den}.  1/2 means every nontrivial shift is uncorrelated.
inline std::pair<long long, long long> nonlinearity(const BinaryArray& a) {
    long long n = a.energy();
    long long peak = 0;
    for (int x = 1; x < n; ++x) peak = std::max(peak, std::llabs(autocorrelation(a, x)));
    long long num = n + peak, den = 2 * n, g = std::gcd(num, den);
    return {num / g, den / g};
}

inline bool is_perfect_nonlinear(const BinaryArray& a) {
    for (int x = 1; x < a.energy(); ++x)
        if (autocorrelation(a, x) != 0) return false;
    return true;
}

// --- expansion ---------------------------------------------------------------

struct ExpandedArray {
    BinaryArray base;
    std::vector<int> z;
    BinaryArray big;         // values on E = prod Z_{(z_i+1) s_i}
    std::vector<int> h;      // indices of H in E, sorted; |H| = 2^weight(z)
    std::vector<int> k;      // indices of the even-weight subgroup K of H
};

inline void check_type_vector(const std::vector<int>& z, std::size_t r) {
    if (z.size() != r) throw usage_error("type vector length must match the size vector");
    for (int zi : z)
        if (zi != 0 && zi != 1) throw usage_error("type vector entries must be 0 or 1");
}

// phi'(g) = phi(g mod s) negated once per coordinate where g overflows s.
inline ExpandedArray expand(const BinaryArray& a, const std::vector<int>& z) {
    check_type_vector(z, a.s.size());
    int r = a.dims();
    std::vector<int> es(std::size_t(r), 0);
    long long en = 1;
    for (int i = 0; i < r; ++i) {
        es[std::size_t(i)] = (z[std::size_t(i)] + 1) * a.s[std::size_t(i)];
        en *= es[std::size_t(i)];
    }
    if (en > (1 << 20)) throw resource_error("expansion energy is limited to 2^20");
    ExpandedArray ex;
    ex.base = a;
    ex.z = z;
    ex.big.s = es;
    ex.big.values.resize(std::size_t(en));
    for (int e = 0; e < int(en); ++e) {
        auto d = detail::radix_digits(e, es);
        int weight = 0;
        for (int i = 0; i < r; ++i)
            if (d[std::size_t(i)] >= a.s[std::size_t(i)]) {
                ++weight;
                d[std::size_t(i)] -= a.s[std::size_t(i)];
            }
        int base_idx = detail::radix_index(d, a.s);
        ex.big.values[std::size_t(e)] =
            int8_t((weight % 2 ? -1 : 1) * a.values[std::size_t(base_idx)]);
    }
    std::vector<int> zpos;
    for (int i = 0; i < r; ++i)
        if (z[std::size_t(i)] == 1) zpos.push_back(i);
    for (int mask = 0; mask < (1 << zpos.size()); ++mask) {
        std::vector<int> d(std::size_t(r), 0);
        int weight = 0;
        for (std::size_t b = 0; b < zpos.size(); ++b)
            if (mask >> b & 1) {
                d[std::size_t(zpos[b])] = a.s[std::size_t(zpos[b])];
                ++weight;
            }
        int e = detail::radix_index(d, es);
        ex.h.push_back(e);
        if (weight % 2 == 0) ex.k.push_back(e);
    }
    std::sort(ex.h.begin(), ex.h.end());
    std::sort(ex.k.begin(), ex.k.end());
    return ex;
}

// --- predicate family --------------------------------------------------------

enum class Tri : std::uint8_t { no, yes, not_applicable };

inline const char* tri_str(Tri t) {
    switch (t) {
        case Tri::yes: return "yes";
        case Tri::no: return "no";
        default: return "not applicable";
    }
}

struct ArrayClass {
    Tri perfect = Tri::not_applicable;  // sequences: R(w) = 0 for 0 < w < n
    Tri optimal = Tri::not_applicable;  // sequences: peak equals the parity floor
    Tri pba = Tri::not_applicable;      // R(g) = 0 for all g != 0
    Tri oba = Tri::not_applicable;      // R(g) = +-2 for all g != 0 (energy 4t+2 > 2)
    Tri gpba = Tri::not_applicable;     // R_{phi'}(g) = 0 off H
    Tri goba = Tri::not_applicable;     // R_{phi'}(g) in {0, +-2|H|} off H, zero count |E|/2
    Tri gobs = Tri::not_applicable;     // sequence, z = (1): |R_{phi'}| profile {0, 4} by parity
    bool goba_clause2_vacuous = false;  // zero-count clause skipped because z_1 = 0
    long long peak = 0;                 // max |R_phi(g)| over g != 0
};

// A GOBS has |R_{phi'}(w)| = 0 on odd w and 4 on even w for odd half-length,
// with the parities swapped for even half-length; equivalently the peak over
// 0 < w < n is exactly 4. Both forms are computed and must agree.
inline bool gobs_profile(const std::vector<long long>& re, int n) {
    int t = n / 2;
    bool ok = true;
    long long peak = 0;
    for (int w = 1; w < n; ++w) {
        long long v = std::abs(re[std::size_t(w)]);
        if (v > peak) peak = v;
        long long want = (w % 2 == 1) == (t % 2 == 1) ? 0 : 4;
        if (v != want) ok = false;
    }
    if (ok != (peak == 4))
        throw std::logic_error("alternating-zero profile disagrees with peak 4");
    return ok;
}

inline ArrayClass classify(const BinaryArray& a, const std::vector<int>& z) {
    check_type_vector(z, a.s.size());
    int n = a.energy(), r = a.dims();
    ArrayClass c;
    auto rp = autocorrelation_profile(a);
    bool all_zero = true, all_pm2 = true;
    for (int g = 1; g < n; ++g) {
        long long v = std::abs(rp[std::size_t(g)]);
        if (v > c.peak) c.peak = v;
        if (v != 0) all_zero = false;
        if (v != 2) all_pm2 = false;
    }
    c.pba = all_zero ? Tri::yes : Tri::no;
    if (r == 1) {
        c.perfect = all_zero ? Tri::yes : Tri::no;
        c.optimal = c.peak == autocorrelation_floor(n) ? Tri::yes : Tri::no;
    }
    if (n > 2 && n % 4 == 2) c.oba = all_pm2 ? Tri::yes : Tri::no;

    auto ex = expand(a, z);
    int en = ex.big.energy();
    auto re = autocorrelation_profile(ex.big);
    std::vector<char> in_h(std::size_t(en), 0);
    for (int h : ex.h) in_h[std::size_t(h)] = 1;
    bool off_h_zero = true;
    for (int e = 0; e < en; ++e)
        if (!in_h[std::size_t(e)] && re[std::size_t(e)] != 0) off_h_zero = false;
    c.gpba = off_h_zero ? Tri::yes : Tri::no;

    bool odd_tail = true;
    for (int i = 1; i < r; ++i)
        if (a.s[std::size_t(i)] % 2 == 0) odd_tail = false;
    if (n > 2 && a.s[0] % 4 == 2 && odd_tail) {
        long long two_h = 2 * static_cast<long long>(ex.h.size());
        bool clause1 = true;
        long long zeros = 0;
        for (int e = 0; e < en; ++e) {
            long long v = std::abs(re[std::size_t(e)]);
            if (v == 0) ++zeros;
            if (!in_h[std::size_t(e)] && v != 0 && v != two_h) clause1 = false;
        }
        c.goba_clause2_vacuous = z[0] == 0;
        bool ok = clause1 && (z[0] == 0 || 2 * zeros == en);
        c.goba = ok ? Tri::yes : Tri::no;
    }

    if (r == 1 && z[0] == 1 && n > 2 && n % 2 == 0)
        c.gobs = gobs_profile(re, n) ? Tri::yes : Tri::no;
    return c;
}

// --- negaperiodic autocorrelation of a sequence ------------------------------

// R of the length-2n expansion (phi followed by -phi), evaluated directly on
// the negacyclic extension; one term per base index, doubled.
inline long long nega_autocorrelation(const SignVector& phi, int w) {
    int n = int(phi.size());
    if (n == 0) throw usage_error("empty sequence");
    w = ((w % (2 * n)) + 2 * n) % (2 * n);
    long long acc = 0;
    for (int k = 0; k < n; ++k) {
        int m = k + w;
        int sign = (m / n) % 2 == 0 ? 1 : -1;
        acc += int(phi[std::size_t(k)]) * sign * phi[std::size_t(m % n)];
    }
    return 2 * acc;
}

inline bool is_gobs(const SignVector& phi) {
    int n = int(phi.size());
    if (n <= 2 || n % 2 != 0) return false;
    std::vector<long long> re(std::size_t(n), 0);
    for (int w = 1; w < n; ++w) re[std::size_t(w)] = nega_autocorrelation(phi, w);
    return gobs_profile(re, n);
}

// --- run-length codec --------------------------------------------------------

// Tokens are comma-separated: an integer i is a run of i equal entries, and
// 1^j is j single entries of alternating sign. Decoding starts at +1; after
// any completed token the next entry negates the last one emitted.
inline SignVector rl_decode(const std::string& text, int expected_length = -1) {
    if (text.find_first_not_of(" ,") == std::string::npos)
        throw usage_error("empty run-length text");
    SignVector out;
    int sign = 1;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
        if (pos >= text.size()) break;
        if (!std::isdigit(static_cast<unsigned char>(text[pos])))
            throw usage_error("bad run-length token at position " + std::to_string(pos));
        long long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > (1 << 20)) throw usage_error("run length out of range");
            ++pos;
        }
        if (pos < text.size() && text[pos] == '^') {
            if (v != 1) throw usage_error("only 1^j alternating tokens are defined");
            ++pos;
            long long j = 0;
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                throw usage_error("1^ needs a count");
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                j = j * 10 + (text[pos] - '0');
                if (j > (1 << 20)) throw usage_error("run length out of range");
                ++pos;
            }
            for (long long i = 0; i < j; ++i) {
                out.push_back(int8_t(sign));
                sign = -sign;
            }
        } else {
            if (v < 1) throw usage_error("run length must be positive");
            for (long long i = 0; i < v; ++i) out.push_back(int8_t(sign));
            sign = -sign;
        }
        if (out.size() > (1 << 20)) throw usage_error("decoded sequence too long");
    }
    if (expected_length >= 0 && int(out.size()) != expected_length)
        throw usage_error("run lengths sum to " + std::to_string(out.size()) +
                          ", expected " + std::to_string(expected_length));
    return out;
}

inline std::string rl_encode(const SignVector& seq) {
    if (seq.empty()) throw usage_error("cannot encode an empty sequence");
    if (seq[0] != 1) throw usage_error("run-length form starts at +1");
    std::vector<int> runs;
    for (std::size_t i = 0; i < seq.size();) {
        std::size_t j = i;
        while (j < seq.size() && seq[j] == seq[i]) ++j;
        runs.push_back(int(j - i));
        i = j;
    }
    std::string out;
    for (std::size_t i = 0; i < runs.size();) {
        if (!out.empty()) out += ',';
        if (runs[i] == 1) {
            std::size_t j = i;
            while (j < runs.size() && runs[j] == 1) ++j;
            if (j - i >= 2)
                out += "1^" + std::to_string(j - i);
            else
                out += "1";
            i = j;
        } else {
            out += std::to_string(runs[i]);
            ++i;
        }
    }
    return out;
}

}  // namespace qoco
