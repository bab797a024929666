#pragma once
// Dense GF(2) linear algebra on word-packed bit vectors, sized for
// cocycle-space work (vectors of n^2 bits with n up to a few hundred).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qoco::gf2 {

class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t bits) : bits_(bits), w_((bits + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool v) {
        std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }

    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    BitVec& operator^=(const BitVec& o) {
        if (o.bits_ != bits_) throw std::invalid_argument("BitVec size mismatch");
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }

    bool any() const {
        for (auto w : w_) if (w) return true;
        return false;
    }

    // Index of the lowest set bit; size() if none.
    std::size_t first_set() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return (i << 6) + std::size_t(__builtin_ctzll(w_[i]));
        return bits_;
    }

    std::vector<std::size_t> set_bits() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t w = w_[i];
            while (w) {
                out.push_back((i << 6) + std::size_t(__builtin_ctzll(w)));
                w &= w - 1;
            }
        }
        return out;
    }

    bool operator==(const BitVec&) const = default;

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> w_;
};

// Incremental row-echelon basis over GF(2). add() accepts a generator and
// reports whether it was independent of the span so far; solve() expresses a
// target vector as a combination of the *accepted* generators, returned as
// indices into the acceptance sequence.
class Eliminator {
public:
    Eliminator(std::size_t vec_bits, std::size_t max_generators)
        : vec_bits_(vec_bits), max_gen_(max_generators) {}

    bool add(const BitVec& v) {
        if (v.size() != vec_bits_) throw std::invalid_argument("generator size mismatch");
        BitVec r = v;
        BitVec combo(max_gen_);
        reduce(r, combo);
        if (!r.any()) return false;  // dependent, not accepted
        combo.flip(accepted_);
        std::size_t pivot = r.first_set();
        // Gauss-Jordan: clear the new pivot from stored rows so that no row
        // ever contains another row's pivot and reduce() can be single-pass.
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (rows_[i].get(pivot)) {
                rows_[i] ^= r;
                combos_[i] ^= combo;
            }
        }
        rows_.push_back(std::move(r));
        pivots_.push_back(pivot);
        combos_.push_back(std::move(combo));
        ++accepted_;
        return true;
    }

    std::size_t rank() const { return rows_.size(); }

    std::optional<std::vector<std::size_t>> solve(const BitVec& target) const {
        if (target.size() != vec_bits_) throw std::invalid_argument("target size mismatch");
        BitVec r = target;
        BitVec combo(max_gen_);
        reduce(r, combo);
        if (r.any()) return std::nullopt;
        return combo.set_bits();
    }

private:
    void reduce(BitVec& r, BitVec& combo) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (r.get(pivots_[i])) {
                r ^= rows_[i];
                combo ^= combos_[i];
            }
        }
    }

    std::size_t vec_bits_;
    std::size_t max_gen_;
    std::size_t accepted_ = 0;
    std::vector<BitVec> rows_;     // echelon rows with distinct pivot bits
    std::vector<std::size_t> pivots_;
    std::vector<BitVec> combos_;   // expression of each row over accepted generators
};

}  // namespace qoco::gf2
