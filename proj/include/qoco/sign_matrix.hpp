#pragma once
// Square {+1,-1} matrices with GF(2) flattening (-1 <-> set bit, row-major).

#include <cstdint>
#include <string>
#include <vector>

#include "qoco/errors.hpp"
#include "qoco/gf2.hpp"

namespace qoco {

using SignVector = std::vector<std::int8_t>;

class SignMatrix {
public:
    SignMatrix() = default;
    explicit SignMatrix(int n, std::int8_t fill = +1) : n_(n), a_(std::size_t(n) * n, fill) {}

    int n() const { return n_; }

    std::int8_t operator()(int i, int j) const { return a_[std::size_t(i) * n_ + j]; }
    std::int8_t& at(int i, int j) { return a_[std::size_t(i) * n_ + j]; }

    const SignVector& data() const { return a_; }

    bool operator==(const SignMatrix&) const = default;

    SignMatrix transposed() const {
        SignMatrix t(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) t.at(j, i) = (*this)(i, j);
        return t;
    }

    void hadamard_inplace(const SignMatrix& o) {
        if (o.n_ != n_) throw usage_error("entrywise product needs equal sizes");
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] *= o.a_[i];
    }

    std::vector<int> row_sums() const {
        std::vector<int> s(n_, 0);
        for (int i = 0; i < n_; ++i) {
            int acc = 0;
            for (int j = 0; j < n_; ++j) acc += (*this)(i, j);
            s[i] = acc;
        }
        return s;
    }

    std::vector<int> col_sums() const {
        std::vector<int> s(n_, 0);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) s[j] += (*this)(i, j);
        return s;
    }

    gf2::BitVec to_bits() const {
        gf2::BitVec v(a_.size());
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (a_[i] < 0) v.set(i, true);
        return v;
    }

    static SignMatrix from_bits(int n, const gf2::BitVec& v) {
        if (v.size() != std::size_t(n) * n) throw usage_error("bit vector size mismatch");
        SignMatrix m(n);
        for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = v.get(i) ? -1 : +1;
        return m;
    }

    std::string row_string(int i) const {
        std::string s;
        s.reserve(n_);
        for (int j = 0; j < n_; ++j) s += (*this)(i, j) > 0 ? '+' : '-';
        return s;
    }

private:
    int n_ = 0;
    SignVector a_;
};

inline SignMatrix hadamard(SignMatrix a, const SignMatrix& b) {
    a.hadamard_inplace(b);
    return a;
}

inline std::string signs_to_string(const SignVector& v) {
    std::string s;
    s.reserve(v.size());
    for (auto x : v) s += x > 0 ? '+' : '-';
    return s;
}

inline SignVector parse_signs(const std::string& s) {
    SignVector v;
    v.reserve(s.size());
    for (char c : s) {
        if (c == '+') v.push_back(+1);
        else if (c == '-') v.push_back(-1);
        else if (c == ' ' || c == '\t') continue;
        else throw usage_error(std::string("bad sign character '") + c + "'");
    }
    return v;
}

}  // namespace qoco
