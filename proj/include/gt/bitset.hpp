#pragma once

#include "gt/kernels.hpp"

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace gt {

/// Fixed-capacity dynamic bitset; the heavy operations go through the
/// runtime-dispatched kernels.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }
    std::size_t num_words() const { return words_.size(); }
    const std::uint64_t *data() const { return words_.data(); }

    void set(std::size_t i) {
        assert(i < nbits_);
        words_[i >> 6] |= (std::uint64_t{1} << (i & 63));
    }
    void reset(std::size_t i) {
        assert(i < nbits_);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
    bool test(std::size_t i) const {
        assert(i < nbits_);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    void set_all() {
        std::fill(words_.begin(), words_.end(), ~std::uint64_t{0});
        trim();
    }

    void intersect_with(const Bitset &o) {
        assert(nbits_ == o.nbits_);
        kernels::active_ops().and_into(words_.data(), o.words_.data(), words_.size());
    }
    void subtract(const Bitset &o) {
        assert(nbits_ == o.nbits_);
        kernels::active_ops().andnot_into(words_.data(), o.words_.data(), words_.size());
    }
    void unite_with(const Bitset &o) {
        assert(nbits_ == o.nbits_);
        kernels::active_ops().or_into(words_.data(), o.words_.data(), words_.size());
    }

    std::size_t count() const {
        return kernels::active_ops().popcount(words_.data(), words_.size());
    }
    std::size_t count_and(const Bitset &o) const {
        assert(nbits_ == o.nbits_);
        return kernels::active_ops().popcount_and(words_.data(), o.words_.data(), words_.size());
    }
    bool any() const {
        return kernels::active_ops().any(words_.data(), words_.size());
    }
    bool none() const { return !any(); }

    /// Index of the lowest set bit; size() if empty.
    std::size_t find_first() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w])
                return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
        return nbits_;
    }

    /// Lowest set bit strictly above i; size() if none.
    std::size_t find_next(std::size_t i) const {
        ++i;
        if (i >= nbits_) return nbits_;
        std::size_t w = i >> 6;
        std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (cur) return w * 64 + static_cast<std::size_t>(std::countr_zero(cur));
            if (++w == words_.size()) return nbits_;
            cur = words_[w];
        }
    }

    friend bool operator==(const Bitset &a, const Bitset &b) {
        if (a.nbits_ != b.nbits_) return false;
        return kernels::active_ops().equal(a.words_.data(), b.words_.data(), a.words_.size());
    }

private:
    void trim() {
        if (nbits_ & 63)
            words_.back() &= (std::uint64_t{1} << (nbits_ & 63)) - 1;
    }

    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace gt
