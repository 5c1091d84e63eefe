#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace biplab {

/// Fixed-width bit vector over 64-bit words. Width is set at construction
/// and never changes; binary operators require equal widths. Bits past the
/// logical width are kept zero so popcounts and equality stay exact.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t bits) : bits_(bits), w_((bits + 63) / 64, 0) {}

    static BitVec full(std::size_t bits) {
        BitVec v(bits);
        for (auto& word : v.w_) word = ~std::uint64_t{0};
        v.trim();
        return v;
    }

    std::size_t size() const { return bits_; }

    bool test(std::size_t i) const {
        return (w_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::uint64_t count() const {
        std::uint64_t c = 0;
        for (auto word : w_) c += std::popcount(word);
        return c;
    }
    bool any() const {
        for (auto word : w_)
            if (word) return true;
        return false;
    }
    bool none() const { return !any(); }

    /// popcount in the index range [lo, hi).
    std::uint64_t count_range(std::size_t lo, std::size_t hi) const {
        if (hi > bits_) hi = bits_;
        std::uint64_t c = 0;
        for (std::size_t i = lo; i < hi && (i & 63); ++i) c += test(i) ? 1 : 0;
        std::size_t i = (lo + 63) & ~std::size_t{63};
        if (i < lo) i = lo;  // overflow guard, unreachable in practice
        for (; i + 64 <= hi; i += 64) c += std::popcount(w_[i >> 6]);
        for (; i < hi; ++i)
            if (i >= lo) c += test(i) ? 1 : 0;
        return c;
    }

    BitVec& operator&=(const BitVec& o) {
        same_width(o);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    BitVec& operator|=(const BitVec& o) {
        same_width(o);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    BitVec& operator^=(const BitVec& o) {
        same_width(o);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    BitVec& and_not_assign(const BitVec& o) {
        same_width(o);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
    friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

    BitVec complement() const {
        BitVec v(bits_);
        for (std::size_t i = 0; i < w_.size(); ++i) v.w_[i] = ~w_[i];
        v.trim();
        return v;
    }

    std::uint64_t and_count(const BitVec& o) const {
        same_width(o);
        std::uint64_t c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }
    std::uint64_t xor_count(const BitVec& o) const {
        same_width(o);
        std::uint64_t c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] ^ o.w_[i]);
        return c;
    }

    /// bits |= bits << k, keeping the fixed width. The workhorse of the
    /// subset-sum dynamic programs: one call per added item of weight k.
    void or_shift_self(std::size_t k) {
        if (k == 0 || k >= bits_) return;
        const std::size_t ws = k >> 6, off = k & 63;
        for (std::size_t i = w_.size(); i-- > ws;) {
            std::uint64_t v = w_[i - ws] << off;
            if (off && i > ws) v |= w_[i - ws - 1] >> (64 - off);
            w_[i] |= v;
        }
        trim();
    }

    template <class F>
    void for_each_set(F&& f) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                f(static_cast<std::size_t>(wi * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<std::uint32_t> to_indices() const {
        std::vector<std::uint32_t> out;
        out.reserve(count());
        for_each_set([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
        return out;
    }

    bool operator==(const BitVec& o) const { return bits_ == o.bits_ && w_ == o.w_; }

    std::uint64_t word(std::size_t i) const { return w_[i]; }
    std::size_t word_count() const { return w_.size(); }

private:
    void trim() {
        if (bits_ & 63) w_.back() &= (~std::uint64_t{0}) >> (64 - (bits_ & 63));
    }
    void same_width(const BitVec& o) const {
        if (bits_ != o.bits_) throw std::invalid_argument("BitVec width mismatch");
    }

    std::size_t bits_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace biplab
