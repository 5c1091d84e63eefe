#pragma once

#include <cstdint>
#include <vector>

#include "biplab/bitvec.hpp"

namespace biplab {

/// Dense set of achievable values over [0, max_value]: one bit per value.
/// Used for product tables and induced-subgraph size spectra alike.
class SizeSet {
public:
    SizeSet() = default;
    explicit SizeSet(std::uint64_t max_value)
        : max_(max_value), bits_(static_cast<std::size_t>(max_value) + 1) {}

    std::uint64_t max_value() const { return max_; }

    void insert(std::uint64_t v) { bits_.set(static_cast<std::size_t>(v)); }
    bool contains(std::uint64_t v) const {
        return v <= max_ && bits_.test(static_cast<std::size_t>(v));
    }
    std::uint64_t size() const { return bits_.count(); }

    void union_with(const SizeSet& o) { bits_ |= o.bits_; }
    bool subset_of(const SizeSet& o) const {
        if (max_ != o.max_) {
            bool sub = true;
            bits_.for_each_set([&](std::size_t v) { sub = sub && o.contains(v); });
            return sub;
        }
        return (bits_ & o.bits_) == bits_;
    }

    std::vector<std::uint64_t> to_vector() const {
        std::vector<std::uint64_t> out;
        out.reserve(size());
        bits_.for_each_set([&](std::size_t v) { out.push_back(v); });
        return out;
    }

    const BitVec& bits() const { return bits_; }
    BitVec& bits() { return bits_; }

    bool operator==(const SizeSet&) const = default;

private:
    std::uint64_t max_ = 0;
    BitVec bits_{1};
};

}  // namespace biplab
