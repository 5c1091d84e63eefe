#include <doctest.h>

#include <random>

#include "biplab/bitvec.hpp"

using biplab::BitVec;

TEST_CASE("bitvec basics") {
    BitVec v(70);
    CHECK(v.size() == 70);
    CHECK(v.none());
    v.set(0);
    v.set(69);
    CHECK(v.test(0));
    CHECK(v.test(69));
    CHECK_FALSE(v.test(68));
    CHECK(v.count() == 2);
    v.reset(0);
    CHECK(v.count() == 1);

    BitVec full = BitVec::full(70);
    CHECK(full.count() == 70);
    CHECK(full.complement().none());
}

TEST_CASE("bitvec operators and counts") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng() % 200;
        BitVec a(n), b(n);
        std::vector<char> ra(n, 0), rb(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (rng() & 1) { a.set(i); ra[i] = 1; }
            if (rng() & 1) { b.set(i); rb[i] = 1; }
        }
        std::uint64_t want_and = 0, want_xor = 0;
        for (std::size_t i = 0; i < n; ++i) {
            want_and += ra[i] & rb[i];
            want_xor += ra[i] ^ rb[i];
        }
        CHECK(a.and_count(b) == want_and);
        CHECK(a.xor_count(b) == want_xor);
        CHECK((a & b).count() == want_and);
        CHECK((a ^ b).count() == want_xor);
        CHECK((a | b).count() == a.count() + b.count() - want_and);
        CHECK(a.complement().count() == n - a.count());
    }
}

TEST_CASE("or_shift_self matches naive subset-sum growth") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t width = 2 + rng() % 150;
        BitVec dp(width);
        dp.set(0);
        std::vector<char> ref(width, 0);
        ref[0] = 1;
        for (int step = 0; step < 10; ++step) {
            const std::size_t k = rng() % (width + 4);
            dp.or_shift_self(k);
            std::vector<char> next = ref;
            for (std::size_t i = 0; i < width; ++i)
                if (ref[i] && i + k < width) next[i + k] = 1;
            ref = next;
            for (std::size_t i = 0; i < width; ++i) CHECK(dp.test(i) == static_cast<bool>(ref[i]));
        }
    }
}

TEST_CASE("count_range") {
    BitVec v(130);
    for (std::size_t i = 0; i < 130; i += 3) v.set(i);
    for (std::size_t lo = 0; lo < 130; lo += 17)
        for (std::size_t hi = lo; hi <= 130; hi += 13) {
            std::uint64_t want = 0;
            for (std::size_t i = lo; i < hi; ++i) want += v.test(i) ? 1 : 0;
            CHECK(v.count_range(lo, hi) == want);
        }
}
