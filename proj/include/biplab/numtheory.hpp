#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "biplab/size_set.hpp"

namespace biplab {

/// Exponent in the true order of magnitude of the multiplication table:
/// 1 - (1 + ln ln 2) / ln 2, about 0.0861.
double ford_delta();

/// Dense bit budget for one sieve allocation; larger jobs go segmented.
inline constexpr std::uint64_t kDenseBitBudget = std::uint64_t{1} << 30;

/// M(n): the set of products a*b with 0 <= a,b <= n (0 included).
/// Throws when n^2+1 exceeds the dense bit budget; use
/// multiplication_table_size for cardinality-only queries at that scale.
SizeSet multiplication_table(std::uint64_t n, std::uint64_t max_bits = kDenseBitBudget);

/// |M(n)| via segmented sieve; segments may run in parallel, the result is
/// identical to the serial run for any job count.
std::uint64_t multiplication_table_size(std::uint64_t n,
                                        std::uint64_t segment_bits = std::uint64_t{1} << 26,
                                        unsigned jobs = 0);

/// |{ i*j : 0 <= i <= a, 0 <= j <= b }|.
std::uint64_t phi_complete_bipartite(std::uint64_t a, std::uint64_t b,
                                     std::uint64_t max_bits = kDenseBitBudget);

/// H(x,y,z): positive integers n <= x with a divisor d satisfying y < d <= z.
/// Exact: sieves multiples of every integer in the range, then popcounts.
std::uint64_t hxyz(std::uint64_t x, double y, double z);

/// n^2 / ((ln n)^delta (ln ln n)^{3/2}); requires n >= 16.
double ford_estimate(std::uint64_t n);

struct SandwichBounds {
    std::uint64_t lower = 0;  ///< H(m/4, d/4, d/2)
    std::uint64_t upper = 0;  ///< sum over k of H(m/2^k, d/2^{k+1}, d/2^k)
};

/// Divisor-count bounds that sandwich the nonzero part of the K_{d,m/d}
/// spectrum. Requires d | m and d <= sqrt(m).
SandwichBounds phi_sandwich(std::uint64_t d, std::uint64_t m);

/// Minimal unsigned big integer: enough for exact binomials of any size.
class BigUint {
public:
    BigUint() : limbs_{0} {}
    explicit BigUint(std::uint64_t v);

    BigUint& mul_small(std::uint64_t f);
    BigUint& div_small(std::uint64_t d);  // exact division expected

    bool fits_u64() const { return limbs_.size() <= 2; }
    std::uint64_t to_u64() const;
    std::string to_string() const;
    double to_double() const;

    bool operator==(const BigUint&) const = default;

private:
    std::vector<std::uint32_t> limbs_;  // little-endian base 2^32
    void trim();
};

BigUint binomial(std::uint64_t n, std::uint64_t k);

/// Hattingh–Henning upper bound for the bipartite Ramsey number:
/// binomial(p+q, p).
BigUint bipartite_ramsey_upper(std::uint64_t p, std::uint64_t q);

struct Eq1Result {
    double bound = 0.0;    ///< (k e)^{c ln n / ln k}
    bool is_small = false; ///< bound < sqrt(n)
};

Eq1Result eq1_check(std::uint64_t n, double c, std::uint64_t k);

/// ln of 2*binomial(n,k)^2*(1/2)^{k^2} with k = ceil(C ln n), evaluated with
/// lgamma so no intermediate under/overflows. -inf when k > n.
double ramsey_probability_log_bound(std::uint64_t n, double C);

/// exp of the above; underflows to 0 for large n, by design of the caller.
double ramsey_probability_bound(std::uint64_t n, double C);

}  // namespace biplab
