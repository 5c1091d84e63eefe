#include "biplab/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace biplab {

double ford_delta() {
    const double ln2 = std::numbers::ln2;
    return 1.0 - (1.0 + std::log(ln2)) / ln2;
}

SizeSet multiplication_table(std::uint64_t n, std::uint64_t max_bits) {
    const std::uint64_t top = n * n;
    if (top + 1 > max_bits)
        throw std::runtime_error("multiplication_table: n^2 exceeds the dense bit budget");
    SizeSet out(top);
    out.insert(0);
    for (std::uint64_t a = 1; a <= n; ++a)
        for (std::uint64_t b = a; b <= n; ++b) out.insert(a * b);
    return out;
}

namespace {

// Marks products a*b (a <= b <= n) that land in [lo, hi) and returns the
// popcount; bit v of the local buffer stands for value lo+v.
std::uint64_t mtable_segment_count(std::uint64_t n, std::uint64_t lo, std::uint64_t hi) {
    BitVec seg(static_cast<std::size_t>(hi - lo));
    if (lo == 0) seg.set(0);  // 0 = 0*0
    for (std::uint64_t a = 1; a <= n; ++a) {
        if (a * a >= hi) break;
        std::uint64_t b = std::max(a, (lo + a - 1) / a);
        std::uint64_t b_hi = std::min(n, (hi - 1) / a);
        for (; b <= b_hi; ++b) seg.set(static_cast<std::size_t>(a * b - lo));
    }
    return seg.count();
}

}  // namespace

std::uint64_t multiplication_table_size(std::uint64_t n, std::uint64_t segment_bits,
                                        unsigned jobs) {
    if (segment_bits == 0) throw std::invalid_argument("segment_bits must be positive");
    const std::uint64_t total = n * n + 1;
    const std::uint64_t num_segments = (total + segment_bits - 1) / segment_bits;

    std::vector<std::uint64_t> counts(num_segments, 0);
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, num_segments));

    auto worker = [&](unsigned w) {
        for (std::uint64_t s = w; s < num_segments; s += jobs) {
            const std::uint64_t lo = s * segment_bits;
            const std::uint64_t hi = std::min(total, lo + segment_bits);
            counts[s] = mtable_segment_count(n, lo, hi);
        }
    };
    if (jobs <= 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
        for (auto& t : pool) t.join();
    }

    std::uint64_t sum = 0;
    for (auto c : counts) sum += c;  // fixed segment order
    return sum;
}

std::uint64_t phi_complete_bipartite(std::uint64_t a, std::uint64_t b, std::uint64_t max_bits) {
    const std::uint64_t top = a * b;
    if (top + 1 > max_bits)
        throw std::runtime_error("phi_complete_bipartite: a*b exceeds the dense bit budget");
    BitVec seen(static_cast<std::size_t>(top) + 1);
    seen.set(0);
    for (std::uint64_t i = 1; i <= a; ++i)
        for (std::uint64_t j = 1; j <= b; ++j) seen.set(static_cast<std::size_t>(i * j));
    return seen.count();
}

std::uint64_t hxyz(std::uint64_t x, double y, double z) {
    if (x < 1) throw std::invalid_argument("hxyz: x must be at least 1");
    // smallest integer strictly above y, clamped to 1
    std::int64_t lo = static_cast<std::int64_t>(std::floor(y)) + 1;
    if (lo < 1) lo = 1;
    double zf = std::floor(z);
    std::uint64_t hi = zf < 1.0 ? 0 : static_cast<std::uint64_t>(zf);
    hi = std::min<std::uint64_t>(hi, x);
    if (hi == 0 || static_cast<std::uint64_t>(lo) > hi) return 0;

    if (x + 1 > kDenseBitBudget) throw std::runtime_error("hxyz: x exceeds the dense bit budget");
    BitVec marked(static_cast<std::size_t>(x) + 1);
    for (std::uint64_t d = static_cast<std::uint64_t>(lo); d <= hi; ++d)
        for (std::uint64_t v = d; v <= x; v += d) marked.set(static_cast<std::size_t>(v));
    return marked.count();
}

double ford_estimate(std::uint64_t n) {
    if (n < 16) throw std::invalid_argument("ford_estimate: n must be at least 16");
    const double ln_n = std::log(static_cast<double>(n));
    return static_cast<double>(n) * static_cast<double>(n) /
           (std::pow(ln_n, ford_delta()) * std::pow(std::log(ln_n), 1.5));
}

SandwichBounds phi_sandwich(std::uint64_t d, std::uint64_t m) {
    if (d == 0 || m == 0) throw std::invalid_argument("phi_sandwich: d, m must be positive");
    if (m % d != 0) throw std::invalid_argument("phi_sandwich: d must divide m");
    if (d * d > m) throw std::invalid_argument("phi_sandwich: d must be at most sqrt(m)");

    SandwichBounds out;
    const std::uint64_t q = m / 4;
    out.lower = q >= 1 ? hxyz(q, d / 4.0, d / 2.0) : 0;

    double zy = static_cast<double>(d);
    for (unsigned k = 0; (m >> k) >= 1; ++k) {
        const std::uint64_t xk = m >> k;
        const double z = zy / std::exp2(static_cast<double>(k));
        out.upper += hxyz(xk, z / 2.0, z);
    }
    return out;
}

BigUint::BigUint(std::uint64_t v) {
    limbs_.push_back(static_cast<std::uint32_t>(v));
    limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
    trim();
}

void BigUint::trim() {
    while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
}

BigUint& BigUint::mul_small(std::uint64_t f) {
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
        // f < 2^64 and limb < 2^32: split f to keep the product in range
        const std::uint64_t lo = (f & 0xffffffffULL) * limb;
        const std::uint64_t hi = (f >> 32) * limb;
        std::uint64_t acc = lo + (carry & 0xffffffffULL);
        std::uint64_t new_limb = acc & 0xffffffffULL;
        std::uint64_t c = (acc >> 32) + hi + (carry >> 32);
        limb = static_cast<std::uint32_t>(new_limb);
        carry = c;
    }
    while (carry) {
        limbs_.push_back(static_cast<std::uint32_t>(carry & 0xffffffffULL));
        carry >>= 32;
    }
    trim();
    return *this;
}

BigUint& BigUint::div_small(std::uint64_t d) {
    if (d == 0) throw std::invalid_argument("BigUint: division by zero");
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        const std::uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
    }
    trim();
    return *this;
}

std::uint64_t BigUint::to_u64() const {
    if (!fits_u64()) throw std::overflow_error("BigUint: value exceeds 64 bits");
    std::uint64_t v = limbs_[0];
    if (limbs_.size() == 2) v |= std::uint64_t{limbs_[1]} << 32;
    return v;
}

std::string BigUint::to_string() const {
    BigUint tmp = *this;
    std::string out;
    while (true) {
        std::uint64_t rem = 0;
        bool zero = true;
        for (std::size_t i = tmp.limbs_.size(); i-- > 0;) {
            const std::uint64_t cur = (rem << 32) | tmp.limbs_[i];
            tmp.limbs_[i] = static_cast<std::uint32_t>(cur / 1000000000ULL);
            rem = cur % 1000000000ULL;
            if (tmp.limbs_[i]) zero = false;
        }
        std::string chunk = std::to_string(rem);
        if (zero) {
            out.insert(0, chunk);
            break;
        }
        out.insert(0, std::string(9 - chunk.size(), '0') + chunk);
    }
    return out;
}

double BigUint::to_double() const {
    double v = 0.0;
    for (std::size_t i = limbs_.size(); i-- > 0;) v = v * 4294967296.0 + limbs_[i];
    return v;
}

BigUint binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return BigUint(0);
    k = std::min(k, n - k);
    BigUint r(1);
    // running value after step i is binomial(n-k+i, i), always integral
    for (std::uint64_t i = 1; i <= k; ++i) {
        r.mul_small(n - k + i);
        r.div_small(i);
    }
    return r;
}

BigUint bipartite_ramsey_upper(std::uint64_t p, std::uint64_t q) {
    if (p < 1 || q < 1) throw std::invalid_argument("bipartite_ramsey_upper: p, q must be positive");
    return binomial(p + q, p);
}

Eq1Result eq1_check(std::uint64_t n, double c, std::uint64_t k) {
    if (n < 3 || k < 3) throw std::invalid_argument("eq1_check: n, k must be at least 3");
    if (!(c > 0.0 && c < 1.0 / 6.0)) throw std::invalid_argument("eq1_check: c outside (0, 1/6)");
    const double expo = c * std::log(static_cast<double>(n)) / std::log(static_cast<double>(k));
    Eq1Result r;
    r.bound = std::pow(static_cast<double>(k) * std::numbers::e, expo);
    r.is_small = r.bound < std::sqrt(static_cast<double>(n));
    return r;
}

double ramsey_probability_log_bound(std::uint64_t n, double C) {
    if (n < 3 || C <= 0.0) throw std::invalid_argument("ramsey_probability_bound: need n >= 3, C > 0");
    const double kd = std::ceil(C * std::log(static_cast<double>(n)));
    const std::uint64_t k = static_cast<std::uint64_t>(kd);
    if (k > n) return -std::numeric_limits<double>::infinity();
    const double log_binom = std::lgamma(static_cast<double>(n) + 1.0) -
                             std::lgamma(static_cast<double>(k) + 1.0) -
                             std::lgamma(static_cast<double>(n - k) + 1.0);
    return std::numbers::ln2 * (1.0 - kd * kd) + 2.0 * log_binom;
}

double ramsey_probability_bound(std::uint64_t n, double C) {
    const double lg = ramsey_probability_log_bound(n, C);
    return std::isinf(lg) ? 0.0 : std::exp(lg);
}

}  // namespace biplab
