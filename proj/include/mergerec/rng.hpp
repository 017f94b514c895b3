#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace mergerec {

// All randomness in the project flows through this engine so that results are
// reproducible bit-for-bit across standard library implementations. The raw
// generator is mt19937_64; every distribution on top of it is hand-pinned
// (std:: distributions are implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform integer in [0, bound). Rejection sampling, bias-free.
    std::uint64_t uniform_below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    std::size_t index_below(std::size_t bound) {
        return static_cast<std::size_t>(uniform_below(bound));
    }

    // Uniform double in [0, 1) with 53 bits of precision.
    double uniform01() { return double(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform01() < p; }

    // Box-Muller; caches the second variate.
    double normal() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        double u1 = uniform01();
        double u2 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        cached_ = r * std::sin(a);
        has_cached_ = true;
        return r * std::cos(a);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    // Fisher-Yates shuffle of indices 0..n-1.
    std::vector<std::size_t> permutation(std::size_t n) {
        std::vector<std::size_t> p(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = i;
        for (std::size_t i = n; i > 1; --i) {
            std::size_t j = index_below(i);
            std::swap(p[i - 1], p[j]);
        }
        return p;
    }

    // k distinct values out of 0..n-1, in draw order.
    std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k) {
        std::vector<std::size_t> pool(n);
        for (std::size_t i = 0; i < n; ++i) pool[i] = i;
        std::vector<std::size_t> out;
        out.reserve(k);
        for (std::size_t d = 0; d < k && d < n; ++d) {
            std::size_t j = d + index_below(n - d);
            std::swap(pool[d], pool[j]);
            out.push_back(pool[d]);
        }
        return out;
    }

private:
    std::mt19937_64 engine_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}
}  // namespace detail

// Fixed rule for deriving per-stage / per-batch seeds from a master seed.
// Mixing is order-sensitive, so ("train", 2) and ("fisher", 2) never collide.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view tag,
                                 std::uint64_t a = 0, std::uint64_t b = 0) {
    std::uint64_t h = detail::splitmix64(master ^ 0x6d657267657265ULL);
    for (char c : tag) h = detail::splitmix64(h ^ std::uint64_t(static_cast<unsigned char>(c)));
    h = detail::splitmix64(h ^ a);
    h = detail::splitmix64(h ^ b);
    return h;
}

}  // namespace mergerec
