#ifndef BG_RNG_HPP
#define BG_RNG_HPP

#include "bg/rational.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace bg {

// splitmix64: the generator behind all sampling here. Hand-rolled rather than
// <random> so that streams are identical across standard libraries; per-instance
// streams are derived from (master seed, index), keeping parallel runs
// schedule-independent.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    static Rng child(std::uint64_t master, std::uint64_t index) {
        Rng mix(master ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
        mix.next();
        return Rng(mix.next());
    }

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform on [0, n) by rejection; no modulo bias.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0)
            throw std::invalid_argument("Rng::below(0)");
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    int below_int(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

    // Exact Bernoulli(p) for rational p: draw below(den) and compare with num.
    bool bernoulli(const Rational& p) {
        if (p <= 0)
            return false;
        if (p >= 1)
            return true;
        BigInt num = numerator(p), den = denominator(p);
        if (den > BigInt(~std::uint64_t{0}))
            throw std::invalid_argument("bernoulli denominator too large");
        return BigInt(below(static_cast<std::uint64_t>(den))) < num;
    }

    // k distinct values from {0..n-1}, sorted.
    std::vector<int> sample_sorted(int n, int k) {
        if (k > n)
            throw std::invalid_argument("sample_sorted: k > n");
        std::vector<int> pool(n);
        std::iota(pool.begin(), pool.end(), 0);
        for (int i = 0; i < k; ++i) {
            int j = i + below_int(n - i);
            std::swap(pool[i], pool[j]);
        }
        pool.resize(k);
        std::sort(pool.begin(), pool.end());
        return pool;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
            int j = below_int(i + 1);
            std::swap(v[i], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

} // namespace bg

#endif
