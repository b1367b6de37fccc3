#ifndef DPC_RNG_HPP
#define DPC_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace dpc {

// splitmix64; used to derive independent sub-seeds from a master seed.
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// i-th derived seed of a master seed (i = 0, 1, 2, ...).
inline uint64_t derive_seed(uint64_t master, uint64_t i) {
    uint64_t s = master;
    uint64_t out = 0;
    for (uint64_t j = 0; j <= i; ++j)
        out = splitmix64(s);
    return out;
}

// mt19937_64 core with hand-rolled bounded draws. std::uniform_int_distribution
// is implementation-defined, so reproducibility across toolchains requires
// doing the rejection sampling ourselves.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next() { return gen_(); }

    // uniform in [0, n), n >= 1
    uint64_t below(uint64_t n) {
        // rejection sampling on the top range multiple of n
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % n;
    }

    int below_int(int n) { return static_cast<int>(below(static_cast<uint64_t>(n))); }

    // uniform in [lo, hi] inclusive
    int range(int lo, int hi) { return lo + below_int(hi - lo + 1); }

    // uniform in [0, 1) with 53 bits
    double real() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    bool coin(double p) { return real() < p; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

    // random permutation of 0..n-1
    std::vector<int> permutation(int n) {
        std::vector<int> p(n);
        for (int i = 0; i < n; ++i) p[i] = i;
        shuffle(p);
        return p;
    }

private:
    std::mt19937_64 gen_;
};

} // namespace dpc

#endif
