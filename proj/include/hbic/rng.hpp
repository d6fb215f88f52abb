#pragma once

#include <cstdint>

namespace hbic {

// Counter-based generator: output i of stream `key` is a stateless hash of
// (key, i).  Streams can be split without coordination, so data generation is
// reproducible no matter how work is ordered or parallelized.
class SplitRng {
  public:
    explicit SplitRng(std::uint64_t key) : key_(key) {}

    // Child stream derived from this stream's key and a stream id.  Children
    // with distinct ids are independent for practical purposes.
    SplitRng split(std::uint64_t stream) const {
        return SplitRng(mix(key_ ^ 0x9e3779b97f4a7c15ull, stream));
    }

    std::uint64_t next_u64() { return mix(key_, counter_++); }

    // Uniform double in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform double in [lo, hi).
    double next_double(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // Uniform integer in [0, n) via rejection sampling; exact for any n > 0.
    std::uint64_t next_below(std::uint64_t n) {
        // Largest multiple of n that fits; values at or above it are rejected.
        std::uint64_t limit = n * (~0ull / n);
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % n;
    }

    std::uint64_t key() const { return key_; }

  private:
    // splitmix64 finalizer applied to key + golden-ratio * counter.
    static std::uint64_t mix(std::uint64_t key, std::uint64_t counter) {
        std::uint64_t z = key + 0x9e3779b97f4a7c15ull * (counter + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace hbic
