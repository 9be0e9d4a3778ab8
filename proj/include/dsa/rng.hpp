#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace dsa {

// Identity string reported in --version output and sweep metadata.
inline constexpr const char* kRngName = "mt19937_64+splitmix64-substreams";

// splitmix64 finalizer; used to derive independent substream seeds.
std::uint64_t mix64(std::uint64_t z);

// Derive a substream seed from a master seed and up to three stream indices
// (sweep point, trial, purpose). Same inputs give the same seed on every
// platform, distinct inputs give statistically independent streams.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a = 0, std::uint64_t b = 0,
                          std::uint64_t c = 0);

// A seeded random stream with bit-portable draws. The engine (mt19937_64) is
// pinned by the C++ standard; the distribution code below avoids std::
// distributions, whose output is implementation-defined.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, span), unbiased via rejection.
    std::uint64_t next_below(std::uint64_t span);

    // Uniform integer in {lo, ..., hi} inclusive.
    int next_int(int lo, int hi);

    // Uniform real in [lo, hi) with 53-bit resolution; returns lo when lo == hi.
    double next_real(double lo, double hi);

    // Unbiased Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(values[i - 1], values[j]);
        }
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace dsa
