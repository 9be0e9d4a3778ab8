#include "dsa/rng.hpp"

#include <stdexcept>

namespace dsa {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b,
                          std::uint64_t c) {
    std::uint64_t h = mix64(master + kGolden);
    h = mix64(h + kGolden + a);
    h = mix64(h + kGolden + b);
    h = mix64(h + kGolden + c);
    return h;
}

std::uint64_t RandomStream::next_below(std::uint64_t span) {
    if (span == 0) throw std::invalid_argument("next_below: span must be positive");
    const std::uint64_t min = (0 - span) % span;
    std::uint64_t x = engine_();
    while (x < min) x = engine_();
    return x % span;
}

int RandomStream::next_int(int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("next_int: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    return lo + static_cast<int>(next_below(span));
}

double RandomStream::next_real(double lo, double hi) {
    if (lo > hi) throw std::invalid_argument("next_real: empty range");
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

}  // namespace dsa
