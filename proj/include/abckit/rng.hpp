#pragma once

#include <cstdint>
#include <random>

namespace abckit {

// Stream identifiers for substream derivation. Every random draw in a
// sampler run traces back to (run seed, level, stage, particle, attempt),
// so results do not depend on scheduling or worker count.
enum class Stage : std::uint64_t {
    init = 0,
    main = 1,       // SMC-ABC accept/reject stage (also PC stage 2, MM exact stage)
    precondition = 2,
    approx_run = 3, // MM inner SMC-ABC pass with the approximate model
    resample = 4,
    data = 5,
};

namespace detail {

// splitmix64 finalizer; good avalanche for seed mixing.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace detail

inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t level, Stage stage,
                                 std::uint64_t particle, std::uint64_t attempt) {
    std::uint64_t h = detail::mix64(root);
    h = detail::mix64(h ^ level);
    h = detail::mix64(h ^ static_cast<std::uint64_t>(stage));
    h = detail::mix64(h ^ particle);
    h = detail::mix64(h ^ attempt);
    return h;
}

// A self-contained random stream. One instance per derived substream.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : eng_(seed) {}

    double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(eng_); }

    double normal() { return std::normal_distribution<double>(0.0, 1.0)(eng_); }

    // uniform integer in [0, n)
    int uniform_int(int n) { return std::uniform_int_distribution<int>(0, n - 1)(eng_); }

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

inline RngStream make_stream(std::uint64_t root, std::uint64_t level, Stage stage,
                             std::uint64_t particle, std::uint64_t attempt) {
    return RngStream(derive_seed(root, level, stage, particle, attempt));
}

} // namespace abckit
