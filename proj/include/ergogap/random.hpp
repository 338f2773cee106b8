#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "ergogap/qstate.hpp"

namespace ergogap {

// Seeded random stream with a fixed, named algorithm. The engine is
// std::mt19937_64 (fully specified by the standard); uniform and normal
// variates are derived here rather than through std:: distributions, whose
// output differs between standard library implementations. Equal seeds
// therefore yield equal sequences on every platform.
class RandomSource {
public:
    static constexpr std::string_view kAlgorithm = "mt19937_64/u53/box-muller";

    explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }
    std::string_view algorithm() const { return kAlgorithm; }

    std::uint64_t next_u64() { return engine_(); }
    // Uniform on [0, 1) with 53 random bits.
    double uniform();
    // Standard normal.
    double normal();
    // Standard complex Gaussian: real and imaginary parts N(0, 1/2).
    Complex complex_normal();

    // Independent stream for shard `index`; deterministic in (seed, index).
    RandomSource fork(std::uint64_t index) const;

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    double spare_normal_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace ergogap
