// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

namespace renewal_ks {

/// SplitMix64 finalizer: a full-avalanche bijection on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
}

/// Counter-based splittable random stream.
///
/// Draw i of a stream is mix64(key + i*golden), i.e. the SplitMix64 sequence
/// started at a per-stream key. Keys are derived by hashing the parent key
/// with the child index under a distinct salt, so a stream is a pure function
/// of (master_seed, derivation path): replicate r of experiment e can be
/// reproduced in isolation, and sibling streams never share draw state.
class RngStream {
public:
    explicit RngStream(std::uint64_t master_seed)
        : master_seed_(master_seed), key_(mix64(master_seed + kGolden)) {}

    /// Derive the index-th child stream. Children own their state; the parent
    /// is unaffected and may keep drawing.
    [[nodiscard]] RngStream child(std::uint64_t index) const {
        RngStream c(*this);
        c.path_.push_back(index);
        c.key_ = mix64((key_ ^ kChildSalt) + kGolden * (index + 1));
        c.counter_ = 0;
        return c;
    }

    std::uint64_t next_u64() noexcept { return mix64(key_ + kGolden * ++counter_); }

    /// Uniform draw in [0, 1) with 53 random bits.
    double next_unit() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    std::uint64_t master_seed() const noexcept { return master_seed_; }
    const std::vector<std::uint64_t>& path() const noexcept { return path_; }
    std::uint64_t draws_consumed() const noexcept { return counter_; }

    static constexpr const char* algorithm() noexcept { return "splitmix64-tree/v1"; }

private:
    static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
    static constexpr std::uint64_t kChildSalt = 0xa24baed4963ee407ULL;

    std::uint64_t master_seed_;
    std::vector<std::uint64_t> path_;
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace renewal_ks
