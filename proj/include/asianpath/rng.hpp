#pragma once

#include <array>
#include <cstdint>

namespace asianpath {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
///
/// A block is a pure function of (counter, key), so any draw of any stream
/// can be reproduced without replaying the draws before it.
struct Philox4x32 {
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static Counter block(Counter counter, Key key) noexcept;
};

/// SplitMix64 finalizer; used to derive independent seeds from a base seed.
std::uint64_t mix_seed(std::uint64_t value) noexcept;

/// Stream of standard normals addressed by (seed, stream id, lane).
///
/// Each Philox block yields four 32-bit uniforms, turned into four normals by
/// two Box-Muller transforms. The stream id is typically the path index, the
/// lane separates independent draws that belong to the same path.
class NormalStream {
public:
    NormalStream(std::uint64_t seed, std::uint64_t stream_id, std::uint32_t lane = 0) noexcept;

    double next() noexcept
    {
        if (cursor_ == buffer_.size()) {
            refill();
        }
        return buffer_[cursor_++];
    }

    /// Number of Philox blocks consumed so far.
    std::uint32_t blocks_used() const noexcept { return block_index_; }

private:
    void refill() noexcept;

    Philox4x32::Key key_;
    std::uint32_t lane_;
    std::uint32_t stream_lo_;
    std::uint32_t stream_hi_;
    std::uint32_t block_index_ = 0;
    std::array<double, 4> buffer_{};
    std::size_t cursor_ = 4;
};

}  // namespace asianpath
