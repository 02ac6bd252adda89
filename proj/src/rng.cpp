#include "asianpath/rng.hpp"

#include <cmath>
#include <numbers>

namespace asianpath {

namespace {

constexpr std::uint32_t kMulA = 0xD2511F53u;
constexpr std::uint32_t kMulB = 0xCD9E8D57u;
constexpr std::uint32_t kWeylA = 0x9E3779B9u;
constexpr std::uint32_t kWeylB = 0xBB67AE85u;

inline void round(Philox4x32::Counter& c, const Philox4x32::Key& k) noexcept
{
    const std::uint64_t p0 = static_cast<std::uint64_t>(kMulA) * c[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kMulB) * c[2];
    const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const auto lo0 = static_cast<std::uint32_t>(p0);
    const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const auto lo1 = static_cast<std::uint32_t>(p1);
    c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}

// Maps a 32-bit integer to the open interval (0, 1).
inline double open_unit(std::uint32_t u) noexcept
{
    return (static_cast<double>(u) + 0.5) * 0x1.0p-32;
}

}  // namespace

Philox4x32::Counter Philox4x32::block(Counter counter, Key key) noexcept
{
    for (int r = 0; r < 10; ++r) {
        if (r > 0) {
            key[0] += kWeylA;
            key[1] += kWeylB;
        }
        round(counter, key);
    }
    return counter;
}

std::uint64_t mix_seed(std::uint64_t value) noexcept
{
    value += 0x9E3779B97F4A7C15ull;
    value = (value ^ (value >> 30)) * 0xBF58476D1CE4E5B9ull;
    value = (value ^ (value >> 27)) * 0x94D049BB133111EBull;
    return value ^ (value >> 31);
}

NormalStream::NormalStream(std::uint64_t seed, std::uint64_t stream_id, std::uint32_t lane) noexcept
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
      lane_(lane),
      stream_lo_(static_cast<std::uint32_t>(stream_id)),
      stream_hi_(static_cast<std::uint32_t>(stream_id >> 32))
{
}

void NormalStream::refill() noexcept
{
    const auto bits = Philox4x32::block({block_index_, lane_, stream_lo_, stream_hi_}, key_);
    ++block_index_;
    constexpr double two_pi = 2.0 * std::numbers::pi;
    for (std::size_t i = 0; i < 2; ++i) {
        const double radius = std::sqrt(-2.0 * std::log(open_unit(bits[2 * i])));
        const double angle = two_pi * open_unit(bits[2 * i + 1]);
        buffer_[2 * i] = radius * std::cos(angle);
        buffer_[2 * i + 1] = radius * std::sin(angle);
    }
    cursor_ = 0;
}

}  // namespace asianpath
