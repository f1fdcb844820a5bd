// Philox4x32-10 counter-based generator.  One 128-bit counter block keyed by
// a 64-bit seed yields four 32-bit words; any (seed, path, step) tuple maps
// to its block directly, so path subsets regenerate identically and streams
// are splittable without state.

#ifndef FACELIFT_PHILOX_HPP
#define FACELIFT_PHILOX_HPP

#include <array>
#include <cmath>
#include <cstdint>

namespace facelift {

struct Philox4x32 {
    static constexpr std::uint32_t M0 = 0xD2511F53u;
    static constexpr std::uint32_t M1 = 0xCD9E8D57u;
    static constexpr std::uint32_t W0 = 0x9E3779B9u;
    static constexpr std::uint32_t W1 = 0xBB67AE85u;

    static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                              std::array<std::uint32_t, 2> key) {
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = std::uint64_t(M0) * ctr[0];
            const std::uint64_t p1 = std::uint64_t(M1) * ctr[2];
            const std::uint32_t hi0 = std::uint32_t(p0 >> 32), lo0 = std::uint32_t(p0);
            const std::uint32_t hi1 = std::uint32_t(p1 >> 32), lo1 = std::uint32_t(p1);
            ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
            key[0] += W0;
            key[1] += W1;
        }
        return ctr;
    }
};

// Two independent standard normals from one Philox block via Box-Muller.
inline void philox_normal_pair(std::uint64_t seed, std::uint64_t path, std::uint64_t step,
                               std::uint32_t stream, double& n0, double& n1) {
    const std::array<std::uint32_t, 4> r = Philox4x32::block(
        {std::uint32_t(path), std::uint32_t(path >> 32), std::uint32_t(step), stream},
        {std::uint32_t(seed), std::uint32_t(seed >> 32)});
    const std::uint64_t a = (std::uint64_t(r[0]) << 32) | r[1];
    const std::uint64_t b = (std::uint64_t(r[2]) << 32) | r[3];
    // u1 in (0,1], u2 in [0,1)
    const double u1 = double((a >> 11) + 1) * 0x1.0p-53;
    const double u2 = double(b >> 11) * 0x1.0p-53;
    const double rad = std::sqrt(-2.0 * std::log(u1));
    const double ang = 6.283185307179586476925286766559 * u2;
    n0 = rad * std::cos(ang);
    n1 = rad * std::sin(ang);
}

} // namespace facelift

#endif
