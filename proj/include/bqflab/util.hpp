#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace bqflab {

inline constexpr double two_pi = 6.283185307179586476925286766559;

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer addition overflow");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer multiplication overflow");
    return r;
}

// floor of sqrt(v) for v >= 0
inline std::int64_t isqrt64(std::int64_t v) {
    if (v < 0) throw std::domain_error("isqrt64: negative argument");
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

// representative of a mod q in [0, q)
inline std::int64_t floor_mod(std::int64_t a, std::int64_t q) {
    std::int64_t r = a % q;
    return r < 0 ? r + q : r;
}

// e^{2*pi*i*turns}, with the argument reduced to [-1/2, 1/2] turns first so
// large phases do not lose precision inside sin/cos.
inline std::complex<double> unit_phase(double turns) {
    double t = turns - std::round(turns);
    return {std::cos(two_pi * t), std::sin(two_pi * t)};
}

// Kahan-compensated complex accumulator; keeps large grid sums reproducible.
struct KahanComplex {
    std::complex<double> sum{0.0, 0.0};
    std::complex<double> carry{0.0, 0.0};

    void add(std::complex<double> v) {
        const std::complex<double> y = v - carry;
        const std::complex<double> t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

// SplitMix64; used to derive independent seeds for named random streams.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace bqflab
