#pragma once

// Arithmetic in GF(2^8) with the AES reduction polynomial
// x^8 + x^4 + x^3 + x + 1 (0x11B).  Addition is XOR; multiplication and
// inversion go through log/exp tables built over the generator 0x03.
// All tables are generated at compile time.

#include <array>
#include <cstdint>
#include <stdexcept>

namespace scc {

inline constexpr unsigned kGfReductionPoly = 0x11B;

namespace detail {

constexpr uint8_t gf_xtime(uint8_t a) {
    return static_cast<uint8_t>((a << 1) ^ ((a & 0x80) ? (kGfReductionPoly & 0xFF) : 0));
}

struct GfTables {
    std::array<uint8_t, 510> exp{};
    std::array<uint8_t, 256> log{};
    std::array<uint8_t, 256 * 256> mul{};
};

constexpr GfTables make_gf_tables() {
    GfTables t{};
    uint8_t e = 1;
    for (int i = 0; i < 255; ++i) {
        t.exp[i] = e;
        t.log[e] = static_cast<uint8_t>(i);
        e = static_cast<uint8_t>(e ^ gf_xtime(e));  // e *= 0x03, a primitive element
    }
    for (int i = 255; i < 510; ++i) {
        t.exp[i] = t.exp[i - 255];
    }
    for (int a = 1; a < 256; ++a) {
        for (int b = 1; b < 256; ++b) {
            t.mul[(a << 8) | b] = t.exp[t.log[a] + t.log[b]];
        }
    }
    return t;
}

inline constexpr GfTables gf_tables = make_gf_tables();

}  // namespace detail

class Gf {
public:
    constexpr Gf() = default;
    constexpr explicit Gf(uint8_t v) : v_(v) {}

    constexpr uint8_t byte() const { return v_; }
    constexpr bool is_zero() const { return v_ == 0; }

    friend constexpr Gf operator+(Gf a, Gf b) { return Gf(static_cast<uint8_t>(a.v_ ^ b.v_)); }
    friend constexpr Gf operator-(Gf a, Gf b) { return Gf(static_cast<uint8_t>(a.v_ ^ b.v_)); }
    constexpr Gf& operator+=(Gf b) { v_ ^= b.v_; return *this; }
    constexpr Gf& operator-=(Gf b) { v_ ^= b.v_; return *this; }

    friend Gf operator*(Gf a, Gf b) {
        return Gf(detail::gf_tables.mul[(a.v_ << 8) | b.v_]);
    }
    Gf& operator*=(Gf b) { *this = *this * b; return *this; }

    friend constexpr bool operator==(Gf a, Gf b) = default;

private:
    uint8_t v_ = 0;
};

inline constexpr Gf gf_zero{0};
inline constexpr Gf gf_one{1};

inline Gf inverse(Gf a) {
    if (a.is_zero()) throw std::domain_error("gf256: zero has no inverse");
    return Gf(detail::gf_tables.exp[255 - detail::gf_tables.log[a.byte()]]);
}

inline Gf operator/(Gf a, Gf b) { return a * inverse(b); }

// a^e with a^0 = 1 (also for a = 0).
inline Gf power(Gf a, unsigned e) {
    if (e == 0) return gf_one;
    if (a.is_zero()) return gf_zero;
    unsigned le = static_cast<unsigned>(detail::gf_tables.log[a.byte()]) * e % 255u;
    return Gf(detail::gf_tables.exp[le]);
}

// Row of the full multiplication table for a fixed factor; the hot loops in
// the elimination code index it directly.
inline const uint8_t* mul_row(uint8_t factor) {
    return &detail::gf_tables.mul[factor << 8];
}

}  // namespace scc
