// Arithmetic in GF(2^m), m <= 12.
//
// Elements are bit-polynomials reduced modulo a fixed irreducible polynomial
// per m.  Addition is xor, so it needs no field context; multiplication and
// inversion read the modulus from the element's m tag.  Mixing elements of
// different m is rejected (subfield tricks are not needed anywhere here).

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gqa {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {
// Irreducible moduli over GF(2), indexed by m.  Bit i = coefficient of x^i.
inline constexpr uint32_t kModulus[13] = {
    0,
    0b10,              // m=1: x
    0b111,             // m=2: x^2+x+1
    0b1011,            // m=3: x^3+x+1
    0b10011,           // m=4: x^4+x+1
    0b100101,          // m=5: x^5+x^2+1
    0b1000011,         // m=6: x^6+x+1
    0b10000011,        // m=7: x^7+x+1
    0b100011011,       // m=8: x^8+x^4+x^3+x+1
    0b1000010001,      // m=9: x^9+x^4+1
    0b10000001001,     // m=10: x^10+x^3+1
    0b100000000101,    // m=11: x^11+x^2+1
    0b1000001010011,   // m=12: x^12+x^6+x^4+x+1
};

inline uint32_t gf2_reduce(uint64_t v, int m) {
    const uint64_t mod = kModulus[m];
    for (int bit = 62; bit >= m; --bit)
        if (v >> bit) v ^= mod << (bit - m);
    return static_cast<uint32_t>(v);
}

inline uint64_t clmul(uint32_t a, uint32_t b) {
    uint64_t acc = 0;
    for (int i = 0; b >> i; ++i)
        if ((b >> i) & 1u) acc ^= static_cast<uint64_t>(a) << i;
    return acc;
}
}  // namespace detail

class Fq {
  public:
    Fq() : v_(0), m_(1) {}
    Fq(uint32_t v, int m) : v_(v), m_(static_cast<int8_t>(m)) {
        if (m < 1 || m > 12) throw Error("GF(2^m): m out of supported range 1..12");
        if (v_ >> m) v_ = detail::gf2_reduce(v_, m);
    }

    static Fq zero(int m = 1) { return Fq(0u, m); }
    static Fq one(int m = 1) { return Fq(1u, m); }

    uint32_t bits() const { return v_; }
    int m() const { return m_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    friend Fq operator+(Fq a, Fq b) { return Fq(a.v_ ^ b.v_, join(a, b)); }
    friend Fq operator-(Fq a, Fq b) { return a + b; }
    Fq& operator+=(Fq o) { return *this = *this + o; }

    friend Fq operator*(Fq a, Fq b) {
        int m = join(a, b);
        return Fq(detail::gf2_reduce(detail::clmul(a.v_, b.v_), m), m);
    }
    Fq& operator*=(Fq o) { return *this = *this * o; }

    Fq pow(uint64_t e) const {
        Fq acc = one(m_), base = *this;
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    Fq inv() const {
        if (is_zero()) throw Error("GF(2^m): inverse of zero");
        // a^(2^m - 2)
        return pow((uint64_t(1) << m_) - 2);
    }
    friend Fq operator/(Fq a, Fq b) { return a * b.inv(); }

    // Unique square root: x -> x^2 is the Frobenius automorphism in char 2.
    Fq sqrt() const { return pow(uint64_t(1) << (m_ - 1)); }

    friend bool operator==(Fq a, Fq b) { return a.v_ == b.v_ && (a.v_ == 0 || a.m_ == b.m_); }
    friend bool operator!=(Fq a, Fq b) { return !(a == b); }

    std::string str() const { return std::to_string(v_); }

  private:
    static int join(Fq a, Fq b) {
        if (a.v_ == 0) return b.m_;
        if (b.v_ == 0) return a.m_;
        if (a.m_ != b.m_) throw Error("GF(2^m): mixing elements of different fields");
        return a.m_;
    }

    uint32_t v_;
    int8_t m_;
};

// The field GF(2^m) as an object: element construction and iteration.
class Field {
  public:
    explicit Field(int m = 1) : m_(m) {
        if (m < 1 || m > 12) throw Error("GF(2^m): m out of supported range 1..12");
    }
    int m() const { return m_; }
    uint32_t size() const { return uint32_t(1) << m_; }
    Fq el(uint32_t v) const { return Fq(v, m_); }
    Fq zero() const { return Fq::zero(m_); }
    Fq one() const { return Fq::one(m_); }

  private:
    int m_;
};

}  // namespace gqa
