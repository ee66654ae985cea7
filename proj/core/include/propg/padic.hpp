#pragma once

#include <cstdint>
#include <string>

#include "propg/errors.hpp"

namespace propg {

namespace detail {

inline uint64_t add_mod(uint64_t a, uint64_t b, uint64_t m) {
    uint64_t s = a + b; // m < 2^62, no overflow
    return s >= m ? s - m : s;
}

inline uint64_t sub_mod(uint64_t a, uint64_t b, uint64_t m) {
    return a >= b ? a - b : a + (m - b);
}

inline uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t pow_mod(uint64_t a, uint64_t e, uint64_t m);
uint64_t inv_mod(uint64_t a, uint64_t m); // DomainError if gcd(a, m) != 1

// p^n, or 0 if the result would exceed the 62-bit modulus cap.
uint64_t checked_pow(uint64_t p, int n);

} // namespace detail

bool is_odd_prime(uint64_t p);
uint64_t smallest_primitive_root(uint64_t p);

// v_p of a nonzero element is a non-negative integer; only the zero
// element at full precision carries the infinity marker.
class Valuation {
public:
    static Valuation finite(uint64_t v) { return Valuation(v, false); }
    static Valuation infinite() { return Valuation(0, true); }

    bool is_infinite() const { return infinite_; }
    uint64_t value() const {
        if (infinite_)
            throw DomainError("valuation is infinite");
        return value_;
    }

    friend bool operator==(const Valuation&, const Valuation&) = default;
    // infinite compares above every finite valuation
    friend bool operator<(const Valuation& a, const Valuation& b) {
        if (a.infinite_)
            return false;
        if (b.infinite_)
            return true;
        return a.value_ < b.value_;
    }
    friend bool operator<=(const Valuation& a, const Valuation& b) { return !(b < a); }
    friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
    friend bool operator>=(const Valuation& a, const Valuation& b) { return !(a < b); }

    std::string str() const { return infinite_ ? "inf" : std::to_string(value_); }

private:
    Valuation(uint64_t v, bool inf) : value_(v), infinite_(inf) {}
    uint64_t value_;
    bool infinite_;
};

// Largest e with p^e | n.  DomainError for n = 0 ("valuation undefined").
Valuation vp_int(uint64_t p, int64_t n);

// v_p(n!) = sum over i of floor(n / p^i).
uint64_t vp_factorial(uint64_t p, uint64_t n);

// A truncated p-adic integer: residue modulo p^N with exact add, multiply
// and unit inverse.  p is an odd prime, N >= 1, and p^N must fit the
// 62-bit modulus cap.
class PadicInt {
public:
    PadicInt(uint64_t prime, int precision, int64_t value);
    static PadicInt from_residue(uint64_t prime, int precision, uint64_t residue);
    static PadicInt zero(uint64_t prime, int precision) { return PadicInt(prime, precision, 0); }
    static PadicInt one(uint64_t prime, int precision) { return PadicInt(prime, precision, 1); }

    uint64_t prime() const { return prime_; }
    int precision() const { return precision_; }
    uint64_t residue() const { return residue_; }
    uint64_t modulus() const { return modulus_; }

    bool is_zero() const { return residue_ == 0; }
    bool is_unit() const { return residue_ % prime_ != 0; }

    Valuation valuation() const;

    PadicInt unit_inverse() const; // DomainError on non-units
    PadicInt pow(int64_t e) const; // negative e requires a unit
    PadicInt reduced(int precision) const; // lower precision only

    PadicInt operator+(const PadicInt& o) const;
    PadicInt operator-(const PadicInt& o) const;
    PadicInt operator*(const PadicInt& o) const;
    PadicInt operator-() const;

    friend bool operator==(const PadicInt&, const PadicInt&) = default;

    std::string str() const { return std::to_string(residue_); }

private:
    PadicInt(uint64_t p, int n, uint64_t mod, uint64_t res)
        : prime_(p), precision_(n), modulus_(mod), residue_(res) {}
    void require_compatible(const PadicInt& o) const;

    uint64_t prime_;
    int precision_;
    uint64_t modulus_;
    uint64_t residue_;
};

// The unique (p-1)-st root of unity congruent to a mod p, exact mod p^N.
// Computed by the fixed-point iteration a -> a^p.
PadicInt teichmuller(uint64_t p, int64_t a, int precision);

// C(a, k) = a(a-1)...(a-k+1)/k!, exact mod p^target.  The input must carry
// at least target + v_p(k!) digits; anything less raises PrecisionError
// rather than truncating silently.
PadicInt padic_binomial(const PadicInt& a, uint64_t k, int target_precision);

} // namespace propg
