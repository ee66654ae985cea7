#include "propg/padic.hpp"

#include <vector>

namespace propg {

namespace detail {

uint64_t pow_mod(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1)
            r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return r;
}

uint64_t inv_mod(uint64_t a, uint64_t m) {
    // extended Euclid; m < 2^62 so the signed arithmetic cannot overflow
    int64_t t = 0, new_t = 1;
    int64_t r = static_cast<int64_t>(m), new_r = static_cast<int64_t>(a % m);
    while (new_r != 0) {
        int64_t q = r / new_r;
        int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1)
        throw DomainError("inverse of a non-unit");
    if (t < 0)
        t += static_cast<int64_t>(m);
    return static_cast<uint64_t>(t);
}

uint64_t checked_pow(uint64_t p, int n) {
    constexpr uint64_t kCap = uint64_t(1) << 62;
    unsigned __int128 acc = 1;
    for (int i = 0; i < n; ++i) {
        acc *= p;
        if (acc > kCap)
            return 0;
    }
    return static_cast<uint64_t>(acc);
}

} // namespace detail

bool is_odd_prime(uint64_t p) {
    thread_local uint64_t cached = 0;
    if (p != 0 && p == cached)
        return true;
    if (p < 3 || p % 2 == 0)
        return false;
    for (uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0)
            return false;
    cached = p;
    return true;
}

uint64_t smallest_primitive_root(uint64_t p) {
    if (!is_odd_prime(p))
        throw DomainError("primitive root requires an odd prime");
    uint64_t n = p - 1;
    std::vector<uint64_t> factors;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            factors.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        factors.push_back(n);
    for (uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (uint64_t q : factors) {
            if (detail::pow_mod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok)
            return g;
    }
    throw InternalError("no primitive root found");
}

Valuation vp_int(uint64_t p, int64_t n) {
    if (!is_odd_prime(p))
        throw DomainError("vp_int requires an odd prime");
    if (n == 0)
        throw DomainError("valuation undefined (infinite) for zero");
    uint64_t u = n < 0 ? static_cast<uint64_t>(-(n + 1)) + 1 : static_cast<uint64_t>(n);
    uint64_t e = 0;
    while (u % p == 0) {
        u /= p;
        ++e;
    }
    return Valuation::finite(e);
}

uint64_t vp_factorial(uint64_t p, uint64_t n) {
    if (!is_odd_prime(p))
        throw DomainError("vp_factorial requires an odd prime");
    uint64_t total = 0;
    while (n) {
        n /= p;
        total += n;
    }
    return total;
}

PadicInt::PadicInt(uint64_t prime, int precision, int64_t value)
    : prime_(prime), precision_(precision) {
    if (!is_odd_prime(prime))
        throw DomainError("PadicInt requires an odd prime");
    if (precision < 1)
        throw DomainError("PadicInt requires precision >= 1");
    modulus_ = detail::checked_pow(prime, precision);
    if (modulus_ == 0)
        throw BudgetError("modulus p^N exceeds the 62-bit capacity");
    int64_t r = value % static_cast<int64_t>(modulus_);
    if (r < 0)
        r += static_cast<int64_t>(modulus_);
    residue_ = static_cast<uint64_t>(r);
}

PadicInt PadicInt::from_residue(uint64_t prime, int precision, uint64_t residue) {
    PadicInt x(prime, precision, 0);
    x.residue_ = residue % x.modulus_;
    return x;
}

void PadicInt::require_compatible(const PadicInt& o) const {
    if (prime_ != o.prime_ || precision_ != o.precision_)
        throw ConfigMismatchError("PadicInt operands have different prime or precision");
}

Valuation PadicInt::valuation() const {
    if (residue_ == 0)
        return Valuation::infinite();
    uint64_t u = residue_, e = 0;
    while (u % prime_ == 0) {
        u /= prime_;
        ++e;
    }
    return Valuation::finite(e);
}

PadicInt PadicInt::unit_inverse() const {
    if (!is_unit())
        throw DomainError("unit_inverse of a non-unit");
    return PadicInt(prime_, precision_, modulus_, detail::inv_mod(residue_, modulus_));
}

PadicInt PadicInt::pow(int64_t e) const {
    if (e >= 0)
        return PadicInt(prime_, precision_, modulus_,
                        detail::pow_mod(residue_, static_cast<uint64_t>(e), modulus_));
    return unit_inverse().pow(-e);
}

PadicInt PadicInt::reduced(int precision) const {
    if (precision > precision_)
        throw PrecisionError("cannot raise PadicInt precision");
    if (precision == precision_)
        return *this;
    uint64_t m = detail::checked_pow(prime_, precision);
    return PadicInt(prime_, precision, m, residue_ % m);
}

PadicInt PadicInt::operator+(const PadicInt& o) const {
    require_compatible(o);
    return PadicInt(prime_, precision_, modulus_, detail::add_mod(residue_, o.residue_, modulus_));
}

PadicInt PadicInt::operator-(const PadicInt& o) const {
    require_compatible(o);
    return PadicInt(prime_, precision_, modulus_, detail::sub_mod(residue_, o.residue_, modulus_));
}

PadicInt PadicInt::operator*(const PadicInt& o) const {
    require_compatible(o);
    return PadicInt(prime_, precision_, modulus_, detail::mul_mod(residue_, o.residue_, modulus_));
}

PadicInt PadicInt::operator-() const {
    return PadicInt(prime_, precision_, modulus_, residue_ == 0 ? 0 : modulus_ - residue_);
}

PadicInt teichmuller(uint64_t p, int64_t a, int precision) {
    PadicInt seed(p, precision, a);
    if (!seed.is_unit())
        throw DomainError("teichmuller requires a unit mod p");
    uint64_t m = seed.modulus();
    uint64_t x = seed.residue();
    for (int i = 0; i <= precision + 2; ++i) {
        uint64_t y = detail::pow_mod(x, p, m);
        if (y == x)
            return PadicInt::from_residue(p, precision, x);
        x = y;
    }
    throw InternalError("teichmuller iteration failed to stabilize");
}

PadicInt padic_binomial(const PadicInt& a, uint64_t k, int target_precision) {
    const uint64_t p = a.prime();
    if (target_precision < 1)
        throw DomainError("padic_binomial requires target precision >= 1");
    const uint64_t loss = vp_factorial(p, k);
    if (static_cast<uint64_t>(a.precision()) < static_cast<uint64_t>(target_precision) + loss)
        throw PrecisionError("padic_binomial: input precision " + std::to_string(a.precision()) +
                             " is below required " + std::to_string(target_precision + static_cast<int>(loss)));
    const uint64_t m = a.modulus();
    uint64_t num = 1 % m;
    for (uint64_t i = 0; i < k; ++i)
        num = detail::mul_mod(num, detail::sub_mod(a.residue(), i % m, m), m);
    // strip the p-part of k!, invert the unit part
    uint64_t pe = 1;
    for (uint64_t i = 0; i < loss; ++i)
        pe *= p;
    if (num % pe != 0)
        throw InternalError("padic_binomial: numerator not divisible by the p-part of k!");
    uint64_t q = num / pe;
    uint64_t unit = 1 % m;
    for (uint64_t i = 1; i <= k; ++i) {
        uint64_t v = i;
        while (v % p == 0)
            v /= p;
        unit = detail::mul_mod(unit, v % m, m);
    }
    uint64_t res = detail::mul_mod(q, detail::inv_mod(unit, m), m);
    uint64_t tm = detail::checked_pow(p, target_precision);
    return PadicInt::from_residue(p, target_precision, res % tm);
}

} // namespace propg
