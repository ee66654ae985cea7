#pragma once

// Test-side oracles, independent of the library implementations they check.

#include <cstdint>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracles {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Akiyama-Tanigawa transform in exact rationals.  Yields the B_1 = +1/2
// convention, which agrees with the recurrence convention at every even
// index.
inline BigRat bernoulli_exact(int n) {
    std::vector<BigRat> a(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
        a[static_cast<std::size_t>(m)] = BigRat(1, m + 1);
        for (int j = m; j >= 1; --j)
            a[static_cast<std::size_t>(j - 1)] =
                BigRat(j) * (a[static_cast<std::size_t>(j - 1)] - a[static_cast<std::size_t>(j)]);
    }
    return a[0];
}

// residue of an exact rational mod p (denominator must be prime to p)
inline uint64_t rational_mod(const BigRat& r, uint64_t p) {
    BigInt num = boost::multiprecision::numerator(r) % p;
    if (num < 0)
        num += p;
    BigInt den = boost::multiprecision::denominator(r) % p;
    // inverse by Fermat
    uint64_t d = den.convert_to<uint64_t>();
    uint64_t inv = 1, base = d % p, e = p - 2;
    while (e) {
        if (e & 1)
            inv = static_cast<uint64_t>((static_cast<unsigned __int128>(inv) * base) % p);
        base = static_cast<uint64_t>((static_cast<unsigned __int128>(base) * base) % p);
        e >>= 1;
    }
    return static_cast<uint64_t>(
        (static_cast<unsigned __int128>(num.convert_to<uint64_t>()) * inv) % p);
}

inline BigInt binomial_exact(uint64_t n, uint64_t k) {
    if (k > n)
        return 0;
    BigInt out = 1;
    for (uint64_t i = 0; i < k; ++i) {
        out *= n - i;
        out /= i + 1;
    }
    return out;
}

// v_p(n!) by counting the factors of every term of the product
inline uint64_t vp_factorial_by_count(uint64_t p, uint64_t n) {
    uint64_t total = 0;
    for (uint64_t i = 2; i <= n; ++i) {
        uint64_t v = i;
        while (v % p == 0) {
            v /= p;
            ++total;
        }
    }
    return total;
}

inline std::vector<uint64_t> odd_primes_up_to(uint64_t bound) {
    std::vector<uint64_t> out;
    for (uint64_t p = 3; p <= bound; p += 2) {
        bool prime = true;
        for (uint64_t d = 3; d * d <= p; d += 2)
            if (p % d == 0) {
                prime = false;
                break;
            }
        if (prime)
            out.push_back(p);
    }
    return out;
}

// Free associative expansions over integer-labelled letters, for
// leading-form cross-checks (left-normed adjoint words and small Lie
// monomials).
using Assoc = std::map<std::vector<int>, long long>;

inline Assoc assoc_letter(int x) { return {{{x}, 1}}; }

inline Assoc assoc_mul(const Assoc& a, const Assoc& b) {
    Assoc out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            std::vector<int> w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out[w] += ca * cb;
            if (out[w] == 0)
                out.erase(w);
        }
    return out;
}

inline Assoc assoc_commutator(const Assoc& a, const Assoc& b) {
    Assoc out = assoc_mul(a, b);
    for (const auto& [w, c] : assoc_mul(b, a)) {
        out[w] -= c;
        if (out[w] == 0)
            out.erase(w);
    }
    return out;
}

// ad(y)^(n)(x) with y, x letters
inline Assoc ad_power(int y, int x, int n) {
    Assoc acc = assoc_letter(x);
    for (int i = 0; i < n; ++i)
        acc = assoc_commutator(assoc_letter(y), acc);
    return acc;
}

} // namespace oracles
