#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "propg/errors.hpp"

namespace propg {

using BigInt = boost::multiprecision::cpp_int;

// Basis index for the free graded Lie algebra on generators s_m, m odd
// >= 3, with s_m of degree m.  Letters are the generator degrees
// themselves, ordered s_3 < s_5 < s_7 < ...; a Lyndon word is strictly
// smaller than all of its proper rotations.
class LyndonWord {
public:
    explicit LyndonWord(std::vector<int> letters);

    static bool is_lyndon(std::span<const int> letters);
    static bool valid_generator(int m) { return m >= 3 && m % 2 == 1; }

    const std::vector<int>& letters() const { return letters_; }
    int degree() const { return degree_; }
    std::string str() const; // "3.9"

    friend auto operator<=>(const LyndonWord& a, const LyndonWord& b) {
        return a.letters_ <=> b.letters_;
    }
    friend bool operator==(const LyndonWord& a, const LyndonWord& b) {
        return a.letters_ == b.letters_;
    }

private:
    std::vector<int> letters_;
    int degree_;
};

// Z-linear combination of Lyndon basis words; coefficients are exact
// arbitrary-precision integers with mod-p reduction on demand.
class LieElement {
public:
    LieElement() = default; // zero
    static LieElement generator(int m);
    static LieElement basis_word(const LyndonWord& w);

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<std::vector<int>, BigInt>& coefficients() const { return coeffs_; }

    bool is_homogeneous() const;
    // degree of a nonzero homogeneous element; DomainError on mixed input
    std::optional<int> degree() const;

    LieElement operator+(const LieElement& o) const;
    LieElement operator-(const LieElement& o) const;
    LieElement scaled(const BigInt& c) const;

    friend bool operator==(const LieElement&, const LieElement&) = default;

    std::string str() const;

private:
    std::map<std::vector<int>, BigInt> coeffs_;
};

// [a, b], bilinear and expanded in the Lyndon basis via the standard
// factorization rewriting.
LieElement bracket(const LieElement& a, const LieElement& b);

// Every computation is bounded by a maximum degree; beyond this cap the
// enumeration and the rank recursion leave desk scale.
inline constexpr int kMaxLieDegree = 64;

// All Lyndon words of each degree 1..max_degree, generators being the odd
// degrees 3..max_degree; entry d of the result lists degree-d words.
std::vector<std::vector<LyndonWord>> lyndon_basis(int max_degree);

// Rank of the degree-m component via the generating-function recursion
//   prod over n of (1 - t^n)^(-d_n) = 1 / (1 - sum over generators of t^deg).
// Independent of the Lyndon enumeration above.
int64_t graded_dimension(int degree);
int64_t graded_dimension(int degree, std::span<const int> generator_degrees);

// Coefficient of the free associative Hilbert series on the same
// generators (compositions of the degree into generator degrees).
int64_t associative_dimension(int degree);
int64_t associative_dimension(int degree, std::span<const int> generator_degrees);

struct LieRank {
    std::size_t over_q;
    std::size_t mod_p;
};

// Matrix rank of the Lyndon coordinate vectors, over Q and over Z/p.
// All elements must be homogeneous of the stated degree.
LieRank rank_of(std::span<const LieElement> elements, int degree, uint64_t p);

} // namespace propg
