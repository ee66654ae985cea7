#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "propg/errors.hpp"
#include "propg/padic.hpp"
#include "propg/random.hpp"

namespace propg {

class Engine;
class NcSeries;
class GroupElement;
using EnginePtr = std::shared_ptr<const Engine>;

// Engine parameters: a free nilpotent-of-class-c group on r generators,
// coefficients mod p^N.  Generator k carries a twist weight t_k for the
// delta action (the unit omega^{t_k}) and one for the gamma action (the
// unit (1+p)^{t_k}); empty twist vectors default to weight zero.
struct EngineConfig {
    uint64_t prime = 3;
    int precision = 6;       // N
    int degree_class = 3;    // c, maximum total degree kept
    int generator_count = 1; // r
    std::vector<int64_t> delta_twists{};
    std::vector<int64_t> gamma_twists{};
    std::size_t word_budget = 200000; // cap on distinct words through degree c

    friend bool operator==(const EngineConfig&, const EngineConfig&) = default;
};

// A monomial in the noncommuting generators: a sequence of generator
// indices (1-based), packed into one integer so that the natural integer
// order is graded-lexicographic.  Length is capped at 12, indices at 15.
class Word {
public:
    Word() : key_(0) {}
    static Word single(int generator);
    static Word from_letters(std::span<const int> letters);
    static Word from_key(uint64_t key) { return Word(key); }

    int length() const { return static_cast<int>(key_ >> kLenShift); }
    int letter(int pos) const; // 0-based position
    std::vector<int> letters() const;
    uint64_t key() const { return key_; }
    std::string str() const; // "1.2.1"; empty word renders as "1" (the unit monomial)

    friend auto operator<=>(const Word&, const Word&) = default;

    static constexpr int kMaxLength = 12;
    static constexpr int kMaxGenerator = 15;

private:
    explicit Word(uint64_t key) : key_(key) {}
    static constexpr int kLenShift = 48;
    uint64_t key_;
};

// Truncated noncommutative power series: finitely many words of degree
// <= c with coefficients stored at working precision N_work.  Absent
// word = zero coefficient.  Guard digits are dropped only at
// comparison/leading-form time.
class NcSeries {
public:
    explicit NcSeries(EnginePtr engine); // zero series

    const EnginePtr& engine() const { return eng_; }
    bool empty() const { return terms_.empty(); }

    PadicInt coefficient(const Word& w) const; // at working precision
    std::vector<std::pair<Word, PadicInt>> terms() const;

    // minimal total degree with a coefficient nonzero mod p^N
    std::optional<int> min_degree_truncated() const;
    // degree-d coefficients reduced mod p (zero entries omitted)
    std::map<Word, uint64_t> homogeneous_mod_p(int degree) const;
    bool equal_truncated(const NcSeries& o) const;

    NcSeries operator+(const NcSeries& o) const;
    NcSeries operator-(const NcSeries& o) const;
    NcSeries operator*(const NcSeries& o) const;
    NcSeries scaled(const PadicInt& c) const;

private:
    friend class Engine;
    friend class GroupElement;
    friend GroupElement substitute(const GroupElement&, std::span<const GroupElement>);

    using Terms = std::vector<std::pair<uint64_t, uint64_t>>; // (word key, residue)
    NcSeries(EnginePtr engine, Terms t) : eng_(std::move(engine)), terms_(std::move(t)) {}

    EnginePtr eng_;
    Terms terms_; // sorted by key, residues nonzero mod p^N_work
};

// A series with constant coefficient exactly 1; the group of the Magnus
// model.  Closed under mul, inverse, and Z_p powers.
class GroupElement {
public:
    explicit GroupElement(NcSeries s); // DomainError unless constant term is 1

    const NcSeries& series() const { return s_; }
    const EnginePtr& engine() const { return s_.engine(); }

    GroupElement operator*(const GroupElement& o) const;
    GroupElement inverse() const;
    // (1+u)^a = sum of C(a,k) u^k; the exponent must carry the engine's
    // working precision.
    GroupElement zp_power(const PadicInt& exponent) const;
    GroupElement pow(int64_t e) const;

    bool is_identity() const; // mod p^N
    // equality in truncation (guard digits discarded)
    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        return a.s_.equal_truncated(b.s_);
    }

private:
    NcSeries s_;
};

// a b a^-1 b^-1
GroupElement commutator(const GroupElement& a, const GroupElement& b);

// Minimal Magnus degree of g - 1 mod p^N; disengaged (nullopt) when g is
// the identity in truncation.  This is the model's lower-central-series
// membership test: g lies in N(i) iff lcs_degree(g) >= i.
std::optional<int> lcs_degree(const GroupElement& g);

// Homogeneous part of g - 1 at degree lcs_degree(g), coefficients mod p.
// DomainError on the identity.
std::map<Word, uint64_t> leading_form(const GroupElement& g);

// Ring substitution X_k -> images[k] - 1, truncated; multiplicative.
GroupElement substitute(const GroupElement& g, std::span<const GroupElement> images);

// Seeded product of generator powers; the deterministic sampler used by
// the CLI and the test suites.
GroupElement random_group_element(const EnginePtr& engine, RandomSource& rng);

class Engine final : public std::enable_shared_from_this<Engine> {
public:
    static EnginePtr create(EngineConfig cfg);

    const EngineConfig& config() const { return cfg_; }
    uint64_t prime() const { return cfg_.prime; }
    int precision() const { return cfg_.precision; }
    int working_precision() const { return n_work_; }
    int degree_class() const { return cfg_.degree_class; }
    int generator_count() const { return cfg_.generator_count; }
    uint64_t modulus() const { return modulus_; }                 // p^N_work
    uint64_t truncation_modulus() const { return trunc_modulus_; } // p^N

    GroupElement one() const;
    GroupElement generator(int k) const; // 1-based

    // exact lift of an integer at working precision
    PadicInt exact(int64_t v) const;
    // omega = chi(delta): the Teichmuller lift of the least primitive root
    PadicInt teichmuller_unit() const;
    PadicInt chi_delta_power(int64_t e) const; // omega^(e mod p-1)
    PadicInt chi_gamma_power(int64_t e) const; // (1+p)^e, negative e inverts
    PadicInt delta_twist_unit(int k, int64_t conj_power = 1) const;
    PadicInt gamma_twist_unit(int k) const;

private:
    explicit Engine(EngineConfig cfg);

    EngineConfig cfg_;
    int n_work_ = 0;
    uint64_t modulus_ = 0;
    uint64_t trunc_modulus_ = 0;
    uint64_t omega_ = 0; // residue of teichmuller unit at N_work
};

} // namespace propg
