#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "propg/padic.hpp"

namespace propg {

// Residues of the Bernoulli numbers B_m mod p for even m with
// 2 <= m <= p-3, from the power-series recurrence of t/(e^t - 1); every
// denominator in that range is prime to p.
class BernoulliTable {
public:
    static BernoulliTable compute(uint64_t p);
    static BernoulliTable from_residues(uint64_t p, std::vector<uint64_t> residues);

    uint64_t prime() const { return p_; }
    bool empty() const { return residues_.empty(); }
    // entry for even m, 2 <= m <= p-3
    uint64_t residue(int64_t m) const;
    // packed storage: index (m-2)/2
    const std::vector<uint64_t>& residues() const { return residues_; }

private:
    BernoulliTable(uint64_t p, std::vector<uint64_t> r) : p_(p), residues_(std::move(r)) {}
    uint64_t p_;
    std::vector<uint64_t> residues_;
};

struct IrregularPair {
    uint64_t p;
    int64_t m; // even index with B_m = 0 mod p

    friend bool operator==(const IrregularPair&, const IrregularPair&) = default;
};

std::vector<IrregularPair> irregular_pairs(const BernoulliTable& table);
std::vector<IrregularPair> irregular_pairs(uint64_t p);
bool is_regular(uint64_t p);

// One row of the valuation bound table: for odd m >= 3 and
// k = floor((m-3)/(p-1)), the bound v_p((kp)!) - v_p((m-1)!).  Vandiver
// is an assumption recorded in the row, never checked.
struct BoundRow {
    uint64_t p;
    int64_t m;
    int64_t k;
    int64_t bound;
    bool vandiver_assumed;

    friend bool operator==(const BoundRow&, const BoundRow&) = default;
};

BoundRow nm_bound(uint64_t p, int64_t m, bool vandiver_assumed = true);

// Valuation model for the recursively built sigma elements: base index k
// (odd, 3 <= k <= p), base valuation v0, and a unit scaling for the
// simulated eigencoefficient.
struct KappaModel {
    uint64_t p;
    int precision;       // N, must exceed v_p((jp)!) + v0 + 4
    int64_t base_index;  // k
    int64_t base_valuation; // v0
    uint64_t unit = 1;
};

struct SigmaValuation {
    uint64_t closed_form; // v_p((jp)!) + v0
    uint64_t simulated;   // valuation of u0 * prod of ((1+p)^m - (1+p)^{l_i})
};

SigmaValuation sigma_valuation(const KappaModel& model, int64_t j);

// Divisibility predicates behind the non-surjectivity criterion: even m
// checks p | B_m; odd m checks p | B_{p-m}, which if triggered entails a
// Vandiver failure.
struct IhgenRecord {
    uint64_t p;
    int64_t m;
    bool even_case;
    int64_t bernoulli_index;
    bool applies;
    bool vandiver_assumed;
    std::string note;
};

IhgenRecord ihgen_condition(uint64_t p, int64_t m, bool vandiver_holds);

} // namespace propg
