#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "propg/ncseries.hpp"

namespace propg {

// Coefficients a_{i,j} for the derived generator tower
//   x_{i,1} = x_i,   x_{i,j+1} = [y, x_{i,j}] . x_{i,j}^{p a_{i,j}}
// over an engine whose generators 1..r are the x_i and whose last
// generator r+1 is y.
struct TowerSpec {
    int generator_count; // r
    int depth;           // J
    std::vector<std::vector<PadicInt>> a; // a[i-1][j-1], 1 <= i <= r, 1 <= j < J

    static TowerSpec zeros(const EnginePtr& engine, int r, int depth);
    static TowerSpec random(const EnginePtr& engine, int r, int depth, RandomSource& rng);
};

class GeneratorTower {
public:
    // BudgetError when depth exceeds the truncation class.
    static GeneratorTower build(const TowerSpec& spec, EnginePtr engine);

    const EnginePtr& engine() const { return eng_; }
    const TowerSpec& spec() const { return spec_; }
    const GroupElement& x(int i, int j) const; // 1-based
    const GroupElement& y() const { return y_; }

    // y x_{i,j} y^-1 == x_{i,j+1} . x_{i,j}^{1 - p a_{i,j}}, exact in truncation
    bool rearrangement_identity_holds(int i, int j) const;

private:
    GeneratorTower(EnginePtr eng, TowerSpec spec, std::vector<std::vector<GroupElement>> x,
                   GroupElement y)
        : eng_(std::move(eng)), spec_(std::move(spec)), x_(std::move(x)), y_(std::move(y)) {}

    EnginePtr eng_;
    TowerSpec spec_;
    std::vector<std::vector<GroupElement>> x_;
    GroupElement y_;
};

struct DependencyWitness {
    int degree;
    // (index into the input span, coefficient mod p) with a nontrivial
    // vanishing combination of leading forms
    std::vector<std::pair<std::size_t, uint64_t>> combination;
};

struct IndependenceReport {
    bool independent = true;
    std::optional<DependencyWitness> witness;
    std::map<int, std::size_t> elements_by_degree;
};

// Groups elements by lcs_degree and tests linear independence of the
// leading forms over F_p within each degree.  DomainError if the identity
// is among the inputs.
IndependenceReport graded_independence(std::span<const GroupElement> elements);

// Verifies that y^k x_i y^-k is reproduced, exactly in truncation, by the
// word in the tower elements that the rearrangement recursion constructs,
// for 1 <= k <= k_max and every i.
bool generation_check(const GeneratorTower& tower, int k_max);

} // namespace propg
