#include "propg/freeness.hpp"

#include <algorithm>
#include <memory>

#include "propg/detail/fp_matrix.hpp"

namespace propg {

TowerSpec TowerSpec::zeros(const EnginePtr& engine, int r, int depth) {
    TowerSpec spec{r, depth, {}};
    const PadicInt z = PadicInt::zero(engine->prime(), engine->working_precision());
    spec.a.assign(static_cast<std::size_t>(r),
                  std::vector<PadicInt>(static_cast<std::size_t>(depth > 0 ? depth - 1 : 0), z));
    return spec;
}

TowerSpec TowerSpec::random(const EnginePtr& engine, int r, int depth, RandomSource& rng) {
    TowerSpec spec = zeros(engine, r, depth);
    // uniform residues mod p^N, lifted exactly to working precision
    const uint64_t bound = engine->truncation_modulus();
    for (auto& row : spec.a)
        for (auto& v : row)
            v = engine->exact(static_cast<int64_t>(rng.below(bound)));
    return spec;
}

GeneratorTower GeneratorTower::build(const TowerSpec& spec, EnginePtr engine) {
    if (spec.generator_count < 1 || spec.depth < 1)
        throw DomainError("tower needs r >= 1 and depth >= 1");
    if (engine->generator_count() != spec.generator_count + 1)
        throw ConfigMismatchError("tower engine must carry r+1 generators (x_1..x_r and y)");
    if (spec.depth > engine->degree_class())
        throw BudgetError("tower depth exceeds the truncation class");
    if (spec.a.size() != static_cast<std::size_t>(spec.generator_count))
        throw DomainError("tower coefficient table has the wrong shape");
    for (const auto& row : spec.a)
        if (row.size() + 1 < static_cast<std::size_t>(spec.depth))
            throw DomainError("tower coefficient table has the wrong shape");

    const int64_t p = static_cast<int64_t>(engine->prime());
    GroupElement y = engine->generator(spec.generator_count + 1);
    std::vector<std::vector<GroupElement>> x;
    x.reserve(static_cast<std::size_t>(spec.generator_count));
    for (int i = 1; i <= spec.generator_count; ++i) {
        std::vector<GroupElement> column;
        column.push_back(engine->generator(i));
        for (int j = 1; j < spec.depth; ++j) {
            const PadicInt& aij = spec.a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
            PadicInt exponent = engine->exact(p) * aij;
            const GroupElement& prev = column.back();
            column.push_back(commutator(y, prev) * prev.zp_power(exponent));
        }
        x.push_back(std::move(column));
    }
    return GeneratorTower(std::move(engine), spec, std::move(x), std::move(y));
}

const GroupElement& GeneratorTower::x(int i, int j) const {
    if (i < 1 || i > spec_.generator_count || j < 1 || j > spec_.depth)
        throw DomainError("tower index out of range");
    return x_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
}

bool GeneratorTower::rearrangement_identity_holds(int i, int j) const {
    if (j < 1 || j >= spec_.depth)
        throw DomainError("rearrangement index needs 1 <= j < depth");
    const PadicInt& aij = spec_.a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    PadicInt exponent = eng_->exact(1) - eng_->exact(static_cast<int64_t>(eng_->prime())) * aij;
    GroupElement lhs = y_ * x(i, j) * y_.inverse();
    GroupElement rhs = x(i, j + 1) * x(i, j).zp_power(exponent);
    return lhs == rhs;
}

IndependenceReport graded_independence(std::span<const GroupElement> elements) {
    IndependenceReport report;
    if (elements.empty())
        return report;
    const uint64_t p = elements.front().engine()->prime();
    for (const auto& e : elements)
        if (!(e.engine()->config() == elements.front().engine()->config()))
            throw ConfigMismatchError("graded_independence: mixed engine configurations");

    std::map<int, std::vector<std::size_t>> by_degree;
    std::vector<std::map<Word, uint64_t>> forms(elements.size());
    for (std::size_t idx = 0; idx < elements.size(); ++idx) {
        auto deg = lcs_degree(elements[idx]);
        if (!deg)
            throw DomainError("graded_independence: identity element present");
        by_degree[*deg].push_back(idx);
        forms[idx] = elements[idx].series().homogeneous_mod_p(*deg);
    }
    for (const auto& [deg, members] : by_degree)
        report.elements_by_degree[deg] = members.size();

    for (const auto& [deg, members] : by_degree) {
        std::map<Word, std::size_t> columns;
        for (std::size_t idx : members)
            for (const auto& [w, c] : forms[idx])
                columns.emplace(w, 0);
        std::size_t col = 0;
        for (auto& [w, pos] : columns)
            pos = col++;
        detail::FpMatrix mat(p, members.size(), std::max<std::size_t>(columns.size(), 1));
        for (std::size_t r = 0; r < members.size(); ++r)
            for (const auto& [w, c] : forms[members[r]])
                mat.at(r, columns.at(w)) = c;
        auto kernel = mat.left_kernel_vector();
        if (kernel) {
            DependencyWitness witness;
            witness.degree = deg;
            for (std::size_t r = 0; r < members.size(); ++r)
                if ((*kernel)[r] != 0)
                    witness.combination.emplace_back(members[r], (*kernel)[r]);
            report.independent = false;
            report.witness = std::move(witness);
            return report;
        }
    }
    return report;
}

namespace {

// A formal word in the tower elements x_{i,*}: leaves are depth indices j,
// combined by products of Z_p powers.  Conjugation by y rewrites a leaf
// through the rearrangement identity without touching the engine.
struct TowerExpr {
    int leaf = 0; // j >= 1 means leaf x_{i,leaf}
    std::vector<std::pair<std::shared_ptr<const TowerExpr>, PadicInt>> factors;

    static std::shared_ptr<const TowerExpr> make_leaf(int j) {
        auto e = std::make_shared<TowerExpr>();
        e->leaf = j;
        return e;
    }
};

std::shared_ptr<const TowerExpr> conjugate_by_y(const std::shared_ptr<const TowerExpr>& e,
                                                const GeneratorTower& tower, int i) {
    const auto& eng = tower.engine();
    if (e->leaf > 0) {
        const int j = e->leaf;
        if (j >= tower.spec().depth)
            throw BudgetError("generation check needs tower depth > k_max");
        const PadicInt& aij =
            tower.spec().a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
        PadicInt tail = eng->exact(1) - eng->exact(static_cast<int64_t>(eng->prime())) * aij;
        auto out = std::make_shared<TowerExpr>();
        out->factors.emplace_back(TowerExpr::make_leaf(j + 1), eng->exact(1));
        out->factors.emplace_back(TowerExpr::make_leaf(j), tail);
        return out;
    }
    auto out = std::make_shared<TowerExpr>();
    for (const auto& [base, exp] : e->factors)
        out->factors.emplace_back(conjugate_by_y(base, tower, i), exp);
    return out;
}

GroupElement evaluate(const std::shared_ptr<const TowerExpr>& e, const GeneratorTower& tower,
                      int i) {
    if (e->leaf > 0)
        return tower.x(i, e->leaf);
    GroupElement acc = tower.engine()->one();
    for (const auto& [base, exp] : e->factors)
        acc = acc * evaluate(base, tower, i).zp_power(exp);
    return acc;
}

} // namespace

bool generation_check(const GeneratorTower& tower, int k_max) {
    const auto& eng = tower.engine();
    if (k_max < 1)
        throw DomainError("generation check needs k_max >= 1");
    if (k_max > eng->degree_class() - 1)
        throw BudgetError("generation check needs k_max <= class - 1");
    if (k_max + 1 > tower.spec().depth)
        throw BudgetError("generation check needs tower depth >= k_max + 1");

    for (int i = 1; i <= tower.spec().generator_count; ++i) {
        auto expr = TowerExpr::make_leaf(1);
        GroupElement conjugated = tower.x(i, 1);
        for (int k = 1; k <= k_max; ++k) {
            expr = conjugate_by_y(expr, tower, i);
            conjugated = tower.y() * conjugated * tower.y().inverse();
            if (!(evaluate(expr, tower, i) == conjugated))
                return false;
        }
    }
    return true;
}

} // namespace propg
