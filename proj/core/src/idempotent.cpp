#include "propg/idempotent.hpp"

namespace propg {

DeltaGammaAction::DeltaGammaAction(EnginePtr engine) : eng_(std::move(engine)) {
    if (!eng_)
        throw DomainError("DeltaGammaAction requires an engine");
    const int r = eng_->generator_count();
    const int64_t order = static_cast<int64_t>(eng_->prime()) - 1;
    delta_images_.reserve(static_cast<std::size_t>(order > 1 ? order - 1 : 0));
    for (int64_t i = 1; i <= order - 1; ++i) {
        std::vector<GroupElement> images;
        images.reserve(static_cast<std::size_t>(r));
        for (int k = 1; k <= r; ++k)
            images.push_back(eng_->generator(k).zp_power(eng_->delta_twist_unit(k, i)));
        delta_images_.push_back(std::move(images));
    }
    gamma_images_.reserve(static_cast<std::size_t>(r));
    for (int k = 1; k <= r; ++k)
        gamma_images_.push_back(eng_->generator(k).zp_power(eng_->gamma_twist_unit(k)));
}

GroupElement DeltaGammaAction::delta_conjugate(const GroupElement& g, int64_t i) const {
    const int64_t order = static_cast<int64_t>(eng_->prime()) - 1;
    int64_t r = i % order;
    if (r < 0)
        r += order;
    if (r == 0)
        return g;
    return substitute(g, delta_images_[static_cast<std::size_t>(r - 1)]);
}

GroupElement DeltaGammaAction::gamma_conjugate(const GroupElement& g) const {
    return substitute(g, gamma_images_);
}

GroupElement epsilon(const GroupElement& g, int64_t m, const DeltaGammaAction& action) {
    const auto& eng = action.engine();
    if (!(g.engine()->config() == eng->config()))
        throw ConfigMismatchError("element and action use different engines");
    const int64_t p = static_cast<int64_t>(eng->prime());
    GroupElement acc = g; // the i = 0 factor
    for (int64_t i = 1; i <= p - 2; ++i) {
        PadicInt e = action.chi_delta_power(-i * m);
        acc = acc * action.delta_conjugate(g.zp_power(e), i);
    }
    PadicInt root = eng->exact(p - 1).unit_inverse();
    return acc.zp_power(root);
}

StabilizeTrace stabilize_trace(const GroupElement& g, int64_t m, const DeltaGammaAction& action) {
    StabilizeTrace out;
    out.iterates.push_back(g);
    GroupElement current = g;
    const int limit = action.engine()->degree_class();
    for (int count = 0; count <= limit; ++count) {
        GroupElement next = epsilon(current, m, action);
        if (next == current) {
            out.iterations = count;
            return out;
        }
        out.iterates.push_back(next);
        current = next;
    }
    // iterate differences sink one degree per application, so a class-c
    // truncation must reach a fixed point by now; abort loudly
    throw InternalError("epsilon iteration did not stabilize within class+1 applications");
}

StabilizeResult stabilize(const GroupElement& g, int64_t m, const DeltaGammaAction& action) {
    StabilizeTrace t = stabilize_trace(g, m, action);
    return {t.iterates.back(), t.iterations};
}

GroupElement recursion_step(const GroupElement& g, int64_t m, const DeltaGammaAction& action) {
    PadicInt e = -action.chi_gamma_power(m);
    return action.gamma_conjugate(g) * g.zp_power(e);
}

std::vector<TowerStage> sigma_tower(const GroupElement& seed, int64_t k, int steps,
                                    const DeltaGammaAction& action, bool stabilize_each) {
    if (steps < 0)
        throw DomainError("sigma_tower needs steps >= 0");
    const int64_t p = static_cast<int64_t>(action.engine()->prime());
    std::vector<TowerStage> stages;
    stages.push_back({k, seed, 0});
    GroupElement current = seed;
    for (int s = 1; s <= steps; ++s) {
        const int64_t index = k + static_cast<int64_t>(s) * (p - 1);
        GroupElement raw = recursion_step(current, index, action);
        if (stabilize_each) {
            StabilizeResult r = stabilize(raw, index, action);
            current = r.element;
            stages.push_back({index, current, r.iterations});
        } else {
            current = raw;
            stages.push_back({index, current, 0});
        }
    }
    return stages;
}

} // namespace propg
