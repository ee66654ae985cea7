#pragma once

#include <cstdint>
#include <vector>

#include "propg/ncseries.hpp"

namespace propg {

// The delta/gamma conjugation actions of the engine: delta acts by the
// substitution generator_k -> (1+X_k)^(omega^{t_k}), gamma by
// generator_k -> (1+X_k)^((1+p)^{t_k}).  Images for all delta powers are
// precomputed; the action object is immutable afterwards.
class DeltaGammaAction {
public:
    explicit DeltaGammaAction(EnginePtr engine);

    const EnginePtr& engine() const { return eng_; }

    // delta^i g delta^-i; i is reduced mod p-1
    GroupElement delta_conjugate(const GroupElement& g, int64_t i = 1) const;
    // gamma g gamma^-1
    GroupElement gamma_conjugate(const GroupElement& g) const;

    PadicInt chi_delta_power(int64_t e) const { return eng_->chi_delta_power(e); }
    PadicInt chi_gamma_power(int64_t e) const { return eng_->chi_gamma_power(e); }

private:
    EnginePtr eng_;
    std::vector<std::vector<GroupElement>> delta_images_; // index i-1 for i in 1..p-2
    std::vector<GroupElement> gamma_images_;
};

// The ordered product
//   (g . delta g^{chi(delta)^-m} delta^-1 ... delta^{p-2} g^{...} delta^{-p+2})^{1/(p-1)}
// with factors in the printed left-to-right order i = 0..p-2.  Depends on
// m only mod p-1.
GroupElement epsilon(const GroupElement& g, int64_t m, const DeltaGammaAction& action);

struct StabilizeTrace {
    std::vector<GroupElement> iterates; // h_0 = g up to the fixed point
    int iterations = 0;                 // applications that changed the value
};

// Iterate epsilon until two successive values agree in truncation.  The
// class-c model reaches a fixed point within c changing applications;
// anything more aborts with InternalError.
StabilizeTrace stabilize_trace(const GroupElement& g, int64_t m, const DeltaGammaAction& action);

struct StabilizeResult {
    GroupElement element;
    int iterations;
};

StabilizeResult stabilize(const GroupElement& g, int64_t m, const DeltaGammaAction& action);

// gamma g gamma^-1 . g^{-chi(gamma)^m}
GroupElement recursion_step(const GroupElement& g, int64_t m, const DeltaGammaAction& action);

struct TowerStage {
    int64_t index; // k + stage*(p-1)
    GroupElement element;
    int stabilize_iterations;
};

// Stages sigma_k, sigma_{k+p-1}, ..., sigma_{k+steps(p-1)}; each new stage
// is stabilize(recursion_step(previous)).  Each stage's recursion uses the
// exponent of the index being produced, which in the diagonal twist model
// reproduces the valuation ladder of the kappa bookkeeping.  With
// stabilize_each = false the stages are the raw recursion values.
std::vector<TowerStage> sigma_tower(const GroupElement& seed, int64_t k, int steps,
                                    const DeltaGammaAction& action, bool stabilize_each = true);

} // namespace propg
