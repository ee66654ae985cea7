#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "report.hpp"

namespace propg_cli {

Report cmd_irregular(uint64_t pmax);
Report cmd_bounds(uint64_t p, int64_t mmax, bool vandiver);
Report cmd_lie_dims(int max_degree);
Report cmd_lie_basis(int max_degree);
Report cmd_rank12(uint64_t p);

struct EpsilonDemoParams {
    uint64_t p = 5;
    int precision = 6;
    int degree_class = 3;
    int generators = 2;
    int64_t m = 3;
    std::vector<int64_t> twists; // empty: generator k gets twist k
    uint64_t seed = 0;
};
Report cmd_epsilon_demo(const EpsilonDemoParams& params);

struct SigmaTowerParams {
    uint64_t p = 5;
    int precision = 10;
    int degree_class = 2;
    int64_t k = 3;
    int steps = 2;
};
Report cmd_sigma_tower(const SigmaTowerParams& params);

Report cmd_sigma_valuation(uint64_t p, int64_t k, int64_t j, int64_t v0,
                           std::optional<int> precision, uint64_t unit);

struct FreegpParams {
    uint64_t p = 3;
    int precision = 6;
    int degree_class = 4;
    int generators = 1; // r; the engine carries r+1 with y last
    int depth = 3;      // J
    uint64_t seed = 0;
    bool zero_coeffs = false;
};
Report cmd_freegp(const FreegpParams& params);

Report cmd_ihgen(uint64_t p, int64_t m, bool vandiver);
Report cmd_cache(const std::string& action); // "inspect" or "clear"

} // namespace propg_cli
