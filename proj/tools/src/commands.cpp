#include "commands.hpp"

#include <algorithm>

#include "propg/bernoulli_iwasawa.hpp"
#include "propg/freelie.hpp"
#include "propg/freeness.hpp"
#include "propg/idempotent.hpp"

#include "cache.hpp"

namespace propg_cli {

namespace {

std::string s64(int64_t v) { return std::to_string(v); }
std::string u64(uint64_t v) { return std::to_string(v); }
std::string fmt_bool(bool b) { return b ? "true" : "false"; }
std::string fmt_degree(const std::optional<int>& d) { return d ? std::to_string(*d) : "inf"; }

std::string twists_str(const std::vector<int64_t>& t) {
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(t[i]);
    }
    return s;
}

propg::BernoulliTable cached_bernoulli(uint64_t p) {
    const std::string name = "bernoulli-p" + u64(p);
    if (auto j = Cache::load(name)) {
        try {
            if (j->contains("p") && (*j)["p"].is_number_unsigned() && (*j)["p"] == p &&
                j->contains("residues") && (*j)["residues"].is_array()) {
                std::vector<uint64_t> residues;
                residues.reserve((*j)["residues"].size());
                for (const auto& v : (*j)["residues"])
                    residues.push_back(v.get<uint64_t>());
                return propg::BernoulliTable::from_residues(p, std::move(residues));
            }
        } catch (const propg::Error&) {
            // malformed entry: fall through and recompute
        }
    }
    propg::BernoulliTable table = propg::BernoulliTable::compute(p);
    nlohmann::json j;
    j["schema"] = Cache::kSchema;
    j["p"] = p;
    j["residues"] = table.residues();
    Cache::store(name, j);
    return table;
}

} // namespace

Report cmd_irregular(uint64_t pmax) {
    if (pmax < 3)
        throw propg::DomainError("irregular scan needs --pmax >= 3");
    Report r;
    r.command = "irregular";
    r.params["pmax"] = u64(pmax);
    r.columns = {"p", "m"};
    uint64_t primes = 0, irregular = 0;
    for (uint64_t p = 3; p <= pmax; p += 2) {
        if (!propg::is_odd_prime(p))
            continue;
        ++primes;
        auto pairs = propg::irregular_pairs(cached_bernoulli(p));
        if (!pairs.empty())
            ++irregular;
        for (const auto& pair : pairs)
            r.rows.push_back({u64(pair.p), s64(pair.m)});
    }
    r.extra["primes_scanned"] = u64(primes);
    r.extra["irregular_primes"] = u64(irregular);
    return r;
}

Report cmd_bounds(uint64_t p, int64_t mmax, bool vandiver) {
    Report r;
    r.command = "bounds";
    r.params["p"] = u64(p);
    r.params["mmax"] = s64(mmax);
    r.params["vandiver"] = fmt_bool(vandiver);
    r.columns = {"p", "m", "k", "bound", "vandiver_assumed"};
    for (int64_t m = 3; m <= mmax; m += 2) {
        auto row = propg::nm_bound(p, m, vandiver);
        r.rows.push_back({u64(row.p), s64(row.m), s64(row.k), s64(row.bound),
                          fmt_bool(row.vandiver_assumed)});
    }
    return r;
}

Report cmd_lie_dims(int max_degree) {
    Report r;
    r.command = "lie-dims";
    r.params["max_degree"] = s64(max_degree);
    r.columns = {"degree", "dimension", "lyndon_words"};
    auto basis = propg::lyndon_basis(max_degree);
    for (int d = 3; d <= max_degree; ++d)
        r.rows.push_back({s64(d), s64(propg::graded_dimension(d)),
                          u64(basis[static_cast<std::size_t>(d)].size())});
    return r;
}

Report cmd_lie_basis(int max_degree) {
    Report r;
    r.command = "lie-basis";
    r.params["max_degree"] = s64(max_degree);
    r.columns = {"degree", "word"};
    auto basis = propg::lyndon_basis(max_degree);
    nlohmann::json degrees = nlohmann::json::object();
    for (int d = 3; d <= max_degree; ++d) {
        nlohmann::json words = nlohmann::json::array();
        for (const auto& w : basis[static_cast<std::size_t>(d)]) {
            r.rows.push_back({s64(d), w.str()});
            words.push_back(w.str());
        }
        if (!words.empty())
            degrees[std::to_string(d)] = words;
    }
    nlohmann::json j;
    j["schema"] = Cache::kSchema;
    j["D"] = max_degree;
    j["degrees"] = degrees;
    Cache::store("lyndon-D" + s64(max_degree), j);
    return r;
}

Report cmd_rank12(uint64_t p) {
    Report r;
    r.command = "rank12";
    r.params["p"] = u64(p);
    auto b1 = propg::bracket(propg::LieElement::generator(3), propg::LieElement::generator(9));
    auto b2 = propg::bracket(propg::LieElement::generator(5), propg::LieElement::generator(7));
    r.columns = {"bracket", "expansion"};
    r.rows.push_back({"[s3,s9]", b1.str()});
    r.rows.push_back({"[s5,s7]", b2.str()});
    std::vector<propg::LieElement> elements{b1, b2};
    auto rank = propg::rank_of(elements, 12, p);
    r.extra["degree"] = "12";
    r.extra["rank_over_q"] = u64(rank.over_q);
    r.extra["rank_mod_p"] = u64(rank.mod_p);
    return r;
}

Report cmd_epsilon_demo(const EpsilonDemoParams& params) {
    Report r;
    r.command = "epsilon-demo";
    propg::EngineConfig cfg;
    cfg.prime = params.p;
    cfg.precision = params.precision;
    cfg.degree_class = params.degree_class;
    cfg.generator_count = params.generators;
    cfg.delta_twists = params.twists;
    cfg.gamma_twists = params.twists;
    if (cfg.delta_twists.empty()) {
        for (int k = 1; k <= params.generators; ++k) {
            cfg.delta_twists.push_back(k);
            cfg.gamma_twists.push_back(k);
        }
    }
    r.params["p"] = u64(params.p);
    r.params["N"] = s64(params.precision);
    r.params["c"] = s64(params.degree_class);
    r.params["r"] = s64(params.generators);
    r.params["m"] = s64(params.m);
    r.params["twists"] = twists_str(cfg.delta_twists);
    r.params["seed"] = u64(params.seed);

    auto engine = propg::Engine::create(cfg);
    propg::DeltaGammaAction action(engine);
    propg::RandomSource rng(params.seed);
    auto g = propg::random_group_element(engine, rng);
    auto trace = propg::stabilize_trace(g, params.m, action);

    r.columns = {"i", "c_i_lcs_degree"};
    for (std::size_t i = 1; i < trace.iterates.size(); ++i) {
        auto diff = trace.iterates[i] * trace.iterates[i - 1].inverse();
        r.rows.push_back({u64(i), fmt_degree(propg::lcs_degree(diff))});
    }
    const auto& h = trace.iterates.back();
    bool equivariant =
        action.delta_conjugate(h, 1) == h.zp_power(action.chi_delta_power(params.m));
    r.extra["iterations"] = s64(trace.iterations);
    r.extra["equivariance"] = fmt_bool(equivariant);
    r.extra["input_lcs_degree"] = fmt_degree(propg::lcs_degree(g));
    return r;
}

Report cmd_sigma_tower(const SigmaTowerParams& params) {
    Report r;
    r.command = "sigma-tower";
    r.params["p"] = u64(params.p);
    r.params["N"] = s64(params.precision);
    r.params["c"] = s64(params.degree_class);
    r.params["k"] = s64(params.k);
    r.params["j"] = s64(params.steps);

    propg::EngineConfig cfg;
    cfg.prime = params.p;
    cfg.precision = params.precision;
    cfg.degree_class = params.degree_class;
    cfg.generator_count = 1;
    cfg.delta_twists = {params.k};
    cfg.gamma_twists = {params.k};
    auto engine = propg::Engine::create(cfg);
    propg::DeltaGammaAction action(engine);
    auto stages = propg::sigma_tower(engine->generator(1), params.k, params.steps, action);

    r.columns = {"stage", "index", "stabilize_iterations", "abelian_valuation", "lcs_degree"};
    for (std::size_t s = 0; s < stages.size(); ++s) {
        auto coeff = stages[s].element.series().coefficient(propg::Word::single(1));
        auto val = coeff.reduced(params.precision).valuation();
        r.rows.push_back({u64(s), s64(stages[s].index), s64(stages[s].stabilize_iterations),
                          val.str(), fmt_degree(propg::lcs_degree(stages[s].element))});
    }
    return r;
}

Report cmd_sigma_valuation(uint64_t p, int64_t k, int64_t j, int64_t v0,
                           std::optional<int> precision, uint64_t unit) {
    Report r;
    r.command = "sigma-valuation";
    int n = precision.value_or(
        static_cast<int>(propg::vp_factorial(p, static_cast<uint64_t>(j < 0 ? 0 : j) * p)) +
        static_cast<int>(v0 < 0 ? 0 : v0) + 5);
    r.params["p"] = u64(p);
    r.params["k"] = s64(k);
    r.params["j"] = s64(j);
    r.params["v0"] = s64(v0);
    r.params["N"] = s64(n);
    r.params["unit"] = u64(unit);

    propg::KappaModel model{p, n, k, v0, unit};
    auto result = propg::sigma_valuation(model, j);
    r.columns = {"closed_form", "simulated", "match"};
    r.rows.push_back({u64(result.closed_form), u64(result.simulated),
                      fmt_bool(result.closed_form == result.simulated)});
    return r;
}

Report cmd_freegp(const FreegpParams& params) {
    Report r;
    r.command = "freegp";
    r.params["p"] = u64(params.p);
    r.params["N"] = s64(params.precision);
    r.params["c"] = s64(params.degree_class);
    r.params["r"] = s64(params.generators);
    r.params["J"] = s64(params.depth);
    r.params["seed"] = u64(params.seed);
    r.params["zero_coeffs"] = fmt_bool(params.zero_coeffs);

    propg::EngineConfig cfg;
    cfg.prime = params.p;
    cfg.precision = params.precision;
    cfg.degree_class = params.degree_class;
    cfg.generator_count = params.generators + 1; // x_1..x_r and y
    auto engine = propg::Engine::create(cfg);

    propg::RandomSource rng(params.seed);
    propg::TowerSpec spec =
        params.zero_coeffs ? propg::TowerSpec::zeros(engine, params.generators, params.depth)
                           : propg::TowerSpec::random(engine, params.generators, params.depth, rng);
    auto tower = propg::GeneratorTower::build(spec, engine);

    r.columns = {"i", "j", "lcs_degree", "rearrangement_ok"};
    std::vector<propg::GroupElement> elements;
    for (int i = 1; i <= params.generators; ++i)
        for (int j = 1; j <= params.depth; ++j) {
            const auto& x = tower.x(i, j);
            elements.push_back(x);
            std::string rearr = j < params.depth
                                    ? fmt_bool(tower.rearrangement_identity_holds(i, j))
                                    : "-";
            r.rows.push_back({s64(i), s64(j), fmt_degree(propg::lcs_degree(x)), rearr});
        }

    auto independence = propg::graded_independence(elements);
    const int k_max = std::min({2, params.depth - 1, params.degree_class - 1});
    r.extra["independent"] = fmt_bool(independence.independent);
    r.extra["generation_check_k"] = s64(k_max);
    r.extra["generation_check"] =
        k_max >= 1 ? fmt_bool(propg::generation_check(tower, k_max)) : "-";
    Json a = Json::object();
    for (int i = 1; i <= params.generators; ++i) {
        Json row = Json::array();
        for (int j = 1; j < params.depth; ++j)
            row.push_back(spec.a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)].str());
        a[std::to_string(i)] = row;
    }
    r.extra["a"] = a;
    return r;
}

Report cmd_ihgen(uint64_t p, int64_t m, bool vandiver) {
    Report r;
    r.command = "ihgen";
    r.params["p"] = u64(p);
    r.params["m"] = s64(m);
    r.params["vandiver"] = fmt_bool(vandiver);
    auto rec = propg::ihgen_condition(p, m, vandiver);
    r.columns = {"p", "m", "branch", "bernoulli_index", "applies", "vandiver_assumed", "note"};
    r.rows.push_back({u64(rec.p), s64(rec.m), rec.even_case ? "even" : "odd",
                      s64(rec.bernoulli_index), fmt_bool(rec.applies),
                      fmt_bool(rec.vandiver_assumed), rec.note});
    return r;
}

Report cmd_cache(const std::string& action) {
    Report r;
    r.command = "cache";
    r.params["action"] = action;
    if (action == "inspect") {
        r.columns = {"entry", "bytes", "valid"};
        for (const auto& e : Cache::entries())
            r.rows.push_back({e.name, u64(e.bytes), fmt_bool(e.valid)});
        r.extra["directory"] = Cache::directory().string();
    } else if (action == "clear") {
        r.extra["removed"] = u64(Cache::clear());
        r.extra["directory"] = Cache::directory().string();
    } else {
        throw propg::DomainError("cache action must be 'inspect' or 'clear'");
    }
    return r;
}

} // namespace propg_cli
