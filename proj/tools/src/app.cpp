#include "app.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <memory>
#include <ostream>

#include <CLI11.hpp>

#include "propg/errors.hpp"

#include "commands.hpp"

namespace propg_cli {

namespace {

struct OutputOptions {
    std::string format = "table";
    std::string out_path;
};

void add_output_options(CLI::App* cmd, const std::shared_ptr<OutputOptions>& opts) {
    cmd->add_option("--format", opts->format, "Output format: table, json, or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    cmd->add_option("--out", opts->out_path, "Write the report to a file instead of stdout");
}

void emit(const Report& report, const OutputOptions& opts, std::ostream& out) {
    auto format = parse_format(opts.format);
    if (!format)
        throw propg::DomainError("unknown format " + opts.format);
    std::string rendered = report.render(*format);
    if (opts.out_path.empty()) {
        out << rendered;
        return;
    }
    std::ofstream file(opts.out_path, std::ios::trunc | std::ios::binary);
    if (!file)
        throw propg::Error("cannot open output file " + opts.out_path);
    file << rendered;
    if (!file)
        throw propg::Error("short write to output file " + opts.out_path);
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"pro-p group, free graded Lie algebra, and Bernoulli valuation experiments"};
    app.require_subcommand(1);

    // irregular
    {
        auto opts = std::make_shared<OutputOptions>();
        auto pmax = std::make_shared<uint64_t>(100);
        auto* cmd = app.add_subcommand("irregular", "Scan primes for irregular Bernoulli indices");
        cmd->add_option("--pmax", *pmax, "Largest prime to scan")->required();
        add_output_options(cmd, opts);
        cmd->callback([=, &out] { emit(cmd_irregular(*pmax), *opts, out); });
    }
    // bounds
    {
        auto opts = std::make_shared<OutputOptions>();
        auto p = std::make_shared<uint64_t>(5);
        auto mmax = std::make_shared<int64_t>(23);
        auto vandiver = std::make_shared<bool>(true);
        auto* cmd = app.add_subcommand("bounds", "Valuation bound table for odd degrees");
        cmd->add_option("--p", *p, "Odd prime")->required();
        cmd->add_option("--mmax", *mmax, "Largest odd degree");
        cmd->add_flag("--vandiver,!--no-vandiver", *vandiver, "Record the assumed flag");
        add_output_options(cmd, opts);
        cmd->callback([=, &out] { emit(cmd_bounds(*p, *mmax, *vandiver), *opts, out); });
    }
    // lie-dims
    {
        auto opts = std::make_shared<OutputOptions>();
        auto max_degree = std::make_shared<int>(12);
        auto* cmd = app.add_subcommand("lie-dims", "Graded ranks of the free Lie algebra");
        cmd->add_option("--max-degree", *max_degree, "Largest degree");
        add_output_options(cmd, opts);
        cmd->callback([=, &out] { emit(cmd_lie_dims(*max_degree), *opts, out); });
    }
    // lie-basis
    {
        auto opts = std::make_shared<OutputOptions>();
        auto max_degree = std::make_shared<int>(12);
        auto* cmd = app.add_subcommand("lie-basis", "Lyndon basis words per degree");
        cmd->add_option("--max-degree", *max_degree, "Largest degree");
        add_output_options(cmd, opts);
        cmd->callback([=, &out] { emit(cmd_lie_basis(*max_degree), *opts, out); });
    }
    // rank12
    {
        auto opts = std::make_shared<OutputOptions>();
        auto p = std::make_shared<uint64_t>(691);
        auto* cmd = app.add_subcommand("rank12", "Rank of the two degree-12 commutators");
        cmd->add_option("--p", *p, "Odd prime for the mod-p rank");
        add_output_options(cmd, opts);
        cmd->callback([=, &out] { emit(cmd_rank12(*p), *opts, out); });
    }
    // epsilon-demo
    {
        auto opts = std::make_shared<OutputOptions>();
        auto params = std::make_shared<EpsilonDemoParams>();
        auto* cmd = app.add_subcommand("epsilon-demo", "Stabilized idempotent on a random element");
        cmd->add_option("--p", params->p, "Odd prime");
        cmd->add_option("--N", params->precision, "Coefficient precision");
        cmd->add_option("--c", params->degree_class, "Truncation class");
        cmd->add_option("--r", params->generators, "Generator count");
        cmd->add_option("--m", params->m, "Eigenspace index");
        cmd->add_option("--twists", params->twists, "Per-generator twist weights")->delimiter(',');
        cmd->add_option("--seed", params->seed, "Random seed");
        add_output_options(cmd, opts);
        cmd->callback([=, &out] { emit(cmd_epsilon_demo(*params), *opts, out); });
    }
    // sigma-tower
    {
        auto opts = std::make_shared<OutputOptions>();
        auto params = std::make_shared<SigmaTowerParams>();
        auto* cmd = app.add_subcommand("sigma-tower", "Recursive sigma stages over one generator");
        cmd->add_option("--p", params->p, "Odd prime");
        cmd->add_option("--N", params->precision, "Coefficient precision");
        cmd->add_option("--c", params->degree_class, "Truncation class");
        cmd->add_option("--k", params->k, "Seed index (odd, 3 <= k <= p)");
        cmd->add_option("--j", params->steps, "Number of tower steps");
        add_output_options(cmd, opts);
        cmd->callback([=, &out] { emit(cmd_sigma_tower(*params), *opts, out); });
    }
    // sigma-valuation
    {
        auto opts = std::make_shared<OutputOptions>();
        auto p = std::make_shared<uint64_t>(5);
        auto k = std::make_shared<int64_t>(3);
        auto j = std::make_shared<int64_t>(2);
        auto v0 = std::make_shared<int64_t>(0);
        auto n = std::make_shared<int>(-1);
        auto unit = std::make_shared<uint64_t>(1);
        auto* cmd = app.add_subcommand("sigma-valuation",
                                       "Closed-form vs simulated valuation of the sigma ladder");
        cmd->add_option("--p", *p, "Odd prime")->required();
        cmd->add_option("--k", *k, "Base index (odd, 3 <= k <= p)")->required();
        cmd->add_option("--j", *j, "Ladder steps")->required();
        cmd->add_option("--v0", *v0, "Base valuation");
        cmd->add_option("--N", *n, "Precision (default: computed from the ladder)");
        cmd->add_option("--unit", *unit, "Unit scaling of the simulated base");
        add_output_options(cmd, opts);
        cmd->callback([=, &out] {
            std::optional<int> prec;
            if (*n >= 0)
                prec = *n;
            emit(cmd_sigma_valuation(*p, *k, *j, *v0, prec, *unit), *opts, out);
        });
    }
    // freegp
    {
        auto opts = std::make_shared<OutputOptions>();
        auto params = std::make_shared<FreegpParams>();
        auto* cmd = app.add_subcommand("freegp", "Derived generator tower experiment");
        cmd->add_option("--p", params->p, "Odd prime");
        cmd->add_option("--N", params->precision, "Coefficient precision");
        cmd->add_option("--c", params->degree_class, "Truncation class");
        cmd->add_option("--r", params->generators, "Number of x generators");
        cmd->add_option("--J", params->depth, "Tower depth");
        cmd->add_option("--seed", params->seed, "Random seed for the coefficients");
        cmd->add_flag("--zero-a", params->zero_coeffs, "Use the zero coefficient table");
        add_output_options(cmd, opts);
        cmd->callback([=, &out] { emit(cmd_freegp(*params), *opts, out); });
    }
    // ihgen
    {
        auto opts = std::make_shared<OutputOptions>();
        auto p = std::make_shared<uint64_t>(691);
        auto m = std::make_shared<int64_t>(12);
        auto vandiver = std::make_shared<bool>(true);
        auto* cmd = app.add_subcommand("ihgen", "Divisibility predicate for a filtration degree");
        cmd->add_option("--p", *p, "Odd prime")->required();
        cmd->add_option("--m", *m, "Degree")->required();
        cmd->add_flag("--vandiver,!--no-vandiver", *vandiver, "Record the assumed flag");
        add_output_options(cmd, opts);
        cmd->callback([=, &out] { emit(cmd_ihgen(*p, *m, *vandiver), *opts, out); });
    }
    // cache
    {
        auto opts = std::make_shared<OutputOptions>();
        auto action = std::make_shared<std::string>("inspect");
        auto* cmd = app.add_subcommand("cache", "Inspect or clear the result cache");
        cmd->add_option("action", *action, "inspect or clear")
            ->check(CLI::IsMember({"inspect", "clear"}));
        add_output_options(cmd, opts);
        cmd->callback([=, &out] { emit(cmd_cache(*action), *opts, out); });
    }

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
        return kOk;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const propg::BudgetError& e) {
        err << "budget error: " << e.what() << '\n';
        return kBudget;
    } catch (const propg::PrecisionError& e) {
        err << "precision error: " << e.what() << '\n';
        return kPrecision;
    } catch (const propg::ConfigMismatchError& e) {
        err << "config error: " << e.what() << '\n';
        return kDomain;
    } catch (const propg::DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kDomain;
    } catch (const propg::InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    } catch (const std::ios_base::failure& e) {
        err << "i/o error: " << e.what() << '\n';
        return kIo;
    } catch (const propg::Error& e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
}

} // namespace propg_cli
