#include "commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

using namespace symdom::cli;

namespace {

void write_output(const std::string& path, const std::string& text)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw UsageError("cannot open output file " + path);
    out << text;
}

std::string csv_text(const Report& r)
{
    std::string s;
    for (const auto& row : r.csv) {
        for (std::size_t i = 0; i < row.size(); ++i)
            s += (i ? "," : "") + row[i];
        s += "\n";
    }
    return s;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Reproducing kernels and intertwiners on the unit ball"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value file mirroring the flags");

    RunConfig cfg;
    std::uint64_t seed = 0;
    app.add_option("--d", cfg.d, "dimension");
    app.add_option("--nu", cfg.nu, "weight parameter");
    app.add_option("--n", cfg.n, "fibre degree");
    app.add_option("--lambda", cfg.lambda, "little-space degree");
    app.add_option("--c", cfg.c, "weights c_0..c_n, comma list");
    app.add_option("--b", cfg.b, "bound values, comma list");
    app.add_option("--samples", cfg.samples, "sample count");
    auto* seed_opt = app.add_option("--seed", seed, "64-bit seed");
    app.add_option("--radius", cfg.radius, "sampling radius < 1");
    app.add_option("--tol", cfg.tol, "check tolerance");
    app.add_option("--tol-psd", cfg.tol_psd, "PSD tolerance");
    app.add_option("--cap", cfg.cap, "truncation cap");
    app.add_option("--N", cfg.N, "series length");
    app.add_option("--variant", cfg.variant, "kappa variant: theorem, proof, both");
    app.add_option("--out", cfg.out, "output path (default stdout)");
    app.add_option("--format", cfg.format, "json or csv");
    app.add_option("--space", cfg.space, "little or big");
    app.add_option("--z", cfg.z, "point, comma list of complex entries");
    app.add_option("--w", cfg.w);
    app.add_option("--zeta", cfg.zeta);
    app.add_option("--omega", cfg.omega);
    app.add_option("--nu-min", cfg.nu_min);
    app.add_option("--nu-max", cfg.nu_max);
    app.add_option("--step", cfg.step);
    app.add_option("--nu-star", cfg.nu_star);
    app.add_option("--family", cfg.family, "full or identity-only");
    app.add_option("--beta", cfg.beta, "fibre metric: fock, u-invariant, or comma list");
    app.add_flag("--unconstrained", cfg.unconstrained, "probe all matrices, not only degree scalars");
    app.add_flag("--expect-irreducible", cfg.expect_irreducible);
    app.add_flag("--quick", cfg.quick);

    using Handler = Report (*)(const RunConfig&, const std::string&);
    const std::vector<std::tuple<std::string, Handler, std::vector<std::string>>> groups{
        {"eval", cmd_eval, {"little-kernel", "big-kernel", "kappa", "fk", "intertwiner"}},
        {"check", cmd_check, {"covariance", "reproducing", "factorization", "intertwiner", "intertwining", "kappa", "all"}},
        {"scan", cmd_scan, {"wallach", "bounded", "weights"}},
        {"probe", cmd_probe, {"commutant"}},
    };
    Handler handler = nullptr;
    std::string target;
    for (const auto& [name, h, targets] : groups) {
        auto* group = app.add_subcommand(name);
        group->require_subcommand(1);
        for (const auto& t : targets) {
            auto* sub = group->add_subcommand(t);
            sub->callback([&, h = h, name = name, t] {
                handler = h;
                target = t;
                cfg.command = name + " " + t;
            });
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const auto t0 = std::chrono::steady_clock::now();
    Report report;
    try {
        if (seed_opt->count() > 0)
            cfg.seed = seed;
        cfg.validate();
        if (cfg.format == "csv" && cfg.command.rfind("scan", 0) != 0)
            throw UsageError("--format csv applies to scan commands");
        report = handler(cfg, target);
        report.config = cfg.to_json();
    } catch (const UsageError& e) {
        std::cerr << "symdom: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "symdom: invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "symdom: outside the domain: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "symdom: " << e.what() << "\n";
        return 1;
    }
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    const bool ok = symdom::all_pass(report.checks);
    try {
        if (cfg.format == "csv") {
            write_output(cfg.out, csv_text(report));
        } else {
            nlohmann::json j;
            j["config"] = report.config;
            j["checks"] = report.checks;
            j["values"] = report.values;
            j["pass"] = ok;
            j["wall_time"] = wall;
            write_output(cfg.out, j.dump(2) + "\n");
        }
    } catch (const UsageError& e) {
        std::cerr << "symdom: " << e.what() << "\n";
        return 2;
    }
    for (const auto& c : report.checks)
        std::cerr << (c.pass ? "PASS " : "FAIL ") << c.name << "  max_error=" << c.max_error << " tol=" << c.tol
                  << "\n";
    return ok ? 0 : 1;
}
