#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <fstream>
#include <string>

#include "envbounds/errors.hpp"
#include "workbench/commands.hpp"

namespace wb = envbounds::workbench;

int main(int argc, char** argv) {
    CLI::App app{"Eigenvalue bounds for -Δ + Σ a r^q via envelope P-numbers"};
    app.require_subcommand(1);

    std::optional<std::string> cache_flag;
    app.add_option("--cache", cache_flag, "P-cache file (default: $ENVBOUNDS_PCACHE, then ./pcache.json)");

    std::string spec;
    int n = 1, l = 0;
    std::optional<int> d_opt;
    std::optional<double> tol;

    auto* solve = app.add_subcommand("solve", "Eigenvalue of a potential spec");
    solve->add_option("spec", spec, "Potential spec JSON file")->required();
    solve->add_option("--n", n, "Principal index (n >= 1)");
    solve->add_option("--l", l, "Angular momentum");
    solve->add_option("--d", d_opt, "Override the spec dimension");
    solve->add_option("--tol", tol, "Absolute eigenvalue tolerance");
    std::optional<int> max_iter;
    solve->add_option("--max-iter", max_iter, "Iteration cap for bracketing and refinement");

    double q = 2.0;
    int d = 1;
    std::string source = "auto";
    auto* pnum = app.add_subcommand("pnumber", "P-number of -Δ + r^q");
    pnum->add_option("--q", q, "Exponent")->required();
    pnum->add_option("--n", n);
    pnum->add_option("--l", l);
    pnum->add_option("--d", d);
    pnum->add_option("--source", source)->check(CLI::IsMember({"auto", "gamma-lower", "gamma-upper"}));
    pnum->add_option("--tol", tol);

    bool with_exact = false;
    auto* bounds = app.add_subcommand("bounds", "Envelope bounds for a potential spec");
    bounds->add_option("spec", spec)->required();
    bounds->add_option("--n", n);
    bounds->add_option("--l", l);
    bounds->add_option("--d", d_opt);
    bounds->add_flag("--with-exact", with_exact, "Also solve numerically");
    bounds->add_option("--tol", tol);

    int table = 1;
    std::string format = "csv";
    std::optional<std::string> out_file, diff_file;
    auto* repro = app.add_subcommand("reproduce", "Recompute a reference table and diff it");
    repro->add_option("--table", table)->required()->check(CLI::IsMember({1, 2, 3}));
    repro->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    repro->add_option("--tol", tol, "Override the per-table tolerance");
    repro->add_option("--out", out_file, "Write the table here instead of stdout");
    repro->add_option("--diff-out", diff_file, "Write the diff here instead of stderr");

    wb::ModelChoice model;
    double value = 0.0;
    auto add_model = [&](CLI::App* sub) {
        sub->add_option("--m", model.m, "Anharmonic power r^{2m}");
        sub->add_option("--alpha", model.alpha);
        sub->add_option("--beta", model.beta);
        sub->add_option("--model", model.kind)
            ->check(CLI::IsMember({"lower", "upper", "mixed", "gamma-lower", "gamma-upper"}));
        sub->add_option("--n", model.state.n);
        sub->add_option("--l", model.state.l);
        sub->add_option("--d", model.state.d);
    };
    auto* anh = app.add_subcommand("anharmonic", "Semiclassical model of -Δ + r² + λ r^{2m}");
    anh->require_subcommand(1);
    auto* anh_lambda = anh->add_subcommand("lambda", "λ for a given energy");
    add_model(anh_lambda);
    anh_lambda->add_option("--energy", value)->required();
    auto* anh_energy = anh->add_subcommand("energy", "Energy for a given λ");
    add_model(anh_energy);
    anh_energy->add_option("--lambda", value)->required();

    envbounds::FullParameterSet full;
    auto* anh_scale = anh->add_subcommand("scale", "Reduce -ωΔ + a r² + b r^{2m} to unit form");
    anh_scale->add_option("--omega", full.omega);
    anh_scale->add_option("--a", full.a);
    anh_scale->add_option("--b", full.b);
    anh_scale->add_option("--m", full.m);

    int m = 2;
    std::optional<double> k0;
    double k = 1.0;
    int osc_n = 0;
    auto* anh_bh = anh->add_subcommand("bhattacharya", "Interpolation formula with strong-coupling K0");
    anh_bh->add_option("--m", m);
    anh_bh->add_option("--lambda", value)->required();
    anh_bh->add_option("--k0", k0);
    auto* anh_dg = anh->add_subcommand("dasgupta", "Interpolation formula with constant K");
    anh_dg->add_option("--m", m);
    anh_dg->add_option("--n", osc_n, "Oscillator quantum number (0 = ground state)");
    anh_dg->add_option("--lambda", value)->required();
    anh_dg->add_option("--k", k)->required();

    std::string action;
    auto* cache_cmd = app.add_subcommand("cache", "Inspect or manage the P-cache");
    cache_cmd->add_option("action", action)->required()->check(CLI::IsMember({"show", "path", "clear", "warm"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : wb::kExitBadInput;
    }

    envbounds::PCache cache(wb::resolve_cache_path(cache_flag));
    const bool uses_cache = !anh_scale->parsed() && !anh_bh->parsed() && !anh_dg->parsed() && !solve->parsed();
    if (uses_cache) {
        const auto loaded = wb::guarded([&] {
            cache.load();
            return wb::Output{};
        });
        if (loaded.exit_code != wb::kExitOk) {
            std::cerr << loaded.err;
            return loaded.exit_code;
        }
    }

    wb::Output out;
    if (solve->parsed()) {
        out = wb::cmd_solve(spec, n, l, d_opt, tol, max_iter);
    } else if (pnum->parsed()) {
        out = wb::cmd_pnumber(q, n, l, d, source, tol, cache);
    } else if (bounds->parsed()) {
        out = wb::cmd_bounds(spec, n, l, d_opt, with_exact, tol, cache);
    } else if (repro->parsed()) {
        std::optional<std::filesystem::path> path;
        if (out_file) path = *out_file;
        out = wb::cmd_reproduce(table, format, tol, path, cache);
        if (diff_file) {
            out = wb::guarded([&] {
                std::ofstream f(*diff_file, std::ios::trunc);
                if (!f || !(f << out.err)) throw envbounds::Error("reproduce: cannot write " + *diff_file);
                out.err.clear();
                return out;
            });
        }
    } else if (anh_lambda->parsed()) {
        out = wb::cmd_anharmonic_lambda(model, value, cache);
    } else if (anh_energy->parsed()) {
        out = wb::cmd_anharmonic_energy(model, value, cache);
    } else if (anh_scale->parsed()) {
        out = wb::cmd_anharmonic_scale(full);
    } else if (anh_bh->parsed()) {
        out = wb::cmd_anharmonic_bhattacharya(m, value, k0);
    } else if (anh_dg->parsed()) {
        out = wb::cmd_anharmonic_dasgupta(m, osc_n, value, k);
    } else if (cache_cmd->parsed()) {
        out = wb::cmd_cache(action, cache);
    }

    if (uses_cache && out.exit_code != wb::kExitBadInput && out.exit_code != wb::kExitNoConvergence) {
        const auto saved = wb::guarded([&] {
            cache.save();
            return wb::Output{};
        });
        out.err += saved.err;
        if (saved.exit_code != wb::kExitOk && out.exit_code == wb::kExitOk) out.exit_code = saved.exit_code;
    }

    std::cout << out.out;
    std::cerr << out.err;
    return out.exit_code;
}
