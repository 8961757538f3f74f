#include "commands.hpp"

#include <cstdlib>
#include <fstream>

#include "envbounds/errors.hpp"
#include "format.hpp"
#include "reproduce.hpp"
#include "spec_file.hpp"

namespace envbounds::workbench {

using nlohmann::json;

std::filesystem::path resolve_cache_path(const std::optional<std::string>& flag) {
    if (flag && !flag->empty()) return *flag;
    if (const char* env = std::getenv(kCacheEnvVar); env && *env) return env;
    return kDefaultCacheFile;
}

Output guarded(const std::function<Output()>& fn) {
    try {
        return fn();
    } catch (const ConvergenceError& e) {
        return {kExitNoConvergence, "", std::string("error: ") + e.what() + "\n"};
    } catch (const Error& e) {
        return {kExitBadInput, "", std::string("error: ") + e.what() + "\n"};
    } catch (const std::filesystem::filesystem_error& e) {
        return {kExitBadInput, "", std::string("error: ") + e.what() + "\n"};
    }
}

json state_json(const StateIndex& s) { return {{"n", s.n}, {"l", s.l}, {"d", s.d}}; }

json record_json(const PNumberRecord& r) {
    return {{"q", r.q},
            {"n", r.state.n},
            {"l", r.state.l},
            {"d", r.state.d},
            {"P", sig10(r.P)},
            {"source", std::string(to_string(r.source))},
            {"epsilon", r.epsilon ? json(sig10(*r.epsilon)) : json(nullptr)},
            {"abs_tol", r.abs_tol ? json(*r.abs_tol) : json(nullptr)}};
}

namespace {

json minimum_json(const Minimum& m) { return {{"value", sig10(m.value)}, {"r_star", sig10(m.r_star)}}; }

json optional_minimum(const std::optional<Minimum>& m) { return m ? minimum_json(*m) : json(nullptr); }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

StateIndex state_for(const PotentialSpec& pot, int n, int l, std::optional<int> d) {
    StateIndex s{n, l, d.value_or(pot.dimension())};
    s.validate();
    return s;
}

}  // namespace

json report_json(const BoundReport& r) {
    json ps = json::array();
    for (const auto& p : r.p_used) ps.push_back(record_json(p));
    return {{"state", state_json(r.state)},
            {"lower_A", minimum_json(r.lower_A)},
            {"upper_A", minimum_json(r.upper_A)},
            {"mixed_B", minimum_json(r.mixed_B)},
            {"gamma_lower_B", optional_minimum(r.gamma_lower_B)},
            {"gamma_upper_B", optional_minimum(r.gamma_upper_B)},
            {"exact", r.exact ? json(sig10(*r.exact)) : json(nullptr)},
            {"certified", r.certified},
            {"mixed_is_bound", r.mixed_is_bound},
            {"notes", r.notes},
            {"p_numbers", std::move(ps)}};
}

json solution_json(const RadialSolution& s, const StateIndex& state, const SolverConfig& cfg) {
    return {{"energy", sig10(s.energy)},
            {"nodes", s.nodes},
            {"state", state_json(state)},
            {"config",
             {{"abs_tol", cfg.abs_tol},
              {"tail_margin", cfg.tail_margin},
              {"tail_exponent", cfg.tail_exponent},
              {"ode_tol", cfg.ode_tol},
              {"max_iter", cfg.max_iter},
              {"r_max", sig10(s.r_max)},
              {"r_match", sig10(s.r_match)}}}};
}

SolverConfig config_with_tol(std::optional<double> tol) {
    SolverConfig cfg;
    if (tol) cfg.abs_tol = *tol;
    cfg.validate();
    return cfg;
}

Output cmd_solve(const std::filesystem::path& spec, int n, int l, std::optional<int> d, std::optional<double> tol,
                 std::optional<int> max_iter) {
    return guarded([&] {
        const auto pot = load_potential_spec(spec);
        auto cfg = config_with_tol(tol);
        if (max_iter) {
            cfg.max_iter = *max_iter;
            cfg.validate();
        }
        const auto state = state_for(pot, n, l, d);
        const auto sol = solve_radial(pot, state, cfg);
        return Output{kExitOk, dump(solution_json(sol, state, cfg)), ""};
    });
}

Output cmd_pnumber(double q, int n, int l, int d, const std::string& source, std::optional<double> tol, PCache& cache) {
    return guarded([&] {
        const StateIndex state{n, l, d};
        state.validate();
        const auto cfg = config_with_tol(tol);
        PNumberRecord rec;
        if (source == "auto") {
            rec = p_lookup(q, state, cfg, &cache);
        } else if (source == "gamma-lower" || source == "gamma-upper") {
            if (n != 1 || l != 0) throw DomainError("pnumber: Gamma estimates exist only for n = 1, l = 0");
            const bool lower = source == "gamma-lower";
            rec = {q, state, lower ? p_gamma_lower(q, d) : p_gamma_upper(q, d),
                   lower ? PSource::gamma_lower : PSource::gamma_upper, std::nullopt, std::nullopt};
        } else {
            throw DomainError("pnumber: --source must be auto, gamma-lower or gamma-upper");
        }
        return Output{kExitOk, dump(record_json(rec)), ""};
    });
}

Output cmd_bounds(const std::filesystem::path& spec, int n, int l, std::optional<int> d, bool with_exact,
                  std::optional<double> tol, PCache& cache) {
    return guarded([&] {
        const auto pot = load_potential_spec(spec);
        const auto cfg = config_with_tol(tol);
        const auto state = state_for(pot, n, l, d);
        const auto rep = bounds_report(pot, state, cfg, &cache, with_exact);
        return Output{kExitOk, dump(report_json(rep)), ""};
    });
}

Output cmd_reproduce(int table, const std::string& format, std::optional<double> tol,
                     const std::optional<std::filesystem::path>& out_file, PCache& cache) {
    return guarded([&] {
        if (format != "csv" && format != "json") throw DomainError("reproduce: --format must be csv or json");
        const auto result = reproduce_table(table, SolverConfig{}, &cache, tol);
        const std::string body = format == "csv" ? render_csv(result) : render_json(result);
        Output o{result.passed() ? kExitOk : kExitCheckFailed, "", render_diff(result)};
        if (out_file) {
            std::ofstream f(*out_file, std::ios::trunc);
            if (!f || !(f << body)) throw Error("reproduce: cannot write " + out_file->string());
        } else {
            o.out = body;
        }
        return o;
    });
}

AnharmonicModel build_model(const ModelChoice& c, const SolverConfig& cfg, PCache& cache) {
    if (c.alpha || c.beta) {
        if (!(c.alpha && c.beta)) throw DomainError("anharmonic: give both --alpha and --beta, or neither");
        return {c.m, *c.alpha, *c.beta};
    }
    c.state.validate();
    if (c.kind == "lower") return AnharmonicModel::lower_bound(c.m, c.state);
    if (c.kind == "upper") return AnharmonicModel::upper_bound(c.m, c.state, cfg, &cache);
    if (c.kind == "mixed") return AnharmonicModel::mixed(c.m, c.state, cfg, &cache);
    if (c.kind == "gamma-lower" || c.kind == "gamma-upper") {
        if (c.state.n != 1 || c.state.l != 0) throw DomainError("anharmonic: Gamma models exist only for n = 1, l = 0");
        return c.kind == "gamma-lower" ? AnharmonicModel::gamma_lower(c.m, c.state.d)
                                       : AnharmonicModel::gamma_upper(c.m, c.state.d);
    }
    throw DomainError("anharmonic: --model must be lower, upper, mixed, gamma-lower or gamma-upper");
}

namespace {

json model_json(const AnharmonicModel& m) {
    return {{"m", m.m()}, {"alpha", sig10(m.alpha())}, {"beta", sig10(m.beta())}};
}

}  // namespace

Output cmd_anharmonic_lambda(const ModelChoice& choice, double energy, PCache& cache) {
    return guarded([&] {
        const auto model = build_model(choice, SolverConfig{}, cache);
        json j = {{"model", model_json(model)}, {"energy", energy}, {"lambda", sig10(model.lambda_of_energy(energy))}};
        return Output{kExitOk, dump(j), ""};
    });
}

Output cmd_anharmonic_energy(const ModelChoice& choice, double lambda, PCache& cache) {
    return guarded([&] {
        const auto model = build_model(choice, SolverConfig{}, cache);
        const double e = model.energy_of_lambda(lambda);
        json j = {{"model", model_json(model)},
                  {"lambda", lambda},
                  {"energy", sig10(e)},
                  {"r_star", sig10(std::sqrt(model.critical_r2(e)))}};
        return Output{kExitOk, dump(j), ""};
    });
}

Output cmd_anharmonic_scale(const FullParameterSet& full) {
    return guarded([&] {
        const auto red = reduce_parameters(full);
        json j = {{"omega", full.omega}, {"a", full.a},         {"b", full.b},
                  {"m", full.m},         {"lambda", sig10(red.lambda)}, {"energy_scale", sig10(red.energy_scale)}};
        return Output{kExitOk, dump(j), ""};
    });
}

Output cmd_anharmonic_bhattacharya(int m, double lambda, std::optional<double> k0) {
    return guarded([&] {
        const double e = bhattacharya_energy(lambda, m, k0);
        json j = {{"m", m}, {"lambda", lambda}, {"K0", k0 ? *k0 : *default_k0(m)}, {"energy", sig10(e)}};
        return Output{kExitOk, dump(j), ""};
    });
}

Output cmd_anharmonic_dasgupta(int m, int n, double lambda, double k) {
    return guarded([&] {
        json j = {{"m", m}, {"n", n}, {"lambda", lambda}, {"K", k}, {"energy", sig10(dasgupta_energy(lambda, m, n, k))}};
        return Output{kExitOk, dump(j), ""};
    });
}

Output cmd_cache(const std::string& action, PCache& cache) {
    return guarded([&] {
        if (action == "show") return Output{kExitOk, cache.to_json(), ""};
        if (action == "path") return Output{kExitOk, (cache.file() ? cache.file()->string() : std::string()) + "\n", ""};
        if (action == "clear") {
            cache.clear();
            return Output{kExitOk, "", "cache cleared\n"};
        }
        if (action == "warm") {
            for (int m = 2; m <= 6; ++m) p_lookup(2.0 * m, {1, 0, 1}, SolverConfig{}, &cache);
            return Output{kExitOk, "", "cached " + std::to_string(cache.size()) + " records\n"};
        }
        throw DomainError("cache: action must be show, path, clear or warm");
    });
}

}  // namespace envbounds::workbench
