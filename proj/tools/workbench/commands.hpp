#pragma once

#include <filesystem>
#include <functional>
#include <json.hpp>
#include <optional>
#include <string>

#include "envbounds/anharmonic.hpp"
#include "envbounds/envelope.hpp"
#include "envbounds/pnumbers.hpp"
#include "envbounds/radial_solver.hpp"

namespace envbounds::workbench {

/// Process exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,  ///< reproduce found out-of-tolerance cells
    kExitBadInput = 2,     ///< parse, usage or domain error
    kExitNoConvergence = 3,
};

struct Output {
    int exit_code = kExitOk;
    std::string out;
    std::string err;
};

inline constexpr const char* kCacheEnvVar = "ENVBOUNDS_PCACHE";
inline constexpr const char* kDefaultCacheFile = "pcache.json";

/// --cache flag, then $ENVBOUNDS_PCACHE, then ./pcache.json.
std::filesystem::path resolve_cache_path(const std::optional<std::string>& flag);

/// Runs fn and turns library exceptions into exit codes and stderr text.
Output guarded(const std::function<Output()>& fn);

nlohmann::json state_json(const StateIndex& s);
nlohmann::json record_json(const PNumberRecord& r);
nlohmann::json report_json(const BoundReport& r);
nlohmann::json solution_json(const RadialSolution& s, const StateIndex& state, const SolverConfig& cfg);

SolverConfig config_with_tol(std::optional<double> tol);

Output cmd_solve(const std::filesystem::path& spec, int n, int l, std::optional<int> d, std::optional<double> tol,
                 std::optional<int> max_iter = std::nullopt);

Output cmd_pnumber(double q, int n, int l, int d, const std::string& source, std::optional<double> tol, PCache& cache);

Output cmd_bounds(const std::filesystem::path& spec, int n, int l, std::optional<int> d, bool with_exact,
                  std::optional<double> tol, PCache& cache);

Output cmd_reproduce(int table, const std::string& format, std::optional<double> tol,
                     const std::optional<std::filesystem::path>& out_file, PCache& cache);

/// Which (α, β) assignment an anharmonic command uses.
struct ModelChoice {
    int m = 2;
    std::optional<double> alpha;
    std::optional<double> beta;
    /// lower | upper | mixed | gamma-lower | gamma-upper; used when α/β are absent.
    std::string kind = "mixed";
    StateIndex state{1, 0, 1};
};

AnharmonicModel build_model(const ModelChoice& choice, const SolverConfig& cfg, PCache& cache);

Output cmd_anharmonic_lambda(const ModelChoice& choice, double energy, PCache& cache);
Output cmd_anharmonic_energy(const ModelChoice& choice, double lambda, PCache& cache);
Output cmd_anharmonic_scale(const FullParameterSet& full);
Output cmd_anharmonic_bhattacharya(int m, double lambda, std::optional<double> k0);
Output cmd_anharmonic_dasgupta(int m, int n, double lambda, double k);

/// show | clear | warm | path
Output cmd_cache(const std::string& action, PCache& cache);

}  // namespace envbounds::workbench
