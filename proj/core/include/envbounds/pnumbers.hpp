#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "envbounds/potential.hpp"
#include "envbounds/radial_solver.hpp"

namespace envbounds {

enum class PSource { closed_form, numeric, gamma_lower, gamma_upper };

std::string_view to_string(PSource s);
PSource parse_psource(std::string_view s);

/// A P-number together with where it came from.
struct PNumberRecord {
    double q = 2.0;
    StateIndex state;
    double P = 0.0;
    PSource source = PSource::closed_form;
    /// Pure-power energy P was derived from; set iff source == numeric.
    std::optional<double> epsilon;
    /// Solver tolerance used for numeric records.
    std::optional<double> abs_tol;

    bool operator==(const PNumberRecord&) const = default;
};

/// P from the pure-power energy ε of -Δ + r^q:
/// P = ε^{(2+q)/2q} (2/(2+q))^{1/q} (q/(2+q))^{1/2}.
double p_from_energy(double q, double epsilon);

/// Inverse of p_from_energy: ε = min_{r>0} [1/r² + (P r)^q].
double energy_from_p(double q, double P);

/// Harmonic P-number, exact: 2n + l + d/2 - 2 (d >= 2), n - 1/2 (d = 1).
double p_harmonic(const StateIndex& state);

/// Coulomb P-number n + l + d/2 - 3/2, defined for d >= 2.
double p_coulomb(const StateIndex& state);

/// Lower estimate of P_{10}^{(d)}(q) in terms of Gamma functions.
double p_gamma_lower(double q, int d);

/// Upper estimate of P_{10}^{(d)}(q) in terms of Gamma functions.
double p_gamma_upper(double q, int d);

/// Memo of numeric P-numbers, optionally persisted as a JSON file.
///
/// Reads may run concurrently; writers are serialised. save() replaces the
/// file atomically through a temporary in the same directory.
class PCache {
public:
    PCache() = default;
    explicit PCache(std::filesystem::path file);

    PCache(const PCache&) = delete;
    PCache& operator=(const PCache&) = delete;

    std::optional<PNumberRecord> find(double q, const StateIndex& state, double abs_tol) const;

    /// Stores a numeric record; other sources are ignored.
    void insert(const PNumberRecord& rec);

    std::vector<PNumberRecord> records() const;
    std::size_t size() const;
    void clear();

    const std::optional<std::filesystem::path>& file() const noexcept { return file_; }

    /// Loads the backing file if it exists. Throws Error on malformed content.
    void load();
    /// Writes the backing file. No-op without one.
    void save() const;

    std::string to_json() const;
    void merge_json(std::string_view text);

private:
    using Key = std::tuple<long long, int, int, int, double>;
    static Key key(double q, const StateIndex& s, double abs_tol);

    mutable std::shared_mutex mutex_;
    std::map<Key, PNumberRecord> records_;
    std::optional<std::filesystem::path> file_;
};

/// P-number for exponent q: closed form for q = 2 and q = -1, otherwise
/// solve -Δ + r^q and convert. Numeric results go through the cache when one
/// is supplied.
PNumberRecord p_lookup(double q, const StateIndex& state, const SolverConfig& cfg = {}, PCache* cache = nullptr);

}  // namespace envbounds
