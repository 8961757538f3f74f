#include "envbounds/pnumbers.hpp"

#include <cmath>
#include <fstream>
#include <mutex>
#include <json.hpp>
#include <numbers>
#include <sstream>

#include "envbounds/errors.hpp"

namespace envbounds {

using nlohmann::json;

std::string_view to_string(PSource s) {
    switch (s) {
        case PSource::closed_form: return "closed_form";
        case PSource::numeric: return "numeric";
        case PSource::gamma_lower: return "gamma_lower";
        case PSource::gamma_upper: return "gamma_upper";
    }
    return "unknown";
}

PSource parse_psource(std::string_view s) {
    if (s == "closed_form") return PSource::closed_form;
    if (s == "numeric") return PSource::numeric;
    if (s == "gamma_lower") return PSource::gamma_lower;
    if (s == "gamma_upper") return PSource::gamma_upper;
    throw DomainError("unknown P source '" + std::string(s) + "'");
}

double p_from_energy(double q, double epsilon) {
    if (!(q > 0.0)) throw DomainError("p_from_energy: q must be > 0 (use p_coulomb for q = -1)");
    if (!(epsilon > 0.0)) throw DomainError("p_from_energy: epsilon must be > 0");
    return std::pow(epsilon, (2.0 + q) / (2.0 * q)) * std::pow(2.0 / (2.0 + q), 1.0 / q) * std::sqrt(q / (2.0 + q));
}

double energy_from_p(double q, double P) {
    if (!(q > 0.0)) throw DomainError("energy_from_p: q must be > 0");
    if (!(P > 0.0)) throw DomainError("energy_from_p: P must be > 0");
    // Critical point r^(q+2) = 2 / (q P^q); there ε = (1 + 2/q) / r².
    const double log_r = (std::log(2.0 / q) - q * std::log(P)) / (q + 2.0);
    return (1.0 + 2.0 / q) * std::exp(-2.0 * log_r);
}

double p_harmonic(const StateIndex& state) {
    state.validate();
    if (state.d == 1) return state.n - 0.5;
    return 2.0 * state.n + state.l + 0.5 * state.d - 2.0;
}

double p_coulomb(const StateIndex& state) {
    state.validate();
    if (state.d < 2) throw DomainError("p_coulomb: only defined for d >= 2");
    return state.n + state.l + 0.5 * state.d - 1.5;
}

namespace {

double checked_exp(double log_value, const char* what) {
    const double v = std::exp(log_value);
    if (!std::isfinite(log_value) || !std::isfinite(v) || v <= 0.0)
        throw DomainError(std::string(what) + ": Gamma-function evaluation out of range");
    return v;
}

void check_gamma_args(double q, int d, const char* what) {
    if (!(q > 0.0) || !std::isfinite(q)) throw DomainError(std::string(what) + ": q must be > 0");
    if (d < 1) throw DomainError(std::string(what) + ": d must be >= 1");
}

}  // namespace

double p_gamma_lower(double q, int d) {
    check_gamma_args(q, d, "p_gamma_lower");
    const double dd = d;
    const double log_p = 0.5 * std::log(dd * std::numbers::e / 2.0) + std::log(dd / (q * std::numbers::e)) / q +
                         (std::lgamma(1.0 + dd / 2.0) - std::lgamma(1.0 + dd / q)) / dd;
    return checked_exp(log_p, "p_gamma_lower");
}

double p_gamma_upper(double q, int d) {
    check_gamma_args(q, d, "p_gamma_upper");
    const double dd = d;
    const double log_p = 0.5 * std::log(dd / 2.0) + (std::lgamma((dd + q) / 2.0) - std::lgamma(dd / 2.0)) / q;
    return checked_exp(log_p, "p_gamma_upper");
}

// ---- cache -----------------------------------------------------------------

PCache::PCache(std::filesystem::path file) : file_(std::move(file)) {}

PCache::Key PCache::key(double q, const StateIndex& s, double abs_tol) {
    return {std::llround(q * 1e9), s.n, s.l, s.d, abs_tol};
}

std::optional<PNumberRecord> PCache::find(double q, const StateIndex& state, double abs_tol) const {
    std::shared_lock lock(mutex_);
    auto it = records_.find(key(q, state, abs_tol));
    if (it == records_.end()) return std::nullopt;
    return it->second;
}

void PCache::insert(const PNumberRecord& rec) {
    if (rec.source != PSource::numeric || !rec.abs_tol) return;
    std::unique_lock lock(mutex_);
    records_[key(rec.q, rec.state, *rec.abs_tol)] = rec;
}

std::vector<PNumberRecord> PCache::records() const {
    std::shared_lock lock(mutex_);
    std::vector<PNumberRecord> out;
    out.reserve(records_.size());
    for (const auto& [k, v] : records_) out.push_back(v);
    return out;
}

std::size_t PCache::size() const {
    std::shared_lock lock(mutex_);
    return records_.size();
}

void PCache::clear() {
    std::unique_lock lock(mutex_);
    records_.clear();
}

std::string PCache::to_json() const {
    json arr = json::array();
    for (const auto& r : records()) {
        arr.push_back({{"q", r.q},
                       {"n", r.state.n},
                       {"l", r.state.l},
                       {"d", r.state.d},
                       {"P", r.P},
                       {"source", std::string(to_string(r.source))},
                       {"epsilon", r.epsilon ? json(*r.epsilon) : json(nullptr)},
                       {"abs_tol", r.abs_tol ? json(*r.abs_tol) : json(nullptr)}});
    }
    return arr.dump(2) + "\n";
}

void PCache::merge_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(std::string("P-cache: ") + e.what());
    }
    if (!doc.is_array()) throw Error("P-cache: top level must be an array of records");
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const auto& j = doc[i];
        try {
            PNumberRecord rec;
            rec.q = j.at("q").get<double>();
            rec.state = {j.at("n").get<int>(), j.at("l").get<int>(), j.at("d").get<int>()};
            rec.P = j.at("P").get<double>();
            rec.source = parse_psource(j.at("source").get<std::string>());
            if (j.contains("epsilon") && !j["epsilon"].is_null()) rec.epsilon = j["epsilon"].get<double>();
            if (j.contains("abs_tol") && !j["abs_tol"].is_null()) rec.abs_tol = j["abs_tol"].get<double>();
            rec.state.validate();
            if (!(rec.P > 0.0)) throw DomainError("P must be > 0");
            insert(rec);
        } catch (const json::exception& e) {
            throw Error("P-cache: record " + std::to_string(i) + ": " + e.what());
        } catch (const DomainError& e) {
            throw Error("P-cache: record " + std::to_string(i) + ": " + e.what());
        }
    }
}

void PCache::load() {
    if (!file_ || !std::filesystem::exists(*file_)) return;
    std::ifstream in(*file_);
    if (!in) throw Error("P-cache: cannot read " + file_->string());
    std::stringstream buf;
    buf << in.rdbuf();
    merge_json(buf.str());
}

void PCache::save() const {
    if (!file_) return;
    const std::string text = to_json();
    auto tmp = *file_;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw Error("P-cache: cannot write " + tmp.string());
        out << text;
        if (!out.flush()) throw Error("P-cache: write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, *file_);
}

PNumberRecord p_lookup(double q, const StateIndex& state, const SolverConfig& cfg, PCache* cache) {
    state.validate();
    if (q == 2.0) return {q, state, p_harmonic(state), PSource::closed_form, std::nullopt, std::nullopt};
    if (q == -1.0) return {q, state, p_coulomb(state), PSource::closed_form, std::nullopt, std::nullopt};
    if (!(q > 0.0)) throw DomainError("p_lookup: q must be > 0 or equal to -1");

    if (cache)
        if (auto hit = cache->find(q, state, cfg.abs_tol)) return *hit;

    const double eps = pure_power_eigenvalue(q, 1.0, state, cfg);
    PNumberRecord rec{q, state, p_from_energy(q, eps), PSource::numeric, eps, cfg.abs_tol};
    if (cache) cache->insert(rec);
    return rec;
}

}  // namespace envbounds
