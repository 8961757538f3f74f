#include "envbounds/anharmonic.hpp"

#include <cmath>

#include "envbounds/errors.hpp"
#include "roots.hpp"

namespace envbounds {

AnharmonicModel::AnharmonicModel(int m, double alpha, double beta) : m_(m), alpha_(alpha), beta_(beta) {
    if (m_ < 2) throw DomainError("anharmonic: m must be >= 2");
    if (!(alpha_ > 0.0) || !std::isfinite(alpha_)) throw DomainError("anharmonic: alpha must be > 0");
    if (!(beta_ > 0.0) || !std::isfinite(beta_)) throw DomainError("anharmonic: beta must be > 0");

    const double e0 = harmonic_energy();
    const double span = 100.0 * std::max(1.0, e0);
    double prev = 0.0;
    for (int k = 1; k <= 64; ++k) {
        const double lam = lambda_of_energy(e0 + span * k / 64.0);
        if (!(lam > prev)) throw DomainError("anharmonic: lambda(E) not increasing for these alpha, beta");
        prev = lam;
    }
}

AnharmonicModel AnharmonicModel::lower_bound(int m, const StateIndex& state) {
    const double p = p_harmonic(state);
    return {m, p * p, std::pow(p, 2.0 * m)};
}

AnharmonicModel AnharmonicModel::upper_bound(int m, const StateIndex& state, const SolverConfig& cfg, PCache* cache) {
    const double p = p_lookup(2.0 * m, state, cfg, cache).P;
    return {m, p * p, std::pow(p, 2.0 * m)};
}

AnharmonicModel AnharmonicModel::mixed(int m, const StateIndex& state, const SolverConfig& cfg, PCache* cache) {
    const double p2 = p_harmonic(state);
    const double pm = p_lookup(2.0 * m, state, cfg, cache).P;
    return {m, p2 * p2, std::pow(pm, 2.0 * m)};
}

AnharmonicModel AnharmonicModel::gamma_lower(int m, int d) {
    const double p2 = p_gamma_lower(2.0, d);
    return {m, p2 * p2, std::pow(p_gamma_lower(2.0 * m, d), 2.0 * m)};
}

AnharmonicModel AnharmonicModel::gamma_upper(int m, int d) {
    const double p2 = p_gamma_upper(2.0, d);
    return {m, p2 * p2, std::pow(p_gamma_upper(2.0 * m, d), 2.0 * m)};
}

double AnharmonicModel::harmonic_energy() const { return 2.0 * std::sqrt(alpha_); }

double AnharmonicModel::delta(double E) const {
    const double mm = static_cast<double>(m_) * m_;
    return std::sqrt(mm * E * E - 4.0 * alpha_ * (mm - 1.0));
}

double AnharmonicModel::lambda_of_energy(double E) const {
    const double e0 = harmonic_energy();
    if (!(E >= e0)) throw DomainError("lambda_of_energy: E must be >= 2 sqrt(alpha)");
    const double m = m_;
    const double mm = m * m;
    const double d = delta(E);
    // Cancellation-free forms of δ - E and mE - δ.
    const double d_minus_e = (mm - 1.0) * (E - e0) * (E + e0) / (d + E);
    const double u = 4.0 * alpha_ * (mm - 1.0) / (m * E + d);
    return std::pow(2.0 * alpha_ / u, m) * std::pow(m - 1.0, m - 1.0) / (m + 1.0) * d_minus_e / beta_;
}

double AnharmonicModel::energy_of_lambda(double lambda) const {
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw DomainError("energy_of_lambda: lambda must be >= 0");
    const double e0 = harmonic_energy();
    if (lambda == 0.0) return e0;
    auto f = [&](double E) { return lambda_of_energy(E) - lambda; };
    auto [lo, hi] = detail::expand_upward(f, e0, 1.0, 200, "energy_of_lambda");
    return detail::solve_increasing(f, lo, hi, f(lo), f(hi), 0.0, 1e-15, 300, "energy_of_lambda");
}

double AnharmonicModel::critical_r2(double E) const {
    const double m = m_;
    const double u = 4.0 * alpha_ * (m * m - 1.0) / (m * E + delta(E));
    return u / (2.0 * alpha_ * (m - 1.0));
}

double beta_lambda_ground_state(double E, int m, int d) {
    if (m < 2) throw DomainError("beta_lambda_ground_state: m must be >= 2");
    if (d < 1) throw DomainError("beta_lambda_ground_state: d must be >= 1");
    if (!(E >= d)) throw DomainError("beta_lambda_ground_state: E must be >= d");
    const double mm = static_cast<double>(m) * m;
    const double dd = static_cast<double>(d) * d;
    const double root = std::sqrt(mm * (E * E - dd) + dd);
    return std::pow(dd, m) / std::pow(2.0, m) * std::pow(m - 1.0, m - 1.0) / (m + 1.0) * (root - E) /
           std::pow(m * E - root, m);
}

ReducedParameters reduce_parameters(const FullParameterSet& full) {
    if (!(full.omega > 0.0 && full.a > 0.0 && full.b > 0.0)) throw DomainError("reduce_parameters: omega, a, b must be > 0");
    if (full.m < 2) throw DomainError("reduce_parameters: m must be >= 2");
    const double m = full.m;
    return {full.b * std::pow(full.omega, 0.5 * (m - 1.0)) / std::pow(full.a, 0.5 * (m + 1.0)),
            std::sqrt(full.a * full.omega)};
}

std::optional<double> default_k0(int m) {
    switch (m) {
        case 2: return 1.06036209;
        case 3: return 1.14480245;
        case 4: return 1.22582011;
        default: return std::nullopt;
    }
}

double bhattacharya_energy(double lambda, int m, std::optional<double> k0) {
    if (m < 2) throw DomainError("bhattacharya_energy: m must be >= 2");
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw DomainError("bhattacharya_energy: lambda must be >= 0");
    if (!k0) k0 = default_k0(m);
    if (!k0) throw DomainError("bhattacharya_energy: no default K0 for m = " + std::to_string(m) + "; supply one");
    if (!(*k0 > 0.0)) throw DomainError("bhattacharya_energy: K0 must be > 0");
    if (lambda == 0.0) return 1.0;

    const double mf = m;
    const double p = (mf - 1.0) * (1.0 + 2.0 / (mf + 2.0 + lambda));
    const double rhs = std::pow(*k0, mf + 1.0) * lambda;
    auto f = [&](double E) { return std::pow(E, mf + 1.0) - std::pow(E, p) - rhs; };
    auto [lo, hi] = detail::expand_upward(f, 1.0, 1.0, 200, "bhattacharya_energy");
    return detail::solve_increasing(f, lo, hi, f(lo), f(hi), 0.0, 1e-15, 300, "bhattacharya_energy");
}

double dasgupta_energy(double lambda, int m, int n, double k) {
    if (m < 2) throw DomainError("dasgupta_energy: m must be >= 2");
    if (n < 0) throw DomainError("dasgupta_energy: n must be >= 0");
    if (!(k > 0.0)) throw DomainError("dasgupta_energy: K must be > 0");
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw DomainError("dasgupta_energy: lambda must be >= 0");
    const double scale = 2.0 * n + 1.0;
    if (lambda == 0.0) return scale;

    const double mf = m;
    const double rhs = std::pow(k, mf + 1.0) * lambda;
    auto f = [&](double x) { return std::pow(x, mf + 1.0) - std::pow(x, mf - 1.0) - rhs; };
    auto [lo, hi] = detail::expand_upward(f, 1.0, 1.0, 200, "dasgupta_energy");
    return scale * detail::solve_increasing(f, lo, hi, f(lo), f(hi), 0.0, 1e-15, 300, "dasgupta_energy");
}

}  // namespace envbounds
