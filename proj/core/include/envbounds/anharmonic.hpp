#pragma once

#include <optional>

#include "envbounds/pnumbers.hpp"
#include "envbounds/potential.hpp"
#include "envbounds/radial_solver.hpp"

namespace envbounds {

/// Semiclassical model of -Δ + r² + λ r^{2m}: the energy is
/// min_{r>0} [1/r² + α r² + λ β r^{2m}], with α the squared P of the r² term
/// and β the 2m-th power of the P of the r^{2m} term.
class AnharmonicModel {
public:
    /// Throws DomainError unless m >= 2, α > 0, β > 0, or if λ(E) fails the
    /// monotonicity check run on construction.
    AnharmonicModel(int m, double alpha, double beta);

    /// Lower bound: α = P(2)², β = P(2)^{2m}.
    static AnharmonicModel lower_bound(int m, const StateIndex& state);
    /// Upper bound: α = P(2m)², β = P(2m)^{2m}.
    static AnharmonicModel upper_bound(int m, const StateIndex& state, const SolverConfig& cfg = {},
                                       PCache* cache = nullptr);
    /// Mixed assignment: α = P(2)², β = P(2m)^{2m}.
    static AnharmonicModel mixed(int m, const StateIndex& state, const SolverConfig& cfg = {}, PCache* cache = nullptr);
    /// Gamma-function P estimates for the ground state in d dimensions.
    static AnharmonicModel gamma_lower(int m, int d);
    static AnharmonicModel gamma_upper(int m, int d);

    int m() const noexcept { return m_; }
    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }

    /// λ = 0 energy, 2√α.
    double harmonic_energy() const;

    /// δ = √(m²E² - 4α(m² - 1)).
    double delta(double E) const;

    /// Coupling at which the model energy equals E. Defined for E >= 2√α.
    double lambda_of_energy(double E) const;

    /// The unique E >= 2√α with lambda_of_energy(E) = λ.
    double energy_of_lambda(double lambda) const;

    /// Minimising r² for energy E: (mE - δ) / (2α(m - 1)).
    double critical_r2(double E) const;

private:
    int m_;
    double alpha_;
    double beta_;
};

/// The same relation written for α = (d/2)², the ground-state harmonic P².
/// Returns β λ for a given E.
double beta_lambda_ground_state(double E, int m, int d);

/// Parameters of -ω Δ + a r² + b r^{2m}.
struct FullParameterSet {
    double omega = 1.0;
    double a = 1.0;
    double b = 1.0;
    int m = 2;
};

struct ReducedParameters {
    double lambda = 0.0;
    /// E(ω, a, b) = energy_scale · E(1, 1, λ).
    double energy_scale = 1.0;
};

ReducedParameters reduce_parameters(const FullParameterSet& full);

/// Strong-coupling coefficient K0 for m = 2, 3, 4; nullopt otherwise.
std::optional<double> default_k0(int m);

/// Root E >= 1 of E^{m+1} - E^{(m-1)(1 + 2/(m+2+λ))} = K0^{m+1} λ.
double bhattacharya_energy(double lambda, int m, std::optional<double> k0 = std::nullopt);

/// Root E >= 2n+1 of (E/(2n+1))^{m+1} - (E/(2n+1))^{m-1} = K^{m+1} λ.
double dasgupta_energy(double lambda, int m, int n, double k);

}  // namespace envbounds
