#pragma once

#include "envbounds/potential.hpp"

namespace envbounds {

/// Accuracy and domain policy of the radial eigensolver.
struct SolverConfig {
    /// Target absolute accuracy of returned eigenvalues.
    double abs_tol = 1e-9;
    /// r_max is placed where V(r_max) + centrifugal - E >= tail_margin.
    double tail_margin = 50.0;
    /// r_max also satisfies ∫ sqrt(W - E) dr >= tail_exponent beyond the
    /// outer turning point, which keeps stiff potentials honest.
    double tail_exponent = 40.0;
    /// Local error tolerance of the adaptive phase integrator.
    double ode_tol = 1e-13;
    /// Iteration cap shared by the bracketing and refinement stages.
    int max_iter = 200;

    /// Throws DomainError on a nonsensical configuration.
    void validate() const;
};

struct RadialSolution {
    double energy = 0.0;
    /// Interior zeros of the eigenfunction. For d = 1 this counts zeros on
    /// the whole line, otherwise zeros of the reduced radial function on r > 0.
    int nodes = 0;
    double r_max = 0.0;
    double r_match = 0.0;
};

/// Discrete eigenvalue of -Δ + V(r) for the given state.
RadialSolution solve_radial(const PotentialSpec& pot, const StateIndex& state, const SolverConfig& cfg = {});

/// Energy only; see solve_radial.
double eigenvalue(const PotentialSpec& pot, const StateIndex& state, const SolverConfig& cfg = {});

/// Eigenvalue of -Δ + v r^q. q = -1 with v < 0 gives the hydrogenic level.
double pure_power_eigenvalue(double q, double v, const StateIndex& state, const SolverConfig& cfg = {});

}  // namespace envbounds
