#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "envbounds/pnumbers.hpp"
#include "envbounds/potential.hpp"

namespace envbounds {

/// One term a (P r)^q of the semiclassical objective.
struct EnvelopeTerm {
    double a = 0.0;
    double q = 2.0;
    double P = 0.0;
    PSource p_source = PSource::closed_form;
};

/// F(r) = 1/r² + Σ a_i (P_i r)^{q_i}.
double objective(double r, std::span<const EnvelopeTerm> terms);

struct Minimum {
    double value = 0.0;
    double r_star = 0.0;
};

/// Global minimum of the objective over r > 0.
///
/// Requires a term with a > 0 and q > 0, and every active term to satisfy
/// a q > 0; then x² dF/dx (x = r²) is strictly increasing and the critical
/// point is unique.
Minimum minimize(std::span<const EnvelopeTerm> terms);

struct BoundReport {
    StateIndex state;
    /// Every term uses P(q_1). A lower bound.
    Minimum lower_A;
    /// Every term uses P(q_k). An upper bound.
    Minimum upper_A;
    /// Each term uses its own P(q_i). A lower bound for n = 1, otherwise an approximation.
    Minimum mixed_B;
    /// Gamma-function P estimates, only for the (n = 1, l = 0) state.
    std::optional<Minimum> gamma_lower_B;
    std::optional<Minimum> gamma_upper_B;
    std::optional<double> exact;
    /// False when the potential uses an extension regime.
    bool certified = true;
    /// True when mixed_B is a guaranteed lower bound.
    bool mixed_is_bound = true;
    std::vector<std::string> notes;
    /// P-numbers used, in term order.
    std::vector<PNumberRecord> p_used;
};

/// Envelope bounds for one state of the potential.
BoundReport bounds_report(const PotentialSpec& pot, const StateIndex& state, const SolverConfig& cfg = {},
                          PCache* cache = nullptr, bool with_exact = false);

}  // namespace envbounds
