#include "envbounds/envelope.hpp"

#include <cmath>

#include "envbounds/errors.hpp"
#include "envbounds/radial_solver.hpp"
#include "roots.hpp"

namespace envbounds {

double objective(double r, std::span<const EnvelopeTerm> terms) {
    if (!(r > 0.0)) throw DomainError("objective: r must be > 0");
    double f = 1.0 / (r * r);
    for (const auto& t : terms) f += t.a * std::pow(t.P * r, t.q);
    return f;
}

Minimum minimize(std::span<const EnvelopeTerm> terms) {
    bool confining = false;
    for (const auto& t : terms) {
        if (t.a == 0.0) continue;
        if (!(t.P > 0.0)) throw DomainError("minimize: P-numbers must be > 0");
        if (!(t.a * t.q > 0.0)) throw DomainError("minimize: every active term needs a*q > 0");
        if (t.a > 0.0 && t.q > 0.0) confining = true;
    }
    if (!confining) throw NonConfiningError("minimize: no confining term");

    // With x = r²: x² F'(x) = -1 + Σ a (q/2) P^q x^{q/2+1}, increasing in x.
    auto g = [&](double x) {
        double s = -1.0;
        for (const auto& t : terms)
            if (t.a != 0.0) s += t.a * 0.5 * t.q * std::pow(t.P, t.q) * std::pow(x, 0.5 * t.q + 1.0);
        return s;
    };
    const double x = detail::solve_increasing_positive(g, 1.0, 1e-15, 300,
                                                       "envelope minimizer");
    const double r = std::sqrt(x);
    return {objective(r, terms), r};
}

namespace {

std::vector<EnvelopeTerm> assign(std::span<const PowerTerm> terms, std::span<const PNumberRecord> ps) {
    std::vector<EnvelopeTerm> out;
    out.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i) out.push_back({terms[i].a, terms[i].q, ps[i].P, ps[i].source});
    return out;
}

std::vector<EnvelopeTerm> assign_all(std::span<const PowerTerm> terms, const PNumberRecord& p) {
    std::vector<EnvelopeTerm> out;
    out.reserve(terms.size());
    for (const auto& t : terms) out.push_back({t.a, t.q, p.P, p.source});
    return out;
}

}  // namespace

BoundReport bounds_report(const PotentialSpec& pot_in, const StateIndex& state, const SolverConfig& cfg,
                          PCache* cache, bool with_exact) {
    state.validate();
    const PotentialSpec pot = pot_in.dimension() == state.d ? pot_in : pot_in.with_dimension(state.d);
    const auto terms = pot.active_terms();

    BoundReport rep;
    rep.state = state;
    rep.certified = pot.certified();
    rep.mixed_is_bound = rep.certified && state.n == 1;

    for (const auto& t : terms) rep.p_used.push_back(p_lookup(t.q, state, cfg, cache));

    rep.lower_A = minimize(assign_all(terms, rep.p_used.front()));
    rep.upper_A = minimize(assign_all(terms, rep.p_used.back()));
    rep.mixed_B = minimize(assign(terms, rep.p_used));

    const bool all_positive_powers = std::ranges::all_of(terms, [](const PowerTerm& t) { return t.q > 0.0; });
    if (state.n == 1 && state.l == 0 && all_positive_powers) {
        std::vector<EnvelopeTerm> lo, hi;
        for (const auto& t : terms) {
            lo.push_back({t.a, t.q, p_gamma_lower(t.q, state.d), PSource::gamma_lower});
            hi.push_back({t.a, t.q, p_gamma_upper(t.q, state.d), PSource::gamma_upper});
        }
        rep.gamma_lower_B = minimize(lo);
        rep.gamma_upper_B = minimize(hi);
    }

    if (!rep.certified)
        rep.notes.emplace_back(
            "non-certified: terms with q < 2 or a Coulomb term fall outside the proven regime (all a >= 0, q >= 2); "
            "lower_A/upper_A are estimates");
    if (state.n >= 2) rep.notes.emplace_back("mixed_B is an approximation for n >= 2, not a bound");

    if (with_exact) rep.exact = eigenvalue(pot, state, cfg);
    return rep;
}

}  // namespace envbounds
