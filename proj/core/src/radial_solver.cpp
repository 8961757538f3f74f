#include "envbounds/radial_solver.hpp"

#include <algorithm>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <numbers>

#include "envbounds/errors.hpp"
#include "envbounds/pnumbers.hpp"
#include "roots.hpp"

namespace envbounds {

namespace odeint = boost::numeric::odeint;

void SolverConfig::validate() const {
    if (!(abs_tol > 0.0)) throw DomainError("solver: abs_tol must be > 0");
    if (!(tail_margin > 0.0)) throw DomainError("solver: tail_margin must be > 0");
    if (!(tail_exponent > 0.0)) throw DomainError("solver: tail_exponent must be > 0");
    if (!(ode_tol > 0.0)) throw DomainError("solver: ode_tol must be > 0");
    if (max_iter < 1) throw DomainError("solver: max_iter must be >= 1");
}

namespace {

constexpr double kPi = std::numbers::pi;

// Behaviour of the reduced function u at the origin.
enum class Origin {
    regular,  // u ~ r^(Λ+1)
    neumann,  // u'(0) = 0, even states of the d = 1 problem
};

// The half-line problem -u'' + [V + Λ(Λ+1)/r²] u = E u that a state maps to.
struct ReducedProblem {
    double centrifugal;  // Λ(Λ+1)
    double lambda;       // Λ
    Origin origin;
    int radial_nodes;
};

ReducedProblem reduce(const StateIndex& s) {
    if (s.d == 1) {
        // Even states have (n-1)/2 zeros on r > 0, odd states (n-2)/2 plus the one at 0.
        if (s.n % 2 == 1) return {0.0, -1.0, Origin::neumann, (s.n - 1) / 2};
        return {0.0, 0.0, Origin::regular, s.n / 2 - 1};
    }
    const double lam = s.l + 0.5 * (s.d - 3);
    return {lam * (lam + 1.0), lam, Origin::regular, s.n - 1};
}

// Prüfer phase shooting: u = ρ sin θ, u' = S ρ cos θ. The phase mismatch at
// the matching point, divided by π, counts eigenvalues below E.
class Shooter {
public:
    struct Layout {
        double r_max;
        double r_match;
        double scale;
    };

    Shooter(const PotentialSpec& pot, const ReducedProblem& red, const SolverConfig& cfg)
        : pot_(pot), red_(red), cfg_(cfg), coulomb_(pot.coulomb_coupling()), r_wmin_(locate_w_minimum()) {}

    // Effective potential; the centrifugal part is skipped when it vanishes so r = 0 is admissible.
    double w(double r) const { return pot_(r) + (red_.centrifugal == 0.0 ? 0.0 : red_.centrifugal / (r * r)); }

    Layout layout_for(double e, double margin, double exponent) const {
        const bool allowed = w(std::max(r_wmin_, 1e-300)) < e;
        const double turning = allowed ? outer_crossing(e) : r_wmin_;
        const double r_max = std::max(outer_crossing(e + margin), wkb_extent(e, turning, exponent));
        double r_match = allowed ? turning : std::max(r_wmin_, 0.25 * r_max);
        r_match = std::min(r_match, 0.9 * r_max);
        return {r_max, r_match, std::sqrt(std::max(1.0, std::abs(e)))};
    }

    double left_phase(double e, const Layout& lay) const {
        double r0 = 0.0;
        double theta = 0.0;
        if (red_.origin == Origin::neumann) {
            theta = 0.5 * kPi;
        } else if (red_.centrifugal != 0.0 || coulomb_ != 0.0) {
            r0 = 1e-7 * std::min(lay.r_match, 1.0);
            const double s = red_.lambda + 1.0;
            theta = std::atan(lay.scale / (s / r0 + coulomb_ / (2.0 * s)));
        }
        integrate(theta, r0, lay.r_match, e, lay.scale);
        return theta;
    }

    double right_phase(double e, const Layout& lay) const {
        const double kappa = std::sqrt(std::max(w(lay.r_max) - e, 0.0));
        double theta = kPi - std::atan2(lay.scale, kappa);
        integrate(theta, lay.r_max, lay.r_match, e, lay.scale);
        return theta;
    }

    double mismatch(double e, const Layout& lay) const { return left_phase(e, lay) - right_phase(e, lay); }

    double mismatch(double e) const { return mismatch(e, layout_for(e, cfg_.tail_margin, cfg_.tail_exponent)); }

    int count_nodes(double e, const Layout& lay) const {
        const double left = left_phase(e, lay);
        const double right = right_phase(e, lay);
        const int left_nodes = static_cast<int>(std::floor(left / kPi));
        // Zeros in (r_match, r_max): multiples of π strictly between the phases.
        const int right_nodes = right < 0.0 ? static_cast<int>(std::floor(-right / kPi)) + 1 : 0;
        return left_nodes + right_nodes;
    }

private:
    void integrate(double& theta, double from, double to, double e, double scale) const {
        auto rhs = [&](const double& th, double& dth, double r) {
            const double s = std::sin(th);
            const double c = std::cos(th);
            dth = scale * c * c + (e - w(r)) / scale * s * s;
        };
        using Stepper = odeint::runge_kutta_fehlberg78<double, double, double, double, odeint::vector_space_algebra>;
        // Phases start near 1e-7 at a singular origin, so the absolute part must be much tighter.
        auto stepper = odeint::make_controlled<Stepper>(1e-6 * cfg_.ode_tol, cfg_.ode_tol);
        const double dt = 1e-3 * (to - from);
        try {
            odeint::integrate_adaptive(stepper, rhs, theta, from, to, dt);
        } catch (const odeint::step_adjustment_error& ex) {
            throw ConvergenceError(std::string("radial solver: phase integration failed: ") + ex.what(), from, to);
        }
        if (!std::isfinite(theta)) throw ConvergenceError("radial solver: non-finite phase", from, to);
    }

    // Minimum of W. W is unimodal: r³W' = Σ a q r^(q+2) - 2Λ(Λ+1) is increasing.
    double locate_w_minimum() const {
        if (red_.centrifugal <= 0.0) return 0.0;
        auto g = [&](double r) {
            double s = -2.0 * red_.centrifugal;
            for (const auto& t : pot_.terms()) s += t.a * t.q * std::pow(r, t.q + 2.0);
            return s;
        };
        return detail::solve_increasing_positive(g, 1.0, 1e-12, 200, "radial solver: centrifugal minimum");
    }

    // Radius beyond `from` where the WKB decay exponent ∫ sqrt(W - e) dr reaches `target`.
    double wkb_extent(double e, double from, double target) const {
        auto kappa = [&](double r) { return std::sqrt(std::max(w(r) - e, 0.0)); };
        double r = std::max(from, 1e-12);
        double h = 1e-3 * std::max(r, 1e-3);
        double acc = 0.0;
        double k_prev = kappa(r);
        for (int i = 0; i < 100000 && acc < target; ++i) {
            const double k_next = kappa(r + h);
            acc += 0.5 * (k_prev + k_next) * h;
            r += h;
            k_prev = k_next;
            h = std::min(h * 1.05, 0.02 / std::max(k_next, 1e-3) + 1e-3 * r);
        }
        if (acc < target) throw ConvergenceError("radial solver: wavefunction tail does not decay", from, r);
        return r;
    }

    // Largest r with W(r) = level, on the increasing branch of W.
    double outer_crossing(double level) const {
        double lo = std::max(r_wmin_, 0.0);
        if (lo > 0.0 && w(lo) >= level) return lo;
        double hi = std::max(1.0, 2.0 * lo);
        int guard = 0;
        while (w(hi) < level) {
            lo = hi;
            hi *= 2.0;
            if (++guard > 200) throw ConvergenceError("radial solver: could not place r_max", lo, hi);
        }
        auto f = [&](double r) { return w(r) - level; };
        const double flo = lo > 0.0 ? f(lo) : -1.0;
        return detail::solve_increasing(f, lo, hi, flo, f(hi), 0.0, 1e-10, 200, "radial solver: turning point");
    }

    const PotentialSpec& pot_;
    ReducedProblem red_;
    SolverConfig cfg_;
    double coulomb_;
    double r_wmin_;
};

}  // namespace

RadialSolution solve_radial(const PotentialSpec& pot_in, const StateIndex& state, const SolverConfig& cfg) {
    state.validate();
    cfg.validate();
    const PotentialSpec pot = pot_in.dimension() == state.d ? pot_in : pot_in.with_dimension(state.d);
    const ReducedProblem red = reduce(state);
    const Shooter shooter(pot, red, cfg);
    const double target = red.radial_nodes * kPi;

    // The operator is non-negative unless a Coulomb term is present.
    const double coulomb = pot.coulomb_coupling();
    double lo = coulomb == 0.0 ? 0.0 : -(coulomb * coulomb) - 1.0;
    int iter = 0;
    while (shooter.mismatch(lo) >= target) {
        lo -= 2.0 * (std::abs(lo) + 1.0);
        if (++iter > cfg.max_iter) throw ConvergenceError("radial solver: no lower bracket", lo, lo);
    }
    auto above = [&](double e) { return shooter.mismatch(e) - target; };
    auto [blo, bhi] = detail::expand_upward(above, lo, 1.0, cfg.max_iter, "radial solver: upper bracket");

    // Narrow until only the requested eigenvalue can lie inside.
    double d_lo = shooter.mismatch(blo);
    double d_hi = shooter.mismatch(bhi);
    while (!(d_lo > target - kPi && d_hi < target + kPi)) {
        const double mid = 0.5 * (blo + bhi);
        const double d_mid = shooter.mismatch(mid);
        (d_mid < target ? blo : bhi) = mid;
        (d_mid < target ? d_lo : d_hi) = d_mid;
        if (++iter > cfg.max_iter) throw ConvergenceError("radial solver: could not isolate eigenvalue", blo, bhi);
    }

    double margin = cfg.tail_margin;
    double exponent = cfg.tail_exponent;
    constexpr int kMaxEnlargements = 8;
    for (int attempt = 0;; ++attempt) {
        const auto lay = shooter.layout_for(bhi, margin, exponent);
        auto g = [&](double e) { return shooter.mismatch(e, lay) - target; };
        double g_lo = g(blo), g_hi = g(bhi);
        // Layout of the upper end can shift the phase slightly; re-widen if so.
        while (g_lo > 0.0) {
            blo -= (bhi - blo);
            g_lo = g(blo);
            if (++iter > cfg.max_iter) throw ConvergenceError("radial solver: bracket lost", blo, bhi);
        }
        const double e = detail::solve_increasing(g, blo, bhi, g_lo, g_hi, 0.05 * cfg.abs_tol, 1e-15, cfg.max_iter,
                                                  "radial solver: refinement");

        // Tail check: extend the domain and see whether the phase moves.
        Shooter::Layout wider = lay;
        wider.r_max *= 1.25;
        const double h = std::max(1e-6, 1e-6 * std::abs(e));
        const double slope = (g(e + h) - g(e - h)) / (2.0 * h);
        const double shift = std::abs(shooter.right_phase(e, wider) - shooter.right_phase(e, lay));
        if (!(slope > 0.0)) throw ConvergenceError("radial solver: phase mismatch not increasing", blo, bhi);
        if (shift / slope > 0.5 * cfg.abs_tol) {
            if (attempt == kMaxEnlargements)
                throw ConvergenceError("radial solver: tail contamination persists after domain enlargement", blo, bhi);
            margin *= 2.0;
            exponent *= 1.5;
            continue;
        }

        int nodes = shooter.count_nodes(e, lay);
        if (state.d == 1) nodes = 2 * nodes + (state.n % 2 == 0 ? 1 : 0);
        return {e, nodes, lay.r_max, lay.r_match};
    }
}

double eigenvalue(const PotentialSpec& pot, const StateIndex& state, const SolverConfig& cfg) {
    return solve_radial(pot, state, cfg).energy;
}

double pure_power_eigenvalue(double q, double v, const StateIndex& state, const SolverConfig& cfg) {
    state.validate();
    if (q == -1.0) {
        if (!(v < 0.0)) throw DomainError("pure power: q = -1 needs v < 0 for bound states");
        const double p = p_coulomb(state);
        return -v * v / (4.0 * p * p);
    }
    if (!(q > 0.0)) throw DomainError("pure power: exponent must be > 0 or equal to -1");
    if (!(v > 0.0)) throw DomainError("pure power: coupling must be > 0");
    Extensions ext;
    ext.allow_fractional = q < 2.0;
    return eigenvalue(PotentialSpec(state.d, {{v, q}}, ext), state, cfg);
}

}  // namespace envbounds
