#pragma once

#include <boost/math/tools/toms748_solve.hpp>
#include <cmath>
#include <cstdint>
#include <string>

#include "envbounds/errors.hpp"

namespace envbounds::detail {

struct Bracket {
    double lo;
    double hi;
};

/// Root of an increasing function on [lo, hi] with f(lo) <= 0 <= f(hi).
/// Stops when the bracket is narrower than abs_tol + rel_tol * |x|.
template <class F>
double solve_increasing(F&& f, double lo, double hi, double flo, double fhi, double abs_tol, double rel_tol,
                        int max_iter, const char* what) {
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (!(flo < 0.0 && fhi > 0.0)) throw ConvergenceError(std::string(what) + ": root not bracketed", lo, hi);
    auto done = [&](double a, double b) { return std::abs(b - a) <= abs_tol + rel_tol * std::max(std::abs(a), std::abs(b)); };
    std::uintmax_t iters = static_cast<std::uintmax_t>(max_iter);
    auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, done, iters);
    if (!done(a, b)) throw ConvergenceError(std::string(what) + ": iteration cap reached", a, b);
    return 0.5 * (a + b);
}

/// Grows hi = lo + width * 2^k until f(hi) > 0. Returns the last
/// non-positive point and the first positive one.
template <class F>
Bracket expand_upward(F&& f, double lo, double width, int max_iter, const char* what) {
    double hi = lo + width;
    for (int i = 0; i < max_iter; ++i) {
        if (f(hi) > 0.0) return {lo, hi};
        lo = hi;
        width *= 2.0;
        hi = lo + width;
        if (!std::isfinite(hi)) break;
    }
    throw ConvergenceError(std::string(what) + ": could not bracket root", lo, hi);
}

/// Root of an increasing function of x > 0, searched geometrically from x0.
template <class F>
double solve_increasing_positive(F&& f, double x0, double rel_tol, int max_iter, const char* what) {
    double lo = x0, hi = x0;
    double flo = f(lo), fhi = flo;
    if (flo == 0.0) return x0;
    int i = 0;
    if (flo > 0.0) {
        do {
            hi = lo;
            fhi = flo;
            lo *= 0.5;
            flo = f(lo);
        } while (flo > 0.0 && ++i < 2000 && lo > 0.0);
    } else {
        do {
            lo = hi;
            flo = fhi;
            hi *= 2.0;
            fhi = f(hi);
        } while (fhi < 0.0 && ++i < 2000 && std::isfinite(hi));
    }
    if (!(flo <= 0.0 && fhi >= 0.0)) throw ConvergenceError(std::string(what) + ": could not bracket root", lo, hi);
    return solve_increasing(f, lo, hi, flo, fhi, 0.0, rel_tol, max_iter, what);
}

}  // namespace envbounds::detail
