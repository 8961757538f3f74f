#pragma once

// Independent eigenvalue oracle: second-order finite differences on a uniform
// grid with Dirichlet walls, one Richardson step. Shares no code with the
// shooting solver.

#include <Eigen/Eigenvalues>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "envbounds/potential.hpp"

namespace oracle {

inline double fd_level(const std::function<double(double)>& w, double a, double b, int points, int index) {
    const double h = (b - a) / (points + 1);
    Eigen::VectorXd diag(points);
    Eigen::VectorXd off = Eigen::VectorXd::Constant(points - 1, -1.0 / (h * h));
    for (int i = 0; i < points; ++i) diag[i] = 2.0 / (h * h) + w(a + (i + 1) * h);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
    return es.eigenvalues()[index];
}

// d = 1 uses the whole line [-L, L]; otherwise the reduced radial problem on
// (0, L]. Only integer Λ = l + (d-3)/2 >= 0 is supported for d >= 2 so the
// grid sees a regular solution at the origin.
inline double fd_eigenvalue(const envbounds::PotentialSpec& pot, const envbounds::StateIndex& s, double L,
                            int points = 3000) {
    std::function<double(double)> w;
    double a = 0.0;
    if (s.d == 1) {
        w = [&pot](double x) { return pot(std::abs(x)); };
        a = -L;
    } else {
        const double lam = s.l + 0.5 * (s.d - 3);
        if (lam < 0.0 || lam != std::floor(lam)) throw std::invalid_argument("fd_eigenvalue: need integer Λ >= 0");
        const double c = lam * (lam + 1.0);
        w = [&pot, c](double r) { return pot(r) + c / (r * r); };
    }
    const double coarse = fd_level(w, a, L, points, s.n - 1);
    const double fine = fd_level(w, a, L, 2 * points + 1, s.n - 1);
    return (4.0 * fine - coarse) / 3.0;
}

}  // namespace oracle
