#pragma once

#include <span>
#include <string>
#include <vector>

namespace envbounds {

/// Quantum labels of one discrete eigenvalue of -Δ + V(r) in d dimensions.
///
/// n >= 1 is the principal index (n - 1 radial nodes). For d = 1 the
/// eigenvalues of the whole line are numbered by n with both parities
/// interleaved, and l must be 0.
struct StateIndex {
    int n = 1;
    int l = 0;
    int d = 3;

    /// Throws DomainError when the labels are inconsistent.
    void validate() const;

    bool operator==(const StateIndex&) const = default;
    auto operator<=>(const StateIndex&) const = default;
};

/// One power-law term a * r^q.
struct PowerTerm {
    double a = 0.0;
    double q = 2.0;

    bool operator==(const PowerTerm&) const = default;
};

/// Opt-in regimes outside the certified class (all a >= 0, all q >= 2).
struct Extensions {
    bool allow_coulomb = false;     ///< a term with q = -1 and a < 0
    bool allow_fractional = false;  ///< terms with 0 < q < 2

    bool operator==(const Extensions&) const = default;
};

/// Largest exponent the solver accepts.
inline constexpr double kMaxExponent = 20.0;

/// The operator -Δ + Σ a_i r^{q_i} in d dimensions, terms sorted strictly
/// increasing in q.
class PotentialSpec {
public:
    /// Validates and sorts the terms. Throws DomainError for malformed
    /// input and NonConfiningError when no term confines the particle.
    PotentialSpec(int d, std::vector<PowerTerm> terms, Extensions ext = {});

    int dimension() const noexcept { return d_; }
    std::span<const PowerTerm> terms() const noexcept { return terms_; }
    const Extensions& extensions() const noexcept { return ext_; }

    /// Terms with a nonzero coupling, in increasing q.
    std::vector<PowerTerm> active_terms() const;

    /// True when every active term has a > 0 and q >= 2.
    bool certified() const;

    /// Coupling of the q = -1 term, or 0 when there is none.
    double coulomb_coupling() const;

    double operator()(double r) const;

    /// Same potential in another dimension.
    PotentialSpec with_dimension(int d) const;

    bool operator==(const PotentialSpec&) const = default;

private:
    int d_;
    std::vector<PowerTerm> terms_;
    Extensions ext_;
};

std::string to_string(const StateIndex& s);

}  // namespace envbounds
