#include "envbounds/potential.hpp"

#include <algorithm>
#include <cmath>

#include "envbounds/errors.hpp"

namespace envbounds {

void StateIndex::validate() const {
    if (n < 1) throw DomainError("state: n must be >= 1");
    if (l < 0) throw DomainError("state: l must be >= 0");
    if (d < 1) throw DomainError("state: d must be >= 1");
    if (d == 1 && l != 0) throw DomainError("state: d = 1 requires l = 0 (n numbers both parities)");
}

std::string to_string(const StateIndex& s) {
    return "(n=" + std::to_string(s.n) + ", l=" + std::to_string(s.l) + ", d=" + std::to_string(s.d) + ")";
}

PotentialSpec::PotentialSpec(int d, std::vector<PowerTerm> terms, Extensions ext)
    : d_(d), terms_(std::move(terms)), ext_(ext) {
    if (d_ < 1) throw DomainError("potential: dimension must be >= 1");
    if (terms_.empty()) throw NonConfiningError("potential: no confining term");

    for (const auto& t : terms_) {
        if (!std::isfinite(t.a) || !std::isfinite(t.q))
            throw DomainError("potential: non-finite coefficient or exponent");
        if (t.q > kMaxExponent)
            throw DomainError("potential: exponent " + std::to_string(t.q) + " exceeds the supported cap of 20");
        if (t.q == -1.0) {
            if (!ext_.allow_coulomb) throw DomainError("potential: q = -1 requires the allow_coulomb extension");
            if (t.a > 0.0) throw DomainError("potential: Coulomb term must be attractive (a < 0)");
            if (d_ == 1 && t.a != 0.0) throw DomainError("potential: Coulomb term unsupported in d = 1");
        } else if (t.q <= 0.0) {
            throw DomainError("potential: exponent " + std::to_string(t.q) + " not supported (need q >= 2, q = -1 or 0 < q < 2)");
        } else if (t.q < 2.0) {
            if (!ext_.allow_fractional)
                throw DomainError("potential: 0 < q < 2 requires the allow_fractional extension");
        }
        if (t.q > 0.0 && t.a < 0.0) throw DomainError("potential: couplings of positive powers must be >= 0");
    }

    std::ranges::sort(terms_, {}, &PowerTerm::q);
    for (std::size_t i = 1; i < terms_.size(); ++i)
        if (terms_[i].q == terms_[i - 1].q) throw DomainError("potential: repeated exponent " + std::to_string(terms_[i].q));

    const auto active = active_terms();
    if (active.empty() || !(active.back().a > 0.0 && active.back().q > 0.0))
        throw NonConfiningError("potential: no confining term");
}

std::vector<PowerTerm> PotentialSpec::active_terms() const {
    std::vector<PowerTerm> out;
    std::ranges::copy_if(terms_, std::back_inserter(out), [](const PowerTerm& t) { return t.a != 0.0; });
    return out;
}

bool PotentialSpec::certified() const {
    return std::ranges::all_of(active_terms(), [](const PowerTerm& t) { return t.a > 0.0 && t.q >= 2.0; });
}

double PotentialSpec::coulomb_coupling() const {
    for (const auto& t : terms_)
        if (t.q == -1.0) return t.a;
    return 0.0;
}

double PotentialSpec::operator()(double r) const {
    double v = 0.0;
    for (const auto& t : terms_) {
        if (t.a == 0.0) continue;
        v += t.q == 2.0 ? t.a * r * r : t.a * std::pow(r, t.q);
    }
    return v;
}

PotentialSpec PotentialSpec::with_dimension(int d) const { return PotentialSpec(d, terms_, ext_); }

}  // namespace envbounds
