#pragma once

#include <deltakit/piecewise.hpp>
#include <deltakit/zariski.hpp>

#include <functional>
#include <optional>

namespace deltakit {

/// Bilinear expansion with ring-valued coefficient vectors.
template <class R>
R pair_expand(const SurfaceLattice& lat, const std::vector<R>& a, const std::vector<R>& b) {
    R out{};
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out += a[i] * b[j] * R(lat.form(i, j));
    return out;
}

/// Pairing of a polynomial-coefficient class with a fixed class.
Polynomial pair_poly(const LatticePtr& lat, const std::vector<Polynomial>& a,
                     const DivisorClass& b);

/// One chamber of a parameter sweep: on [lo, hi] the negative support is
/// constant, the coefficients are polynomials in the parameter, and
/// vol = P^2 (or P^3 on a threefold) exactly.
struct Chamber {
    Rat lo, hi;
    std::vector<Polynomial> positive;
    std::map<std::string, Polynomial> negative_coeffs;
    Polynomial vol;

    std::vector<std::string> support() const;
};

/// Chambers tiling [0, tau] with matching endpoints; vol and every negative
/// coefficient continuous across interior walls.
struct ChamberedDecomposition {
    std::vector<Chamber> chambers;
    Rat tau = Rat(0);
    bool vol_vanishes_at_tau = true;

    const Chamber& chamber_at(const Rat& u) const; // left piece owns shared walls
    Rat vol_at(const Rat& u) const;
    PiecewisePoly vol_piecewise() const;
    std::vector<std::vector<std::string>> signature() const;
    /// Exact wall checks: tiling, continuity of vol and coefficients.
    void validate() const;
};

/// Sweeps D(u) = A - uB on a rank-2 threefold from u = 0 to the
/// pseudo-effective threshold. A hint, when present, must match the computed
/// threshold exactly.
ChamberedDecomposition sweep_threefold(const ThreefoldClass& a, const ThreefoldClass& b,
                                       const std::optional<Rat>& tau_hint = std::nullopt);

/// Sweeps D(v) = A - vC on a surface at a fixed outer parameter. Walls are
/// located by support-change fixpoints and solved exactly from the linear
/// vanishing conditions; the sweep ends where the volume hits zero.
ChamberedDecomposition sweep_surface_at(const DivisorClass& a, const DivisorClass& c,
                                        const std::vector<CurveRecord>& curves);

/// Smallest root of the final chamber's volume at or beyond its lower wall.
/// Throws NoThreshold when there is none, ValidationError when a hint
/// disagrees.
Rat pseff_threshold(const Chamber& last, const std::optional<Rat>& hint = std::nullopt);

/// Reconstructs an exactly-sampleable piecewise-polynomial function. Each
/// interval between consecutive candidate walls is interpolated from
/// degree_cap + 1 samples and verified at one extra sample; a mismatch
/// throws DegreeCapExceeded.
PiecewisePoly outer_reconstruct(const std::function<Rat(const Rat&)>& sampler, const Rat& lo,
                                const Rat& hi, std::vector<Rat> candidate_walls, int degree_cap);

} // namespace deltakit
