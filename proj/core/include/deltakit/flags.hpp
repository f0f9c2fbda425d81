#pragma once

#include <deltakit/sweep.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace deltakit {

/// Normalized volume integral of a threefold sweep:
/// (1/(-K)^3) * integral of vol over [0, tau].
Rat s_divisor(const ChamberedDecomposition& cd, const Rat& minus_k_cubed);

/// How a threefold divisor's negative-part coefficient restricts to the
/// chosen surface: the receiving curve and its multiplicity at the blown-up
/// point.
struct NRestrictionEntry {
    std::string threefold_class;
    std::string curve;
    int mult_at_p = 0;
};

/// Shared geometric data for the flag functionals.
struct FlagGeometry {
    AlgebraPtr algebra;
    ChamberedDecomposition tf;
    RestrictionMatrix restriction;
    LatticePtr surface;
    std::vector<CurveRecord> curves;
    Rat minus_k_cubed;
};

/// Local intersection multiplicities (curve . F)_O at a chosen point O of the
/// exceptional curve. Only finitely many points carry a nonzero profile; the
/// all-zero profile covers every other point.
struct PointProfile {
    std::string name;
    std::map<std::string, int> local_mults;
};

struct CurveFlagResult {
    Rat first_term;  // (3/(-K)^3) integral of d(u) (P(u)|_S)^2
    Rat double_term; // (3/(-K)^3) double integral of vol(P(u)|_S - vC)
    Rat total;
};

/// Flag invariant of a curve inside the surface. d(u) is assembled from the
/// declared per-class order bounds, so the result is a certified upper bound
/// whenever any bound is not exact.
CurveFlagResult s_curve_flag(const FlagGeometry& g, const std::string& flag_curve,
                             const std::map<std::string, Rat>& ord_bounds);

/// Point flag via the blow-up of the chosen point: S(W;F), the per-point
/// functionals F_O and S(W;O), with all double integrals realized as exact
/// inner sweeps plus verified outer reconstruction.
class PointFlag {
public:
    PointFlag(FlagGeometry g, std::map<std::string, int> blow_mults,
              std::vector<NRestrictionEntry> n_restrictions);

    Rat first_term() const { return first_term_; }
    Rat vol_term();
    Rat quad_term();
    Rat s_point_flag_F() { return first_term_ + vol_term(); }
    Rat f_o_term(const PointProfile& o);
    Rat s_point_flag_O(const PointProfile& o) { return quad_term() + f_o_term(o); }

    /// Refined outer chambers (threefold walls plus inner-wall crossings).
    const std::vector<std::pair<Rat, Rat>>& outer_chambers() const { return chambers_; }
    /// P~(u,v).F on one inner sweep, per inner chamber.
    std::vector<Polynomial> pdotf_at(const Rat& u);
    const ChamberedDecomposition& inner_at(const Rat& u);
    const BlowUp& blow_up() const { return blow_; }

private:
    Rat integrate_inner(const std::function<Rat(const Rat&, const ChamberedDecomposition&)>& g);
    void refine();

    FlagGeometry g_;
    std::map<std::string, int> blow_mults_;
    std::vector<NRestrictionEntry> n_restr_;
    BlowUp blow_;
    std::vector<CurveRecord> blown_curves_;
    DivisorClass f_class_;
    Rat first_term_;
    std::vector<std::pair<Rat, Rat>> chambers_;
    std::map<Rat, ChamberedDecomposition> cache_;
    std::optional<Rat> vol_term_, quad_term_;
    static constexpr int kDegreeCap = 6;
};

/// Certified verdict for one center.
struct Verdict {
    Rat s_divisor_value;
    std::optional<Rat> s_curve;
    std::optional<Rat> s_point_f;
    std::map<std::string, Rat> s_point_o;
    bool certified = false;
};

/// Curve case: certified iff S_X(S) < 1 and S(W;C) < 1, both strict and exact.
Verdict certify_curve(const Rat& s_div, const Rat& s_wc);

/// Point case: certified iff S_X(S) < 1, S(W;F) < 2, and every profile's
/// S(W;O) < 1. Throws IncompleteProfiles when no profiles are supplied.
Verdict certify_point(const Rat& s_div, const Rat& s_wf,
                      const std::map<std::string, Rat>& s_o);

} // namespace deltakit
