#pragma once

#include <deltakit/flags.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace deltakit {

/// Declarative description of one certificate computation: the threefold
/// intersection data, the sweep ray, the restriction to a surface, the
/// surface lattice with its curves, a curve or point flag, and the expected
/// exact fractions used as regression anchors.
struct Scenario {
    struct Threefold {
        std::array<std::string, 2> basis;
        std::array<Rat, 4> cubes; // H^3, H^2 E, H E^2, E^3
        std::map<std::string, std::array<Rat, 2>> relations;
        std::vector<ThreefoldAlgebra::Wall> walls;
        std::string minus_k;
        Rat minus_k_cubed;
    };

    struct Curve {
        std::string name;
        std::vector<Rat> coeffs;
        bool negative_candidate = false;
        int bundle_size = 1;
        int mult_p = 0; // multiplicity at the blown-up point
    };

    struct Surface {
        std::vector<std::string> basis;
        std::vector<std::vector<Rat>> gram;
        bool hodge = false;
        std::vector<Curve> curves;
    };

    enum class FlagKind { none, curve, point };

    struct Profile {
        std::string name;
        std::map<std::string, int> mults;
    };

    /// A catalog reference value that the computation is known to deviate
    /// from, with the reason; surfaced as a report note.
    struct ReferenceNote {
        std::string quantity; // computed-value key, may be empty for prose notes
        std::optional<Rat> reference_value;
        std::string note;
    };

    std::string name;
    std::string description;
    Threefold threefold;
    std::string ray; // relation name of B in -K - uB
    std::optional<Rat> tau_hint;
    std::optional<RestrictionMatrix> restriction;
    std::optional<Surface> surface;
    FlagKind flag = FlagKind::none;
    std::string flag_curve;                      // curve case
    std::map<std::string, Rat> ord_bounds;       // curve case
    std::vector<NRestrictionEntry> n_restrictions;
    std::vector<Profile> profiles;               // point case
    std::map<std::string, Rat> expected;
    std::vector<ReferenceNote> reference_notes;
    std::vector<std::string> assumptions; // geometric preconditions, recorded not verified

    AlgebraPtr make_algebra() const;
    LatticePtr make_surface() const;
    std::vector<CurveRecord> make_curves(const LatticePtr& lat) const;
    std::map<std::string, int> blow_mults() const;
};

/// Structural validation: every referenced name resolves, the cube constants
/// reproduce the declared (-K)^3, wall functionals vanish on exactly one nef
/// generator, candidate curves have negative self-intersection, profile
/// multiplicities respect the blow-up data. Throws ValidationError with the
/// offending field.
void validate_scenario(const Scenario& s);

/// JSON round trip. Fractions serialize as "p/q" strings; see the README for
/// the schema. Parse failures throw ParseError naming the field.
Scenario scenario_from_json_text(const std::string& text, const std::string& origin = "<text>");
std::string scenario_to_json(const Scenario& s);

Scenario load_scenario(const std::string& path);
void save_scenario(const Scenario& s, const std::string& path);

bool scenario_equal(const Scenario& a, const Scenario& b);

} // namespace deltakit
