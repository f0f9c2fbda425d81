#pragma once

#include <deltakit/polynomial.hpp>

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace deltakit {

/// Named-basis intersection lattice of a surface: generator names plus the
/// exact symmetric bilinear form. Lattices flagged "hodge" must have
/// signature (1, n-1), validated by exact symmetric reduction; lattices built
/// from curve bundles may skip the flag.
class SurfaceLattice {
public:
    static std::shared_ptr<const SurfaceLattice> make(std::vector<std::string> names,
                                                      std::vector<std::vector<Rat>> gram,
                                                      bool hodge = false);

    std::size_t rank() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_[i]; }
    std::size_t index(std::string_view name) const; // throws UnknownClass
    bool has(std::string_view name) const;
    const Rat& form(std::size_t i, std::size_t j) const { return gram_[i][j]; }
    const std::vector<std::vector<Rat>>& gram() const { return gram_; }
    bool hodge() const { return hodge_; }

    bool same_structure(const SurfaceLattice& o) const {
        return names_ == o.names_ && gram_ == o.gram_;
    }

private:
    SurfaceLattice(std::vector<std::string> names, std::vector<std::vector<Rat>> gram, bool hodge)
        : names_(std::move(names)), gram_(std::move(gram)), hodge_(hodge) {}

    std::vector<std::string> names_;
    std::vector<std::vector<Rat>> gram_;
    bool hodge_ = false;
};

using LatticePtr = std::shared_ptr<const SurfaceLattice>;

/// Signature (positives, negatives, zeros) of a symmetric matrix, by exact
/// congruence diagonalization.
struct Signature {
    int positive = 0;
    int negative = 0;
    int zero = 0;
};
Signature symmetric_signature(std::vector<std::vector<Rat>> m);

/// Coefficient vector over a lattice basis.
struct DivisorClass {
    LatticePtr lattice;
    std::vector<Rat> coeffs;

    DivisorClass() = default;
    DivisorClass(LatticePtr lat, std::vector<Rat> c);

    static DivisorClass zero(const LatticePtr& lat);
    static DivisorClass generator(const LatticePtr& lat, std::string_view name);

    bool is_zero() const;
    DivisorClass& operator+=(const DivisorClass& o);
    DivisorClass& operator-=(const DivisorClass& o);
    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    DivisorClass scaled(const Rat& s) const;
    friend DivisorClass operator*(const Rat& s, const DivisorClass& a) { return a.scaled(s); }

    std::string str() const;
};

/// Bilinear form value. Throws LatticeMismatch when the classes live on
/// different lattices.
Rat pair(const DivisorClass& a, const DivisorClass& b);

/// A curve on a surface, possibly a symmetric bundle of interchangeable
/// components (bundle_size > 1). f_mult is the pairing with the exceptional
/// curve F when the curve lives on a blown-up surface.
struct CurveRecord {
    std::string name;
    DivisorClass cls;
    bool negative_candidate = false;
    int bundle_size = 1;
    int f_mult = 0;
};

/// Point blow-up f: S~ -> S. The new lattice gains a final generator F with
/// F^2 = -1, orthogonal to every pulled-back class; a curve with multiplicity
/// m at the blown-up point transforms to f*C - mF.
struct BlowUp {
    LatticePtr blown;
    std::string f_name;

    DivisorClass pullback(const DivisorClass& c) const;
    DivisorClass strict_transform(const DivisorClass& c, int mult) const;
    DivisorClass f_class() const { return DivisorClass::generator(blown, f_name); }
};

BlowUp blow_up_point(const LatticePtr& lat, const std::map<std::string, int>& mults,
                     const std::vector<CurveRecord>& curves, const std::string& f_name = "F");

/// Strict transforms of the given curves under the blow-up; each transformed
/// record keeps its name, gains f_mult = its multiplicity, and becomes a
/// negativity candidate when its self-intersection drops below zero.
std::vector<CurveRecord> transform_curves(const BlowUp& bl,
                                          const std::vector<CurveRecord>& curves,
                                          const std::map<std::string, int>& mults);

} // namespace deltakit
