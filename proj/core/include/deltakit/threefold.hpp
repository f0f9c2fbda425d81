#pragma once

#include <deltakit/lattice.hpp>

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace deltakit {

/// Rank-2 intersection algebra of a threefold: two basis divisors (H, E),
/// the four symmetric trilinear cube constants, named derived classes as
/// combinations of the basis, and the extremal-curve functionals spanning the
/// nef-cone walls. Every other triple product derives by multilinear
/// expansion over the cubes.
class ThreefoldAlgebra {
public:
    struct Wall {
        std::string curve;            // name of the extremal curve
        std::array<Rat, 2> pairing;   // its pairing with each basis divisor
        std::string nef_generator;    // relation name the functional vanishes on
        std::string effective;        // relation name of the extremal effective class
    };

    static std::shared_ptr<const ThreefoldAlgebra>
    make(std::array<std::string, 2> basis, std::array<Rat, 4> cubes,
         std::map<std::string, std::array<Rat, 2>> relations, std::vector<Wall> walls);

    const std::array<std::string, 2>& basis() const { return basis_; }
    /// Cube constant for the monomial H^(3-k) E^k, k = 0..3.
    const Rat& cube(int k) const { return cubes_[static_cast<std::size_t>(k)]; }
    const std::map<std::string, std::array<Rat, 2>>& relations() const { return relations_; }
    const std::vector<Wall>& walls() const { return walls_; }
    const std::array<Rat, 2>& relation(const std::string& name) const;

private:
    ThreefoldAlgebra() = default;

    std::array<std::string, 2> basis_;
    std::array<Rat, 4> cubes_;
    std::map<std::string, std::array<Rat, 2>> relations_;
    std::vector<Wall> walls_;
};

using AlgebraPtr = std::shared_ptr<const ThreefoldAlgebra>;

/// Divisor class on a threefold, as coefficients over the 2-element basis.
struct ThreefoldClass {
    AlgebraPtr algebra;
    std::array<Rat, 2> coeffs;

    ThreefoldClass() = default;
    ThreefoldClass(AlgebraPtr a, std::array<Rat, 2> c)
        : algebra(std::move(a)), coeffs(std::move(c)) {}

    bool is_zero() const { return coeffs[0].is_zero() && coeffs[1].is_zero(); }
    ThreefoldClass& operator+=(const ThreefoldClass& o);
    ThreefoldClass& operator-=(const ThreefoldClass& o);
    friend ThreefoldClass operator+(ThreefoldClass a, const ThreefoldClass& b) { return a += b; }
    friend ThreefoldClass operator-(ThreefoldClass a, const ThreefoldClass& b) { return a -= b; }
    ThreefoldClass scaled(const Rat& s) const;

    /// Pairing with an extremal-curve functional.
    Rat pair_wall(const ThreefoldAlgebra::Wall& w) const {
        return coeffs[0] * w.pairing[0] + coeffs[1] * w.pairing[1];
    }

    std::string str() const;
};

/// Basis-coefficient vector of a registered derived class. Throws
/// UnknownClass for unregistered names.
ThreefoldClass expand_relation(const AlgebraPtr& algebra, const std::string& name);

/// Symmetric trilinear form by multilinear expansion over the four cube
/// constants. Throws LatticeMismatch across algebras.
Rat triple(const ThreefoldClass& a, const ThreefoldClass& b, const ThreefoldClass& c);

/// Trilinear expansion with ring-valued coefficients (used with Polynomial
/// coefficients for volume functions).
template <class R>
R triple_expand(const ThreefoldAlgebra& alg, const std::array<R, 2>& a, const std::array<R, 2>& b,
                const std::array<R, 2>& c) {
    R out{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                out += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)] *
                       c[static_cast<std::size_t>(k)] * R(alg.cube(i + j + k));
    return out;
}

/// Linear restriction of a threefold class to a surface lattice. The matrix
/// rows give the image of each basis divisor in the surface basis.
using RestrictionMatrix = std::array<std::vector<Rat>, 2>;

DivisorClass restrict_class(const ThreefoldClass& c, const RestrictionMatrix& m,
                            const LatticePtr& target);

/// Restriction with polynomial coefficients (a chamber's positive part as a
/// function of the sweep parameter).
std::vector<Polynomial> restrict_poly(const std::array<Polynomial, 2>& coeffs,
                                      const RestrictionMatrix& m, std::size_t target_rank);

} // namespace deltakit
