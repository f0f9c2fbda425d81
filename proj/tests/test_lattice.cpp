#include "test_util.hpp"

#include <deltakit/detail/linsolve.hpp>
#include <deltakit/lattice.hpp>
#include <deltakit/sweep.hpp>
#include <deltakit/threefold.hpp>

#include <doctest.h>

#include <random>

using namespace deltakit;
using testutil::rand_rat;

namespace {

LatticePtr ruled_lattice(int e) {
    return SurfaceLattice::make({"C0", "l"}, {{Rat(-e), Rat(1)}, {Rat(1), Rat(0)}}, true);
}

LatticePtr plane_lattice() {
    std::vector<std::vector<Rat>> gram(6, std::vector<Rat>(6, Rat(0)));
    gram[0][0] = Rat(1);
    for (int i = 1; i < 6; ++i)
        gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Rat(-1);
    return SurfaceLattice::make({"L", "e1", "e2", "e3", "e4", "e5"}, gram, true);
}

DivisorClass cls(const LatticePtr& lat, std::vector<long long> c) {
    std::vector<Rat> r;
    for (long long v : c)
        r.emplace_back(v);
    return DivisorClass(lat, std::move(r));
}

} // namespace

TEST_CASE("bilinear form on named bases") {
    LatticePtr lat = ruled_lattice(4);
    DivisorClass c0 = DivisorClass::generator(lat, "C0");
    CHECK(pair(c0, c0) == Rat(-4));
    CHECK(pair(c0, DivisorClass::zero(lat)) == Rat(0));

    // Proper transforms of the two quintic sums meet in 5 points.
    LatticePtr plane = plane_lattice();
    std::vector<CurveRecord> curves;
    curves.push_back({"Z", cls(plane, {5, -1, -1, -1, -1, -1}), false, 5, 0});
    curves.push_back({"Zp", cls(plane, {10, -4, -4, -4, -4, -4}), false, 5, 0});
    BlowUp bl = blow_up_point(plane, {{"Z", 5}, {"Zp", 5}}, curves);
    DivisorClass zt = bl.strict_transform(curves[0].cls, 5);
    DivisorClass zpt = bl.strict_transform(curves[1].cls, 5);
    CHECK(pair(zt, zpt) == Rat(5));
    CHECK(pair(zt, zt) == Rat(-5));
    CHECK(pair(zpt, zpt) == Rat(-5));
    CHECK(pair(zt, bl.f_class()) == Rat(5));

    LatticePtr other = ruled_lattice(2);
    CHECK_THROWS_AS(pair(c0, DivisorClass::generator(other, "C0")), LatticeMismatch);
}

TEST_CASE("pair is symmetric and bilinear") {
    LatticePtr lat = plane_lattice();
    std::mt19937_64 rng(17);
    for (int round = 0; round < 25; ++round) {
        std::vector<Rat> a, b, c;
        for (int i = 0; i < 6; ++i) {
            a.push_back(rand_rat(rng));
            b.push_back(rand_rat(rng));
            c.push_back(rand_rat(rng));
        }
        DivisorClass A(lat, a), B(lat, b), C(lat, c);
        const Rat s = rand_rat(rng);
        CHECK(pair(A, B) == pair(B, A));
        CHECK(pair(A + B, C) == pair(A, C) + pair(B, C));
        CHECK(pair(A.scaled(s), B) == s * pair(A, B));
    }
}

TEST_CASE("hodge flag demands signature (1, n-1)") {
    CHECK_NOTHROW(plane_lattice());
    CHECK_NOTHROW(ruled_lattice(0));
    CHECK_NOTHROW(ruled_lattice(10));
    // Two positive directions.
    CHECK_THROWS_AS(
        SurfaceLattice::make({"a", "b"}, {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}, true),
        ValidationError);
    // Degenerate direction.
    CHECK_THROWS_AS(
        SurfaceLattice::make({"a", "b"}, {{Rat(1), Rat(0)}, {Rat(0), Rat(0)}}, true),
        ValidationError);
    CHECK_THROWS_AS(
        SurfaceLattice::make({"a", "b"}, {{Rat(1), Rat(2)}, {Rat(1), Rat(0)}}, false),
        ValidationError); // not symmetric

    Signature s = symmetric_signature({{Rat(0), Rat(1)}, {Rat(1), Rat(0)}});
    CHECK(s.positive == 1);
    CHECK(s.negative == 1);
    CHECK(s.zero == 0);
}

TEST_CASE("point blow-up transforms") {
    LatticePtr plane = plane_lattice();
    std::vector<CurveRecord> curves;
    curves.push_back({"Z", cls(plane, {5, -1, -1, -1, -1, -1}), false, 5, 0});
    curves.push_back({"R", cls(plane, {5, -2, -2, -2, -2, -2}), false, 1, 0});
    BlowUp bl = blow_up_point(plane, {{"Z", 5}, {"R", 0}}, curves);

    DivisorClass zt = bl.strict_transform(curves[0].cls, 5);
    CHECK(pair(zt, zt) == Rat(-5));
    CHECK(pair(zt, bl.f_class()) == Rat(5));

    // Zero multiplicity leaves the curve untouched.
    DivisorClass rt = bl.strict_transform(curves[1].cls, 0);
    CHECK(pair(rt, rt) == pair(curves[1].cls, curves[1].cls));
    CHECK(pair(rt, bl.f_class()) == Rat(0));

    CHECK(pair(bl.f_class(), bl.f_class()) == Rat(-1));
    CHECK_THROWS_AS(blow_up_point(plane, {{"missing", 1}}, curves), UnknownClass);

    // The tangent cubic through the double point drops to a (-1)-curve.
    LatticePtr cubic = SurfaceLattice::make(
        {"T", "L1", "L2"},
        {{Rat(3), Rat(2), Rat(2)}, {Rat(2), Rat(0), Rat(1)}, {Rat(2), Rat(1), Rat(0)}});
    std::vector<CurveRecord> ccurves;
    ccurves.push_back({"T", DivisorClass::generator(cubic, "T"), false, 1, 0});
    BlowUp cb = blow_up_point(cubic, {{"T", 2}}, ccurves);
    DivisorClass tt = cb.strict_transform(ccurves[0].cls, 2);
    CHECK(pair(tt, tt) == Rat(-1));
    CHECK(pair(tt, cb.f_class()) == Rat(2));
}

TEST_CASE("pullbacks preserve all pairings") {
    LatticePtr plane = plane_lattice();
    std::vector<CurveRecord> curves;
    curves.push_back({"Z", cls(plane, {5, -1, -1, -1, -1, -1}), false, 5, 0});
    BlowUp bl = blow_up_point(plane, {{"Z", 5}}, curves);
    std::mt19937_64 rng(19);
    for (int round = 0; round < 20; ++round) {
        std::vector<Rat> a, b;
        for (int i = 0; i < 6; ++i) {
            a.push_back(rand_rat(rng));
            b.push_back(rand_rat(rng));
        }
        DivisorClass A(plane, a), B(plane, b);
        CHECK(pair(bl.pullback(A), bl.pullback(B)) == pair(A, B));
        CHECK(pair(bl.pullback(A), bl.f_class()) == Rat(0));
    }
}

TEST_CASE("threefold triple products expand over the cube constants") {
    AlgebraPtr alg = testutil::family217();
    ThreefoldClass mk = expand_relation(alg, "minusK");
    CHECK(triple(mk, mk, mk) == Rat(24));
    ThreefoldClass hq = expand_relation(alg, "HQ");
    CHECK(triple(hq, hq, hq) == Rat(2));
    ThreefoldClass zero(alg, {Rat(0), Rat(0)});
    CHECK(triple(mk, hq, zero) == Rat(0));

    std::mt19937_64 rng(23);
    for (int round = 0; round < 25; ++round) {
        ThreefoldClass a(alg, {rand_rat(rng), rand_rat(rng)});
        ThreefoldClass b(alg, {rand_rat(rng), rand_rat(rng)});
        ThreefoldClass c(alg, {rand_rat(rng), rand_rat(rng)});
        CHECK(triple(a, b, c) == triple(b, a, c));
        CHECK(triple(a, b, c) == triple(c, b, a));
        const Rat s = rand_rat(rng);
        CHECK(triple(a.scaled(s), b, c) == s * triple(a, b, c));
        CHECK(triple(a + b, b, c) == triple(a, b, c) + triple(b, b, c));
    }
}

TEST_CASE("relation table of the family") {
    AlgebraPtr alg = testutil::family217();
    CHECK(expand_relation(alg, "HQ").coeffs == std::array<Rat, 2>{Rat(3), Rat(-1)});
    CHECK(expand_relation(alg, "EQ").coeffs == std::array<Rat, 2>{Rat(5), Rat(-2)});
    CHECK(expand_relation(alg, "H").coeffs == std::array<Rat, 2>{Rat(1), Rat(0)});
    CHECK_THROWS_AS(expand_relation(alg, "nope"), UnknownClass);
}

TEST_CASE("family cross-checks pin the two hidden cube constants") {
    AlgebraPtr alg = testutil::family217();
    // With H^3 = 1 and H^2 E = 0 fixed, (4H-E)^3 = 24 and (3H-E)^3 = 2 force
    // HE^2 and E^3 by a linear solve; the stored constants must agree.
    // (4H-E)^3 = 64 + 12 x - y, (3H-E)^3 = 27 + 9 x - y for x = HE^2, y = E^3.
    auto sol = detail::solve_linear<Rat>({{Rat(12), Rat(-1)}, {Rat(9), Rat(-1)}},
                                         {Rat(24 - 64), Rat(2 - 27)});
    CHECK(sol[0] == alg->cube(2));
    CHECK(sol[1] == alg->cube(3));
    CHECK(sol[0] == Rat(-5));
    CHECK(sol[1] == Rat(-20));

    ThreefoldClass hq = expand_relation(alg, "HQ");
    ThreefoldClass eq = expand_relation(alg, "EQ");
    CHECK(triple(hq, hq, eq) == Rat(0));
    CHECK(triple(hq, eq, eq) == Rat(-5));
    CHECK(triple(eq, eq, eq) == Rat(-15));
}

TEST_CASE("restriction matrices act linearly") {
    const int e = 4;
    const Rat lambda(20 - e, 2);
    LatticePtr lat = ruled_lattice(e);
    AlgebraPtr alg = testutil::family217();
    RestrictionMatrix m{std::vector<Rat>{Rat(0), Rat(5)}, std::vector<Rat>{Rat(-1), lambda}};

    DivisorClass h_res = restrict_class(expand_relation(alg, "HP3"), m, lat);
    CHECK(h_res.coeffs == std::vector<Rat>{Rat(0), Rat(5)});

    DivisorClass eq_res = restrict_class(expand_relation(alg, "EQ"), m, lat);
    CHECK(eq_res.coeffs == std::vector<Rat>{Rat(2), Rat(5 + e)});

    DivisorClass zero_res = restrict_class(ThreefoldClass(alg, {Rat(0), Rat(0)}), m, lat);
    CHECK(zero_res.is_zero());

    RestrictionMatrix bad{std::vector<Rat>{Rat(0)}, std::vector<Rat>{Rat(1)}};
    CHECK_THROWS_AS(restrict_class(expand_relation(alg, "HP3"), bad, lat), LatticeMismatch);
}

namespace {

// Builds a tangent-cubic bundle lattice for the line-plus-conic case with the
// two pairings the reference tables leave implicit, blows up the point, and
// checks the decomposition against the reference chamber data at a sample.
bool line_conic_assignment_matches(int l_dot_li, int c2_dot_li) {
    LatticePtr lat = SurfaceLattice::make(
        {"l", "C2", "L1", "L2"},
        {{Rat(-1), Rat(2), Rat(l_dot_li), Rat(l_dot_li)},
         {Rat(2), Rat(0), Rat(c2_dot_li), Rat(c2_dot_li)},
         {Rat(l_dot_li), Rat(c2_dot_li), Rat(0), Rat(1)},
         {Rat(l_dot_li), Rat(c2_dot_li), Rat(1), Rat(0)}});
    std::vector<CurveRecord> curves;
    for (const char* n : {"l", "C2", "L1", "L2"})
        curves.push_back({n, DivisorClass::generator(lat, n), false, 1, 0});
    std::map<std::string, int> mults{{"l", 1}, {"C2", 1}, {"L1", 1}, {"L2", 1}};
    BlowUp bl = blow_up_point(lat, mults, curves);
    std::vector<CurveRecord> blown = transform_curves(bl, curves, mults);
    CurveRecord f{"F", bl.f_class(), true, 1, 0};
    blown.push_back(f);

    // P(u)|_S = T + (1-u)(L1+L2) with T = l + C2, at u = 1/3; the reference
    // chambers give N = (v+2u-3)/2 l~ on [3-2u, 3-u] and additionally
    // (v+u-3)(L1~+L2~) on [3-u, (11-6u)/3].
    const Rat u(1, 3);
    DivisorClass a(lat, {Rat(1), Rat(1), Rat(1) - u, Rat(1) - u});
    try {
        auto check_at = [&](const Rat& v, const Rat& cl, const Rat& cL) {
            DivisorClass d = bl.pullback(a);
            d -= bl.f_class().scaled(v);
            ZariskiResult z = decompose_surface(d, blown);
            auto coeff = [&](const char* n) {
                auto it = z.negative.find(n);
                return it == z.negative.end() ? Rat(0) : it->second;
            };
            return coeff("l") == cl && coeff("C2") == Rat(0) && coeff("L1") == cL &&
                   coeff("L2") == cL;
        };
        // v = 5/2 sits in the second chamber, v = 17/6 in the third.
        const Rat v2(5, 2), v3(17, 6);
        return check_at(v2, (v2 + Rat(2) * u - Rat(3)) / Rat(2), Rat(0)) &&
               check_at(v3, (v3 + Rat(2) * u - Rat(3)) / Rat(2), v3 + u - Rat(3));
    } catch (const Error&) {
        return false;
    }
}

bool three_lines_assignment_matches(int l1_dot_li, int l2_dot_li, int l3_dot_li) {
    LatticePtr lat = SurfaceLattice::make(
        {"l1", "l2", "l3", "L1", "L2"},
        {{Rat(-1), Rat(1), Rat(1), Rat(l1_dot_li), Rat(l1_dot_li)},
         {Rat(1), Rat(-1), Rat(1), Rat(l2_dot_li), Rat(l2_dot_li)},
         {Rat(1), Rat(1), Rat(-1), Rat(l3_dot_li), Rat(l3_dot_li)},
         {Rat(l1_dot_li), Rat(l2_dot_li), Rat(l3_dot_li), Rat(0), Rat(1)},
         {Rat(l1_dot_li), Rat(l2_dot_li), Rat(l3_dot_li), Rat(1), Rat(0)}});
    std::vector<CurveRecord> curves;
    for (const char* n : {"l1", "l2", "l3", "L1", "L2"})
        curves.push_back({n, DivisorClass::generator(lat, n), false, 1, 0});
    std::map<std::string, int> mults{{"l1", 1}, {"l2", 1}, {"l3", 0}, {"L1", 1}, {"L2", 1}};
    BlowUp bl = blow_up_point(lat, mults, curves);
    std::vector<CurveRecord> blown = transform_curves(bl, curves, mults);
    blown.push_back({"F", bl.f_class(), true, 1, 0});

    const Rat u(1, 3);
    DivisorClass a(lat, {Rat(1), Rat(1), Rat(1), Rat(1) - u, Rat(1) - u});
    try {
        auto coeffs_at = [&](const Rat& v) {
            DivisorClass d = bl.pullback(a);
            d -= bl.f_class().scaled(v);
            return decompose_surface(d, blown);
        };
        // Second chamber [3-2u, 3-u]: N = (v+2u-3)/2 (l1~ + l2~), nothing else.
        const Rat v2(5, 2);
        ZariskiResult z2 = coeffs_at(v2);
        const Rat want2 = (v2 + Rat(2) * u - Rat(3)) / Rat(2);
        if (z2.support != std::vector<std::string>{"l1", "l2"})
            return false;
        if (z2.negative.at("l1") != want2 || z2.negative.at("l2") != want2)
            return false;
        // Third chamber [3-u, 4-2u] adds (v+u-3)(L1~ + L2~).
        const Rat v3(17, 6);
        ZariskiResult z3 = coeffs_at(v3);
        const Rat wantl = (v3 + Rat(2) * u - Rat(3)) / Rat(2);
        return z3.negative.at("l1") == wantl && z3.negative.at("l2") == wantl &&
               z3.negative.at("L1") == v3 + u - Rat(3) &&
               z3.negative.at("L2") == v3 + u - Rat(3) && z3.negative.count("l3") == 0;
    } catch (const Error&) {
        return false;
    }
}

} // namespace

TEST_CASE("implicit pairings of the line-conic lattice are forced by the chamber tables") {
    int matches = 0;
    int matching_l = -1;
    for (int l_li = 0; l_li <= 2; ++l_li) {
        const int c2_li = 2 - l_li; // T . L_i = 2 splits between the parts
        if (line_conic_assignment_matches(l_li, c2_li)) {
            ++matches;
            matching_l = l_li;
        }
    }
    CHECK(matches == 1);
    CHECK(matching_l == 1);
}

TEST_CASE("implicit pairings of the three-lines lattice are forced by the chamber tables") {
    int matches = 0;
    std::array<int, 3> winner{-1, -1, -1};
    // T . L_i = 2 split over the three lines.
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; a + b <= 2; ++b) {
            const int c = 2 - a - b;
            if (three_lines_assignment_matches(a, b, c)) {
                ++matches;
                winner = {a, b, c};
            }
        }
    CHECK(matches == 1);
    CHECK(winner == std::array<int, 3>{1, 1, 0});
}
