#include "test_util.hpp"

#include <deltakit/sweep.hpp>

#include <doctest.h>

#include <random>

using namespace deltakit;
using testutil::poly;
using testutil::rand_rat;

namespace {

ChamberedDecomposition divisor_sweep(const std::string& ray) {
    AlgebraPtr alg = testutil::family217();
    return sweep_threefold(expand_relation(alg, "minusK"), expand_relation(alg, ray));
}

} // namespace

TEST_CASE("plane-pullback sweep reproduces the two reference chambers") {
    ChamberedDecomposition cd = divisor_sweep("HP3");
    REQUIRE(cd.chambers.size() == 2);
    CHECK(cd.chambers[0].lo == Rat(0));
    CHECK(cd.chambers[0].hi == Rat(1));
    CHECK(cd.chambers[1].hi == Rat(3, 2));
    CHECK(cd.tau == Rat(3, 2));
    CHECK(cd.vol_vanishes_at_tau);

    CHECK(cd.chambers[0].vol == poly({24, -33, 12, -1}));
    CHECK(cd.chambers[1].vol ==
          poly({3, -2}) * poly({3, -2}) * poly({3, -2}) * Polynomial(Rat(2)));
    CHECK(cd.chambers[0].negative_coeffs.empty());
    REQUIRE(cd.chambers[1].negative_coeffs.count("EQ") == 1);
    CHECK(cd.chambers[1].negative_coeffs.at("EQ") == poly({-1, 1}));
    // P(u) = (3-2u) HQ on the second chamber.
    CHECK(cd.chambers[1].positive[0] == poly({9, -6}));
    CHECK(cd.chambers[1].positive[1] == poly({-3, 2}));
}

TEST_CASE("quadric-pullback and exceptional sweeps") {
    ChamberedDecomposition hq = divisor_sweep("HQ");
    REQUIRE(hq.chambers.size() == 2);
    CHECK(hq.tau == Rat(4, 3));
    CHECK(hq.chambers[0].hi == Rat(1));
    CHECK(hq.chambers[1].vol == poly({4, -3}) * poly({4, -3}) * poly({4, -3}));
    CHECK(hq.chambers[1].negative_coeffs.at("EP3") == poly({-1, 1}));

    ChamberedDecomposition e = divisor_sweep("EP3");
    REQUIRE(e.chambers.size() == 2);
    CHECK(e.chambers[0].hi == Rat(1, 3));
    CHECK(e.tau == Rat(3, 5));
    CHECK(e.chambers[0].vol == poly({24, -60, 0, 20}));
    CHECK(e.chambers[1].vol ==
          poly({3, -5}) * poly({3, -5}) * poly({3, -5}) * Polynomial(Rat(2)));
    CHECK(e.chambers[1].negative_coeffs.at("EQ") == poly({-1, 3}));
}

TEST_CASE("threshold hints are validated, not trusted") {
    AlgebraPtr alg = testutil::family217();
    auto mk = expand_relation(alg, "minusK");
    CHECK(sweep_threefold(mk, expand_relation(alg, "HP3"), Rat(3, 2)).tau == Rat(3, 2));
    CHECK_THROWS_AS(sweep_threefold(mk, expand_relation(alg, "HP3"), Rat(7, 5)),
                    ValidationError);
    // A zero ray never reaches a threshold.
    CHECK_THROWS_AS(sweep_threefold(mk, ThreefoldClass(alg, {Rat(0), Rat(0)})), NoThreshold);
}

TEST_CASE("pseff_threshold takes the smallest volume root beyond the lower wall") {
    Chamber last;
    last.lo = Rat(1);
    last.vol = poly({3, -2}) * poly({3, -2}) * Polynomial(Rat(2));
    CHECK(pseff_threshold(last) == Rat(3, 2));
    CHECK_THROWS_AS(pseff_threshold(last, Rat(2)), ValidationError);
    last.vol = Polynomial(Rat(5));
    CHECK_THROWS_AS(pseff_threshold(last), NoThreshold);
}

namespace {

struct CubicCaseA {
    LatticePtr base;
    BlowUp bl;
    std::vector<CurveRecord> blown;

    DivisorClass restricted_positive(const Rat& u) const {
        // P(u)|_S = T + (1-u)(L1+L2) for u <= 1, (4-3u) T beyond.
        if (u <= Rat(1))
            return DivisorClass(base, {Rat(1), Rat(1) - u, Rat(1) - u});
        return DivisorClass(base, {Rat(4) - Rat(3) * u, Rat(0), Rat(0)});
    }
};

CubicCaseA cubic_case_a_geometry() {
    CubicCaseA g;
    g.base = SurfaceLattice::make(
        {"T", "L1", "L2"},
        {{Rat(3), Rat(2), Rat(2)}, {Rat(2), Rat(0), Rat(1)}, {Rat(2), Rat(1), Rat(0)}});
    std::vector<CurveRecord> curves;
    for (const std::string& n : {"T", "L1", "L2"})
        curves.push_back({n, DivisorClass::generator(g.base, n), false, 1, 0});
    std::map<std::string, int> mults{{"T", 2}, {"L1", 1}, {"L2", 1}};
    g.bl = blow_up_point(g.base, mults, curves);
    g.blown = transform_curves(g.bl, curves, mults);
    g.blown.push_back({"F", g.bl.f_class(), true, 1, 0});
    return g;
}

} // namespace

TEST_CASE("cubic surface sweep walls at u = 0") {
    CubicCaseA g = cubic_case_a_geometry();
    DivisorClass d0 = g.bl.pullback(g.restricted_positive(Rat(0)));
    ChamberedDecomposition cd = sweep_surface_at(d0, g.bl.f_class(), g.blown);
    REQUIRE(cd.chambers.size() == 3);
    CHECK(cd.chambers[0].hi == Rat(3));
    CHECK(cd.chambers[1].hi == Rat(7, 2));
    CHECK(cd.chambers[2].hi == Rat(4));
    CHECK(cd.tau == Rat(4));
    CHECK(cd.vol_vanishes_at_tau);
    CHECK(cd.chambers[0].support().empty());
    CHECK(cd.chambers[1].support() == std::vector<std::string>{"L1", "L2"});
    CHECK(cd.chambers[2].support() == std::vector<std::string>{"L1", "L2", "T"});
    // Reference volumes: 2u^2 - v^2 - 12u + 13 at u = 0, then the two further
    // chamber polynomials.
    CHECK(cd.chambers[0].vol == poly({13, 0, -1}));
    CHECK(cd.chambers[1].vol == poly({31, -12, 1}));
    CHECK(cd.chambers[2].vol == Polynomial(Rat(5)) * poly({-4, 1}) * poly({-4, 1}));
}

TEST_CASE("ruled surface sweep has a trivial negative part") {
    const int e = 4;
    const Rat lambda(20 - e, 2);
    LatticePtr lat =
        SurfaceLattice::make({"C0", "l"}, {{Rat(-e), Rat(1)}, {Rat(1), Rat(0)}}, true);
    std::vector<CurveRecord> curves;
    curves.push_back({"C0", DivisorClass::generator(lat, "C0"), true, 1, 0});
    // P(0)|_S = C0 + (10 + e/2) l.
    DivisorClass a(lat, {Rat(1), Rat(10) + Rat(e, 2)});
    ChamberedDecomposition cd = sweep_surface_at(a, DivisorClass::generator(lat, "C0"), curves);
    REQUIRE(cd.chambers.size() == 1);
    CHECK(cd.tau == Rat(1));
    CHECK(cd.chambers[0].support().empty());
    CHECK(cd.vol_vanishes_at_tau);
}

TEST_CASE("degenerate ray ends immediately") {
    LatticePtr lat =
        SurfaceLattice::make({"C0", "l"}, {{Rat(-2), Rat(1)}, {Rat(1), Rat(0)}}, true);
    std::vector<CurveRecord> curves;
    curves.push_back({"C0", DivisorClass::generator(lat, "C0"), true, 1, 0});
    DivisorClass boundary = DivisorClass::generator(lat, "l");
    ChamberedDecomposition cd = sweep_surface_at(boundary, boundary, curves);
    CHECK(cd.tau == Rat(0));
    CHECK(cd.chambers.empty());
}

TEST_CASE("chambered volumes equal fresh decompositions at random parameters") {
    AlgebraPtr alg = testutil::family217();
    auto mk = expand_relation(alg, "minusK");
    std::mt19937_64 rng(41);
    for (const char* ray : {"HP3", "HQ", "EP3"}) {
        ThreefoldClass b = expand_relation(alg, ray);
        ChamberedDecomposition cd = sweep_threefold(mk, b);
        cd.validate();
        for (int i = 0; i < 20; ++i) {
            std::uniform_int_distribution<long long> num(0, 1000);
            const Rat u = cd.tau * Rat(num(rng), 1000);
            ThreefoldZariskiResult z = decompose_threefold_rank2(mk - b.scaled(u));
            CHECK(cd.vol_at(u) == triple(z.positive, z.positive, z.positive));
        }
    }
}

TEST_CASE("volumes are monotone along the sweeps") {
    ChamberedDecomposition cd = divisor_sweep("HP3");
    Rat prev = cd.vol_at(Rat(0));
    for (int k = 1; k <= 12; ++k) {
        const Rat u = cd.tau * Rat(k, 12);
        const Rat cur = cd.vol_at(u);
        CHECK(cur <= prev);
        prev = cur;
    }

    CubicCaseA g = cubic_case_a_geometry();
    ChamberedDecomposition inner =
        sweep_surface_at(g.bl.pullback(g.restricted_positive(Rat(1, 3))), g.bl.f_class(),
                         g.blown);
    prev = inner.vol_at(Rat(0));
    for (int k = 1; k <= 12; ++k) {
        const Rat v = inner.tau * Rat(k, 12);
        const Rat cur = inner.vol_at(v);
        CHECK(cur <= prev);
        prev = cur;
    }
}

TEST_CASE("outer reconstruction interpolates and verifies") {
    auto zero = [](const Rat&) { return Rat(0); };
    CHECK(outer_reconstruct(zero, Rat(0), Rat(1), {}, 3).integral() == Rat(0));

    // Piecewise sampler with the wall supplied as a candidate.
    auto kink = [](const Rat& u) { return u < Rat(1, 3) ? Rat(1, 3) - u : u - Rat(1, 3); };
    PiecewisePoly ok = outer_reconstruct(kink, Rat(0), Rat(1), {Rat(1, 3)}, 2);
    CHECK(ok.integral() == Rat(5, 18));
    CHECK(ok.piece_count() == 2);

    // Without the wall the verification sample must catch it.
    CHECK_THROWS_AS(outer_reconstruct(kink, Rat(0), Rat(1), {}, 6), DegreeCapExceeded);
}
