#include "test_util.hpp"

#include <deltakit/flags.hpp>

#include <doctest.h>

using namespace deltakit;

namespace {

FlagGeometry geometry_for(const Scenario& s) {
    FlagGeometry g;
    g.algebra = s.make_algebra();
    g.tf = sweep_threefold(expand_relation(g.algebra, s.threefold.minus_k),
                           expand_relation(g.algebra, s.ray), s.tau_hint);
    g.restriction = *s.restriction;
    g.surface = s.make_surface();
    g.curves = s.make_curves(g.surface);
    g.minus_k_cubed = s.threefold.minus_k_cubed;
    return g;
}

} // namespace

TEST_CASE("normalized divisor volumes") {
    AlgebraPtr alg = testutil::family217();
    auto mk = expand_relation(alg, "minusK");
    CHECK(s_divisor(sweep_threefold(mk, expand_relation(alg, "HP3")), Rat(24)) == Rat(23, 48));
    CHECK(s_divisor(sweep_threefold(mk, expand_relation(alg, "HQ")), Rat(24)) == Rat(121, 288));
    CHECK(s_divisor(sweep_threefold(mk, expand_relation(alg, "EP3")), Rat(24)) ==
          Rat(227, 1080));
}

TEST_CASE("curve flag on the ruled surface") {
    Scenario s0 = builtin_scenario("ruled-E-e0");
    FlagGeometry g0 = geometry_for(s0);
    CurveFlagResult r0 = s_curve_flag(g0, "C0", s0.ord_bounds);
    CHECK(r0.double_term == Rat(733, 1296));
    CHECK(r0.first_term == Rat(32, 405));
    CHECK(r0.total == Rat(4177, 6480));

    Scenario s10 = builtin_scenario("ruled-E-e10");
    CurveFlagResult r10 = s_curve_flag(geometry_for(s10), "C0", s10.ord_bounds);
    CHECK(r10.total == Rat(10239, 12960));
    CHECK(r10.total < Rat(1));
}

TEST_CASE("curve flag is monotone in each declared order bound") {
    Scenario s = builtin_scenario("ruled-E-e4");
    FlagGeometry g = geometry_for(s);
    const Rat base = s_curve_flag(g, "C0", {{"EQ", Rat(2)}}).total;
    const Rat bumped = s_curve_flag(g, "C0", {{"EQ", Rat(5, 2)}}).total;
    const Rat dropped = s_curve_flag(g, "C0", {{"EQ", Rat(1)}}).total;
    CHECK(base < bumped);
    CHECK(dropped < base);
}

TEST_CASE("degenerate curve flag vanishes") {
    // Zero restriction: P(u)|_S is the zero class, every inner sweep is
    // trivial and no order bounds are declared.
    Scenario s = builtin_scenario("ruled-E-e4");
    FlagGeometry g = geometry_for(s);
    g.restriction = RestrictionMatrix{std::vector<Rat>{Rat(0), Rat(0)},
                                      std::vector<Rat>{Rat(0), Rat(0)}};
    CurveFlagResult r = s_curve_flag(g, "C0", {});
    CHECK(r.total == Rat(0));
}

TEST_CASE("point flag on the blown-up plane section") {
    Scenario s = builtin_scenario("dP4-secant-PinEQ");
    FlagGeometry g = geometry_for(s);
    PointFlag pf(g, s.blow_mults(), s.n_restrictions);
    CHECK(pf.first_term() == Rat(1, 96));
    CHECK(pf.s_point_flag_F() == Rat(691, 384));
    // The quadratic term resolves the displayed 155/192-vs-163/192 ambiguity.
    CHECK(pf.quad_term() == Rat(163, 192));

    PointProfile worst{"O in R, O in Z", {{"R", 1}, {"Z", 1}}};
    CHECK(pf.f_o_term(worst) == Rat(11, 384));
    CHECK(pf.s_point_flag_O(worst) == Rat(337, 384));

    Scenario s2 = builtin_scenario("dP4-secant-PnotinEQ");
    PointFlag pf2(geometry_for(s2), s2.blow_mults(), s2.n_restrictions);
    CHECK(pf2.s_point_flag_F() == Rat(229, 128));

    Scenario s3 = builtin_scenario("dP4-conic-PinEQ");
    PointFlag pf3(geometry_for(s3), s3.blow_mults(), s3.n_restrictions);
    CHECK(pf3.s_point_flag_F() == Rat(523, 288));

    Scenario s4 = builtin_scenario("dP4-conic-PnotinEQ");
    PointFlag pf4(geometry_for(s4), s4.blow_mults(), s4.n_restrictions);
    CHECK(pf4.s_point_flag_F() == Rat(65, 36));
}

TEST_CASE("cubic point flags and their refined outer chambers") {
    Scenario sa = builtin_scenario("cubic-case-a");
    PointFlag pa(geometry_for(sa), sa.blow_mults(), sa.n_restrictions);
    CHECK(pa.s_point_flag_F() == Rat(1103, 576));
    // The inner walls 3-u and (7-4u)/2 cross at u = 1/2; outer chambers
    // split there in addition to the threefold wall at 1.
    REQUIRE(pa.outer_chambers().size() == 3);
    CHECK(pa.outer_chambers()[0].second == Rat(1, 2));
    CHECK(pa.outer_chambers()[1].second == Rat(1));
    CHECK(pa.outer_chambers()[2].second == Rat(4, 3));

    Scenario sb = builtin_scenario("cubic-case-b");
    PointFlag pb(geometry_for(sb), sb.blow_mults(), sb.n_restrictions);
    CHECK(pb.s_point_flag_F() == Rat(1661, 864));
    REQUIRE(pb.outer_chambers().size() == 3);
    CHECK(pb.outer_chambers()[0].second == Rat(2, 3));

    Scenario se = builtin_scenario("cubic-case-e");
    PointFlag pe(geometry_for(se), se.blow_mults(), se.n_restrictions);
    CHECK(pe.s_point_flag_F() == Rat(31, 16));
    // No wall crossings inside the threefold chambers here.
    REQUIRE(pe.outer_chambers().size() == 2);
    CHECK(pe.outer_chambers()[0].second == Rat(1));
}

TEST_CASE("the exceptional pairing is derived from the decomposition") {
    // The reference table's garbled row (an extra +18) sits on the chamber
    // [(11-6u)/3, 3-u] for 2/3 <= u <= 1; the derived pairing is 18-10u-4v.
    Scenario s = builtin_scenario("cubic-case-b");
    PointFlag pf(geometry_for(s), s.blow_mults(), s.n_restrictions);
    const Rat u(5, 6);
    const ChamberedDecomposition& inner = pf.inner_at(u);
    REQUIRE(inner.chambers.size() == 4);
    CHECK(inner.chambers[2].lo == Rat(2));      // (11-6u)/3
    CHECK(inner.chambers[2].hi == Rat(13, 6));  // 3-u
    const std::vector<Polynomial> pdotf = pf.pdotf_at(u);
    CHECK(pdotf[2] == Polynomial::affine(Rat(18) - Rat(10) * u, Rat(-4)));
    // Neighbouring rows for completeness: v and (3-2u+v)/2 and 24-12u-6v.
    CHECK(pdotf[0] == Polynomial::affine(Rat(0), Rat(1)));
    CHECK(pdotf[1] == Polynomial::affine((Rat(3) - Rat(2) * u) / Rat(2), Rat(1, 2)));
    CHECK(pdotf[3] == Polynomial::affine(Rat(24) - Rat(12) * u, Rat(-6)));
}

TEST_CASE("inner sweeps keep a constant signature within each outer chamber") {
    Scenario s = builtin_scenario("cubic-case-a");
    PointFlag pf(geometry_for(s), s.blow_mults(), s.n_restrictions);
    for (const auto& [lo, hi] : pf.outer_chambers()) {
        const Rat width = hi - lo;
        auto sig0 = pf.inner_at(lo + width * Rat(1, 7)).signature();
        for (int k = 2; k <= 6; ++k)
            CHECK(pf.inner_at(lo + width * Rat(k, 7)).signature() == sig0);
    }
}

TEST_CASE("point functional dominates its quadratic part") {
    for (const std::string& name :
         {std::string("dP4-secant-PinEQ"), std::string("cubic-case-b"),
          std::string("cubic-case-e")}) {
        Scenario s = builtin_scenario(name);
        PointFlag pf(geometry_for(s), s.blow_mults(), s.n_restrictions);
        for (const Scenario::Profile& p : s.profiles) {
            PointProfile o{p.name, p.mults};
            CHECK(pf.f_o_term(o).sign() >= 0);
            CHECK(pf.s_point_flag_O(o) >= pf.quad_term());
        }
    }
}

TEST_CASE("the point functional is additive in the profile multiplicities") {
    for (const char* name : {"cubic-case-b", "cubic-case-e", "dP4-conic-PinEQ"}) {
        Scenario s = builtin_scenario(name);
        PointFlag pf(geometry_for(s), s.blow_mults(), s.n_restrictions);
        // Sum the single-curve contributions and compare with the joint
        // profile, for every profile in the scenario.
        for (const Scenario::Profile& p : s.profiles) {
            Rat total(0);
            for (const auto& [curve, m] : p.mults)
                total += pf.f_o_term({curve, {{curve, m}}});
            CHECK(pf.f_o_term({p.name, p.mults}) == total);
        }
    }
}

TEST_CASE("profile multiplicities above the blow-up pairing are rejected") {
    Scenario s = builtin_scenario("dP4-secant-PnotinEQ");
    PointFlag pf(geometry_for(s), s.blow_mults(), s.n_restrictions);
    PointProfile bad{"O on R", {{"R", 1}}}; // R misses the point here
    CHECK_THROWS_AS(pf.f_o_term(bad), ValidationError);
}

TEST_CASE("worst-case reduction on the ruled surface") {
    // vol(P(u)|_S - v(a C0 + b l)) <= vol(P(u)|_S - v C0) for a >= 1, b >= ae.
    const int e = 4;
    Scenario s = builtin_scenario("ruled-E-e4");
    FlagGeometry g = geometry_for(s);
    std::vector<CurveRecord> curves = g.curves;
    auto vol_against = [&](const Rat& u, const Rat& v, const DivisorClass& z) {
        const Chamber& ch = g.tf.chamber_at(u);
        ThreefoldClass a_u(g.algebra, {ch.positive[0].eval(u), ch.positive[1].eval(u)});
        DivisorClass a = restrict_class(a_u, g.restriction, g.surface);
        ChamberedDecomposition cd = sweep_surface_at(a, z, curves);
        if (cd.chambers.empty() || cd.tau < v)
            return Rat(0);
        return cd.vol_at(v);
    };
    DivisorClass c0 = DivisorClass::generator(g.surface, "C0");
    for (const auto& [a, b] : std::vector<std::pair<int, int>>{{1, e}, {1, e + 3}, {2, 2 * e}}) {
        DivisorClass z(g.surface, {Rat(a), Rat(b)});
        for (int iu = 0; iu <= 4; ++iu)
            for (int iv = 1; iv <= 4; ++iv) {
                const Rat u = Rat(3, 5) * Rat(iu, 5);
                const Rat v = Rat(iv, 3);
                CHECK(vol_against(u, v, z) <= vol_against(u, v, c0));
            }
    }
}

TEST_CASE("verdicts demand strict inequalities") {
    Verdict border = certify_point(Rat(1, 2), Rat(2), {{"O", Rat(1, 2)}});
    CHECK(!border.certified);
    Verdict good = certify_point(Rat(1, 2), Rat(39, 20), {{"O", Rat(9, 10)}});
    CHECK(good.certified);
    Verdict bad_o = certify_point(Rat(1, 2), Rat(3, 2), {{"O", Rat(1)}});
    CHECK(!bad_o.certified);
    CHECK_THROWS_AS(certify_point(Rat(1, 2), Rat(3, 2), {}), IncompleteProfiles);

    CHECK(certify_curve(Rat(23, 48), Rat(4177, 6480)).certified);
    CHECK(!certify_curve(Rat(1), Rat(1, 2)).certified);
    CHECK(!certify_curve(Rat(1, 2), Rat(1)).certified);
}
