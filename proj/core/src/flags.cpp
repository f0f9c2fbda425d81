#include <deltakit/flags.hpp>

#include <algorithm>

namespace deltakit {

Rat s_divisor(const ChamberedDecomposition& cd, const Rat& minus_k_cubed) {
    if (!(minus_k_cubed.sign() > 0))
        throw ValidationError("(-K)^3 must be positive");
    return cd.vol_piecewise().integral() / minus_k_cubed;
}

namespace {

using InnerFn = std::function<ChamberedDecomposition(const Rat&)>;
using SigType = std::vector<std::vector<std::string>>;

// Refines the outer parameter interval into chambers on which the inner
// sweep keeps a constant chamber count and support signature, with affine
// wall functions. Outer walls are the threefold walls plus exact crossings
// of the interpolated inner-wall functions; brackets that resist exact
// pinning fall back to signature bisection, capped at 64 levels.
class FamilyRefiner {
public:
    FamilyRefiner(const ChamberedDecomposition& tf, InnerFn fn) : fn_(std::move(fn)) {
        for (const Chamber& ch : tf.chambers)
            intervals_.emplace_back(ch.lo, ch.hi);
    }

    void refine() {
        for (const auto& [a, b] : intervals_)
            refine_interval(a, b, 0);
    }

    const std::vector<std::pair<Rat, Rat>>& chambers() const { return chambers_; }

    const ChamberedDecomposition& at(const Rat& u) {
        auto it = cache_.find(u);
        if (it == cache_.end())
            it = cache_.emplace(u, fn_(u)).first;
        return it->second;
    }

    Rat integrate(const std::function<Rat(const Rat&, const ChamberedDecomposition&)>& g,
                  int degree_cap) {
        Rat total(0);
        for (const auto& [a, b] : chambers_) {
            auto sampler = [&](const Rat& u) { return g(u, at(u)); };
            total += outer_reconstruct(sampler, a, b, {}, degree_cap).integral();
        }
        return total;
    }

private:
    SigType sig(const Rat& u) { return at(u).signature(); }

    std::vector<Rat> wall_values(const Rat& u) {
        const ChamberedDecomposition& cd = at(u);
        std::vector<Rat> w;
        if (cd.chambers.empty())
            return w;
        w.push_back(cd.chambers.front().lo);
        for (const Chamber& ch : cd.chambers)
            w.push_back(ch.hi);
        return w;
    }

    // Affine wall functions through two same-signature samples.
    std::vector<Polynomial> wall_funcs(const Rat& u1, const Rat& u2) {
        std::vector<Rat> w1 = wall_values(u1), w2 = wall_values(u2);
        if (w1.size() != w2.size())
            throw Error("internal: wall count changed between same-signature samples");
        std::vector<Polynomial> out;
        out.reserve(w1.size());
        for (std::size_t j = 0; j < w1.size(); ++j)
            out.push_back(poly_from_samples({{u1, w1[j]}, {u2, w2[j]}}));
        return out;
    }

    std::vector<Rat> crossing_candidates(const std::vector<Polynomial>& walls, const Rat& lo,
                                         const Rat& hi) {
        std::vector<Rat> cand;
        auto push_root = [&](const Polynomial& diff) {
            if (diff.degree() != 1)
                return;
            const Rat r = -diff.coeff(0) / diff.coeff(1);
            if (lo < r && r < hi)
                cand.push_back(r);
        };
        for (std::size_t i = 0; i < walls.size(); ++i) {
            push_root(walls[i]);
            for (std::size_t j = i + 1; j < walls.size(); ++j)
                push_root(walls[i] - walls[j]);
        }
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
        return cand;
    }

    void refine_interval(const Rat& a, const Rat& b, int depth) {
        if (!(a < b))
            return;
        if (depth > 64)
            throw NotRationalWall("outer refinement exceeded 64 subdivisions in [" + a.str() +
                                  ", " + b.str() + "]");
        const Rat width = b - a;
        const Rat p1 = a + width * Rat(13, 97);
        const Rat p2 = a + width * Rat(48, 97);
        const Rat p3 = a + width * Rat(83, 97);
        const SigType s1 = sig(p1), s2 = sig(p2), s3 = sig(p3);
        if (s1 == s2 && s2 == s3) {
            std::vector<Polynomial> walls = wall_funcs(p1, p3);
            const std::vector<Rat> mid = wall_values(p2);
            for (std::size_t j = 0; j < walls.size(); ++j)
                if (walls[j].eval(p2) != mid[j]) {
                    // Not affine across the stretch: a hidden wall.
                    refine_interval(a, p2, depth + 1);
                    refine_interval(p2, b, depth + 1);
                    return;
                }
            for (const Rat& r : crossing_candidates(walls, a, b)) {
                // Same signature on both sides of an interior crossing is a
                // sampling fluke; split there regardless.
                refine_interval(a, r, depth + 1);
                refine_interval(r, b, depth + 1);
                return;
            }
            chambers_.emplace_back(a, b);
            return;
        }
        const Rat l = (s1 != s2) ? p1 : p2;
        const Rat r = (s1 != s2) ? p2 : p3;
        const Rat wall = pin_wall(l, r);
        refine_interval(a, wall, depth + 1);
        refine_interval(wall, b, depth + 1);
    }

    // Exact leftover-boundary location inside (l, r), sig(l) != sig(r).
    Rat pin_wall(Rat l, Rat r) {
        SigType sl = sig(l);
        for (int iter = 0; iter < 64; ++iter) {
            std::vector<Rat> cands;
            const Rat l2 = l + (r - l) * Rat(1, 19);
            if (sig(l2) == sl)
                for (const Rat& c : crossing_candidates(wall_funcs(l, l2), l, r))
                    cands.push_back(c);
            const Rat r2 = r - (r - l) * Rat(1, 19);
            if (sig(r2) == sig(r))
                for (const Rat& c : crossing_candidates(wall_funcs(r2, r), l, r))
                    cands.push_back(c);
            std::sort(cands.begin(), cands.end());
            cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
            for (const Rat& c : cands) {
                const Rat eps = min(c - l, r - c) * Rat(1, 23);
                if (sig(c - eps) != sig(c + eps))
                    return c;
            }
            const Rat m = (l + r) * Rat(1, 2);
            if (sig(m) == sl)
                l = m;
            else
                r = m;
        }
        throw NotRationalWall("wall between " + l.str() + " and " + r.str() +
                              " resists exact pinning");
    }

    InnerFn fn_;
    std::vector<std::pair<Rat, Rat>> intervals_;
    std::vector<std::pair<Rat, Rat>> chambers_;
    std::map<Rat, ChamberedDecomposition> cache_;
};

std::array<Polynomial, 2> positive_pair(const Chamber& ch) {
    if (ch.positive.size() != 2)
        throw Error("internal: threefold chamber with rank != 2");
    return {ch.positive[0], ch.positive[1]};
}

Polynomial tf_negative_coeff(const Chamber& ch, const std::string& name) {
    auto it = ch.negative_coeffs.find(name);
    return it == ch.negative_coeffs.end() ? Polynomial() : it->second;
}

constexpr int kCap = 6;

} // namespace

CurveFlagResult s_curve_flag(const FlagGeometry& g, const std::string& flag_curve,
                             const std::map<std::string, Rat>& ord_bounds) {
    const Rat norm = Rat(3) / g.minus_k_cubed;

    const CurveRecord* flag = nullptr;
    for (const CurveRecord& c : g.curves)
        if (c.name == flag_curve)
            flag = &c;
    if (!flag)
        throw UnknownClass("flag curve " + flag_curve + " not among the surface curves");

    CurveFlagResult out{Rat(0), Rat(0), Rat(0)};
    for (const Chamber& ch : g.tf.chambers) {
        Polynomial d_of_u;
        for (const auto& [name, bound] : ord_bounds)
            d_of_u += tf_negative_coeff(ch, name) * bound;
        if (d_of_u.is_zero())
            continue;
        std::vector<Polynomial> restr =
            restrict_poly(positive_pair(ch), g.restriction, g.surface->rank());
        Polynomial sq = pair_expand<Polynomial>(*g.surface, restr, restr);
        out.first_term += definite_integral(d_of_u * sq, ch.lo, ch.hi);
    }
    out.first_term *= norm;

    FamilyRefiner fam(g.tf, [&](const Rat& u) {
        const Chamber& ch = g.tf.chamber_at(u);
        ThreefoldClass a_u(g.algebra, {ch.positive[0].eval(u), ch.positive[1].eval(u)});
        DivisorClass s = restrict_class(a_u, g.restriction, g.surface);
        return sweep_surface_at(s, flag->cls, g.curves);
    });
    fam.refine();
    out.double_term =
        norm * fam.integrate([](const Rat&, const ChamberedDecomposition& cd) {
            return cd.vol_piecewise().integral();
        }, kCap);
    out.total = out.first_term + out.double_term;
    return out;
}

PointFlag::PointFlag(FlagGeometry g, std::map<std::string, int> blow_mults,
                     std::vector<NRestrictionEntry> n_restrictions)
    : g_(std::move(g)), blow_mults_(std::move(blow_mults)), n_restr_(std::move(n_restrictions)),
      blow_(blow_up_point(g_.surface, blow_mults_, g_.curves)) {
    blown_curves_ = transform_curves(blow_, g_.curves, blow_mults_);
    f_class_ = blow_.f_class();
    CurveRecord f_rec;
    f_rec.name = blow_.f_name;
    f_rec.cls = f_class_;
    f_rec.negative_candidate = true;
    blown_curves_.push_back(std::move(f_rec));

    for (const NRestrictionEntry& e : n_restr_) {
        bool found = std::any_of(blown_curves_.begin(), blown_curves_.end(),
                                 [&](const CurveRecord& c) { return c.name == e.curve; });
        if (!found)
            throw UnknownClass("restricted negative part names unknown curve " + e.curve);
    }

    // d~(u) (P(u)|_S)^2 integrates chamber by chamber without sampling.
    const Rat norm = Rat(3) / g_.minus_k_cubed;
    first_term_ = Rat(0);
    for (const Chamber& ch : g_.tf.chambers) {
        Polynomial d_of_u;
        for (const NRestrictionEntry& e : n_restr_)
            d_of_u += tf_negative_coeff(ch, e.threefold_class) * Rat(e.mult_at_p);
        if (d_of_u.is_zero())
            continue;
        std::vector<Polynomial> restr =
            restrict_poly(positive_pair(ch), g_.restriction, g_.surface->rank());
        Polynomial sq = pair_expand<Polynomial>(*g_.surface, restr, restr);
        first_term_ += definite_integral(d_of_u * sq, ch.lo, ch.hi);
    }
    first_term_ *= norm;

    refine();
}

void PointFlag::refine() {
    FamilyRefiner fam(g_.tf, [this](const Rat& u) {
        const Chamber& ch = g_.tf.chamber_at(u);
        ThreefoldClass a_u(g_.algebra, {ch.positive[0].eval(u), ch.positive[1].eval(u)});
        DivisorClass s = restrict_class(a_u, g_.restriction, g_.surface);
        return sweep_surface_at(blow_.pullback(s), f_class_, blown_curves_);
    });
    fam.refine();
    chambers_ = fam.chambers();
}

const ChamberedDecomposition& PointFlag::inner_at(const Rat& u) {
    auto it = cache_.find(u);
    if (it == cache_.end()) {
        const Chamber& ch = g_.tf.chamber_at(u);
        ThreefoldClass a_u(g_.algebra, {ch.positive[0].eval(u), ch.positive[1].eval(u)});
        DivisorClass s = restrict_class(a_u, g_.restriction, g_.surface);
        it = cache_.emplace(u, sweep_surface_at(blow_.pullback(s), f_class_, blown_curves_))
                 .first;
    }
    return it->second;
}

std::vector<Polynomial> PointFlag::pdotf_at(const Rat& u) {
    const ChamberedDecomposition& cd = inner_at(u);
    std::vector<Polynomial> out;
    out.reserve(cd.chambers.size());
    for (const Chamber& ch : cd.chambers)
        out.push_back(pair_poly(blow_.blown, ch.positive, f_class_));
    return out;
}

Rat PointFlag::integrate_inner(
    const std::function<Rat(const Rat&, const ChamberedDecomposition&)>& g) {
    Rat total(0);
    for (const auto& [a, b] : chambers_) {
        auto sampler = [&](const Rat& u) { return g(u, inner_at(u)); };
        total += outer_reconstruct(sampler, a, b, {}, kDegreeCap).integral();
    }
    return total;
}

Rat PointFlag::vol_term() {
    if (!vol_term_) {
        const Rat norm = Rat(3) / g_.minus_k_cubed;
        vol_term_ = norm * integrate_inner([](const Rat&, const ChamberedDecomposition& cd) {
            return cd.vol_piecewise().integral();
        });
    }
    return *vol_term_;
}

Rat PointFlag::quad_term() {
    if (!quad_term_) {
        const Rat norm = Rat(3) / g_.minus_k_cubed;
        quad_term_ = norm * integrate_inner([&](const Rat&, const ChamberedDecomposition& cd) {
            Rat acc(0);
            for (const Chamber& ch : cd.chambers) {
                Polynomial pf = pair_poly(blow_.blown, ch.positive, f_class_);
                acc += definite_integral(pf * pf, ch.lo, ch.hi);
            }
            return acc;
        });
    }
    return *quad_term_;
}

Rat PointFlag::f_o_term(const PointProfile& o) {
    // Local multiplicities are bounded by the full pairing with F.
    for (const auto& [name, m] : o.local_mults) {
        if (m < 0)
            throw ValidationError("profile " + o.name + ": negative local multiplicity");
        const CurveRecord* rec = nullptr;
        for (const CurveRecord& c : blown_curves_)
            if (c.name == name)
                rec = &c;
        if (!rec)
            throw UnknownClass("profile " + o.name + " references unknown curve " + name);
        if (Rat(m) > pair(rec->cls, f_class_))
            throw ValidationError("profile " + o.name + ": local multiplicity of " + name +
                                  " exceeds its pairing with F");
    }

    const Rat norm = Rat(6) / g_.minus_k_cubed;
    return norm * integrate_inner([&](const Rat& u, const ChamberedDecomposition& cd) {
        // Strict-transform part N~'(u): constant in v at fixed u.
        std::map<std::string, Rat> nprime;
        const Chamber& tfch = g_.tf.chamber_at(u);
        for (const NRestrictionEntry& e : n_restr_) {
            Polynomial c = tf_negative_coeff(tfch, e.threefold_class);
            if (!c.is_zero())
                nprime[e.curve] += c.eval(u);
        }
        Rat acc(0);
        for (const Chamber& ch : cd.chambers) {
            Polynomial ord;
            for (const auto& [name, m] : o.local_mults) {
                if (m == 0)
                    continue;
                Polynomial c;
                auto itn = ch.negative_coeffs.find(name);
                if (itn != ch.negative_coeffs.end())
                    c += itn->second;
                auto itp = nprime.find(name);
                if (itp != nprime.end())
                    c += Polynomial(itp->second);
                ord += c * Rat(m);
            }
            if (ord.is_zero())
                continue;
            Polynomial pf = pair_poly(blow_.blown, ch.positive, f_class_);
            acc += definite_integral(pf * ord, ch.lo, ch.hi);
        }
        return acc;
    });
}

Verdict certify_curve(const Rat& s_div, const Rat& s_wc) {
    Verdict v;
    v.s_divisor_value = s_div;
    v.s_curve = s_wc;
    v.certified = s_div < Rat(1) && s_wc < Rat(1);
    return v;
}

Verdict certify_point(const Rat& s_div, const Rat& s_wf, const std::map<std::string, Rat>& s_o) {
    if (s_o.empty())
        throw IncompleteProfiles("point flag certified only over a nonempty profile list");
    Verdict v;
    v.s_divisor_value = s_div;
    v.s_point_f = s_wf;
    v.s_point_o = s_o;
    v.certified = s_div < Rat(1) && s_wf < Rat(2);
    for (const auto& [name, val] : s_o)
        v.certified = v.certified && val < Rat(1);
    return v;
}

} // namespace deltakit
