#include <deltakit/sweep.hpp>

#include <deltakit/detail/linsolve.hpp>

#include <algorithm>

namespace deltakit {

Polynomial pair_poly(const LatticePtr& lat, const std::vector<Polynomial>& a,
                     const DivisorClass& b) {
    if (b.lattice.get() != lat.get())
        throw LatticeMismatch("pair_poly: class on a different lattice");
    Polynomial out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        Rat w(0);
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            w += b.coeffs[j] * lat->form(i, j);
        out += a[i] * w;
    }
    return out;
}

std::vector<std::string> Chamber::support() const {
    std::vector<std::string> s;
    s.reserve(negative_coeffs.size());
    for (const auto& [name, c] : negative_coeffs)
        s.push_back(name);
    return s;
}

const Chamber& ChamberedDecomposition::chamber_at(const Rat& u) const {
    if (chambers.empty())
        throw InvalidInterval("empty decomposition");
    if (u < chambers.front().lo || chambers.back().hi < u)
        throw InvalidInterval("parameter " + u.str() + " outside [0, tau]");
    for (const Chamber& ch : chambers)
        if (u <= ch.hi)
            return ch;
    return chambers.back();
}

Rat ChamberedDecomposition::vol_at(const Rat& u) const { return chamber_at(u).vol.eval(u); }

PiecewisePoly ChamberedDecomposition::vol_piecewise() const {
    std::vector<Rat> breaks;
    std::vector<Polynomial> pieces;
    if (chambers.empty())
        return {};
    breaks.push_back(chambers.front().lo);
    for (const Chamber& ch : chambers) {
        breaks.push_back(ch.hi);
        pieces.push_back(ch.vol);
    }
    return PiecewisePoly(std::move(breaks), std::move(pieces));
}

std::vector<std::vector<std::string>> ChamberedDecomposition::signature() const {
    std::vector<std::vector<std::string>> out;
    out.reserve(chambers.size());
    for (const Chamber& ch : chambers)
        out.push_back(ch.support());
    return out;
}

void ChamberedDecomposition::validate() const {
    for (std::size_t i = 0; i < chambers.size(); ++i) {
        if (!(chambers[i].lo < chambers[i].hi))
            throw ValidationError("degenerate chamber");
        if (i + 1 < chambers.size()) {
            const Rat& w = chambers[i].hi;
            if (w != chambers[i + 1].lo)
                throw ValidationError("chambers do not tile the interval");
            if (chambers[i].vol.eval(w) != chambers[i + 1].vol.eval(w))
                throw ValidationError("volume discontinuous at wall " + w.str());
            // Negative coefficients continue exactly across the wall (absent
            // entries count as zero).
            auto coeff_at = [&](const Chamber& ch, const std::string& name) {
                auto it = ch.negative_coeffs.find(name);
                return it == ch.negative_coeffs.end() ? Rat(0) : it->second.eval(w);
            };
            for (const auto& [name, c] : chambers[i].negative_coeffs)
                if (coeff_at(chambers[i], name) != coeff_at(chambers[i + 1], name))
                    throw ValidationError("coefficient of " + name + " discontinuous at wall " +
                                          w.str());
            for (const auto& [name, c] : chambers[i + 1].negative_coeffs)
                if (coeff_at(chambers[i], name) != coeff_at(chambers[i + 1], name))
                    throw ValidationError("coefficient of " + name + " discontinuous at wall " +
                                          w.str());
        }
    }
}

Rat pseff_threshold(const Chamber& last, const std::optional<Rat>& hint) {
    std::vector<Rat> roots = rational_roots(last.vol);
    std::optional<Rat> tau;
    for (const Rat& r : roots)
        if (last.lo <= r && (!tau || r < *tau))
            tau = r;
    if (!tau)
        throw NoThreshold("final chamber volume has no rational root at or beyond " +
                          last.lo.str());
    if (hint && *hint != *tau)
        throw ValidationError("threshold hint " + hint->str() + " does not match computed " +
                              tau->str());
    return *tau;
}

namespace {

enum class EventKind { support, volume };

struct Event {
    Rat at;
    EventKind kind;
};

// Root of an affine function crossing from + to -, strictly beyond lo.
std::optional<Rat> downward_root(const Polynomial& g, const Rat& lo) {
    if (g.degree() != 1 || g.coeff(1).sign() >= 0)
        return std::nullopt;
    Rat r = -g.coeff(0) / g.coeff(1);
    if (r > lo)
        return r;
    return std::nullopt;
}

// ---------------------------------------------------------------- surface --

struct SurfaceFamily {
    LatticePtr lat;
    std::vector<Polynomial> d; // D(v) coefficients, affine
    std::vector<const CurveRecord*> cand;
};

struct SurfaceState {
    std::vector<std::size_t> support;
    std::vector<Polynomial> n;    // per support curve, affine in v
    std::vector<Polynomial> pos;  // class coefficients, affine in v
    Polynomial vol;               // degree <= 2
    std::vector<Polynomial> pdotc; // P(v).candidate, affine, per candidate
};

SurfaceState solve_state(const SurfaceFamily& f, std::vector<std::size_t> support) {
    SurfaceState st;
    st.support = std::move(support);
    const std::size_t m = st.support.size();
    if (m > 0) {
        std::vector<std::vector<Rat>> gram(m, std::vector<Rat>(m));
        std::vector<Polynomial> rhs(m);
        for (std::size_t a = 0; a < m; ++a) {
            const DivisorClass& ca = f.cand[st.support[a]]->cls;
            for (std::size_t b = 0; b < m; ++b)
                gram[a][b] = pair(ca, f.cand[st.support[b]]->cls);
            rhs[a] = pair_poly(f.lat, f.d, ca);
        }
        if (!detail::negative_definite(gram))
            throw NotPseudoEffective("support Gram matrix not negative definite");
        st.n = detail::solve_linear<Polynomial>(std::move(gram), std::move(rhs));
    }
    st.pos = f.d;
    for (std::size_t k = 0; k < m; ++k) {
        const DivisorClass& ck = f.cand[st.support[k]]->cls;
        for (std::size_t j = 0; j < st.pos.size(); ++j)
            st.pos[j] -= st.n[k] * ck.coeffs[j];
    }
    st.vol = pair_expand(*f.lat, st.pos, st.pos);
    st.pdotc.reserve(f.cand.size());
    for (const CurveRecord* c : f.cand)
        st.pdotc.push_back(pair_poly(f.lat, st.pos, c->cls));
    return st;
}

// State is usable on a right neighbourhood of lo: coefficients and candidate
// pairings nonnegative at lo and not immediately decreasing through zero.
bool valid_after(const SurfaceState& st, const SurfaceFamily& f, const Rat& lo) {
    auto ok = [&](const Polynomial& g) {
        const Rat v = g.eval(lo);
        if (v.sign() < 0)
            return false;
        if (v.is_zero() && g.coeff(1).sign() < 0)
            return false;
        return true;
    };
    for (const Polynomial& g : st.n)
        if (!ok(g))
            return false;
    for (std::size_t i = 0; i < f.cand.size(); ++i) {
        if (std::find(st.support.begin(), st.support.end(), i) != st.support.end())
            continue;
        if (!ok(st.pdotc[i]))
            return false;
    }
    return true;
}

std::optional<Event> first_event(const SurfaceState& st, const SurfaceFamily& f, const Rat& lo) {
    std::optional<Event> best;
    auto push = [&](const Rat& r, EventKind kind) {
        if (!best || r < best->at || (r == best->at && kind == EventKind::volume))
            best = Event{r, kind};
    };
    for (const Polynomial& g : st.n)
        if (auto r = downward_root(g, lo))
            push(*r, EventKind::support);
    for (std::size_t i = 0; i < f.cand.size(); ++i) {
        if (std::find(st.support.begin(), st.support.end(), i) != st.support.end())
            continue;
        if (auto r = downward_root(st.pdotc[i], lo))
            push(*r, EventKind::support);
    }
    // The volume vanishing ends the sweep. An irrational root only matters
    // when no support change precedes it; the chamber walls themselves must
    // be rational.
    try {
        for (const Rat& r : quadratic_roots(st.vol))
            if (r > lo) {
                push(r, EventKind::volume);
                break;
            }
    } catch (const NotRationalWall&) {
        if (!best || !(st.vol.eval(best->at).sign() > 0))
            throw;
    }
    return best;
}

DivisorClass eval_class(const LatticePtr& lat, const std::vector<Polynomial>& coeffs,
                        const Rat& x) {
    std::vector<Rat> c(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        c[i] = coeffs[i].eval(x);
    return DivisorClass(lat, std::move(c));
}

// Support valid just beyond lo, with its affine solution and first event.
std::pair<SurfaceState, std::optional<Event>> state_after(const SurfaceFamily& f, const Rat& lo) {
    Rat delta(1);
    for (int depth = 0; depth < 64; ++depth) {
        const Rat probe = lo + delta;
        std::optional<ZariskiResult> z;
        try {
            DivisorClass dv = eval_class(f.lat, f.d, probe);
            std::vector<CurveRecord> recs;
            recs.reserve(f.cand.size());
            for (const CurveRecord* c : f.cand)
                recs.push_back(*c);
            z = decompose_surface(dv, recs);
        } catch (const NotPseudoEffective&) {
            delta /= Rat(2);
            continue;
        }
        std::vector<std::size_t> support;
        for (std::size_t i = 0; i < f.cand.size(); ++i)
            if (z->negative.count(f.cand[i]->name))
                support.push_back(i);
        SurfaceState st = solve_state(f, std::move(support));
        if (!valid_after(st, f, lo)) {
            delta /= Rat(2);
            continue;
        }
        auto ev = first_event(st, f, lo);
        if (ev && probe > ev->at) {
            delta = (ev->at - lo) / Rat(2);
            continue;
        }
        return {std::move(st), ev};
    }
    throw Error("support bracketing failed after 64 halvings beyond " + lo.str());
}

} // namespace

ChamberedDecomposition sweep_surface_at(const DivisorClass& a, const DivisorClass& c,
                                        const std::vector<CurveRecord>& curves) {
    SurfaceFamily f;
    f.lat = a.lattice;
    if (c.lattice != a.lattice)
        throw LatticeMismatch("sweep ray on a different lattice");
    f.d.resize(a.coeffs.size());
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        f.d[i] = Polynomial::affine(a.coeffs[i], -c.coeffs[i]);
    for (const CurveRecord& cr : curves)
        if (cr.negative_candidate)
            f.cand.push_back(&cr);

    ChamberedDecomposition out;

    // Degenerate ray: volume already zero at v = 0.
    {
        std::vector<CurveRecord> recs;
        for (const CurveRecord* p : f.cand)
            recs.push_back(*p);
        ZariskiResult z0 = decompose_surface(eval_class(f.lat, f.d, Rat(0)), recs);
        if (pair(z0.positive, z0.positive).is_zero()) {
            out.tau = Rat(0);
            return out;
        }
    }

    Rat lo(0);
    for (int guard = 0; guard < 200; ++guard) {
        auto [st, ev] = state_after(f, lo);
        if (!ev)
            throw NoThreshold("volume never vanishes along the ray");
        Chamber ch;
        ch.lo = lo;
        ch.hi = ev->at;
        ch.positive = st.pos;
        ch.vol = st.vol;
        for (std::size_t k = 0; k < st.support.size(); ++k)
            ch.negative_coeffs[f.cand[st.support[k]]->name] = st.n[k];
        out.chambers.push_back(std::move(ch));
        if (ev->kind == EventKind::volume) {
            out.tau = ev->at;
            out.vol_vanishes_at_tau = out.chambers.back().vol.eval(out.tau).is_zero();
            out.validate();
            return out;
        }
        lo = ev->at;
    }
    throw Error("surface sweep exceeded 200 chambers");
}

// -------------------------------------------------------------- threefold --

namespace {

struct ThreefoldState {
    int wall = -1; // -1 nef
    std::array<Polynomial, 2> pos;
    Polynomial neg; // coefficient of the wall's effective class
    Polynomial vol;
};

ThreefoldState solve_tf_state(const AlgebraPtr& alg, const std::array<Polynomial, 2>& d,
                              int wall) {
    ThreefoldState st;
    st.wall = wall;
    if (wall < 0) {
        st.pos = d;
    } else {
        const auto& w = alg->walls()[static_cast<std::size_t>(wall)];
        const auto gen = alg->relation(w.nef_generator);
        const auto eff = alg->relation(w.effective);
        const Rat det = gen[0] * eff[1] - gen[1] * eff[0];
        if (det.is_zero())
            throw ValidationError("wall generator and effective class proportional");
        Polynomial aa = (d[0] * eff[1] - d[1] * eff[0]) * (Rat(1) / det);
        st.neg = (d[1] * gen[0] - d[0] * gen[1]) * (Rat(1) / det);
        st.pos = {aa * gen[0], aa * gen[1]};
    }
    st.vol = triple_expand<Polynomial>(*alg, st.pos, st.pos, st.pos);
    return st;
}

} // namespace

ChamberedDecomposition sweep_threefold(const ThreefoldClass& a, const ThreefoldClass& b,
                                       const std::optional<Rat>& tau_hint) {
    const AlgebraPtr alg = a.algebra;
    if (b.algebra != alg)
        throw LatticeMismatch("ray classes on different algebras");
    const std::array<Polynomial, 2> d = {Polynomial::affine(a.coeffs[0], -b.coeffs[0]),
                                         Polynomial::affine(a.coeffs[1], -b.coeffs[1])};

    auto eval_tf = [&](const Rat& u) {
        return ThreefoldClass(alg, {d[0].eval(u), d[1].eval(u)});
    };

    ChamberedDecomposition out;
    {
        ThreefoldZariskiResult z0 = decompose_threefold_rank2(eval_tf(Rat(0)));
        if (triple(z0.positive, z0.positive, z0.positive).is_zero()) {
            out.tau = Rat(0);
            if (tau_hint && *tau_hint != out.tau)
                throw ValidationError("threshold hint does not match computed 0");
            return out;
        }
    }

    Rat lo(0);
    for (int guard = 0; guard < 16; ++guard) {
        // Wall regime just beyond lo.
        std::optional<ThreefoldState> st;
        Rat delta(1);
        for (int depth = 0; depth < 64 && !st; ++depth) {
            const Rat probe = lo + delta;
            try {
                ThreefoldZariskiResult z = decompose_threefold_rank2(eval_tf(probe));
                ThreefoldState cand_st = solve_tf_state(alg, d, z.wall_index);
                // valid at lo: nonnegative wall pairings (nef) or nonnegative
                // projection coefficients.
                bool ok = true;
                if (cand_st.wall < 0) {
                    for (const auto& w : alg->walls()) {
                        Polynomial phi = d[0] * w.pairing[0] + d[1] * w.pairing[1];
                        const Rat v = phi.eval(lo);
                        if (v.sign() < 0 || (v.is_zero() && phi.coeff(1).sign() < 0))
                            ok = false;
                    }
                } else {
                    const Rat nv = cand_st.neg.eval(lo);
                    if (nv.sign() < 0 || (nv.is_zero() && cand_st.neg.coeff(1).sign() < 0))
                        ok = false;
                }
                if (ok)
                    st = std::move(cand_st);
                else
                    delta /= Rat(2);
            } catch (const NotPseudoEffective&) {
                delta /= Rat(2);
            }
        }
        if (!st)
            throw Error("threefold sweep bracketing failed beyond " + lo.str());

        // Events: wall-pairing sign changes, projection-coefficient roots and
        // the volume vanishing.
        std::optional<Event> ev;
        auto push = [&](const Rat& r, EventKind kind) {
            if (!ev || r < ev->at || (r == ev->at && kind == EventKind::volume))
                ev = Event{r, kind};
        };
        if (st->wall < 0) {
            for (const auto& w : alg->walls()) {
                Polynomial phi = d[0] * w.pairing[0] + d[1] * w.pairing[1];
                if (auto r = downward_root(phi, lo))
                    push(*r, EventKind::support);
            }
        } else {
            if (auto r = downward_root(st->neg, lo))
                push(*r, EventKind::support);
        }
        for (const Rat& r : rational_roots(st->vol))
            if (r > lo) {
                push(r, EventKind::volume);
                break;
            }
        if (!ev)
            throw NoThreshold("threefold volume never vanishes along the ray");

        Chamber ch;
        ch.lo = lo;
        ch.hi = ev->at;
        ch.positive = {st->pos[0], st->pos[1]};
        ch.vol = st->vol;
        if (st->wall >= 0)
            ch.negative_coeffs[alg->walls()[static_cast<std::size_t>(st->wall)].effective] =
                st->neg;
        out.chambers.push_back(std::move(ch));
        if (ev->kind == EventKind::volume) {
            out.tau = pseff_threshold(out.chambers.back(), tau_hint);
            out.vol_vanishes_at_tau = out.chambers.back().vol.eval(out.tau).is_zero();
            out.validate();
            // Spot verification at one extra in-chamber sample per chamber.
            for (const Chamber& c : out.chambers) {
                const Rat mid = c.lo + (c.hi - c.lo) * Rat(13, 29);
                ThreefoldZariskiResult z = decompose_threefold_rank2(eval_tf(mid));
                Rat vol_direct = triple(z.positive, z.positive, z.positive);
                if (vol_direct != c.vol.eval(mid))
                    throw DegreeCapExceeded("chamber volume fails verification sample at u = " +
                                            mid.str());
            }
            return out;
        }
        lo = ev->at;
    }
    throw Error("threefold sweep exceeded chamber guard");
}

PiecewisePoly outer_reconstruct(const std::function<Rat(const Rat&)>& sampler, const Rat& lo,
                                const Rat& hi, std::vector<Rat> candidate_walls, int degree_cap) {
    if (hi < lo)
        throw InvalidInterval("outer_reconstruct: empty domain");
    std::vector<Rat> walls;
    walls.push_back(lo);
    for (const Rat& w : candidate_walls)
        if (lo < w && w < hi)
            walls.push_back(w);
    walls.push_back(hi);
    std::sort(walls.begin(), walls.end());
    walls.erase(std::unique(walls.begin(), walls.end()), walls.end());

    std::vector<Rat> breaks;
    std::vector<Polynomial> pieces;
    breaks.push_back(walls.front());
    for (std::size_t i = 0; i + 1 < walls.size(); ++i) {
        const Rat &a = walls[i], &b = walls[i + 1];
        if (a == b)
            continue;
        const Rat width = b - a;
        const long long grid = degree_cap + 2;
        std::vector<std::pair<Rat, Rat>> samples;
        for (long long k = 1; k <= degree_cap + 1; ++k) {
            const Rat x = a + width * Rat(k, grid);
            samples.emplace_back(x, sampler(x));
        }
        Polynomial p = poly_from_samples(samples);
        const Rat check = a + width * Rat(1, 2 * grid);
        if (p.eval(check) != sampler(check))
            throw DegreeCapExceeded("reconstruction fails verification sample at " + check.str());
        breaks.push_back(b);
        pieces.push_back(std::move(p));
    }
    if (pieces.empty())
        return {};
    return PiecewisePoly(std::move(breaks), std::move(pieces));
}

} // namespace deltakit
