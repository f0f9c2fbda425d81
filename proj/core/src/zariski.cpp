#include <deltakit/zariski.hpp>

#include <deltakit/detail/linsolve.hpp>

#include <algorithm>
#include <atomic>

namespace deltakit {

namespace detail {

Rat determinant(std::vector<std::vector<Rat>> a) {
    const std::size_t n = a.size();
    Rat det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero())
            ++piv;
        if (piv == n)
            return Rat(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (a[row][col].is_zero())
                continue;
            const Rat f = a[row][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k)
                a[row][k] -= f * a[col][k];
        }
    }
    return det;
}

bool negative_definite(const std::vector<std::vector<Rat>>& g) {
    const std::size_t n = g.size();
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::vector<Rat>> minor(k, std::vector<Rat>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                minor[i][j] = g[i][j];
        Rat det = determinant(std::move(minor));
        if (k % 2 == 1)
            det = -det;
        if (!(det.sign() > 0))
            return false;
    }
    return true;
}

} // namespace detail

namespace {

std::atomic<std::size_t> g_verified{0};

void verify_postconditions(const DivisorClass& d, const std::vector<const CurveRecord*>& cand,
                           const std::vector<std::size_t>& support, const std::vector<Rat>& coeff,
                           const DivisorClass& p) {
    for (std::size_t k = 0; k < support.size(); ++k) {
        if (!(coeff[k].sign() > 0))
            throw Error("internal: nonpositive negative-part coefficient survived");
        if (!pair(p, cand[support[k]]->cls).is_zero())
            throw Error("internal: positive part not orthogonal to support");
    }
    for (std::size_t i = 0; i < cand.size(); ++i)
        if (pair(p, cand[i]->cls).sign() < 0)
            throw Error("internal: positive part pairs negatively with candidate " +
                        cand[i]->name);
    DivisorClass recomposed = p;
    for (std::size_t k = 0; k < support.size(); ++k)
        recomposed += cand[support[k]]->cls.scaled(coeff[k]);
    for (std::size_t i = 0; i < d.coeffs.size(); ++i)
        if (recomposed.coeffs[i] != d.coeffs[i])
            throw Error("internal: P + N != D");
    g_verified.fetch_add(1, std::memory_order_relaxed);
}

} // namespace

std::size_t zariski_verification_count() { return g_verified.load(std::memory_order_relaxed); }

ZariskiResult decompose_surface(const DivisorClass& d, const std::vector<CurveRecord>& curves) {
    std::vector<const CurveRecord*> cand;
    for (const CurveRecord& c : curves) {
        if (!c.negative_candidate)
            continue;
        if (c.cls.lattice != d.lattice)
            throw LatticeMismatch("candidate curve " + c.name + " on a different lattice");
        if (!(pair(c.cls, c.cls).sign() < 0))
            throw ValidationError("candidate curve " + c.name +
                                  " has nonnegative self-intersection");
        cand.push_back(&c);
    }

    std::vector<std::size_t> support;
    std::vector<Rat> coeff;
    DivisorClass p = d;

    const std::size_t max_rounds = 4 * (cand.size() + 2);
    for (std::size_t round = 0;; ++round) {
        if (round > max_rounds)
            throw Error("negative-support fixpoint failed to converge");

        // Ties (P.C = 0) never enter; curves join only on strict violation.
        bool grew = false;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            if (std::find(support.begin(), support.end(), i) != support.end())
                continue;
            if (pair(p, cand[i]->cls).sign() < 0) {
                support.push_back(i);
                grew = true;
            }
        }
        if (!grew && round > 0)
            break;
        if (support.empty())
            break;

        const std::size_t m = support.size();
        std::vector<std::vector<Rat>> gram(m, std::vector<Rat>(m));
        std::vector<Rat> rhs(m);
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = 0; b < m; ++b)
                gram[a][b] = pair(cand[support[a]]->cls, cand[support[b]]->cls);
            rhs[a] = pair(d, cand[support[a]]->cls);
        }
        if (!detail::negative_definite(gram))
            throw NotPseudoEffective("support Gram matrix not negative definite");
        coeff = detail::solve_linear<Rat>(std::move(gram), std::move(rhs));
        for (std::size_t k = 0; k < m; ++k)
            if (coeff[k].sign() < 0)
                throw NotPseudoEffective("negative coefficient on " + cand[support[k]]->name +
                                         " in the Gram solve");
        // A vanishing coefficient means the curve is not genuinely in the
        // support; drop it and keep iterating.
        for (std::size_t k = m; k-- > 0;)
            if (coeff[k].is_zero()) {
                support.erase(support.begin() + static_cast<std::ptrdiff_t>(k));
                coeff.erase(coeff.begin() + static_cast<std::ptrdiff_t>(k));
            }

        p = d;
        for (std::size_t k = 0; k < support.size(); ++k)
            p -= cand[support[k]]->cls.scaled(coeff[k]);
    }

    verify_postconditions(d, cand, support, coeff, p);

    ZariskiResult out;
    out.positive = p;
    for (std::size_t k = 0; k < support.size(); ++k) {
        out.negative[cand[support[k]]->name] = coeff[k];
        out.support.push_back(cand[support[k]]->name);
    }
    std::sort(out.support.begin(), out.support.end());
    return out;
}

ThreefoldZariskiResult decompose_threefold_rank2(const ThreefoldClass& d) {
    const auto& alg = *d.algebra;
    if (alg.walls().size() != 2)
        throw ValidationError("rank-2 decomposition needs exactly two nef-cone walls");

    int violated = -1;
    for (std::size_t w = 0; w < alg.walls().size(); ++w) {
        if (d.pair_wall(alg.walls()[w]).sign() < 0) {
            if (violated >= 0)
                throw NotPseudoEffective("divisor pairs negatively with both extremal curves");
            violated = static_cast<int>(w);
        }
    }

    ThreefoldZariskiResult out;
    if (violated < 0) {
        out.positive = d;
        return out;
    }

    const auto& wall = alg.walls()[static_cast<std::size_t>(violated)];
    const auto gen = expand_relation(d.algebra, wall.nef_generator);
    const auto eff = expand_relation(d.algebra, wall.effective);
    // Solve D = a gen + c eff in basis coordinates.
    const Rat det = gen.coeffs[0] * eff.coeffs[1] - gen.coeffs[1] * eff.coeffs[0];
    if (det.is_zero())
        throw ValidationError("wall generator and effective class are proportional");
    const Rat a = (d.coeffs[0] * eff.coeffs[1] - d.coeffs[1] * eff.coeffs[0]) / det;
    const Rat c = (gen.coeffs[0] * d.coeffs[1] - gen.coeffs[1] * d.coeffs[0]) / det;
    if (a.sign() < 0)
        throw NotPseudoEffective("no representation with nonnegative nef coefficient");
    if (!(c.sign() > 0))
        throw Error("internal: wall violated but effective coefficient not positive");

    out.positive = gen.scaled(a);
    out.negative[wall.effective] = c;
    out.support.push_back(wall.effective);
    out.wall_index = violated;
    // The other wall must still see a nef positive part.
    for (const auto& w : alg.walls())
        if (out.positive.pair_wall(w).sign() < 0)
            throw Error("internal: projected positive part not nef against the walls");
    return out;
}

} // namespace deltakit
