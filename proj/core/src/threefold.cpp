#include <deltakit/threefold.hpp>

namespace deltakit {

std::shared_ptr<const ThreefoldAlgebra>
ThreefoldAlgebra::make(std::array<std::string, 2> basis, std::array<Rat, 4> cubes,
                       std::map<std::string, std::array<Rat, 2>> relations,
                       std::vector<Wall> walls) {
    auto alg = std::shared_ptr<ThreefoldAlgebra>(new ThreefoldAlgebra());
    alg->basis_ = std::move(basis);
    alg->cubes_ = std::move(cubes);
    alg->relations_ = std::move(relations);
    alg->walls_ = std::move(walls);
    // The basis elements are always available as relations.
    alg->relations_.emplace(alg->basis_[0], std::array<Rat, 2>{Rat(1), Rat(0)});
    alg->relations_.emplace(alg->basis_[1], std::array<Rat, 2>{Rat(0), Rat(1)});
    for (const Wall& w : alg->walls_) {
        alg->relation(w.nef_generator);
        alg->relation(w.effective);
    }
    return alg;
}

const std::array<Rat, 2>& ThreefoldAlgebra::relation(const std::string& name) const {
    auto it = relations_.find(name);
    if (it == relations_.end())
        throw UnknownClass("no derived class named \"" + name + "\"");
    return it->second;
}

ThreefoldClass& ThreefoldClass::operator+=(const ThreefoldClass& o) {
    if (algebra != o.algebra)
        throw LatticeMismatch("threefold classes on different algebras");
    coeffs[0] += o.coeffs[0];
    coeffs[1] += o.coeffs[1];
    return *this;
}

ThreefoldClass& ThreefoldClass::operator-=(const ThreefoldClass& o) {
    if (algebra != o.algebra)
        throw LatticeMismatch("threefold classes on different algebras");
    coeffs[0] -= o.coeffs[0];
    coeffs[1] -= o.coeffs[1];
    return *this;
}

ThreefoldClass ThreefoldClass::scaled(const Rat& s) const {
    return ThreefoldClass(algebra, {coeffs[0] * s, coeffs[1] * s});
}

std::string ThreefoldClass::str() const {
    std::string s;
    for (std::size_t i = 0; i < 2; ++i) {
        if (coeffs[i].is_zero())
            continue;
        if (!s.empty())
            s += coeffs[i].sign() > 0 ? " + " : " - ";
        else if (coeffs[i].sign() < 0)
            s += "-";
        Rat a = coeffs[i].abs();
        if (a != Rat(1))
            s += a.str() + "*";
        s += algebra->basis()[i];
    }
    return s.empty() ? "0" : s;
}

ThreefoldClass expand_relation(const AlgebraPtr& algebra, const std::string& name) {
    return ThreefoldClass(algebra, algebra->relation(name));
}

Rat triple(const ThreefoldClass& a, const ThreefoldClass& b, const ThreefoldClass& c) {
    if (a.algebra != b.algebra || a.algebra != c.algebra)
        throw LatticeMismatch("triple product across different algebras");
    Rat out(0);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                out += a.coeffs[static_cast<std::size_t>(i)] *
                       b.coeffs[static_cast<std::size_t>(j)] *
                       c.coeffs[static_cast<std::size_t>(k)] * a.algebra->cube(i + j + k);
    return out;
}

DivisorClass restrict_class(const ThreefoldClass& c, const RestrictionMatrix& m,
                            const LatticePtr& target) {
    if (m[0].size() != target->rank() || m[1].size() != target->rank())
        throw LatticeMismatch("restriction matrix width != surface rank");
    std::vector<Rat> out(target->rank(), Rat(0));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < target->rank(); ++j)
            out[j] += c.coeffs[i] * m[i][j];
    return DivisorClass(target, std::move(out));
}

std::vector<Polynomial> restrict_poly(const std::array<Polynomial, 2>& coeffs,
                                      const RestrictionMatrix& m, std::size_t target_rank) {
    if (m[0].size() != target_rank || m[1].size() != target_rank)
        throw LatticeMismatch("restriction matrix width != surface rank");
    std::vector<Polynomial> out(target_rank);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < target_rank; ++j)
            out[j] += coeffs[i] * m[i][j];
    return out;
}

} // namespace deltakit
