#include <deltakit/polynomial.hpp>

#include <algorithm>

namespace deltakit {

Rat Polynomial::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rat> out(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            out[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled(const Rat& s) const {
    if (s.is_zero())
        return {};
    std::vector<Rat> out(c_);
    for (auto& c : out)
        c *= s;
    return Polynomial(std::move(out));
}

Polynomial Polynomial::antiderivative() const {
    if (is_zero())
        return {};
    std::vector<Rat> out(c_.size() + 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        out[i + 1] = c_[i] / Rat(static_cast<long long>(i + 1));
    return Polynomial(std::move(out));
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero())
        return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero())
            continue;
        if (!s.empty())
            s += c_[i].sign() > 0 ? " + " : " - ";
        else if (c_[i].sign() < 0)
            s += "-";
        Rat a = c_[i].abs();
        if (i == 0 || a != Rat(1))
            s += a.str();
        if (i > 0) {
            if (a != Rat(1))
                s += "*";
            s += var;
            if (i > 1)
                s += "^" + std::to_string(i);
        }
    }
    return s;
}

Rat definite_integral(const Polynomial& p, const Rat& a, const Rat& b) {
    if (b < a)
        throw InvalidInterval("definite_integral: a > b (" + a.str() + " > " + b.str() + ")");
    Polynomial q = p.antiderivative();
    return q.eval(b) - q.eval(a);
}

Polynomial poly_from_samples(const std::vector<std::pair<Rat, Rat>>& points) {
    const std::size_t n = points.size();
    if (n == 0)
        throw DuplicateNode("poly_from_samples: no points");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (points[i].first == points[j].first)
                throw DuplicateNode("poly_from_samples: duplicate node x = " + points[i].first.str());

    // Newton divided differences, then expansion into the monomial basis.
    std::vector<Rat> dd;
    dd.reserve(n);
    std::vector<Rat> col(n);
    for (std::size_t i = 0; i < n; ++i)
        col[i] = points[i].second;
    dd.push_back(col[0]);
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = 0; i + level < n; ++i)
            col[i] = (col[i + 1] - col[i]) / (points[i + level].first - points[i].first);
        dd.push_back(col[0]);
    }

    Polynomial result;
    Polynomial basis(Rat(1));
    for (std::size_t i = 0; i < n; ++i) {
        result += basis.scaled(dd[i]);
        basis = basis * Polynomial::affine(-points[i].first, Rat(1));
    }
    return result;
}

namespace {

// Divisors of |n|, ascending. Bails out when n is too large to factor by
// trial division.
std::vector<BigInt> divisors(BigInt n) {
    if (n < 0)
        n = -n;
    if (n > BigInt("1000000000000000"))
        throw NotRationalWall("coefficient too large for rational root search");
    std::vector<BigInt> lo, hi;
    for (BigInt i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            lo.push_back(i);
            if (i * i != n)
                hi.push_back(n / i);
        }
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

} // namespace

std::vector<Rat> rational_roots(const Polynomial& p) {
    std::vector<Rat> roots;
    if (p.is_zero() || p.degree() == 0)
        return roots;

    // Clear denominators to an integer polynomial.
    BigInt lcm = 1;
    for (const Rat& c : p.coeffs())
        lcm = lcm / boost::multiprecision::gcd(lcm, c.den()) * c.den();
    std::vector<BigInt> q(p.coeffs().size());
    for (std::size_t i = 0; i < q.size(); ++i)
        q[i] = p.coeffs()[i].num() * (lcm / p.coeffs()[i].den());

    std::size_t low = 0;
    while (low < q.size() && q[low] == 0)
        ++low;
    if (low > 0)
        roots.push_back(Rat(0));
    if (low + 1 >= q.size()) {
        std::sort(roots.begin(), roots.end());
        return roots;
    }

    auto eval_int = [&](const Rat& x) {
        Rat acc(0);
        for (std::size_t i = q.size(); i-- > low;)
            acc = acc * x + Rat(q[i]);
        return acc;
    };
    for (const BigInt& num : divisors(q[low]))
        for (const BigInt& den : divisors(q.back())) {
            Rat cand(num, den);
            if (eval_int(cand).is_zero() &&
                std::find(roots.begin(), roots.end(), cand) == roots.end())
                roots.push_back(cand);
            cand = -cand;
            if (eval_int(cand).is_zero() &&
                std::find(roots.begin(), roots.end(), cand) == roots.end())
                roots.push_back(cand);
        }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<Rat> quadratic_roots(const Polynomial& p) {
    if (p.degree() > 2)
        throw Error("quadratic_roots: degree > 2");
    if (p.degree() <= 0)
        return {};
    if (p.degree() == 1)
        return {-p.coeff(0) / p.coeff(1)};
    Rat a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
    Rat disc = b * b - Rat(4) * a * c;
    if (disc.sign() < 0)
        return {};
    auto s = sqrt_exact(disc);
    if (!s)
        throw NotRationalWall("irrational quadratic root, discriminant " + disc.str());
    Rat r1 = (-b - *s) / (Rat(2) * a);
    Rat r2 = (-b + *s) / (Rat(2) * a);
    if (r2 < r1)
        std::swap(r1, r2);
    if (r1 == r2)
        return {r1};
    return {r1, r2};
}

} // namespace deltakit
