#pragma once

#include <deltakit/rational.hpp>

#include <utility>
#include <vector>

namespace deltakit {

/// Univariate polynomial over Rat, coefficients ascending by degree with
/// trailing zeros trimmed. The zero polynomial has no coefficients and
/// degree -1.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rat& constant) { c_.push_back(constant); trim(); }
    Polynomial(long long constant) : Polynomial(Rat(constant)) {}
    explicit Polynomial(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    /// c0 + c1 * x.
    static Polynomial affine(const Rat& c0, const Rat& c1) {
        return Polynomial(std::vector<Rat>{c0, c1});
    }
    static Polynomial variable() { return affine(Rat(0), Rat(1)); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    /// Coefficient of x^i (zero beyond the degree).
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat eval(const Rat& x) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a) { return a.scaled(Rat(-1)); }

    Polynomial scaled(const Rat& s) const;
    friend Polynomial operator*(const Polynomial& a, const Rat& s) { return a.scaled(s); }
    friend Polynomial operator*(const Rat& s, const Polynomial& a) { return a.scaled(s); }

    /// Antiderivative with zero constant term.
    Polynomial antiderivative() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    std::string str(const std::string& var = "u") const;
    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
        return os << p.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }

    std::vector<Rat> c_;
};

/// Exact antiderivative difference over [a, b]. Throws InvalidInterval when a > b.
Rat definite_integral(const Polynomial& p, const Rat& a, const Rat& b);

/// Unique interpolating polynomial of degree < points.size(), by exact divided
/// differences. Throws DuplicateNode when two x-values coincide.
Polynomial poly_from_samples(const std::vector<std::pair<Rat, Rat>>& points);

/// All distinct rational roots, ascending. Throws NotRationalWall when the
/// coefficient magnitudes make divisor enumeration impractical.
std::vector<Rat> rational_roots(const Polynomial& p);

/// Real roots of a polynomial of degree <= 2, ascending. Throws
/// NotRationalWall if a root exists but is irrational.
std::vector<Rat> quadratic_roots(const Polynomial& p);

} // namespace deltakit
