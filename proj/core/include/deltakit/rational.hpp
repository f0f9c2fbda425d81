#pragma once

#include <deltakit/errors.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace deltakit {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar.
///
/// Always stored in lowest terms with a positive denominator, so equality is
/// structural and comparisons reduce to one cross multiplication. Arithmetic
/// never rounds. Serializes as "p/q", or "p" when the denominator is 1.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(const BigInt& n) : num_(n), den_(1) {}
    Rat(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

    /// Parses "p/q" or "p". Throws ParseError on malformed input or q = 0.
    static Rat parse(std::string_view s);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    Rat abs() const { return num_ < 0 ? Rat(-num_, den_) : *this; }

    std::string str() const;

    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    Rat& operator*=(const Rat& o);
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend Rat operator-(const Rat& a) { return Rat(-a.num_, a.den_, normalized_tag{}); }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

private:
    struct normalized_tag {};
    Rat(BigInt n, BigInt d, normalized_tag) : num_(std::move(n)), den_(std::move(d)) {}

    void normalize();

    BigInt num_;
    BigInt den_; // > 0
};

/// Exact square root, or nullopt when the argument is not a perfect square
/// of a rational. Negative arguments yield nullopt.
std::optional<Rat> sqrt_exact(const Rat& r);

inline const Rat& min(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline const Rat& max(const Rat& a, const Rat& b) { return a < b ? b : a; }

} // namespace deltakit
