#include <deltakit/rational.hpp>

#include <boost/multiprecision/integer.hpp>

namespace deltakit {

void Rat::normalize() {
    if (den_ == 0)
        throw ParseError("rational with zero denominator");
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rat& Rat::operator+=(const Rat& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rat& Rat::operator-=(const Rat& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rat& Rat::operator*=(const Rat& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.num_ == 0)
        throw Error("division by zero rational");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

std::string Rat::str() const {
    std::string s = num_.str();
    if (den_ != 1) {
        s += '/';
        s += den_.str();
    }
    return s;
}

Rat Rat::parse(std::string_view s) {
    auto is_int = [](std::string_view t) {
        if (!t.empty() && (t[0] == '-' || t[0] == '+'))
            t.remove_prefix(1);
        if (t.empty())
            return false;
        for (char c : t)
            if (c < '0' || c > '9')
                return false;
        return true;
    };
    auto strip_plus = [](std::string_view t) {
        if (!t.empty() && t[0] == '+')
            t.remove_prefix(1);
        return std::string(t);
    };
    auto slash = s.find('/');
    std::string_view ns = s.substr(0, slash);
    if (!is_int(ns))
        throw ParseError("malformed rational: \"" + std::string(s) + "\"");
    BigInt n{strip_plus(ns)};
    if (slash == std::string_view::npos)
        return Rat(n);
    std::string_view ds = s.substr(slash + 1);
    if (!is_int(ds))
        throw ParseError("malformed rational: \"" + std::string(s) + "\"");
    BigInt d{strip_plus(ds)};
    if (d == 0)
        throw ParseError("zero denominator in \"" + std::string(s) + "\"");
    return Rat(n, d);
}

std::optional<Rat> sqrt_exact(const Rat& r) {
    if (r.sign() < 0)
        return std::nullopt;
    if (r.is_zero())
        return Rat(0);
    BigInt sn = boost::multiprecision::sqrt(r.num());
    if (sn * sn != r.num())
        return std::nullopt;
    BigInt sd = boost::multiprecision::sqrt(r.den());
    if (sd * sd != r.den())
        return std::nullopt;
    return Rat(sn, sd);
}

} // namespace deltakit
