#include <deltakit/piecewise.hpp>

namespace deltakit {

PiecewisePoly::PiecewisePoly(std::vector<Rat> breakpoints, std::vector<Polynomial> pieces)
    : breaks_(std::move(breakpoints)), pieces_(std::move(pieces)) {
    if (breaks_.size() != pieces_.size() + 1)
        throw ValidationError("piecewise: breakpoint count must be piece count + 1");
    for (std::size_t i = 0; i + 1 < breaks_.size(); ++i)
        if (!(breaks_[i] < breaks_[i + 1]))
            throw ValidationError("piecewise: breakpoints not strictly increasing at index " +
                                  std::to_string(i));
}

PiecewisePoly PiecewisePoly::single(const Rat& lo, const Rat& hi, Polynomial p) {
    return PiecewisePoly({lo, hi}, {std::move(p)});
}

Rat PiecewisePoly::eval(const Rat& x) const {
    if (empty() || x < lo() || hi() < x)
        throw InvalidInterval("piecewise eval outside domain: " + x.str());
    // Left piece owns shared breakpoints; the first piece owns b_0.
    for (std::size_t i = 0; i < pieces_.size(); ++i)
        if (x <= breaks_[i + 1])
            return pieces_[i].eval(x);
    return pieces_.back().eval(x);
}

bool PiecewisePoly::is_continuous() const {
    for (std::size_t i = 0; i + 1 < pieces_.size(); ++i)
        if (pieces_[i].eval(breaks_[i + 1]) != pieces_[i + 1].eval(breaks_[i + 1]))
            return false;
    return true;
}

void PiecewisePoly::validate_continuity() const {
    if (!is_continuous())
        throw ValidationError("piecewise function discontinuous at an interior breakpoint");
}

Rat PiecewisePoly::integral() const {
    Rat total(0);
    for (std::size_t i = 0; i < pieces_.size(); ++i)
        total += definite_integral(pieces_[i], breaks_[i], breaks_[i + 1]);
    return total;
}

void PiecewisePoly::append(const Rat& new_hi, Polynomial p) {
    if (breaks_.empty())
        throw ValidationError("piecewise append on empty function needs a starting point");
    if (new_hi == breaks_.back())
        return; // zero-width piece
    if (new_hi < breaks_.back())
        throw ValidationError("piecewise append going backwards");
    breaks_.push_back(new_hi);
    pieces_.push_back(std::move(p));
}

} // namespace deltakit
