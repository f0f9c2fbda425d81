#pragma once

#include <deltakit/polynomial.hpp>

#include <vector>

namespace deltakit {

/// Breakpointed polynomial function on [b_0, b_k]: piece i is defined on the
/// closed interval [b_i, b_{i+1}]. At a shared breakpoint the value is taken
/// from the left piece; validate_continuity() asserts both sides agree.
class PiecewisePoly {
public:
    PiecewisePoly() = default;
    PiecewisePoly(std::vector<Rat> breakpoints, std::vector<Polynomial> pieces);

    static PiecewisePoly single(const Rat& lo, const Rat& hi, Polynomial p);

    std::size_t piece_count() const { return pieces_.size(); }
    bool empty() const { return pieces_.empty(); }
    const Rat& lo() const { return breaks_.front(); }
    const Rat& hi() const { return breaks_.back(); }
    const Rat& breakpoint(std::size_t i) const { return breaks_[i]; }
    const Polynomial& piece(std::size_t i) const { return pieces_[i]; }

    Rat eval(const Rat& x) const;

    /// Exact adjacency check: left and right pieces agree at every interior
    /// breakpoint.
    bool is_continuous() const;
    void validate_continuity() const;

    /// Sum of exact per-piece integrals over the full breakpoint range.
    Rat integral() const;

    /// Appends a piece on [hi(), new_hi]; drops it when the width is zero.
    void append(const Rat& new_hi, Polynomial p);

private:
    std::vector<Rat> breaks_;
    std::vector<Polynomial> pieces_;
};

inline Rat piecewise_definite_integral(const PiecewisePoly& f) { return f.integral(); }

} // namespace deltakit
