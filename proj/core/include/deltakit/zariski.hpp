#pragma once

#include <deltakit/lattice.hpp>
#include <deltakit/threefold.hpp>

#include <map>
#include <string>
#include <vector>

namespace deltakit {

/// Zariski decomposition D = P + N on a surface. The support curves carry
/// strictly positive coefficients, P pairs to zero with each of them, the
/// support Gram matrix is negative definite, and P pairs nonnegatively with
/// every supplied candidate. Nefness of P is certified only against the
/// candidate list; completeness of that list is the caller's obligation.
struct ZariskiResult {
    DivisorClass positive;
    std::map<std::string, Rat> negative; // coefficient of each support curve
    std::vector<std::string> support;
};

/// Iterative negative-support growth: start from the candidates D pairs
/// negatively with, solve the Gram system N.C_i = D.C_i, and absorb any
/// candidate the remainder still pairs negatively with, to a fixpoint.
/// Throws NotPseudoEffective when the Gram matrix fails negative
/// definiteness or a solved coefficient turns negative.
ZariskiResult decompose_surface(const DivisorClass& d, const std::vector<CurveRecord>& curves);

/// Decomposition on a rank-2 threefold. If D pairs nonnegatively with both
/// extremal curves it is nef; otherwise it is projected onto the violated
/// wall: D = a * (nef generator) + c * (extremal effective class), a >= 0,
/// c > 0.
struct ThreefoldZariskiResult {
    ThreefoldClass positive;
    std::map<std::string, Rat> negative;
    std::vector<std::string> support;
    int wall_index = -1; // index into algebra walls, -1 when nef
};

ThreefoldZariskiResult decompose_threefold_rank2(const ThreefoldClass& d);

/// Count of decompositions whose postconditions were verified exactly
/// (orthogonality, positivity, nefness against the list, negative-definite
/// Gram). Every decompose_surface call verifies before returning.
std::size_t zariski_verification_count();

} // namespace deltakit
