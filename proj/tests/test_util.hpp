#pragma once

#include <deltakit/catalog.hpp>
#include <deltakit/report.hpp>

#include <random>

namespace testutil {

using deltakit::Polynomial;
using deltakit::Rat;

inline Rat rand_rat(std::mt19937_64& rng, int lo = -20, int hi = 20, int max_den = 12) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rat(num(rng), den(rng));
}

inline Polynomial poly(std::initializer_list<long long> ascending) {
    std::vector<Rat> c;
    for (long long v : ascending)
        c.emplace_back(v);
    return Polynomial(std::move(c));
}

// The family 2.17 intersection algebra, as declared by the catalog.
inline deltakit::AlgebraPtr family217() {
    return deltakit::builtin_scenario("divisor-HP3").make_algebra();
}

inline deltakit::ThreefoldClass tf_class(const deltakit::AlgebraPtr& alg, const Rat& h,
                                         const Rat& e) {
    return deltakit::ThreefoldClass(alg, {h, e});
}

} // namespace testutil
