#pragma once

#include <deltakit/scenario.hpp>

#include <vector>

namespace deltakit {

/// The built-in Fano family 2.17 scenario catalog: the three divisor sweeps,
/// the six ruled-surface curve flags (e in {0,2,...,10}), the four plane
/// point flags (secant and conic positions, with and without the point on
/// the second exceptional surface), and the three cubic-surface point flags.
std::vector<Scenario> builtin_catalog();

/// Catalog scenario by name. Throws UnknownClass.
Scenario builtin_scenario(const std::string& name);

} // namespace deltakit
