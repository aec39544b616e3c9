#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wavegraph {

struct PropertyResult {
    std::string name;
    bool passed = false;
    int instances = 0;
    int failures = 0;
    std::string detail;
};

/// Seeded property sweeps over the numerical inequalities and identities the
/// modules promise. selector is one of lap-bound, ore, residual, growth,
/// uniqueness, all. A failing property is a result, not an exception.
std::vector<PropertyResult> run_verify(const std::string& selector, std::uint64_t seed);

}  // namespace wavegraph
