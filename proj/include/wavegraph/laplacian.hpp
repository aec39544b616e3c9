#pragma once

#include <functional>
#include <unordered_map>
#include <vector>

#include "wavegraph/graph.hpp"

namespace wavegraph {

/// Real-valued function on a declared support set. Evaluation outside the
/// support is an error, never an implicit zero; extension by zero is the
/// explicit `extended_by_zero` constructor.
class VertexFunction {
public:
    VertexFunction() = default;
    VertexFunction(VertexSet support, std::vector<double> values);

    static VertexFunction constant(const VertexSet& support, double c);
    static VertexFunction tabulate(const VertexSet& support,
                                   const std::function<double(VertexId)>& f);

    double operator()(VertexId v) const;
    bool defined_at(VertexId v) const { return support_.contains(v); }
    const VertexSet& support() const { return support_; }

    /// Same values on the old support, exact zero on the added vertices.
    VertexFunction extended_by_zero(const VertexSet& larger_support) const;

private:
    VertexSet support_;
    std::vector<double> values_;  // parallel to support_.ids()
};

/// Laplacian: Delta f(x) = sum_{y~x} (w_xy/mu_x) (f(y) - f(x)).
/// Requires B_1(x) inside the support of f.
double apply_laplacian(const WeightedGraph& g, const VertexFunction& f, VertexId x);

/// k-fold application over shrinking balls; k = 0 returns f(x).
/// Requires B_k(x) inside the support of f.
double apply_laplacian_power(const WeightedGraph& g, const VertexFunction& f, VertexId x,
                             int k);

struct PowerBound {
    double value = 0.0;
    bool touches_truncation = false;  // B_k(x) met the window cut; treat with care
};

/// (2 sup_{y in B_k(x)} Deg(y))^k * sup_f, the k-th power bound.
PowerBound laplacian_power_bound(const WeightedGraph& g, VertexId x, int k, double sup_f);

struct PowerBoundCheck {
    double lhs = 0.0;  // |Delta^k f(x)|
    double rhs = 0.0;  // bound with sup over the actual f on B_k(x)
    bool holds = false;
    bool touches_truncation = false;
};

/// Evaluates both sides of the power bound for the actual f; `holds` allows
/// relative slack 1e-12 so rounding cannot produce false failures.
PowerBoundCheck verify_power_bound(const WeightedGraph& g, const VertexFunction& f,
                                   VertexId x, int k);

}  // namespace wavegraph
