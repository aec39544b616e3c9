#include "wavegraph/laplacian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wavegraph {

VertexFunction::VertexFunction(VertexSet support, std::vector<double> values)
    : support_(std::move(support)), values_(std::move(values)) {
    if (support_.size() != values_.size())
        throw std::invalid_argument("VertexFunction: " + std::to_string(support_.size()) +
                                    " support vertices but " + std::to_string(values_.size()) +
                                    " values");
}

VertexFunction VertexFunction::constant(const VertexSet& support, double c) {
    return VertexFunction(support, std::vector<double>(support.size(), c));
}

VertexFunction VertexFunction::tabulate(const VertexSet& support,
                                        const std::function<double(VertexId)>& f) {
    std::vector<double> vals;
    vals.reserve(support.size());
    for (VertexId v : support) vals.push_back(f(v));
    return VertexFunction(support, std::move(vals));
}

double VertexFunction::operator()(VertexId v) const {
    const auto& ids = support_.ids();
    auto it = std::lower_bound(ids.begin(), ids.end(), v);
    if (it == ids.end() || *it != v)
        throw std::out_of_range("VertexFunction: vertex " + std::to_string(v) +
                                " is outside the support");
    return values_[static_cast<std::size_t>(it - ids.begin())];
}

VertexFunction VertexFunction::extended_by_zero(const VertexSet& larger_support) const {
    for (VertexId v : support_)
        if (!larger_support.contains(v))
            throw std::invalid_argument("extended_by_zero: new support drops vertex " +
                                        std::to_string(v));
    std::vector<double> vals;
    vals.reserve(larger_support.size());
    for (VertexId v : larger_support) vals.push_back(defined_at(v) ? (*this)(v) : 0.0);
    return VertexFunction(larger_support, std::move(vals));
}

double apply_laplacian(const WeightedGraph& g, const VertexFunction& f, VertexId x) {
    if (!f.defined_at(x))
        throw std::invalid_argument("apply_laplacian: f is undefined at vertex " +
                                    std::to_string(x));
    double fx = f(x);
    double acc = 0.0;
    for (const auto& nb : g.neighbors(x)) {
        VertexId y = g.id_at(nb.idx);
        if (!f.defined_at(y))
            throw std::invalid_argument("apply_laplacian: f is undefined at neighbor " +
                                        std::to_string(y) + " of vertex " + std::to_string(x));
        acc += nb.w * (f(y) - fx);
    }
    return acc / g.mu(x);
}

double apply_laplacian_power(const WeightedGraph& g, const VertexFunction& f, VertexId x,
                             int k) {
    if (k < 0) throw std::invalid_argument("apply_laplacian_power: k must be >= 0");
    if (k == 0) return f(x);

    VertexSet domain = ball(g, x, k);
    for (VertexId v : domain)
        if (!f.defined_at(v))
            throw std::invalid_argument("apply_laplacian_power: support must cover the ball of "
                                        "radius " + std::to_string(k) + " around vertex " +
                                        std::to_string(x) + " (missing " + std::to_string(v) +
                                        ")");

    std::unordered_map<VertexId, double> cur;
    for (VertexId v : domain) cur[v] = f(v);
    // each application consumes one ring of the ball
    for (int step = 1; step <= k; ++step) {
        VertexSet inner = ball(g, x, k - step);
        std::unordered_map<VertexId, double> next;
        for (VertexId v : inner) {
            double fv = cur.at(v);
            double acc = 0.0;
            for (const auto& nb : g.neighbors(v)) acc += nb.w * (cur.at(g.id_at(nb.idx)) - fv);
            next[v] = acc / g.mu(v);
        }
        cur = std::move(next);
    }
    return cur.at(x);
}

PowerBound laplacian_power_bound(const WeightedGraph& g, VertexId x, int k, double sup_f) {
    if (k < 0) throw std::invalid_argument("laplacian_power_bound: k must be >= 0");
    if (sup_f < 0.0) throw std::invalid_argument("laplacian_power_bound: sup_f must be >= 0");
    PowerBound out;
    VertexSet bk = ball(g, x, k);
    double sup_deg = 0.0;
    for (VertexId v : bk) {
        sup_deg = std::max(sup_deg, g.degree(v));
        if (g.truncation_boundary().contains(v)) out.touches_truncation = true;
    }
    out.value = std::pow(2.0 * sup_deg, k) * sup_f;
    return out;
}

PowerBoundCheck verify_power_bound(const WeightedGraph& g, const VertexFunction& f,
                                   VertexId x, int k) {
    PowerBoundCheck out;
    out.lhs = std::abs(apply_laplacian_power(g, f, x, k));
    double sup_f = 0.0;
    for (VertexId v : ball(g, x, k)) sup_f = std::max(sup_f, std::abs(f(v)));
    PowerBound b = laplacian_power_bound(g, x, k, sup_f);
    out.rhs = b.value;
    out.touches_truncation = b.touches_truncation;
    out.holds = out.lhs <= out.rhs * (1.0 + 1e-12);
    return out;
}

}  // namespace wavegraph
