#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace wavegraph {

using VertexId = std::int64_t;

/// Finite ordered set of vertex ids (Omega, boundaries, balls).
/// Kept sorted ascending so set operations and outputs are canonical.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<VertexId> ids);

    bool contains(VertexId v) const;
    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }
    const std::vector<VertexId>& ids() const { return ids_; }

    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

    bool operator==(const VertexSet&) const = default;

private:
    std::vector<VertexId> ids_;  // sorted, unique
};

struct VertexSpec {
    VertexId id;
    double mu;
};

struct EdgeSpec {
    VertexId u;
    VertexId v;
    double w;
};

/// Immutable weighted graph (V, E, mu, omega). Simple, undirected, locally
/// finite. Finite windows of infinite graphs carry a truncation-boundary
/// marker set so downstream operations can flag untrustworthy output.
class WeightedGraph {
public:
    struct Neighbor {
        int idx;
        double w;
    };

    static WeightedGraph build(const std::vector<VertexSpec>& vertices,
                               const std::vector<EdgeSpec>& edges);

    std::size_t vertex_count() const { return ids_.size(); }
    std::size_t edge_count() const { return n_edges_; }

    bool has_vertex(VertexId v) const { return index_.count(v) != 0; }
    int index_of(VertexId v) const;  // throws if absent
    VertexId id_at(int idx) const { return ids_[idx]; }
    const std::vector<VertexId>& vertex_ids() const { return ids_; }

    double mu(VertexId v) const { return mu_[index_of(v)]; }
    double mu_at(int idx) const { return mu_[idx]; }
    const std::vector<Neighbor>& neighbors(VertexId v) const { return adj_[index_of(v)]; }
    const std::vector<Neighbor>& neighbors_at(int idx) const { return adj_[idx]; }

    /// Weighted degree Deg(x) = sum_{y~x} w_xy / mu_x. Zero for isolated x.
    double degree(VertexId v) const;

    bool adjacent(VertexId x, VertexId y) const;
    std::optional<double> edge_weight(VertexId x, VertexId y) const;

    /// Vertices declared as the cut line of a finite window of an infinite
    /// graph; empty for graphs that are complete as given.
    const VertexSet& truncation_boundary() const { return truncation_; }
    void declare_truncation_boundary(VertexSet b);

    bool is_connected() const;

private:
    WeightedGraph() = default;

    std::vector<VertexId> ids_;
    std::unordered_map<VertexId, int> index_;
    std::vector<double> mu_;
    std::vector<std::vector<Neighbor>> adj_;
    std::size_t n_edges_ = 0;
    VertexSet truncation_;
};

/// Finite window {-radius..radius} of the integer line, mu = omega = 1.
/// The endpoints +-radius are marked as the truncation boundary.
WeightedGraph line_graph_window(int radius);

/// Star with `leaves` unit-weight edges, center id 0, leaves 1..n.
WeightedGraph star_graph(int leaves);

/// Combinatorial distance (minimal edge count); nullopt when unreachable.
std::optional<int> distance(const WeightedGraph& g, VertexId x, VertexId y);

/// B_R(x) and B_R(K): all vertices within distance R of the center(s).
VertexSet ball(const WeightedGraph& g, VertexId center, int R);
VertexSet ball(const WeightedGraph& g, const VertexSet& centers, int R);

/// Vertex boundary: outside neighbors of Omega.
VertexSet vertex_boundary(const WeightedGraph& g, const VertexSet& omega);

VertexSet set_union(const VertexSet& a, const VertexSet& b);

/// Witness for the degree-growth condition Deg(x) <= D * d(x,p)^alpha over
/// the component of p up to `checked_radius`. The reference vertex p itself
/// is never tested (d(p,p) = 0 would make the condition degenerate).
struct GrowthCertificate {
    VertexId p = 0;
    double alpha = 0.0;
    double D = 0.0;
    int requested_radius = 0;
    int checked_radius = 0;   // min(requested, graph extent from p)
    bool truncated = false;   // checked_radius < requested, or window cut reached
    bool holds = false;
    double min_D = 0.0;       // minimal D making the bound hold at this alpha
    VertexId worst_vertex = 0;
    std::size_t vertices_checked = 0;
};

GrowthCertificate certify_degree_growth(const WeightedGraph& g, VertexId p,
                                        double alpha, double D, int radius);

}  // namespace wavegraph
