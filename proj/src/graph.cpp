#include "wavegraph/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace wavegraph {

VertexSet::VertexSet(std::vector<VertexId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    auto dup = std::adjacent_find(ids_.begin(), ids_.end());
    if (dup != ids_.end())
        throw std::invalid_argument("VertexSet: duplicate id " + std::to_string(*dup));
}

bool VertexSet::contains(VertexId v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

WeightedGraph WeightedGraph::build(const std::vector<VertexSpec>& vertices,
                                   const std::vector<EdgeSpec>& edges) {
    WeightedGraph g;
    g.ids_.reserve(vertices.size());
    g.mu_.reserve(vertices.size());
    for (const auto& vs : vertices) {
        if (!(vs.mu > 0.0))
            throw std::invalid_argument("vertex " + std::to_string(vs.id) +
                                        ": mu must be > 0, got " + std::to_string(vs.mu));
        if (g.index_.count(vs.id))
            throw std::invalid_argument("duplicate vertex id " + std::to_string(vs.id));
        g.index_[vs.id] = static_cast<int>(g.ids_.size());
        g.ids_.push_back(vs.id);
        g.mu_.push_back(vs.mu);
    }
    g.adj_.resize(g.ids_.size());

    std::set<std::pair<int, int>> seen;
    for (const auto& es : edges) {
        auto iu = g.index_.find(es.u);
        auto iv = g.index_.find(es.v);
        if (iu == g.index_.end())
            throw std::invalid_argument("edge (" + std::to_string(es.u) + "," +
                                        std::to_string(es.v) + "): endpoint " +
                                        std::to_string(es.u) + " is not a vertex");
        if (iv == g.index_.end())
            throw std::invalid_argument("edge (" + std::to_string(es.u) + "," +
                                        std::to_string(es.v) + "): endpoint " +
                                        std::to_string(es.v) + " is not a vertex");
        if (es.u == es.v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(es.u));
        if (!(es.w > 0.0))
            throw std::invalid_argument("edge (" + std::to_string(es.u) + "," +
                                        std::to_string(es.v) + "): weight must be > 0, got " +
                                        std::to_string(es.w));
        int a = iu->second, b = iv->second;
        auto key = std::minmax(a, b);
        if (!seen.insert(key).second)
            throw std::invalid_argument("repeated edge (" + std::to_string(es.u) + "," +
                                        std::to_string(es.v) + ")");
        g.adj_[a].push_back({b, es.w});
        g.adj_[b].push_back({a, es.w});
        ++g.n_edges_;
    }
    // canonical neighbor order, by vertex id
    for (auto& nbrs : g.adj_)
        std::sort(nbrs.begin(), nbrs.end(),
                  [&](const Neighbor& l, const Neighbor& r) { return g.ids_[l.idx] < g.ids_[r.idx]; });
    return g;
}

int WeightedGraph::index_of(VertexId v) const {
    auto it = index_.find(v);
    if (it == index_.end())
        throw std::invalid_argument("unknown vertex id " + std::to_string(v));
    return it->second;
}

double WeightedGraph::degree(VertexId v) const {
    int i = index_of(v);
    double s = 0.0;
    for (const auto& nb : adj_[i]) s += nb.w;
    return s / mu_[i];
}

bool WeightedGraph::adjacent(VertexId x, VertexId y) const {
    return edge_weight(x, y).has_value();
}

std::optional<double> WeightedGraph::edge_weight(VertexId x, VertexId y) const {
    int i = index_of(x);
    int j = index_of(y);
    for (const auto& nb : adj_[i])
        if (nb.idx == j) return nb.w;
    return std::nullopt;
}

void WeightedGraph::declare_truncation_boundary(VertexSet b) {
    for (VertexId v : b)
        if (!has_vertex(v))
            throw std::invalid_argument("truncation boundary names unknown vertex " +
                                        std::to_string(v));
    truncation_ = std::move(b);
}

bool WeightedGraph::is_connected() const {
    if (ids_.empty()) return true;
    std::vector<char> vis(ids_.size(), 0);
    std::deque<int> q{0};
    vis[0] = 1;
    std::size_t n = 1;
    while (!q.empty()) {
        int cur = q.front();
        q.pop_front();
        for (const auto& nb : adj_[cur])
            if (!vis[nb.idx]) {
                vis[nb.idx] = 1;
                ++n;
                q.push_back(nb.idx);
            }
    }
    return n == ids_.size();
}

WeightedGraph line_graph_window(int radius) {
    if (radius < 1) throw std::invalid_argument("line_graph_window: radius must be >= 1");
    std::vector<VertexSpec> vs;
    std::vector<EdgeSpec> es;
    for (VertexId x = -radius; x <= radius; ++x) vs.push_back({x, 1.0});
    for (VertexId x = -radius; x < radius; ++x) es.push_back({x, x + 1, 1.0});
    auto g = WeightedGraph::build(vs, es);
    g.declare_truncation_boundary(VertexSet({-static_cast<VertexId>(radius),
                                             static_cast<VertexId>(radius)}));
    return g;
}

WeightedGraph star_graph(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star_graph: need at least one leaf");
    std::vector<VertexSpec> vs{{0, 1.0}};
    std::vector<EdgeSpec> es;
    for (VertexId l = 1; l <= leaves; ++l) {
        vs.push_back({l, 1.0});
        es.push_back({0, l, 1.0});
    }
    return WeightedGraph::build(vs, es);
}

namespace {

// BFS distances from the seed set; -1 where unreachable.
std::vector<int> bfs_from(const WeightedGraph& g, const std::vector<int>& seeds) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<int> q;
    for (int s : seeds) {
        if (dist[s] == -1) {
            dist[s] = 0;
            q.push_back(s);
        }
    }
    while (!q.empty()) {
        int cur = q.front();
        q.pop_front();
        for (const auto& nb : g.neighbors_at(cur))
            if (dist[nb.idx] == -1) {
                dist[nb.idx] = dist[cur] + 1;
                q.push_back(nb.idx);
            }
    }
    return dist;
}

}  // namespace

std::optional<int> distance(const WeightedGraph& g, VertexId x, VertexId y) {
    int ix = g.index_of(x);
    int iy = g.index_of(y);
    if (ix == iy) return 0;
    auto dist = bfs_from(g, {ix});
    if (dist[iy] < 0) return std::nullopt;
    return dist[iy];
}

VertexSet ball(const WeightedGraph& g, VertexId center, int R) {
    return ball(g, VertexSet({center}), R);
}

VertexSet ball(const WeightedGraph& g, const VertexSet& centers, int R) {
    if (R < 0) throw std::invalid_argument("ball: radius must be >= 0");
    std::vector<int> seeds;
    seeds.reserve(centers.size());
    for (VertexId c : centers) seeds.push_back(g.index_of(c));
    auto dist = bfs_from(g, seeds);
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < dist.size(); ++i)
        if (dist[i] >= 0 && dist[i] <= R) out.push_back(g.id_at(static_cast<int>(i)));
    return VertexSet(std::move(out));
}

VertexSet vertex_boundary(const WeightedGraph& g, const VertexSet& omega) {
    std::unordered_set<VertexId> out;
    for (VertexId v : omega) {
        for (const auto& nb : g.neighbors(v)) {
            VertexId y = g.id_at(nb.idx);
            if (!omega.contains(y)) out.insert(y);
        }
    }
    return VertexSet(std::vector<VertexId>(out.begin(), out.end()));
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    std::vector<VertexId> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

GrowthCertificate certify_degree_growth(const WeightedGraph& g, VertexId p,
                                        double alpha, double D, int radius) {
    if (alpha < 0.0 || alpha > 2.0)
        throw std::invalid_argument("certify_degree_growth: alpha must be in [0,2]");
    if (!(D > 0.0)) throw std::invalid_argument("certify_degree_growth: D must be > 0");
    if (radius < 0) throw std::invalid_argument("certify_degree_growth: radius must be >= 0");

    GrowthCertificate cert;
    cert.p = p;
    cert.alpha = alpha;
    cert.D = D;
    cert.requested_radius = radius;

    auto dist = bfs_from(g, {g.index_of(p)});

    int extent = 0;
    for (int d : dist) extent = std::max(extent, d);
    cert.checked_radius = std::min(radius, extent);
    cert.truncated = cert.checked_radius < radius;

    cert.holds = true;
    double worst_ratio = 0.0;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        int d = dist[i];
        if (d <= 0 || d > radius) continue;  // unreachable, beyond radius, or p itself
        VertexId v = g.id_at(static_cast<int>(i));
        double deg = g.degree(v);
        double ratio = deg / std::pow(static_cast<double>(d), alpha);
        if (ratio > worst_ratio) {
            worst_ratio = ratio;
            cert.worst_vertex = v;
        }
        if (deg > D * std::pow(static_cast<double>(d), alpha)) cert.holds = false;
        ++cert.vertices_checked;
    }
    cert.min_D = worst_ratio;
    if (!g.truncation_boundary().empty()) {
        for (VertexId v : g.truncation_boundary()) {
            int d = dist[g.index_of(v)];
            if (d >= 0 && d <= radius) cert.truncated = true;
        }
    }
    return cert;
}

}  // namespace wavegraph
