#include "plap/domain.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace plap {

std::string to_string(Boundary b) {
    return b == Boundary::dirichlet ? "dirichlet" : "torus";
}

Boundary boundary_from_string(const std::string& s) {
    if (s == "dirichlet") return Boundary::dirichlet;
    if (s == "torus") return Boundary::torus;
    throw std::invalid_argument("unknown boundary mode '" + s + "'");
}

namespace {

std::vector<std::vector<int>> unit_generators(int dim) {
    std::vector<std::vector<int>> gens;
    gens.reserve(2 * dim);
    for (int i = 0; i < dim; ++i) {
        std::vector<int> e(dim, 0);
        e[i] = 1;
        gens.push_back(e);
        e[i] = -1;
        gens.push_back(e);
    }
    return gens;
}

bool lexicographically_positive(const std::vector<int>& g) {
    for (int c : g) {
        if (c > 0) return true;
        if (c < 0) return false;
    }
    return false;  // zero vector, rejected elsewhere
}

std::vector<int> negated(const std::vector<int>& g) {
    std::vector<int> n(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) n[i] = -g[i];
    return n;
}

int mod_side(long long c, int side) {
    long long m = c % side;
    if (m < 0) m += side;
    return static_cast<int>(m);
}

}  // namespace

Domain::Domain(int dim, int side, Boundary boundary,
               std::vector<std::vector<int>> generators)
    : dim_(dim), side_(side), boundary_(boundary),
      generators_(std::move(generators)) {
    if (dim_ < 1) throw std::invalid_argument("domain dim must be >= 1");
    if (side_ < 1) throw std::invalid_argument("domain side must be >= 1");
    if (generators_.empty()) generators_ = unit_generators(dim_);

    std::set<std::vector<int>> seen;
    for (const auto& g : generators_) {
        if (static_cast<int>(g.size()) != dim_)
            throw std::invalid_argument("generator has wrong dimension");
        if (std::all_of(g.begin(), g.end(), [](int c) { return c == 0; }))
            throw std::invalid_argument("zero offset is not a valid generator");
        if (!seen.insert(g).second)
            throw std::invalid_argument("duplicate generator");
    }
    for (const auto& g : generators_) {
        if (!seen.count(negated(g)))
            throw std::invalid_argument("generator set is not symmetric");
    }

    vertex_count_ = 1;
    for (int i = 0; i < dim_; ++i) {
        if (vertex_count_ > (std::int64_t{1} << 56) / side_)
            throw std::invalid_argument("domain too large");
        vertex_count_ *= side_;
    }

    build_edges();
}

std::int64_t Domain::index_of(std::span<const int> coords) const {
    std::int64_t idx = 0;
    for (int i = 0; i < dim_; ++i) {
        if (coords[i] < 0 || coords[i] >= side_)
            throw std::out_of_range("coordinate outside the box");
        idx = idx * side_ + coords[i];
    }
    return idx;
}

std::vector<int> Domain::coords_of(std::int64_t v) const {
    std::vector<int> c(dim_);
    for (int i = dim_ - 1; i >= 0; --i) {
        c[i] = static_cast<int>(v % side_);
        v /= side_;
    }
    return c;
}

std::int64_t Domain::degree(std::int64_t v) const { return degree_[v]; }

std::int64_t Domain::neighbor(std::int64_t v, std::span<const int> shift) const {
    auto c = coords_of(v);
    std::int64_t idx = 0;
    for (int i = 0; i < dim_; ++i) {
        long long t = static_cast<long long>(c[i]) + shift[i];
        if (boundary_ == Boundary::torus) {
            t = mod_side(t, side_);
        } else if (t < 0 || t >= side_) {
            return Edge::ghost;
        }
        idx = idx * side_ + t;
    }
    return idx;
}

std::int64_t Domain::shifted_source(std::int64_t v, std::span<const int> k) const {
    if (boundary_ != Boundary::torus)
        throw std::invalid_argument("translation requires a torus domain");
    auto c = coords_of(v);
    std::int64_t idx = 0;
    for (int i = 0; i < dim_; ++i) {
        idx = idx * side_ + mod_side(static_cast<long long>(c[i]) - k[i], side_);
    }
    return idx;
}

void Domain::build_edges() {
    degree_.assign(vertex_count_, 0);
    for (std::int64_t v = 0; v < vertex_count_; ++v) {
        for (const auto& g : generators_) {
            bool positive = lexicographically_positive(g);
            std::int64_t w = neighbor(v, g);
            if (w == Edge::ghost) {
                // each ghost edge has exactly one interior endpoint, so it is
                // emitted from that endpoint for every leaving generator
                edges_.push_back({v, Edge::ghost});
                degree_[v] += 1;
            } else if (positive) {
                edges_.push_back({v, w});
                degree_[v] += 1;
                degree_[w] += 1;
            }
        }
    }
}

bool Domain::is_connected() const {
    if (vertex_count_ == 0) return false;
    // ghost vertices are real nodes of the truncated graph; with non-unit
    // generators two interior vertices may share one
    std::map<std::vector<int>, std::int64_t> ghost_ids;
    std::vector<std::vector<std::int64_t>> adj(vertex_count_);
    auto ghost_id = [&](const std::vector<int>& gc) {
        auto it = ghost_ids.find(gc);
        if (it != ghost_ids.end()) return it->second;
        std::int64_t id = vertex_count_ + static_cast<std::int64_t>(ghost_ids.size());
        ghost_ids.emplace(gc, id);
        adj.emplace_back();
        return id;
    };
    for (std::int64_t v = 0; v < vertex_count_; ++v) {
        auto c = coords_of(v);
        for (const auto& g : generators_) {
            std::int64_t w = neighbor(v, g);
            if (w == Edge::ghost) {
                std::vector<int> gc(dim_);
                for (int i = 0; i < dim_; ++i) gc[i] = c[i] + g[i];
                w = ghost_id(gc);
            }
            adj[v].push_back(w);
            if (w >= vertex_count_) adj[w].push_back(v);
        }
    }
    std::vector<char> visited(adj.size(), 0);
    std::queue<std::int64_t> frontier;
    frontier.push(0);
    visited[0] = 1;
    std::size_t reached = 1;
    while (!frontier.empty()) {
        std::int64_t v = frontier.front();
        frontier.pop();
        for (std::int64_t w : adj[v]) {
            if (!visited[w]) {
                visited[w] = 1;
                ++reached;
                frontier.push(w);
            }
        }
    }
    return reached == adj.size();
}

DomainPtr make_domain(int dim, int side, Boundary boundary,
                      std::vector<std::vector<int>> generators) {
    return std::make_shared<const Domain>(dim, side, boundary, std::move(generators));
}

}  // namespace plap
