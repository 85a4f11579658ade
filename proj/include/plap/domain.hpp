#ifndef PLAP_DOMAIN_HPP
#define PLAP_DOMAIN_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace plap {

enum class Boundary { dirichlet, torus };

std::string to_string(Boundary b);
Boundary boundary_from_string(const std::string& s);

/// An undirected edge between vertex indices. `b == ghost` marks a boundary
/// edge whose outside endpoint carries the value 0 (dirichlet truncation).
struct Edge {
    std::int64_t a;
    std::int64_t b;
    static constexpr std::int64_t ghost = -1;
    bool is_ghost() const { return b == ghost; }
};

/// Finite truncation of the lattice Z^N: an L^N box with either zero ghost
/// boundary (dirichlet) or periodic wrap-around (torus). Adjacency comes from
/// a symmetric set of integer offsets ("generators"), defaulting to the unit
/// vectors, so torus domains are Cayley graphs of (Z/LZ)^N.
///
/// Vertices are indexed row-major, last axis fastest:
///   index(c) = ((c[0]*L + c[1])*L + ...)*L + c[N-1].
/// Domains are immutable after construction and safe to share across threads.
class Domain {
public:
    Domain(int dim, int side, Boundary boundary,
           std::vector<std::vector<int>> generators = {});

    int dim() const { return dim_; }
    int side() const { return side_; }
    Boundary boundary() const { return boundary_; }
    std::int64_t vertex_count() const { return vertex_count_; }
    const std::vector<std::vector<int>>& generators() const { return generators_; }

    /// Every undirected edge exactly once, in construction order (per vertex,
    /// per generator). On the torus the count is always L^N * |S| / 2.
    const std::vector<Edge>& edges() const { return edges_; }

    std::int64_t index_of(std::span<const int> coords) const;
    std::vector<int> coords_of(std::int64_t v) const;

    /// Number of incident edge endpoints (generator count, multigraph
    /// convention): |S| on the torus, fewer only never — ghost edges count.
    std::int64_t degree(std::int64_t v) const;

    /// Index of the vertex at coords(v) + shift, wrapping on the torus.
    /// Returns Edge::ghost when the target leaves a dirichlet box.
    std::int64_t neighbor(std::int64_t v, std::span<const int> shift) const;

    /// True when the graph on the box (plus ghost vertices in dirichlet
    /// mode) induced by the generator set is connected.
    bool is_connected() const;

    /// Vertex whose coords are coords(v) - k (mod side, torus only).
    std::int64_t shifted_source(std::int64_t v, std::span<const int> k) const;

private:
    int dim_;
    int side_;
    Boundary boundary_;
    std::vector<std::vector<int>> generators_;
    std::int64_t vertex_count_;
    std::vector<Edge> edges_;
    std::vector<std::int64_t> degree_;

    void build_edges();
};

using DomainPtr = std::shared_ptr<const Domain>;

DomainPtr make_domain(int dim, int side, Boundary boundary,
                      std::vector<std::vector<int>> generators = {});

}  // namespace plap

#endif
