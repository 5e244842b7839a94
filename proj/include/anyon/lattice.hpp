#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace anyon {

/// Overhang pair (i, j) of a three-row Young diagram; a vertex of D_k when i + j <= k.
struct Vertex {
    int i = 0;
    int j = 0;

    auto operator<=>(const Vertex&) const = default;
};

std::string to_string(Vertex v);

/// Parses "I,J".
Vertex parse_vertex(const std::string& text);

inline bool in_level(Vertex v, int k) { return v.i >= 0 && v.j >= 0 && v.i + v.j <= k; }

/// |V_k| = (k+1)(k+2)/2.
std::size_t vertex_count(int k);

/// 0-based position of v in the canonical ordering (0,0),(0,1),...,(0,k),(1,0),...,(k,0).
/// The 1-based index used in reports is i(2k-i+3)/2 + j + 1.
std::size_t vertex_index(Vertex v, int k);

/// True iff both endpoints lie in V_k and `to` is one of (a,b+1), (a-1,b), (a+1,b-1)
/// for `from` = (a,b). Total: out-of-range inputs simply give false.
bool is_edge(Vertex from, Vertex to, int k);

/// The graph D_k. Immutable once built.
class Lattice {
public:
    explicit Lattice(int k);

    int level() const { return k_; }
    std::size_t size() const { return vertices_.size(); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

    std::size_t index_of(Vertex v) const { return vertex_index(v, k_); }
    bool contains(Vertex v) const { return in_level(v, k_); }

    /// Canonical indices of the successors / predecessors of the vertex at `index`.
    const std::vector<std::size_t>& successors(std::size_t index) const { return succ_[index]; }
    const std::vector<std::size_t>& predecessors(std::size_t index) const { return pred_[index]; }

private:
    int k_;
    std::vector<Vertex> vertices_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<std::vector<std::size_t>> succ_;
    std::vector<std::vector<std::size_t>> pred_;
};

/// Throws InvalidArgument for k < 1.
Lattice build_lattice(int k);

/// Dense 0/1 adjacency matrix, rows and columns in canonical vertex order.
struct AdjMatrix {
    std::size_t dim = 0;
    std::vector<std::uint8_t> entries;

    std::uint8_t operator()(std::size_t r, std::size_t c) const { return entries[r * dim + c]; }
};

AdjMatrix adjacency(const Lattice& lattice);

/// {"k": K, "vertices": [[i,j],...], "edges": [[[a,b],[c,d]],...]}
nlohmann::json to_json(const Lattice& lattice);

}  // namespace anyon
