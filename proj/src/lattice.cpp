#include "anyon/lattice.hpp"

#include <sstream>

#include "anyon/errors.hpp"
#include "anyon/execution.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace anyon {

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

std::string to_string(Vertex v) { return std::to_string(v.i) + "," + std::to_string(v.j); }

Vertex parse_vertex(const std::string& text) {
    std::istringstream in(text);
    Vertex v;
    char comma = 0;
    if (!(in >> v.i >> comma >> v.j) || comma != ',' || !(in >> std::ws).eof())
        throw InvalidArgument("vertex must be written I,J; got '" + text + "'");
    if (v.i < 0 || v.j < 0) throw InvalidArgument("vertex coordinates must be nonnegative: " + text);
    return v;
}

std::size_t vertex_count(int k) {
    require_level(k);
    const auto kk = static_cast<std::size_t>(k);
    return (kk + 1) * (kk + 2) / 2;
}

std::size_t vertex_index(Vertex v, int k) {
    if (!in_level(v, k))
        throw InvalidArgument("vertex (" + to_string(v) + ") is not in V_" + std::to_string(k));
    // Rows i' < i contribute (k+1) + k + ... + (k+2-i) entries.
    const auto i = static_cast<std::size_t>(v.i);
    const auto kk = static_cast<std::size_t>(k);
    return i * (2 * kk - i + 3) / 2 + static_cast<std::size_t>(v.j);
}

bool is_edge(Vertex from, Vertex to, int k) {
    if (!in_level(from, k) || !in_level(to, k)) return false;
    const auto [a, b] = from;
    const auto [c, d] = to;
    return (c == a && d == b + 1) || (c == a - 1 && d == b) || (c == a + 1 && d == b - 1);
}

Lattice::Lattice(int k) : k_(k) {
    require_level(k);
    vertices_.reserve(vertex_count(k));
    for (int i = 0; i <= k; ++i)
        for (int j = 0; i + j <= k; ++j) vertices_.push_back({i, j});

    succ_.resize(vertices_.size());
    pred_.resize(vertices_.size());
    for (std::size_t r = 0; r < vertices_.size(); ++r) {
        for (std::size_t c = 0; c < vertices_.size(); ++c) {
            if (!is_edge(vertices_[r], vertices_[c], k)) continue;
            edges_.emplace_back(vertices_[r], vertices_[c]);
            succ_[r].push_back(c);
            pred_[c].push_back(r);
        }
    }
}

Lattice build_lattice(int k) { return Lattice(k); }

AdjMatrix adjacency(const Lattice& lattice) {
    AdjMatrix m;
    m.dim = lattice.size();
    m.entries.assign(m.dim * m.dim, 0);
    for (std::size_t r = 0; r < m.dim; ++r)
        for (auto c : lattice.successors(r)) m.entries[r * m.dim + c] = 1;
    return m;
}

nlohmann::json to_json(const Lattice& lattice) {
    nlohmann::json vertices = nlohmann::json::array();
    for (auto v : lattice.vertices()) vertices.push_back({v.i, v.j});
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [from, to] : lattice.edges())
        edges.push_back({{from.i, from.j}, {to.i, to.j}});
    return {{"k", lattice.level()}, {"vertices", vertices}, {"edges", edges}};
}

}  // namespace anyon
