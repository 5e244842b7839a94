#pragma once

// Test-only oracles. None of these go through the DP kernels, the Bareiss
// solver or the Lattice successor lists they are used to check.

#include <map>
#include <vector>

#include <gmpxx.h>

#include "anyon/lattice.hpp"
#include "anyon/poly.hpp"
#include "anyon/poly_matrix.hpp"

namespace oracle {

using anyon::BigInt;
using anyon::Vertex;

inline std::vector<Vertex> level_vertices(int k) {
    std::vector<Vertex> out;
    for (int a = 0; a <= k; ++a)
        for (int b = 0; b <= k; ++b)
            if (a + b <= k) out.push_back({a, b});
    return out;
}

inline void walk(int k, const std::vector<Vertex>& all, Vertex at, int remaining, std::map<Vertex, long>& ends) {
    if (remaining == 0) {
        ++ends[at];
        return;
    }
    for (auto next : all)
        if (anyon::is_edge(at, next, k)) walk(k, all, next, remaining - 1, ends);
}

/// Every n-step walk from (0,0), enumerated one by one.
inline std::map<Vertex, long> dfs_walk_counts(int k, int n) {
    std::map<Vertex, long> ends;
    walk(k, level_vertices(k), {0, 0}, n, ends);
    return ends;
}

/// Row of A^n for vertex (0,0), by repeated dense big-integer matrix products.
inline std::vector<BigInt> matrix_power_origin_row(const anyon::AdjMatrix& a, int n) {
    const std::size_t d = a.dim;
    std::vector<BigInt> power(d * d);
    for (std::size_t i = 0; i < d; ++i) power[i * d + i] = 1;
    for (int step = 0; step < n; ++step) {
        std::vector<BigInt> next(d * d);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t m = 0; m < d; ++m) {
                if (power[r * d + m] == 0) continue;
                for (std::size_t c = 0; c < d; ++c)
                    if (a(m, c)) next[r * d + c] += power[r * d + m];
            }
        power.swap(next);
    }
    return {power.begin(), power.begin() + static_cast<long>(d)};
}

/// System matrix written row by row from F_{i,j} - t(F_{i+1,j} + F_{i-1,j+1} + F_{i,j-1}) = delta.
inline anyon::PolyMatrix system_from_recurrence(int k) {
    const auto all = level_vertices(k);
    std::map<Vertex, std::size_t> pos;
    // (0,0),(0,1),...,(0,k),(1,0),... is the lexicographic order on (i,j).
    for (std::size_t idx = 0; idx < all.size(); ++idx) pos[all[idx]] = idx;
    anyon::PolyMatrix m(all.size(), all.size());
    for (auto v : all) {
        const std::size_t r = pos[v];
        m(r, r) = anyon::IntPoly(1);
        for (Vertex u : {Vertex{v.i + 1, v.j}, Vertex{v.i - 1, v.j + 1}, Vertex{v.i, v.j - 1}})
            if (anyon::in_level(u, k)) m(r, pos[u]) = -anyon::IntPoly::t();
    }
    return m;
}

inline BigInt factorial(long n) {
    BigInt f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

inline BigInt catalan3(long n) {
    return BigInt(2 * factorial(n) / (factorial(n / 3) * factorial(n / 3 + 1) * factorial(n / 3 + 2)));
}

/// Fib_1 = Fib_2 = 1.
inline BigInt fibonacci(long n) {
    BigInt a = 0, b = 1;
    for (long i = 0; i < n; ++i) {
        BigInt c = a + b;
        a = b;
        b = c;
    }
    return a;
}

}  // namespace oracle
