#pragma once

#include <string>
#include <vector>

#include "anyon/execution.hpp"
#include "anyon/lattice.hpp"
#include "anyon/poly.hpp"

namespace anyon {

using BigCount = BigInt;

/// f_{i,j}(n,k) for every vertex of D_k at a fixed n.
struct CountTable {
    int k = 0;
    int n = 0;
    std::vector<BigCount> counts;  // canonical vertex order

    const BigCount& at(Vertex v) const { return counts.at(vertex_index(v, k)); }
    BigCount total() const;
};

/// Number of n-step walks from (0,0) to every vertex of D_k, by n rounds of
/// the predecessor recurrence.
CountTable count_paths(int k, int n, Execution exec = Execution::parallel);

/// f_v(n,k). Throws InvalidArgument when v is not in V_k.
BigCount degeneracy(int k, int n, Vertex v, Execution exec = Execution::parallel);

/// Sum of f_v(n,k) over V_k.
BigCount total_dimension(int k, int n, Execution exec = Execution::parallel);

/// f_v(n,k) for k = 1..k_max (rows) and n = 0..n_max (columns). Levels where
/// v is outside V_k have all-zero rows.
struct DegeneracyTable {
    Vertex vertex;
    int k_max = 0;
    int n_max = 0;
    std::vector<std::vector<BigCount>> values;  // values[k-1][n]

    const BigCount& at(int k, int n) const { return values.at(static_cast<std::size_t>(k - 1)).at(static_cast<std::size_t>(n)); }
    /// Printed columns: multiples of 3 when the vertex is (0,0), otherwise every n.
    std::vector<int> columns(bool all_columns) const;
};

/// Rows are computed independently (in parallel when exec == parallel).
DegeneracyTable table(int k_max, int n_max, Vertex v, Execution exec = Execution::parallel);

/// CSV with header "k\n,0,3,..." and one row per level.
std::string render_csv(const DegeneracyTable& t, bool all_columns = false);
std::string render_text(const DegeneracyTable& t, bool all_columns = false);
std::string render_json(const DegeneracyTable& t, bool all_columns = false);

}  // namespace anyon
