#include "anyon/pathcount.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "anyon/errors.hpp"
#include "anyon/kernels.hpp"

namespace anyon {

BigCount CountTable::total() const {
    BigCount sum = 0;
    for (const auto& c : counts) sum += c;
    return sum;
}

CountTable count_paths(int k, int n, Execution exec) {
    require_level(k);
    require_steps(n);
    const Lattice lattice(k);
    std::vector<BigCount> cur(lattice.size());
    std::vector<BigCount> next(lattice.size());
    cur[lattice.index_of({0, 0})] = 1;
    for (int step = 0; step < n; ++step) {
        kernels::path_step(exec, lattice, cur, next);
        cur.swap(next);
    }
    return {k, n, std::move(cur)};
}

BigCount degeneracy(int k, int n, Vertex v, Execution exec) {
    require_level(k);
    if (!in_level(v, k))
        throw InvalidArgument("vertex (" + to_string(v) + ") is not in V_" + std::to_string(k));
    return count_paths(k, n, exec).at(v);
}

BigCount total_dimension(int k, int n, Execution exec) { return count_paths(k, n, exec).total(); }

std::vector<int> DegeneracyTable::columns(bool all_columns) const {
    std::vector<int> cols;
    const int stride = (!all_columns && vertex == Vertex{0, 0}) ? 3 : 1;
    for (int n = 0; n <= n_max; n += stride) cols.push_back(n);
    return cols;
}

namespace {

std::vector<BigCount> row_for_level(int k, int n_max, Vertex v) {
    std::vector<BigCount> row(static_cast<std::size_t>(n_max) + 1);
    if (!in_level(v, k)) return row;
    const Lattice lattice(k);
    const std::size_t target = lattice.index_of(v);
    std::vector<BigCount> cur(lattice.size());
    std::vector<BigCount> next(lattice.size());
    cur[lattice.index_of({0, 0})] = 1;
    row[0] = cur[target];
    for (int step = 1; step <= n_max; ++step) {
        kernels::path_step_serial(lattice, cur, next);
        cur.swap(next);
        row[static_cast<std::size_t>(step)] = cur[target];
    }
    return row;
}

}  // namespace

DegeneracyTable table(int k_max, int n_max, Vertex v, Execution exec) {
    require_level(k_max);
    require_steps(n_max);
    DegeneracyTable t{v, k_max, n_max, std::vector<std::vector<BigCount>>(static_cast<std::size_t>(k_max))};
    // Row cost grows with k; dynamic scheduling hands the big rows out first.
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
    for (int k = k_max; k >= 1; --k) t.values[static_cast<std::size_t>(k - 1)] = row_for_level(k, n_max, v);
    return t;
}

std::string render_csv(const DegeneracyTable& t, bool all_columns) {
    const auto cols = t.columns(all_columns);
    std::ostringstream out;
    out << "k\\n";
    for (int n : cols) out << ',' << n;
    out << '\n';
    for (int k = 1; k <= t.k_max; ++k) {
        out << k;
        for (int n : cols) out << ',' << t.at(k, n).get_str();
        out << '\n';
    }
    return out.str();
}

std::string render_text(const DegeneracyTable& t, bool all_columns) {
    const auto cols = t.columns(all_columns);
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"k\\n"});
    for (int n : cols) cells.back().push_back(std::to_string(n));
    for (int k = 1; k <= t.k_max; ++k) {
        cells.push_back({std::to_string(k)});
        for (int n : cols) cells.back().push_back(t.at(k, n).get_str());
    }
    std::vector<std::size_t> width(cells.front().size(), 0);
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    std::ostringstream out;
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) out << "  ";
            out << std::string(width[c] - row[c].size(), ' ') << row[c];
        }
        out << '\n';
    }
    return out.str();
}

std::string render_json(const DegeneracyTable& t, bool all_columns) {
    const auto cols = t.columns(all_columns);
    nlohmann::json rows = nlohmann::json::array();
    for (int k = 1; k <= t.k_max; ++k) {
        nlohmann::json values = nlohmann::json::array();
        for (int n : cols) values.push_back(t.at(k, n).get_str());
        rows.push_back({{"k", k}, {"values", values}});
    }
    nlohmann::json doc = {{"vertex", {t.vertex.i, t.vertex.j}}, {"columns", cols}, {"rows", rows}};
    return doc.dump(2) + "\n";
}

}  // namespace anyon
