#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "anyon/lattice.hpp"
#include "anyon/pathcount.hpp"

namespace anyon {

/// Row lengths of a Young diagram with at most three rows.
struct Shape3 {
    int r1 = 0;
    int r2 = 0;
    int r3 = 0;

    bool valid() const { return r1 >= r2 && r2 >= r3 && r3 >= 0; }
    int boxes() const { return r1 + r2 + r3; }
    /// Vertex reached by the corresponding path: (r2 - r3, r1 - r2).
    Vertex endpoint() const { return {r2 - r3, r1 - r2}; }
    std::string to_string() const;

    friend bool operator==(const Shape3&, const Shape3&) = default;
};

/// Parses "R1,R2,R3"; throws InvalidArgument on malformed or non-partition input.
Shape3 parse_shape(const std::string& text);

/// The unique n-box shape whose path ends at v, if any (n = 3 r3 + 2 i + j).
std::optional<Shape3> shape_for(int n, Vertex v);

/// All shapes with exactly n boxes and at most three rows.
std::vector<Shape3> shapes_with_boxes(int n);

/// Standard Young tableaux of the shape, by the hook-length formula
/// n! (r1-r2+1)(r2-r3+1)(r1-r3+2) / ((r1+2)! (r2+1)! r3!).
BigCount hook_count(Shape3 shape);

constexpr int kBruteForceCap = 18;

/// Exhaustive count of box-addition orders that stay a Young diagram at every
/// step. Throws CapExceeded above `cap` boxes.
BigCount brute_force_count(Shape3 shape, int cap = kBruteForceCap);

/// Paths of length n from (0,0) to v when the level restriction is inactive
/// (k >= n); 0 when no shape ends at v.
BigCount unrestricted_count(int n, Vertex v);

/// Evaluation of the closed form printed alongside the hook-length count,
/// (i+1)(j+2)(j-i+1) n! / (((n-i+2j+6)/3)! ((n+2i-j+3)/3)! ((n-i-j)/3)!).
/// Empty when a factorial argument is not a nonnegative integer.
std::optional<BigRational> printed_formula(int n, int i, int j);

struct AuditRow {
    int n = 0;
    Vertex vertex;
    Shape3 shape;
    BigCount hook;
    std::optional<BigRational> printed;          // (i, j) as in our lattice
    std::optional<BigRational> printed_swapped;  // roles of i and j exchanged
    bool agrees = false;                         // either reading matches hook
};

struct AuditReport {
    std::vector<AuditRow> rows;
    int agreements = 0;
    int disagreements = 0;
    bool origin_agrees = true;  // every row at (0,0) agrees

    nlohmann::json to_json() const;
};

/// Compares the printed closed form with hook_count for every n <= n_max and
/// every vertex reachable in n steps (or only at `only`, when given).
AuditReport audit_printed_formula(int n_max, std::optional<Vertex> only = std::nullopt);

}  // namespace anyon
