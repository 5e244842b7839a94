#pragma once

// Published reference values used by `reproduce` and the acceptance suite.

#include <string>
#include <vector>

#include "anyon/lattice.hpp"
#include "anyon/poly.hpp"
#include "anyon/poly_matrix.hpp"

namespace anyon::reference {

/// f_{0,0}(n,k) for k = 1..8 (rows) and n = 0,3,...,27 (columns).
const std::vector<std::vector<long long>>& table_one();

/// det(F_k) for k = 1..8.
IntPoly table_two(int k);

/// Polynomial with coefficient cs[m] at t^(3m).
IntPoly in_cubes(const std::vector<long>& cs);

struct DisplayedFn {
    std::string label;
    int k;
    Vertex vertex;
    IntPoly num;
    IntPoly den;
};

/// The closed forms displayed for k = 1 (three), k = 2 (six) and the k = 1..4
/// origin functions. The k = 2, (1,0) entry is taken from the first column of
/// G_2; see listed_f10_k2() for the form printed in the list.
std::vector<DisplayedFn> displayed_generating_functions();

/// The listed closed form t(1+t^3)/(1-4t^3-t^6) for F_{1,0}(t;2), which
/// disagrees with the first column of G_2.
DisplayedFn listed_f10_k2();

/// (1 - t^3) F_1^{-1}.
PolyMatrix f1_scaled_inverse();

/// G_2 = (1 - 4t^3 - t^6) F_2^{-1}, with y = 1 - t^3 and z = t(1 + t^3).
PolyMatrix g2();

}  // namespace anyon::reference
