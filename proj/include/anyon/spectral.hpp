#pragma once

#include <json.hpp>

#include "anyon/poly.hpp"

namespace anyon {

/// Total quantum dimension of SU(N)_k: sin(pi N/(N+k)) / sin(pi/(N+k)).
double lambda_trig(int N, int k);

/// Perron eigenvalue of the adjacency matrix of D_k. Every cycle of D_k has
/// length divisible by 3, so power iteration runs on A^3 (applied as three
/// sparse products) and the real cube root of its dominant eigenvalue is
/// returned. Converged when successive Rayleigh quotients differ by < tol.
/// Throws NonConvergence after max_iter rounds.
double lambda_perron(int k, double tol = 1e-12, int max_iter = 200000);

/// Smallest positive real root of p, which must satisfy p(0) > 0. Brackets the
/// first sign change on the grid m/1024 over (0, search_limit], then bisects
/// to width < tol. Signs are evaluated exactly at dyadic points, so a root
/// sitting on a grid point is returned exactly. Throws NoRootFound.
double smallest_positive_root(const IntPoly& p, double tol = 1e-12, double search_limit = 1.5);

struct SpectralReport {
    int k = 0;
    double lambda_trig = 0;
    double lambda_perron = 0;
    double rho_root = 0;
    double lambda_from_root = 0;  // 1 / rho_root
    double agreement_gap = 0;     // max pairwise |difference| of the three lambdas
    double rho_scaled = 0;        // rho_root * k^(2/3)

    bool agrees(double tol) const { return agreement_gap < tol; }
    nlohmann::json to_json() const;
};

/// All three characterizations for SU(3)_k; `tol` drives the iterative methods.
SpectralReport spectral_report(int k, double tol = 1e-12);

}  // namespace anyon
