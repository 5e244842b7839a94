#include "anyon/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "anyon/errors.hpp"
#include "anyon/genfunc.hpp"
#include "anyon/lattice.hpp"

namespace anyon {

double lambda_trig(int N, int k) {
    if (N < 2) throw InvalidArgument("N must be >= 2");
    require_level(k);
    const double denom = N + k;
    return std::sin(std::numbers::pi * N / denom) / std::sin(std::numbers::pi / denom);
}

namespace {

// y = A x with (A x)_r = sum of x over successors of r.
void apply_adjacency(const Lattice& lattice, const std::vector<double>& x, std::vector<double>& y) {
    const auto size = static_cast<long>(lattice.size());
#pragma omp parallel for schedule(static) if (size >= 256)
    for (long r = 0; r < size; ++r) {
        double s = 0.0;
        for (auto c : lattice.successors(static_cast<std::size_t>(r))) s += x[c];
        y[static_cast<std::size_t>(r)] = s;
    }
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

double lambda_perron(int k, double tol, int max_iter) {
    require_level(k);
    if (!(tol > 0)) throw InvalidArgument("tolerance must be positive");
    const Lattice lattice(k);
    const std::size_t size = lattice.size();
    std::vector<double> v(size, 1.0 / std::sqrt(static_cast<double>(size)));
    std::vector<double> a(size), b(size);
    double previous = -1.0;
    for (int iter = 0; iter < max_iter; ++iter) {
        apply_adjacency(lattice, v, a);
        apply_adjacency(lattice, a, b);
        apply_adjacency(lattice, b, a);  // a = A^3 v
        const double rayleigh = dot(v, a);  // v has unit norm
        const double norm = std::sqrt(dot(a, a));
        if (norm == 0.0) throw NonConvergence("power iteration collapsed to zero");
        for (std::size_t i = 0; i < size; ++i) v[i] = a[i] / norm;
        if (std::abs(rayleigh - previous) < tol) return std::cbrt(rayleigh);
        previous = rayleigh;
    }
    throw NonConvergence("power iteration did not converge for k = " + std::to_string(k));
}

double smallest_positive_root(const IntPoly& p, double tol, double search_limit) {
    if (!(tol > 0)) throw InvalidArgument("tolerance must be positive");
    if (p.coeff(0) <= 0) throw InvalidArgument("smallest_positive_root needs p(0) > 0");

    constexpr unsigned long kGridBits = 10;  // grid step 1/1024
    const long grid_points = static_cast<long>(std::ceil(search_limit * (1L << kGridBits)));
    long hit = -1;
    for (long m = 1; m <= grid_points; ++m) {
        const int s = p.sign_at_dyadic(BigInt(m), kGridBits);
        if (s == 0) return std::ldexp(static_cast<double>(m), -static_cast<int>(kGridBits));
        if (s < 0) {
            hit = m;
            break;
        }
    }
    if (hit < 0) throw NoRootFound("no sign change of " + p.to_string() + " in (0, " + std::to_string(search_limit) + "]");

    // Invariant: p(lo / 2^bits) > 0 > p(hi / 2^bits).
    unsigned long bits = kGridBits;
    BigInt lo = hit - 1;
    BigInt hi = hit;
    while (std::ldexp(1.0, -static_cast<int>(bits)) >= tol && bits < 1000) {
        lo <<= 1;
        hi <<= 1;
        ++bits;
        const BigInt mid = lo + 1;
        const int s = p.sign_at_dyadic(mid, bits);
        if (s == 0) return std::ldexp(mid.get_d(), -static_cast<int>(bits));
        (s > 0 ? lo : hi) = mid;
    }
    return std::ldexp(BigInt(lo + hi).get_d(), -static_cast<int>(bits) - 1);
}

nlohmann::json SpectralReport::to_json() const {
    return {{"k", k},
            {"lambda_trig", lambda_trig},
            {"lambda_perron", lambda_perron},
            {"rho_root", rho_root},
            {"lambda_from_root", lambda_from_root},
            {"agreement_gap", agreement_gap},
            {"rho_scaled", rho_scaled}};
}

SpectralReport spectral_report(int k, double tol) {
    SpectralReport r;
    r.k = k;
    r.lambda_trig = anyon::lambda_trig(3, k);
    r.lambda_perron = anyon::lambda_perron(k, tol);
    r.rho_root = smallest_positive_root(system_det(k), tol);
    r.lambda_from_root = 1.0 / r.rho_root;
    r.agreement_gap = std::max({std::abs(r.lambda_trig - r.lambda_perron),
                                std::abs(r.lambda_trig - r.lambda_from_root),
                                std::abs(r.lambda_perron - r.lambda_from_root)});
    r.rho_scaled = r.rho_root * std::pow(static_cast<double>(k), 2.0 / 3.0);
    return r;
}

}  // namespace anyon
