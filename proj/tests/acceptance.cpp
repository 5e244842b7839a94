// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "anyon/cli.hpp"
#include "anyon/genfunc.hpp"
#include "anyon/pathcount.hpp"
#include "anyon/reference_data.hpp"
#include "anyon/spectral.hpp"
#include "anyon/syt.hpp"
#include "oracles.hpp"

using namespace anyon;

namespace {

struct Verdict {
    bool pass = false;
    std::string detail;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string cli(std::vector<std::string> args, int& code) {
    std::ostringstream out, err;
    code = cli::run(args, out, err);
    return out.str();
}

Verdict check_table_one() {
    int code = 0;
    const auto csv = cli({"table", "--max-k", "8", "--max-n", "27", "--format", "csv"}, code);
    if (code != 0 || csv != slurp(ANYON_GOLDEN_DIR "/table1.csv")) return {false, "CSV differs from golden file"};
    int matched = 0;
    const auto t = table(8, 27, {0, 0});
    for (int k = 1; k <= 8; ++k)
        for (int m = 0; m <= 9; ++m)
            if (t.at(k, 3 * m) == static_cast<long>(reference::table_one()[k - 1][m])) ++matched;
    return {matched == 80, std::to_string(matched) + "/80 values"};
}

Verdict check_table_two() {
    int matched = 0;
    for (int k = 1; k <= 8; ++k) {
        int code = 0;
        const auto text = cli({"det", "--k", std::to_string(k)}, code);
        if (code == 0 && text == reference::table_two(k).to_string() + "\n" && system_det(k) == reference::table_two(k))
            ++matched;
    }
    return {matched == 8, std::to_string(matched) + "/8 determinants"};
}

Verdict check_closed_forms() {
    int matched = 0, total = 0;
    for (const auto& d : reference::displayed_generating_functions()) {
        ++total;
        const RationalFn f = solve_system(d.k).at(d.vertex);
        const bool lowest = poly_gcd(f.num(), f.den()).degree() == 0;
        if (lowest && f == RationalFn(d.num, d.den)) ++matched;
    }
    // The listed F_{1,0}(t;2) cannot be right: its series already disagrees with the walk count.
    const auto listed = reference::listed_f10_k2();
    const auto coeffs = series_coeffs(RationalFn(listed.num, listed.den), 8);
    bool listed_differs = false;
    for (int n = 0; n <= 8; ++n)
        if (coeffs[n] != BigRational(degeneracy(2, n, {1, 0}))) listed_differs = true;
    return {matched == total && total == 11 && listed_differs,
            std::to_string(matched) + "/" + std::to_string(total) + " closed forms; listed F_{1,0}(t;2) " +
                (listed_differs ? "refuted" : "NOT refuted")};
}

Verdict check_series() {
    long compared = 0, matched = 0;
    for (int k = 1; k <= 6; ++k) {
        const auto sol = solve_system(k);
        const auto all = oracle::level_vertices(k);
        for (int n = 0; n <= 24; ++n) {
            const auto counts = count_paths(k, n);
            for (std::size_t v = 0; v < all.size(); ++v) {
                ++compared;
                if (series_coeffs(sol.solutions[v], 24)[n] == BigRational(counts.at(all[v]))) ++matched;
            }
        }
    }
    return {matched == compared, std::to_string(matched) + "/" + std::to_string(compared) + " coefficients"};
}

Verdict check_fibonacci() {
    const long expected[] = {1, 5, 21, 89, 377, 1597, 6765, 28657, 121393};
    int matched = 0;
    for (int m = 1; m <= 9; ++m) {
        const BigInt f = degeneracy(2, 3 * m, {0, 0});
        if (f == oracle::fibonacci(3 * m - 1) && f == expected[m - 1]) ++matched;
    }
    return {matched == 9, std::to_string(matched) + "/9 values"};
}

Verdict check_catalan() {
    int matched = 0, total = 0;
    for (int n = 0; n <= 27; n += 3)
        for (int k : {std::max(n, 1), n + 1, n + 5}) {
            ++total;
            if (degeneracy(k, n, {0, 0}) == oracle::catalan3(n)) ++matched;
        }
    return {matched == total, std::to_string(matched) + "/" + std::to_string(total) + " (n, k) pairs"};
}

Verdict check_hooks() {
    int shapes = 0, shape_ok = 0, ends = 0, end_ok = 0;
    for (int n = 0; n <= 12; ++n) {
        for (const auto& s : shapes_with_boxes(n)) {
            ++shapes;
            if (hook_count(s) == brute_force_count(s)) ++shape_ok;
        }
        const int k = std::max(n, 1);
        const auto counts = count_paths(k, n);
        for (auto v : oracle::level_vertices(k)) {
            ++ends;
            if (unrestricted_count(n, v) == counts.at(v)) ++end_ok;
        }
    }
    return {shapes == shape_ok && ends == end_ok,
            std::to_string(shape_ok) + "/" + std::to_string(shapes) + " shapes, " + std::to_string(end_ok) + "/" +
                std::to_string(ends) + " endpoints"};
}

Verdict check_qdim() {
    double worst = 0;
    for (int k = 1; k <= 8; ++k) {
        const double trig = lambda_trig(3, k);
        worst = std::max(worst, std::abs(trig - lambda_perron(k)));
        worst = std::max(worst, std::abs(trig - 1.0 / smallest_positive_root(system_det(k))));
    }
    const bool one = system_det(1).evaluate(BigRational(1)) == 0 && smallest_positive_root(system_det(1)) == 1.0;
    const bool three = system_det(3).evaluate(BigRational(1, 2)) == 0;
    std::ostringstream d;
    d << "worst gap " << worst << ", lambda_1 = 1 " << (one ? "exact" : "FAILED") << ", det(F_3)(1/2) = 0 "
      << (three ? "exact" : "FAILED");
    return {worst < 1e-6 && one && three, d.str()};
}

int expected_degree(int k) {
    if (k % 3 == 2) {
        const int m = (k + 1) / 3;
        return 3 * m * (3 * m + 1) / 2;
    }
    if (k % 3 == 0) return 9 * (k / 3) * (k / 3 + 1) / 2;
    const int m = (k - 1) / 3;
    return 3 * (m + 1) * (3 * m + 2) / 2;
}

Verdict check_det_laws() {
    int ok = 0;
    for (int k = 1; k <= 8; ++k) {
        const auto d = system_det(k);
        bool cubes = true;
        for (int p = 0; p <= d.degree(); ++p)
            if (p % 3 != 0 && d.coeff(p) != 0) cubes = false;
        if (d.degree() == expected_degree(k) && d.coeff(0) == 1 && d.coeff(3) == -k * k && cubes) ++ok;
    }
    return {ok == 8, std::to_string(ok) + "/8 levels"};
}

Verdict check_growth() {
    constexpr int n = 600;
    std::ostringstream d;
    bool ok = true;
    for (int k = 2; k <= 5; ++k) {
        const BigInt f = degeneracy(k, n, {0, 0});
        long e = 0;
        const double m = mpz_get_d_2exp(&e, f.get_mpz_t());
        const double root = std::exp((std::log(m) + static_cast<double>(e) * std::log(2.0)) / n);
        const double lambda = lambda_trig(3, k);
        const double rel = std::abs(root - lambda) / lambda;
        ok = ok && rel < 0.02;
        d << (k > 2 ? ", " : "") << "k=" << k << ": " << rel;
    }
    return {ok, "relative error " + d.str()};
}

Verdict check_audit() {
    int code = 0;
    const auto text = cli({"syt", "--n", "27", "--paper-formula"}, code);
    const auto report = audit_printed_formula(27);
    int origin_rows = 0, origin_ok = 0;
    bool shape110 = false;
    for (const auto& r : report.rows) {
        if (r.vertex == Vertex{0, 0}) {
            ++origin_rows;
            if (r.agrees) ++origin_ok;
        }
        if (r.shape == Shape3{1, 1, 0} && !r.agrees) shape110 = true;
    }
    const bool listed = text.find("shape=(1,1,0)") != std::string::npos &&
                        text.find("origin_agrees=true") != std::string::npos;
    return {code == 0 && origin_rows == 10 && origin_ok == 10 && shape110 && listed,
            std::to_string(origin_ok) + "/10 origin rows agree, " + std::to_string(report.disagreements) +
                " disagreements, shape (1,1,0) " + (shape110 ? "disagrees" : "agrees")};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
        {"origin walk-count table", check_table_one},
        {"system determinants", check_table_two},
        {"displayed generating functions", check_closed_forms},
        {"series coefficients equal walk counts", check_series},
        {"Fibonacci identity at k = 2", check_fibonacci},
        {"three-row Catalan diagonal", check_catalan},
        {"hook-length oracle", check_hooks},
        {"quantum dimension agreement", check_qdim},
        {"determinant structure", check_det_laws},
        {"growth rate at n = 600", check_growth},
        {"printed closed form audit", check_audit},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!v.pass) ++failures;
        std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << i + 1 << ". " << criteria[i].first << ": " << v.detail
                  << " (" << std::fixed << std::setprecision(3) << secs << " s)" << std::defaultfloat << '\n';
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria pass\n";
    return failures == 0 ? 0 : 1;
}
