#include <doctest.h>

#include <random>

#include "anyon/errors.hpp"
#include "anyon/genfunc.hpp"
#include "anyon/kernels.hpp"

using namespace anyon;

namespace {

PolyMatrix random_matrix(std::mt19937& rng, std::size_t n, std::size_t cols, double density) {
    std::uniform_real_distribution<double> u(0, 1);
    std::uniform_int_distribution<int> c(-3, 3);
    PolyMatrix m(n, cols);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j < cols; ++j)
            if (u(rng) < density) m(r, j) = IntPoly(std::vector<BigInt>{c(rng), c(rng), c(rng)});
    return m;
}

}  // namespace

TEST_CASE("banded Bareiss matches the dense reference on F_k") {
    for (int k = 1; k <= 6; ++k) {
        const auto f = build_system(k);
        const auto ref = kernels::bareiss_reference(f, f.rows());
        const auto serial = kernels::bareiss_banded(f, f.rows(), Execution::serial);
        const auto par = kernels::bareiss_banded(f, f.rows(), Execution::parallel);
        CHECK(ref.upper == serial.upper);
        CHECK(ref.upper == par.upper);
        CHECK(ref.determinant() == system_det(k));
    }
}

TEST_CASE("banded Bareiss matches the reference on random sparse matrices with pivoting") {
    std::mt19937 rng(3);
    int compared = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + trial % 6;
        auto m = random_matrix(rng, n, n + 1, 0.45);
        m(0, 0) = IntPoly();  // force a row swap at step 1
        PolyMatrix ref_out, banded_out;
        int ref_sign = 0, banded_sign = 0;
        bool singular = false;
        try {
            const auto ref = kernels::bareiss_reference(m, n);
            ref_out = ref.upper;
            ref_sign = ref.sign;
        } catch (const SingularMatrix&) {
            singular = true;
        }
        if (singular) {
            CHECK_THROWS_AS(kernels::bareiss_banded(m, n), SingularMatrix);
            continue;
        }
        const auto banded = kernels::bareiss_banded(m, n);
        CHECK(banded.upper == ref_out);
        CHECK(banded.sign == ref_sign);

        // Cramer: m * (numerators) = det * rhs
        const auto x = kernels::back_substitute(banded, n);
        const IntPoly det = banded.determinant();
        for (std::size_t r = 0; r < n; ++r) {
            IntPoly lhs;
            for (std::size_t c = 0; c < n; ++c) lhs += m(r, c) * x[c];
            CHECK(lhs == det * m(r, n));
        }
        ++compared;
    }
    CHECK(compared > 10);
}

TEST_CASE("singular input is rejected") {
    PolyMatrix m(2, 2);
    m(0, 0) = IntPoly::t();
    m(0, 1) = IntPoly::t();
    m(1, 0) = IntPoly(2) * IntPoly::t();
    m(1, 1) = IntPoly(2) * IntPoly::t();
    CHECK_THROWS_AS(kernels::bareiss_reference(m, 2), SingularMatrix);
    CHECK_THROWS_AS(kernels::bareiss_banded(m, 2), SingularMatrix);
    CHECK_THROWS_AS(kernels::bareiss_banded(m, 3), InvalidArgument);
}
