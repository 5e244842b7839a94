#include "anyon/reference_data.hpp"

#include "anyon/errors.hpp"

namespace anyon::reference {

namespace {


IntPoly t_pow(std::size_t p, long c = 1) { return IntPoly::monomial(c, p); }

}  // namespace

const std::vector<std::vector<long long>>& table_one() {
    static const std::vector<std::vector<long long>> rows = {
        {1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
        {1, 1, 5, 21, 89, 377, 1597, 6765, 28657, 121393},
        {1, 1, 5, 42, 341, 2731, 21846, 174763, 1398101, 11184810},
        {1, 1, 5, 42, 462, 5278, 60181, 683962, 7763097, 88079511},
        {1, 1, 5, 42, 462, 6006, 83028, 1166677, 16440171, 231612211},
        {1, 1, 5, 42, 462, 6006, 87516, 1357569, 21669957, 349920000},
        {1, 1, 5, 42, 462, 6006, 87516, 1385670, 23193775, 401389561},
        {1, 1, 5, 42, 462, 6006, 87516, 1385670, 23371634, 413180625},
    };
    return rows;
}

IntPoly in_cubes(const std::vector<long>& cs) {
    std::vector<BigInt> coeffs(cs.empty() ? 0 : 3 * (cs.size() - 1) + 1);
    for (std::size_t m = 0; m < cs.size(); ++m) coeffs[3 * m] = cs[m];
    return IntPoly(std::move(coeffs));
}

IntPoly table_two(int k) {
    switch (k) {
        case 1: return in_cubes({1, -1});
        case 2: return in_cubes({1, -4, -1});
        case 3: return in_cubes({1, -9, 9, -8});
        case 4: return in_cubes({1, -16, 59, -67, -37, 8});
        case 5: return in_cubes({1, -25, 191, -559, 531, -507, 341, 27});
        case 6: return in_cubes({1, -36, 459, -2655, 7290, -9801, 3429, 6075, -1458, 729});
        case 7:
            return in_cubes({1, -49, 929, -8865, 46315, -136058, 219202, -198802, 189535, -152085, 62341,
                             20851, -1331});
        case 8:
            return in_cubes({1, -64, 1679, -23699, 198636, -1031272, 3360456, -6855112, 8542281, -5062167,
                             -1959023, 4912958, -1335971, 1092507, -375746, -12167});
        default: throw InvalidArgument("published determinants cover k = 1..8");
    }
}

std::vector<DisplayedFn> displayed_generating_functions() {
    const IntPoly d1 = in_cubes({1, -1});
    const IntPoly d2 = in_cubes({1, -4, -1});
    const IntPoly y = in_cubes({1, -1});
    const IntPoly z = t_pow(1) + t_pow(4);
    return {
        {"F_{0,0}(t;1)", 1, {0, 0}, IntPoly(1), d1},
        {"F_{0,1}(t;1)", 1, {0, 1}, t_pow(1), d1},
        {"F_{1,0}(t;1)", 1, {1, 0}, t_pow(2), d1},
        {"F_{0,0}(t;2)", 2, {0, 0}, in_cubes({1, -3}), d2},
        {"F_{0,1}(t;2)", 2, {0, 1}, t_pow(1) * y, d2},
        {"F_{0,2}(t;2)", 2, {0, 2}, t_pow(2) * y, d2},
        {"F_{1,0}(t;2)", 2, {1, 0}, t_pow(1) * z, d2},
        {"F_{1,1}(t;2)", 2, {1, 1}, t_pow(3, 2), d2},
        {"F_{2,0}(t;2)", 2, {2, 0}, t_pow(4, 2), d2},
        {"F_{0,0}(t;3)", 3, {0, 0}, in_cubes({1, -8, 5, -2}), in_cubes({1, -9, 9, -8})},
        {"F_{0,0}(t;4)", 4, {0, 0}, in_cubes({1, -15, 48, -46, -19}), in_cubes({1, -16, 59, -67, -37, 8})},
    };
}

DisplayedFn listed_f10_k2() {
    return {"F_{1,0}(t;2) as listed", 2, {1, 0}, t_pow(1) + t_pow(4), in_cubes({1, -4, -1})};
}

PolyMatrix f1_scaled_inverse() {
    const std::vector<std::vector<IntPoly>> rows = {
        {IntPoly(1), t_pow(2), t_pow(1)},
        {t_pow(1), IntPoly(1), t_pow(2)},
        {t_pow(2), t_pow(1), IntPoly(1)},
    };
    PolyMatrix m(3, 3);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) m(r, c) = rows[r][c];
    return m;
}

PolyMatrix g2() {
    const IntPoly y = in_cubes({1, -1});
    const IntPoly z = t_pow(1) + t_pow(4);
    const IntPoly t = t_pow(1);
    const IntPoly u = in_cubes({1, -3});
    const std::vector<std::vector<IntPoly>> rows = {
        {u, t * z, t_pow(4, 2), t * y, t_pow(3, 2), t_pow(2) * y},
        {t * y, y, t * z, t_pow(2, 2), z, t_pow(3, 2)},
        {t_pow(2) * y, t * y, u, t_pow(3, 2), t * z, t_pow(4, 2)},
        {t * z, z, t_pow(3, 2), y, t_pow(2, 2), t * y},
        {t_pow(3, 2), t_pow(2, 2), t * y, z, y, t * z},
        {t_pow(4, 2), t_pow(3, 2), t_pow(2) * y, t * z, t * y, u},
    };
    PolyMatrix m(6, 6);
    for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t c = 0; c < 6; ++c) m(r, c) = rows[r][c];
    return m;
}

}  // namespace anyon::reference
