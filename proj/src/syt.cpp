#include "anyon/syt.hpp"

#include <array>
#include <sstream>

#include "anyon/errors.hpp"

namespace anyon {

namespace {

BigInt factorial(long n) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

std::string rational_str(const std::optional<BigRational>& q) {
    return q ? q->get_str() : std::string("undefined");
}

// Rows filled so far, compared against the target lengths.
long count_orders(std::array<int, 3>& rows, const std::array<int, 3>& target) {
    if (rows == target) return 1;
    long total = 0;
    for (int r = 0; r < 3; ++r) {
        if (rows[r] >= target[r]) continue;
        if (r > 0 && rows[r] >= rows[r - 1]) continue;  // would exceed the row above
        ++rows[r];
        total += count_orders(rows, target);
        --rows[r];
    }
    return total;
}

}  // namespace

std::string Shape3::to_string() const {
    return std::to_string(r1) + "," + std::to_string(r2) + "," + std::to_string(r3);
}

Shape3 parse_shape(const std::string& text) {
    std::istringstream in(text);
    Shape3 s;
    char c1 = 0, c2 = 0;
    if (!(in >> s.r1 >> c1 >> s.r2 >> c2 >> s.r3) || c1 != ',' || c2 != ',' || !(in >> std::ws).eof())
        throw InvalidArgument("shape must be written R1,R2,R3; got '" + text + "'");
    if (!s.valid()) throw InvalidArgument("shape rows must satisfy R1 >= R2 >= R3 >= 0: " + text);
    return s;
}

std::optional<Shape3> shape_for(int n, Vertex v) {
    if (n < 0 || v.i < 0 || v.j < 0) return std::nullopt;
    const int rest = n - 2 * v.i - v.j;
    if (rest < 0 || rest % 3 != 0) return std::nullopt;
    const int r3 = rest / 3;
    return Shape3{r3 + v.i + v.j, r3 + v.i, r3};
}

std::vector<Shape3> shapes_with_boxes(int n) {
    std::vector<Shape3> out;
    for (int r3 = 0; 3 * r3 <= n; ++r3)
        for (int r2 = r3; r3 + 2 * r2 <= n; ++r2) {
            const int r1 = n - r2 - r3;
            if (r1 >= r2) out.push_back({r1, r2, r3});
        }
    return out;
}

BigCount hook_count(Shape3 s) {
    if (!s.valid()) throw InvalidArgument("not a partition: " + s.to_string());
    BigInt num = factorial(s.boxes());
    num *= (s.r1 - s.r2 + 1) * (s.r2 - s.r3 + 1) * (s.r1 - s.r3 + 2);
    const BigInt den = factorial(s.r1 + 2) * factorial(s.r2 + 1) * factorial(s.r3);
    BigInt q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

BigCount brute_force_count(Shape3 s, int cap) {
    if (!s.valid()) throw InvalidArgument("not a partition: " + s.to_string());
    if (s.boxes() > cap)
        throw CapExceeded("brute force limited to " + std::to_string(cap) + " boxes, shape has " +
                          std::to_string(s.boxes()));
    std::array<int, 3> rows{0, 0, 0};
    return BigCount(count_orders(rows, {s.r1, s.r2, s.r3}));
}

BigCount unrestricted_count(int n, Vertex v) {
    require_steps(n);
    const auto shape = shape_for(n, v);
    return shape ? hook_count(*shape) : BigCount(0);
}

std::optional<BigRational> printed_formula(int n, int i, int j) {
    const std::array<int, 3> numerators{n - i + 2 * j + 6, n + 2 * i - j + 3, n - i - j};
    BigInt den = 1;
    for (int a : numerators) {
        if (a < 0 || a % 3 != 0) return std::nullopt;
        den *= factorial(a / 3);
    }
    BigInt num = factorial(n);
    num *= (i + 1) * (j + 2) * (j - i + 1);
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

nlohmann::json AuditReport::to_json() const {
    nlohmann::json items = nlohmann::json::array();
    for (const auto& r : rows) {
        items.push_back({{"n", r.n},
                         {"vertex", {r.vertex.i, r.vertex.j}},
                         {"shape", {r.shape.r1, r.shape.r2, r.shape.r3}},
                         {"hook_count", r.hook.get_str()},
                         {"printed", rational_str(r.printed)},
                         {"printed_swapped", rational_str(r.printed_swapped)},
                         {"agrees", r.agrees}});
    }
    return {{"rows", items},
            {"agreements", agreements},
            {"disagreements", disagreements},
            {"origin_agrees", origin_agrees}};
}

AuditReport audit_printed_formula(int n_max, std::optional<Vertex> only) {
    require_steps(n_max);
    AuditReport report;
    for (int n = 0; n <= n_max; ++n) {
        for (int i = 0; 2 * i <= n; ++i) {
            for (int j = 0; 2 * i + j <= n; ++j) {
                const Vertex v{i, j};
                if (only && *only != v) continue;
                const auto shape = shape_for(n, v);
                if (!shape) continue;
                AuditRow row;
                row.n = n;
                row.vertex = v;
                row.shape = *shape;
                row.hook = hook_count(*shape);
                row.printed = printed_formula(n, i, j);
                row.printed_swapped = printed_formula(n, j, i);
                const BigRational hook(row.hook);
                row.agrees = (row.printed && *row.printed == hook) ||
                             (row.printed_swapped && *row.printed_swapped == hook);
                (row.agrees ? report.agreements : report.disagreements)++;
                if (v == Vertex{0, 0} && !row.agrees) report.origin_agrees = false;
                report.rows.push_back(std::move(row));
            }
        }
    }
    return report;
}

}  // namespace anyon
