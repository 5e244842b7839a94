#include "anyon/cli.hpp"

#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "anyon/errors.hpp"
#include "anyon/genfunc.hpp"
#include "anyon/pathcount.hpp"
#include "anyon/reproduce.hpp"
#include "anyon/spectral.hpp"
#include "anyon/syt.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace anyon::cli {

namespace {

constexpr const char* kVersion = "anyon-deg 1.0.0";

// Terminates the process if the run outlives its time budget.
class Watchdog {
public:
    explicit Watchdog(double seconds) {
        if (seconds <= 0) return;
        thread_ = std::thread([this, seconds] {
            std::unique_lock lock(mutex_);
            const auto limit = std::chrono::duration<double>(seconds);
            if (!cv_.wait_for(lock, limit, [this] { return done_; })) {
                std::fprintf(stderr, "error: time limit of %g s exceeded\n", seconds);
                std::fflush(stderr);
                std::_Exit(kExitUsage);
            }
        });
    }
    ~Watchdog() {
        if (!thread_.joinable()) return;
        {
            std::lock_guard lock(mutex_);
            done_ = true;
        }
        cv_.notify_all();
        thread_.join();
    }
    Watchdog(const Watchdog&) = delete;
    Watchdog& operator=(const Watchdog&) = delete;

private:
    std::thread thread_;
    std::mutex mutex_;
    std::condition_variable cv_;
    bool done_ = false;
};

struct Extra {
    int max_k = 8;
    int max_n = 27;
    bool all_columns = false;
    std::string method = "trig";
    std::string vertex_text;
    std::string shape_text;
    bool oracle = false;
    bool paper_formula = false;
    std::optional<int> syt_n;
    std::optional<std::string> only;
    bool inject_fault = false;
    bool version = false;
};

void check_caps(const RunConfig& cfg, int k, int n) {
    if (k > cfg.caps.max_k)
        throw CapExceeded("k = " + std::to_string(k) + " exceeds --cap-k " + std::to_string(cfg.caps.max_k));
    if (n > cfg.caps.max_n)
        throw CapExceeded("n = " + std::to_string(n) + " exceeds --cap-n " + std::to_string(cfg.caps.max_n));
}

std::string fmt_double(double x) {
    std::ostringstream s;
    s << std::setprecision(15) << x;
    return s.str();
}

int cmd_count(const RunConfig& cfg, std::ostream& out) {
    check_caps(cfg, cfg.k, cfg.n);
    out << degeneracy(cfg.k, cfg.n, cfg.vertex).get_str() << '\n';
    return kExitOk;
}

int cmd_table(const RunConfig& cfg, const Extra& x, std::ostream& out) {
    check_caps(cfg, x.max_k, x.max_n);
    const auto t = table(x.max_k, x.max_n, cfg.vertex);
    switch (cfg.format) {
        case Format::csv: out << render_csv(t, x.all_columns); break;
        case Format::json: out << render_json(t, x.all_columns); break;
        case Format::text: out << render_text(t, x.all_columns); break;
    }
    return kExitOk;
}

nlohmann::json genfunc_json(int k, Vertex v, const RationalFn& f) {
    nlohmann::json j = f.to_json();
    j["k"] = k;
    j["vertex"] = {v.i, v.j};
    return j;
}

int cmd_genfunc(const RunConfig& cfg, std::ostream& out) {
    check_caps(cfg, cfg.k, 0);
    if (cfg.format == Format::csv) throw InvalidArgument("genfunc supports --format text|json");
    const auto sol = solve_system(cfg.k);
    const Lattice lattice(cfg.k);
    if (cfg.vertex_given) {
        const auto& f = sol.at(cfg.vertex);
        if (cfg.format == Format::json)
            out << genfunc_json(cfg.k, cfg.vertex, f).dump(2) << '\n';
        else
            out << f.to_string() << '\n';
        return kExitOk;
    }
    if (cfg.format == Format::json) {
        nlohmann::json fns = nlohmann::json::array();
        for (std::size_t i = 0; i < lattice.size(); ++i)
            fns.push_back(genfunc_json(cfg.k, lattice.vertices()[i], sol.solutions[i]));
        out << nlohmann::json{{"k", cfg.k}, {"determinant", sol.determinant.to_json()}, {"functions", fns}}.dump(2)
            << '\n';
    } else {
        for (std::size_t i = 0; i < lattice.size(); ++i)
            out << "F[" << to_string(lattice.vertices()[i]) << "] = " << sol.solutions[i].to_string() << '\n';
    }
    return kExitOk;
}

int cmd_det(const RunConfig& cfg, std::ostream& out) {
    check_caps(cfg, cfg.k, 0);
    const IntPoly d = system_det(cfg.k);
    if (cfg.format == Format::json) {
        nlohmann::json j = d.to_json();
        j["k"] = cfg.k;
        out << j.dump(2) << '\n';
    } else {
        out << d.to_string() << '\n';
    }
    return kExitOk;
}

int cmd_qdim(const RunConfig& cfg, const Extra& x, std::ostream& out, std::ostream& err) {
    check_caps(cfg, cfg.k, 0);
    if (x.method != "trig" && cfg.N != 3) throw InvalidArgument("--method " + x.method + " is only defined for N = 3");
    if (x.method == "trig") {
        out << fmt_double(lambda_trig(cfg.N, cfg.k)) << '\n';
        return kExitOk;
    }
    if (x.method == "eig") {
        out << fmt_double(lambda_perron(cfg.k)) << '\n';
        return kExitOk;
    }
    if (x.method == "root") {
        out << fmt_double(1.0 / smallest_positive_root(system_det(cfg.k))) << '\n';
        return kExitOk;
    }
    const auto report = spectral_report(cfg.k);
    nlohmann::json j = report.to_json();
    j["tolerance"] = cfg.tol;
    j["agrees"] = report.agrees(cfg.tol);
    out << j.dump(2) << '\n';
    if (!report.agrees(cfg.tol)) {
        err << "warning: the three characterizations disagree by " << report.agreement_gap << " at k = " << cfg.k
            << '\n';
        return kExitMismatch;
    }
    return kExitOk;
}

int cmd_syt(const RunConfig& cfg, const Extra& x, std::ostream& out, std::ostream& err) {
    if (!x.shape_text.empty() && cfg.vertex_given) throw InvalidArgument("give at most one of --vertex and --shape");

    if (x.paper_formula) {
        if (!x.syt_n) throw InvalidArgument("--paper-formula needs --n");
        check_caps(cfg, 1, *x.syt_n);
        const auto audit =
            audit_printed_formula(*x.syt_n, cfg.vertex_given ? std::optional<Vertex>(cfg.vertex) : std::nullopt);
        if (cfg.format == Format::json) {
            out << audit.to_json().dump(2) << '\n';
        } else {
            for (const auto& r : audit.rows) {
                out << "n=" << r.n << " vertex=(" << to_string(r.vertex) << ") shape=(" << r.shape.to_string()
                    << ") hook=" << r.hook.get_str()
                    << " printed=" << (r.printed ? r.printed->get_str() : std::string("undefined"))
                    << " printed_swapped="
                    << (r.printed_swapped ? r.printed_swapped->get_str() : std::string("undefined")) << ' '
                    << (r.agrees ? "agree" : "DISAGREE") << '\n';
            }
            out << "agreements=" << audit.agreements << " disagreements=" << audit.disagreements
                << " origin_agrees=" << (audit.origin_agrees ? "true" : "false") << '\n';
        }
        return kExitOk;
    }

    std::optional<Shape3> shape;
    if (!x.shape_text.empty()) {
        shape = parse_shape(x.shape_text);
        if (x.syt_n && *x.syt_n != shape->boxes())
            throw InvalidArgument("--n " + std::to_string(*x.syt_n) + " does not match shape with " +
                                  std::to_string(shape->boxes()) + " boxes");
    } else {
        if (!x.syt_n) throw InvalidArgument("syt needs --n (or --shape)");
        check_caps(cfg, 1, *x.syt_n);
        if (cfg.vertex_given) shape = shape_for(*x.syt_n, cfg.vertex);
    }

    if (!shape && !cfg.vertex_given) {
        // Every vertex reachable in n steps.
        const int n = *x.syt_n;
        nlohmann::json items = nlohmann::json::array();
        for (const auto& s : shapes_with_boxes(n)) {
            if (cfg.format == Format::json)
                items.push_back({{"vertex", {s.endpoint().i, s.endpoint().j}},
                                 {"shape", {s.r1, s.r2, s.r3}},
                                 {"count", hook_count(s).get_str()}});
            else
                out << "(" << to_string(s.endpoint()) << ") shape=(" << s.to_string() << ") "
                    << hook_count(s).get_str() << '\n';
        }
        if (cfg.format == Format::json) out << nlohmann::json{{"n", n}, {"tableaux", items}}.dump(2) << '\n';
        return kExitOk;
    }

    const BigCount count = shape ? hook_count(*shape) : BigCount(0);
    int status = kExitOk;
    std::optional<BigCount> brute;
    if (x.oracle && shape) {
        brute = brute_force_count(*shape);
        if (*brute != count) {
            err << "mismatch: hook-length " << count.get_str() << " vs brute force " << brute->get_str() << '\n';
            status = kExitMismatch;
        }
    }
    if (cfg.format == Format::json) {
        nlohmann::json j = {{"count", count.get_str()}};
        if (shape) j["shape"] = {shape->r1, shape->r2, shape->r3};
        if (brute) j["brute_force"] = brute->get_str();
        out << j.dump(2) << '\n';
    } else {
        out << count.get_str() << '\n';
    }
    return status;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    check_caps(cfg, cfg.k, cfg.n);
    const auto sol = solve_system(cfg.k);
    const Lattice lattice(cfg.k);
    std::vector<std::vector<BigRational>> series;
    for (const auto& f : sol.solutions) series.push_back(series_coeffs(f, static_cast<std::size_t>(cfg.n)));
    long compared = 0, mismatches = 0;
    for (int n = 0; n <= cfg.n; ++n) {
        const auto counts = count_paths(cfg.k, n);
        for (std::size_t v = 0; v < lattice.size(); ++v, ++compared) {
            if (series[v][static_cast<std::size_t>(n)] == BigRational(counts.counts[v])) continue;
            ++mismatches;
            err << "mismatch at n=" << n << " vertex=(" << to_string(lattice.vertices()[v]) << "): series "
                << series[v][static_cast<std::size_t>(n)].get_str() << " vs count " << counts.counts[v].get_str()
                << '\n';
        }
    }
    out << "verify k=" << cfg.k << " n<=" << cfg.n << ": " << (compared - mismatches) << "/" << compared
        << " coefficients match" << '\n';
    return mismatches == 0 ? kExitOk : kExitMismatch;
}

int cmd_lattice(const RunConfig& cfg, std::ostream& out) {
    check_caps(cfg, cfg.k, 0);
    out << to_json(build_lattice(cfg.k)).dump() << '\n';
    return kExitOk;
}

int cmd_reproduce(const Extra& x, std::ostream& out) {
    const auto results = reproduce({x.only, x.inject_fault});
    const auto doc = to_json(results);
    out << doc.dump(2) << '\n';
    return doc.at("pass").get<bool>() ? kExitOk : kExitMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    Extra x;
    std::string format = "text";

    CLI::App app{"Ground-state degeneracies of SU(3)_k anyons: path counts on D_k, generating functions, "
                 "det(F_k), quantum dimensions and tableau counts.",
                 "anyon-deg"};
    app.require_subcommand(1);
    app.add_option("--cap-n", cfg.caps.max_n, "Largest step count accepted")->capture_default_str();
    app.add_option("--cap-k", cfg.caps.max_k, "Largest level accepted")->capture_default_str();
    app.add_option("--timeout", cfg.caps.timeout_seconds, "Abort after this many seconds (0: no limit)");
    app.add_flag("--version", x.version, "Print the version banner on stderr");

    const auto formats = CLI::IsMember({"text", "csv", "json"});

    auto* count = app.add_subcommand("count", "f_{i,j}(n,k) as a decimal integer");
    count->add_option("--k", cfg.k, "Level")->required();
    count->add_option("--n", cfg.n, "Number of steps")->required();
    count->add_option("--vertex", x.vertex_text, "End vertex I,J (default 0,0)");

    auto* tab = app.add_subcommand("table", "Grid of f_v(n,k) for k = 1..K, n = 0..N");
    tab->add_option("--max-k", x.max_k, "Largest level")->required();
    tab->add_option("--max-n", x.max_n, "Largest step count")->required();
    tab->add_option("--vertex", x.vertex_text, "End vertex I,J (default 0,0)");
    tab->add_option("--format", format, "text|csv|json")->check(formats);
    tab->add_flag("--all-columns", x.all_columns, "Print every n, not only multiples of 3");

    auto* gen = app.add_subcommand("genfunc", "Generating functions F_{i,j}(t;k)");
    gen->add_option("--k", cfg.k, "Level")->required();
    gen->add_option("--vertex", x.vertex_text, "Single vertex I,J (default: all)");
    gen->add_option("--format", format, "text|json")->check(formats);

    auto* det = app.add_subcommand("det", "det(F_k)");
    det->add_option("--k", cfg.k, "Level")->required();
    det->add_option("--format", format, "text|json")->check(formats);

    auto* qdim = app.add_subcommand("qdim", "Total quantum dimension lambda_k");
    qdim->add_option("--k", cfg.k, "Level")->required();
    qdim->add_option("--N", cfg.N, "Rank N of SU(N) (trig method only)")->capture_default_str();
    qdim->add_option("--method", x.method, "trig|eig|root|all")->check(CLI::IsMember({"trig", "eig", "root", "all"}));
    qdim->add_option("--tol", cfg.tol, "Agreement tolerance for --method all")->capture_default_str();

    auto* syt = app.add_subcommand("syt", "Standard Young tableau counts (level restriction inactive)");
    syt->add_option("--n", x.syt_n, "Number of boxes");
    auto* syt_vertex = syt->add_option("--vertex", x.vertex_text, "End vertex I,J");
    syt->add_option("--shape", x.shape_text, "Row lengths R1,R2,R3")->excludes(syt_vertex);
    syt->add_flag("--oracle", x.oracle, "Cross-check against brute-force enumeration");
    syt->add_flag("--paper-formula", x.paper_formula, "Audit the printed closed form against the hook-length count");
    syt->add_option("--format", format, "text|json")->check(formats);

    auto* verify = app.add_subcommand("verify", "Series coefficients of F_{i,j}(t;k) vs path counts");
    verify->add_option("--k", cfg.k, "Level")->required();
    verify->add_option("--n", cfg.n, "Largest coefficient index")->required();

    auto* lat = app.add_subcommand("lattice", "The graph D_k as JSON");
    lat->add_option("--k", cfg.k, "Level")->required();

    auto* rep = app.add_subcommand("reproduce", "Run every golden check and report pass/fail as JSON");
    rep->add_option("--only", x.only, "Run a single check")->check(CLI::IsMember(reproduce_items()));
    rep->add_flag("--inject-fault", x.inject_fault, "Perturb a published coefficient (the run must fail)");

    std::vector<std::string> argv_store{"anyon-deg"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        err << sub->help();
        return kExitUsage;
    }

    if (x.version) err << kVersion << '\n';

    const std::map<const CLI::App*, Subcommand> dispatch = {
        {count, Subcommand::count}, {tab, Subcommand::table},     {gen, Subcommand::genfunc},
        {det, Subcommand::det},     {qdim, Subcommand::qdim},     {syt, Subcommand::syt},
        {verify, Subcommand::verify}, {lat, Subcommand::lattice}, {rep, Subcommand::reproduce},
    };
    cfg.subcommand = dispatch.at(app.get_subcommands().front());
    cfg.format = format == "csv" ? Format::csv : format == "json" ? Format::json : Format::text;

    Watchdog watchdog(cfg.caps.timeout_seconds);
    try {
        if (!x.vertex_text.empty()) {
            cfg.vertex = parse_vertex(x.vertex_text);
            cfg.vertex_given = true;
        }
        switch (cfg.subcommand) {
            case Subcommand::count: return cmd_count(cfg, out);
            case Subcommand::table: return cmd_table(cfg, x, out);
            case Subcommand::genfunc: return cmd_genfunc(cfg, out);
            case Subcommand::det: return cmd_det(cfg, out);
            case Subcommand::qdim: return cmd_qdim(cfg, x, out, err);
            case Subcommand::syt: return cmd_syt(cfg, x, out, err);
            case Subcommand::verify: return cmd_verify(cfg, out, err);
            case Subcommand::lattice: return cmd_lattice(cfg, out);
            case Subcommand::reproduce: return cmd_reproduce(x, out);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitMismatch;
    }
    return kExitOk;
}

int main_entry(int argc, char** argv) {
    if (const char* threads = std::getenv("ANYON_DEG_THREADS")) {
        const int n = std::atoi(threads);
        if (n < 1) {
            std::cerr << "error: ANYON_DEG_THREADS must be a positive integer\n";
            return kExitUsage;
        }
#ifdef _OPENMP
        omp_set_num_threads(n);
#endif
    }
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace anyon::cli
