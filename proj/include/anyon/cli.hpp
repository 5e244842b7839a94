#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "anyon/lattice.hpp"

namespace anyon::cli {

enum class Subcommand { count, table, genfunc, det, qdim, syt, verify, lattice, reproduce };
enum class Format { text, csv, json };

struct Caps {
    int max_n = 10000;
    int max_k = 64;
    double timeout_seconds = 0;  // 0: no limit
};

/// Parsed command line.
struct RunConfig {
    Subcommand subcommand = Subcommand::count;
    int k = 1;
    int n = 0;
    int N = 3;
    Vertex vertex{0, 0};
    bool vertex_given = false;
    Format format = Format::text;
    double tol = 1e-6;
    Caps caps;
};

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

/// Parses `args` (without the program name), runs the subcommand, writes the
/// report to `out` and diagnostics to `err`. Returns 0 on success, 1 on a
/// verification mismatch, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Process entry point: applies ANYON_DEG_THREADS, then run() on argv.
int main_entry(int argc, char** argv);

}  // namespace anyon::cli
