#include "anyon/kernels.hpp"

namespace anyon::kernels {

namespace {

// Below this many vertices the fork/join cost dominates the big-int adds.
constexpr std::size_t kMinParallelVertices = 64;

inline void gather(const Lattice& lattice, const std::vector<BigInt>& prev, BigInt& out, std::size_t v) {
    out = 0;
    for (auto u : lattice.predecessors(v))
        if (prev[u] != 0) out += prev[u];
}

}  // namespace

void path_step_serial(const Lattice& lattice, const std::vector<BigInt>& prev, std::vector<BigInt>& next) {
    next.resize(lattice.size());
    for (std::size_t v = 0; v < lattice.size(); ++v) gather(lattice, prev, next[v], v);
}

void path_step_omp(const Lattice& lattice, const std::vector<BigInt>& prev, std::vector<BigInt>& next) {
    const std::size_t size = lattice.size();
    next.resize(size);
    const auto count = static_cast<long>(size);
#pragma omp parallel for schedule(static) if (size >= kMinParallelVertices)
    for (long v = 0; v < count; ++v) gather(lattice, prev, next[static_cast<std::size_t>(v)], static_cast<std::size_t>(v));
}

}  // namespace anyon::kernels
