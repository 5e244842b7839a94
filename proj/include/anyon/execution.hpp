#pragma once

namespace anyon {

// Selects between the OpenMP kernels and their serial reference twins.
enum class Execution { serial, parallel };

// Number of OpenMP threads currently allowed (1 when built without OpenMP).
int max_threads();

}  // namespace anyon
