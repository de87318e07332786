#pragma once

namespace tiltkit {

// Kernels with an OpenMP path keep a serial reference; both must produce
// identical results.
enum class Execution { serial, parallel };

}  // namespace tiltkit
