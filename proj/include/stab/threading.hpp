#pragma once

namespace stab {

// Worker count for the parallel kernels: STABILITY_LAB_THREADS when set
// (clamped to >= 1), otherwise the OpenMP default.
int worker_count();

} // namespace stab
