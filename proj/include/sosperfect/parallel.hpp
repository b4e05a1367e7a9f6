#pragma once

namespace sosperfect {

/// Selects the implementation of the sweep kernels. `serial` is the plain
/// loop kept as the reference; `parallel` fans independent tasks out with
/// OpenMP and reduces deterministically, so both return identical results.
enum class Execution { serial, parallel };

/// Number of OpenMP threads available to parallel kernels.
int max_threads();

}  // namespace sosperfect
