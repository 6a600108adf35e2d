#pragma once

#include <cstddef>

namespace lcert {

/// Number of OpenMP workers used by the parallel kernels.
std::size_t worker_count();
/// 0 restores the machine default.
void set_worker_count(std::size_t workers);

}  // namespace lcert
