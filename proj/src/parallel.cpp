#include "lcert/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lcert {

namespace {
#ifdef _OPENMP
const int kDefaultWorkers = omp_get_max_threads();
#endif
}  // namespace

std::size_t worker_count() {
#ifdef _OPENMP
  return static_cast<std::size_t>(omp_get_max_threads());
#else
  return 1;
#endif
}

void set_worker_count(std::size_t workers) {
#ifdef _OPENMP
  omp_set_num_threads(workers == 0 ? kDefaultWorkers : static_cast<int>(workers));
#else
  (void)workers;
#endif
}

}  // namespace lcert
