#include "sosperfect/parallel.hpp"

#include <omp.h>

namespace sosperfect {

int max_threads() { return omp_get_max_threads(); }

}  // namespace sosperfect
