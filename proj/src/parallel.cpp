#include "canon/parallel.hpp"

#include <omp.h>

namespace canon {

int resolve_threads(int threads) { return threads > 0 ? threads : omp_get_max_threads(); }

} // namespace canon
