#pragma once

#include <cstddef>
#include <functional>

namespace pqc {

/// Worker count: PQC_THREADS if set and positive, else hardware concurrency.
unsigned worker_count();

/// Runs body(i) for i in [0, n) on up to `threads` workers (0 = worker_count()).
/// Each index runs exactly once; callers write results into slot i, so the
/// outcome does not depend on the schedule. The first exception is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, unsigned threads = 0);

}  // namespace pqc
