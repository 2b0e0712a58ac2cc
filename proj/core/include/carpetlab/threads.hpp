#pragma once

namespace carpetlab {

/// Worker count for partitioned enumeration and sampling. Precedence:
/// explicit override (> 0), then the CARPETLAB_THREADS environment variable,
/// then hardware concurrency. Always >= 1. Results never depend on the value.
int worker_count(int override_value = 0);

}  // namespace carpetlab
