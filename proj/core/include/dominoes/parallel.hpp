#pragma once

#include <functional>

namespace dominoes {

// Worker count from DOMINOES_JOBS, falling back to 1.
int default_jobs();

// Runs body(worker) for worker = 0..jobs-1 on separate threads and rethrows
// the first exception after all threads have joined.
void run_workers(int jobs, const std::function<void(int)>& body);

}  // namespace dominoes
