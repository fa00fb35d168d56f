#pragma once

namespace tdpcc {

// Process-wide switch between the serial reference kernels and the OpenMP
// ones. 0 or 1 selects the serial path; n > 1 enables OpenMP with n threads;
// -1 (the default) enables OpenMP with the runtime's thread count.
void set_threads(int n);
int max_threads();
bool parallel_enabled();

}  // namespace tdpcc
