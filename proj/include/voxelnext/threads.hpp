#pragma once

namespace vx {

// Global worker-thread cap for the compute kernels. Kernels only parallelize
// over disjoint output elements, so results are identical for any setting;
// 1 additionally serializes the whole process (the CLI's --threads 1).
void set_num_threads(int n);
int num_threads();

}  // namespace vx
