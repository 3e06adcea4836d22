// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace hnb {

/// Name of the environment variable that caps the OpenMP team size.
inline constexpr const char* kThreadsEnv = "HNBOUND_THREADS";

/// Thread count used by the parallel kernels: HNBOUND_THREADS when set to a
/// positive integer, otherwise the OpenMP default.
int thread_count();

/// Overrides the thread count for this process; n <= 0 restores the default.
void set_thread_count(int n);

}  // namespace hnb
