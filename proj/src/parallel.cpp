// SPDX-License-Identifier: Apache-2.0
#include "hnbound/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <atomic>
#include <cstdlib>
#include <string>

namespace hnb {

namespace {

std::atomic<int> override_threads{0};

int default_threads() {
  if (const char* env = std::getenv(kThreadsEnv)) {
    try {
      int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
      // fall through to the OpenMP default
    }
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace

int thread_count() {
  int n = override_threads.load();
  return n > 0 ? n : default_threads();
}

void set_thread_count(int n) { override_threads.store(n > 0 ? n : 0); }

}  // namespace hnb
