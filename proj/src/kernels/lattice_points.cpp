// SPDX-License-Identifier: Apache-2.0
#include <omp.h>

#include "hnbound/errors.hpp"
#include "hnbound/kernels.hpp"
#include "hnbound/parallel.hpp"

namespace hnb::kernels {

namespace {

void validate(const IntHalfspaces& p) {
  if (p.dim < 1) throw InvalidArgument("lattice point count needs dim >= 1");
  if (p.box_lo.size() != static_cast<std::size_t>(p.dim) ||
      p.box_hi.size() != static_cast<std::size_t>(p.dim))
    throw InvalidArgument("bounding box dimension mismatch");
  if (p.normals.size() != p.offsets.size()) throw InvalidArgument("halfspace count mismatch");
  for (const auto& n : p.normals)
    if (n.size() != static_cast<std::size_t>(p.dim))
      throw InvalidArgument("halfspace normal dimension mismatch");
}

bool inside(const IntHalfspaces& p, const std::vector<long long>& x) {
  for (std::size_t k = 0; k < p.normals.size(); ++k) {
    __int128 s = 0;
    for (int i = 0; i < p.dim; ++i) s += static_cast<__int128>(p.normals[k][i]) * x[i];
    if (s > p.offsets[k]) return false;
  }
  return true;
}

// Counts points of the slab with x_0 fixed by odometer iteration over the
// remaining coordinates.
std::uint64_t count_slab(const IntHalfspaces& p, long long x0) {
  std::vector<long long> x(p.box_lo);
  x[0] = x0;
  for (int i = 1; i < p.dim; ++i)
    if (p.box_lo[i] > p.box_hi[i]) return 0;
  std::uint64_t count = 0;
  while (true) {
    if (inside(p, x)) ++count;
    int i = 1;
    while (i < p.dim) {
      if (x[i] < p.box_hi[i]) {
        ++x[i];
        break;
      }
      x[i] = p.box_lo[i];
      ++i;
    }
    if (i >= p.dim) break;
  }
  return count;
}

}  // namespace

std::uint64_t count_lattice_points_serial(const IntHalfspaces& p) {
  validate(p);
  std::uint64_t total = 0;
  for (long long x0 = p.box_lo[0]; x0 <= p.box_hi[0]; ++x0) total += count_slab(p, x0);
  return total;
}

std::uint64_t count_lattice_points(const IntHalfspaces& p) {
  validate(p);
  const long long lo = p.box_lo[0], hi = p.box_hi[0];
  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total) num_threads(thread_count())
  for (long long x0 = lo; x0 <= hi; ++x0) total += count_slab(p, x0);
  return total;
}

}  // namespace hnb::kernels
