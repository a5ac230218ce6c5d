#pragma once

// Random test instances shared by the acceptance suite, the tests and the
// benchmark. Everything is drawn from the caller's generator.

#include "gmt/current.hpp"

#include <random>

namespace gmt {

using Rng = std::mt19937_64;

/// Full-rank seminorm on R^k over a random ambient (l2, linf, l1, quad or a
/// product of two of those) of dimension between k and k + 2.
Seminorm random_seminorm(Rng& rng, int k);

AmbientNorm random_planar_ambient(Rng& rng);  // l2, linf or l1 on R^2

/// k-current in the plane (k = 1 or 2) with 3 to 8 random cells in [-1,1]^2
/// and multiplicities in {-2, -1, 1, 2}.
PolyhedralCurrent random_planar_current(Rng& rng, int k);

/// Integral 1-current on 4 to 12 random vertices in R^dim with up to 20
/// random edges, multiplicities in {-3, ..., 3}.
PolyhedralCurrent random_graph_current(Rng& rng, int dim);

/// Random k x k matrix with |det| bounded away from zero.
Mat random_invertible(Rng& rng, int k);

double uniform(Rng& rng, double lo, double hi);
int uniform_int(Rng& rng, int lo, int hi);  // inclusive

}  // namespace gmt
