#pragma once

#include <span>
#include <vector>

#include "fas/channel.hpp"

namespace fas {

/// Closed halfspace {t : normal . t >= offset}.
struct Halfspace {
  Position normal;
  double offset = 0.0;

  double slack(Position t) const { return dot(normal, t) - offset; }
};

/// The four halfspaces describing the square region.
std::vector<Halfspace> region_halfspaces(const Region& region);

bool is_feasible(Position p, const Region& region, std::span<const Halfspace> halfspaces,
                 double tolerance = 1e-12);

// Euclidean projection onto region ∩ halfspaces, exact in 2-D. The optimum
// is p itself, a projection of p onto one constraint line, or a vertex
// where two lines meet, so all such candidates are enumerated and the
// nearest feasible one is kept. The box is enforced exactly on return.
// Throws InfeasibleError when no candidate is feasible.
Position project_onto_polyhedron(Position p, const Region& region,
                                 std::span<const Halfspace> halfspaces);

}  // namespace fas
