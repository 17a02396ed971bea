#pragma once

#include <string>

#include "brickforge/brick.hpp"

namespace brickforge::svg {

// Renders a rank-2 brick polyhedron as a self-contained SVG document: the
// region (clipped to the view box when unbounded), every brick vector with
// its facet label, the distinguished vertices, recession arrows, and the
// root-configuration arrows at each brick vector.  Coordinates are embedded
// isometrically via the Cholesky factor of the symmetrized form; this is the
// only place in the library that uses floating point.
// Throws DimensionMismatch unless the system has rank 2.
std::string render_rank2(const brick::BrickPolyhedron& bp);

}  // namespace brickforge::svg
