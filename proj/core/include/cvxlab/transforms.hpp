#pragma once

#include <cvxlab/function.hpp>

namespace cvxlab {

enum class TransformTag { kLegendre, kPolarity, kGauge };

// Convex conjugate sup_x <x,y> - phi(x), computed exactly: epigraph vertices
// become pieces, recession directions bound the conjugate domain. An exact
// involution on this representation.
Fn legendre(const Fn& f);

// Polarity transform of geometric convex functions (phi >= 0, phi(0) = 0):
// the epigraph of the result is the reflection of the polar of the epigraph.
// Throws NotGeometric outside that class.
Fn polarity(const Fn& f);

// Gauge transform, realized as legendre(polarity(f)); the two composition
// orders agree and the map is again an involution on geometric functions.
Fn gauge(const Fn& f);

Fn apply(TransformTag tag, const Fn& f);

// Reflection of R^{n+1} through R^n (last coordinate negated).
Polyhedron reflect(const Polyhedron& p);

}  // namespace cvxlab
