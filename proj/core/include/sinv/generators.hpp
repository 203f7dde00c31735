#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sinv/simplicial_complex.hpp"

namespace sinv {

/// Boundary of the (d+1)-simplex: the d-sphere on d+2 vertices. Requires d >= 1.
SimplicialComplex boundary_simplex(int d);

/// The 2-complex C(k) with f-vector (3k+4, 12k+3, 9k), H_1 = Z/k, H_2 = 0.
/// Vertex layout: 0 is the hub, 1..3k the inner cycle, 3k+1..3k+3 the three
/// outer vertices repeated around the rim. Requires k >= 2; C(2) triangulates
/// the real projective plane.
SimplicialComplex ck_complex(int k);

/// The 6-vertex triangulation of the real projective plane, f = (6,15,10).
SimplicialComplex rp2_6();

/// The 9-vertex triangulation of the complex projective plane, 36 facets,
/// f = (9,36,84,90,36).
SimplicialComplex cp2_9();

/// Triangulated cylinder S^1 x [0,1]: the 6-vertex prism over a triangle,
/// f = (6,12,6).
SimplicialComplex cylinder();

/// S^2 x S^2 as the staircase triangulation of the product of two copies of
/// boundary_simplex(2): 16 vertices, 96 facets of dimension 4.
SimplicialComplex s2xs2();

/// Staircase (chain) triangulation of |a| x |b|. Vertex (u,v) gets id
/// u * b.vertex_count() + v; a face is any chain of pairs whose projections
/// are faces of a and b.
SimplicialComplex simplicial_product(const SimplicialComplex& a,
                                     const SimplicialComplex& b);

/// Resolves a builtin name: "boundary_simplex:<d>", "ck:<k>", "rp2_6",
/// "cp2_9", "cylinder", "s2xs2". Returns nullopt for unknown names; throws
/// InputError for a known name with a bad parameter.
std::optional<SimplicialComplex> make_builtin(std::string_view name);

/// Names accepted by make_builtin, for help text.
std::vector<std::string> builtin_names();

} // namespace sinv
