#pragma once

#include "arccover/drawing.hpp"

#include <vector>

namespace arccover {

/// The 7-circle icosahedron drawing: one unit circle K plus two
/// symmetric triples of circles L_i, M_i whose pairwise intersections
/// carry all twelve vertices.  Vertex radii are (1+sqrt 3)/2, 1, 1 and
/// (sqrt 3 - 1)/2; edges are grouped into one 6-cycle on K and six
/// 4-edge paths, each drawn on the larger arc of its covering circle.
Drawing icosahedron_seven_circles();

/// 3D drawing of K_{p,q} on ceil(p/2) * ceil(q/2) circles: the q
/// vertices sit on antipodal pairs of a common circle, the p vertices on
/// per-sphere point pairs of the orthogonal axis; every pair of pairs
/// spans one circle carrying its four edges.
Drawing kpq_circle_drawing(int p, int q);

/// Standard non-crossing page assignment of K_n with ceil(n/2) pages
/// (zigzag Hamiltonian paths); pages[e] indexes complete(n).edges().
std::vector<int> kn_book_embedding(int n);

/// Book embedding to spheres: spine vertices on the common circle of
/// ceil(pages/2) spheres, each page drawn on one hemisphere.  Throws if
/// two same-page edges interleave along the spine.
Drawing book_to_spheres(int n, const std::vector<int>& pages);

/// Straight-line nested-triangles drawing of the triangulation G_k
/// (rings of concentric triangles with band edges), used as the
/// nested-cycle certificate fixture.
Drawing nested_triangles_drawing(int k);

/// Cube drawn with four arcs on four congruent circles.
Drawing cube_four_arc_drawing();

} // namespace arccover
