"""
Rotation systems, validation, and face tracing
==============================================

A planar cubic graph is given to this library as a combinatorial
embedding: for each vertex, its three neighbors in counterclockwise
order.  Faces are never stored; they are traced from the rotations.
"""

from heawood import EmbeddedCubicGraph, format_graph, trace_faces, validate

# The 6-vertex prism: two triangles {0,1,2} and {3,4,5} joined by the
# rungs 0-5, 1-3, 2-4, drawn with the quad (0,1,3,5) as outer face.
prism = EmbeddedCubicGraph(
    (
        (5, 2, 1),
        (3, 0, 2),
        (4, 1, 0),
        (1, 4, 5),
        (3, 2, 5),
        (3, 4, 0),
    ),
    outer_face_hint=(0, 1, 3, 5),
)

report = validate(prism)
print("valid:", report.ok)
print(f"{report.n_vertices} vertices, {report.n_edges} edges, "
      f"{report.n_faces} faces, bipartite={report.bipartite}")

# A cubic graph on 2n vertices embedded in the plane always has n + 2
# faces; validate() checks that, plus simplicity, symmetry of the
# rotation lists, connectivity and biconnectivity.
print("\nfaces:")
for face in trace_faces(prism):
    print(f"  face {face.face_id}: {face.vertex_cycle}")

# Every dart (directed edge) lies on exactly one face, so the face
# lengths always add up to twice the edge count.
assert sum(len(f) for f in trace_faces(prism)) == 2 * report.n_edges

# The same graph in the line-oriented text format used by the CLI:
print("\ntext format:")
print(format_graph(prism))

# Broken inputs are reported, not raised: here vertex 0 lists vertex 5
# twice, which violates simplicity.
broken = EmbeddedCubicGraph(((5, 5, 1),) + prism.rotations[1:])
print("broken graph problems:")
for problem in validate(broken).problems:
    print("  -", problem)
