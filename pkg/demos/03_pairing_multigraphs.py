"""Opposite-weight pairing multigraphs.

Pairing each weight w at a fixed point with an occurrence of -w somewhere
(the combinatorial trace of the isotropy spheres of the action) builds a
multigraph on the fixed points with edges labeled |w|. The pairing need
not be unique, so all of them are enumerated and connectivity is judged
over the whole collection.
"""

from circle6 import (
    build_multigraphs, connectivity_verdict, dataset, gen_family, jang_case,
    linear_action_isotropy,
)

# The sphere has a single pairing: three edges joining its two points.
s6 = dataset(3, [("north", (1, 2, -3)), ("south", (-1, -2, 3))])
graphs = build_multigraphs(s6)
print("sphere graph edges:", graphs[0].edges)
print("verdict:", connectivity_verdict(graphs).value)
print()
print("Graphviz form:")
print(graphs[0].to_dot())

# The sphere-union family: when the two parameter pairs share no weight
# magnitude, every pairing splits into the two halves.
d = gen_family(jang_case("D", 1, 2, 4, 5))
graphs = build_multigraphs(d)
print("case D at (1,2,4,5): components per pairing:",
      [len(g.components) for g in graphs],
      "->", connectivity_verdict(graphs).value)

# With a shared magnitude (1 + 2 = 3 appears in both halves) a crossing
# pairing exists and connectivity depends on the pairing chosen.
d = gen_family(jang_case("D", 1, 2, 3, 4))
graphs = build_multigraphs(d)
print("case D at (1,2,3,4): components per pairing:",
      sorted(len(g.components) for g in graphs),
      "->", connectivity_verdict(graphs).value)
print()

# Loops are allowed: a weight may cancel against its negative at the same
# fixed point.
loops = dataset(3, [("p1", (1, -1, 2)), ("p2", (-1, 1, -2))])
for g in build_multigraphs(loops):
    print("pairing:", g.edges)
print()

# The isotropy graph of an effective linear circle action on S^4 x S^2:
# four fixed points, six isotropy spheres, always connected.
iso = linear_action_isotropy(2, 3, 5)
print("linear model (2,3,5):", len(iso.edges), "edges,",
      "connected" if iso.is_connected else "disconnected")
for e in iso.edges:
    print("  ", e)
