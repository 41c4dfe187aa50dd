"""
PlanarEuler
====

PlanarEuler classifies connected planar graphs as real or complex: a graph with f-vector (f0, f1, f2) is real
when its Euler polynomial f2 x^3 + f1 x^2 + f0 x + 2 has only real roots, equivalently (f0 - 2)^2 >= 8 f2.
Its main functionalities are:

  1. `euler_utils`: f-vectors, the Euler polynomial, its roots and the real/complex verdict
  2. `generator_utils`: paths, cycles, grids, stacked triangulations and the 9-vertex triangle-free witness
  3. `enumeration`: exhaustive enumeration of small graphs up to isomorphism and of lattice subgraphs
  4. `verification`: bounded verifiers for the classification theorems, reported as JSON
  5. `cli`: the `planar-euler` command (classify, gen, enumerate, verify, sweep)
"""
