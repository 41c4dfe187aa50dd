"""
Exhaustive enumerators: abstract graphs up to isomorphism (`graphs`) and connected lattice subgraphs up to
translation (`lattice`). Both partition their growth frontier over a worker pool (`pool`).
"""
