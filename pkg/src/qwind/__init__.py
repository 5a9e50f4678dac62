"""qwind: exact tools for Tverberg partitions and winding partitions.

Submodules:
  exactgeom  rational plane predicates, segment intersection, winding numbers
  complexes  faces, disjoint face families, admissible partition shapes
  drawings   PL drawings, generators, general position, serialization
  tverberg   hull-intersection certificates for point configurations
  winding    winding-partition decision/enumeration/counting and the hunt
  qwinding   paths/cycles, delta-wye, outerplanarity, named subgraphs
  bounds     exact lower-bound formulas
  cli        command-line front end (`qwind ...`)
  service    local HTTP facade for the explorer UI
"""

__version__ = "0.1.0"
