"""Diagram algebras: planar rook and Temperley-Lieb.

Both have bases of planar diagrams multiplied by concatenation, and both
carry the anti-involution that reflects a diagram top-to-bottom.  Planar
rook diagrams are partial matchings of top to bottom nodes (arcs can die
under concatenation); Temperley-Lieb diagrams are perfect non-crossing
matchings where closed loops formed during concatenation are traded for
powers of the parameter delta.
"""

import math

from plesken import planar_rook, temperley_lieb
from plesken.builders import (
    PlanarRookDiagram,
    TLDiagram,
    planar_rook_diagrams,
    temperley_lieb_diagrams,
)

print("planar rook dimensions (C(2n, n)):")
for n in range(1, 5):
    A, _ = planar_rook(n)
    print(f"  n={n}: dim {A.dim} == {math.comb(2 * n, n)}")

print("\na concatenation where arcs survive only on matched endpoints:")
d1 = PlanarRookDiagram(6, (1, 3, 4, 5, 6), (2, 3, 4, 5, 6))
d2 = PlanarRookDiagram(6, (1, 2, 3, 4), (1, 2, 3, 6))
print(f"  {d1.label()} * {d2.label()} = {d1.compose(d2).label()}")

print("\nTemperley-Lieb dimensions (Catalan numbers):")
for n in range(1, 6):
    A, _ = temperley_lieb(n, 3)
    print(f"  n={n}: dim {A.dim} == {math.comb(2 * n, n) // (n + 1)}")

print("\nloops become factors of delta:")
e = TLDiagram.from_pairs(2, [(1, 2), (3, 4)])  # cup over cap
product, loops = e.compose(e)
print(f"  ({e.label()}) * ({e.label()}) closes {loops} loop;"
      " so e*e = delta*e in TL(2)")

print("\nall TL diagrams for n=3, in basis order:")
for d in temperley_lieb_diagrams(3):
    print("  ", d.label(), f"({d.through_count()} through-strands)")

print("\nplanar rook diagrams for n=2, in basis order:")
print("  ", ", ".join(d.label() for d in planar_rook_diagrams(2)))
