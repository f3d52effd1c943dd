"""Kac root machinery: reflections, the fundamental region, enumeration.

A vector is classified by height descent: reflect at the least loop-free
vertex with positive Tits pairing until a unit vector (real root), the
fundamental region (imaginary root), or a negative coordinate (not a root)
appears.  The reflection sequence is kept as a replayable witness.
"""
from necklacekit import (
    Arrow,
    Quiver,
    classify_root,
    enumerate_positive_roots,
    in_fundamental_set,
    reflect,
)

q = Quiver(2, (Arrow("a", 1, 2), Arrow("b", 2, 2)))

print("reflection at vertex 1 of (1,1):", reflect(q, 1, (1, 1)))
print("(1,2) in the fundamental region:", in_fundamental_set(q, (1, 2)))
print("(1,1) in the fundamental region:", in_fundamental_set(q, (1, 1)))

for vec in ((1, 0), (1, 1), (2, 1), (2, 2)):
    verdict = classify_root(q, vec)
    print(f"classify {vec}: {verdict.kind}, via reflections {verdict.reflections}")

print("\nroots in the box (4, 8):")
found = enumerate_positive_roots(q, (4, 8))
reals = [vec for vec, verdict in found if verdict.kind == "real"]
imags = [vec for vec, verdict in found if verdict.kind == "imaginary"]
print("  real:", reals)
print("  imaginary:", imags)
print("  (the imaginary region of this quiver is the half-plane n >= m)")

# The affine two-cycle quiver has isotropic delta = (1,1):
affine = Quiver(2, (Arrow("a", 1, 2), Arrow("b", 2, 1)))
print("\naffine two-cycle, box (3, 3):")
for vec, verdict in enumerate_positive_roots(affine, (3, 3)):
    print(f"  {vec}  {verdict.kind}")
