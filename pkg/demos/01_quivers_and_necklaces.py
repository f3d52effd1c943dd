"""Quivers, doubles, and exact path arithmetic, end to end.

The running example throughout these demos is the two-vertex quiver with
one connecting arrow and one loop -- the quiver behind the phase space of
interacting particles on a line -- together with its double.
"""
from necklacekit import (
    Arrow,
    NecklaceWord,
    Path,
    Quiver,
    canonical_necklace,
    compose,
    double,
    euler_form,
    moment_element,
    partial_derivative,
    project_to_necklaces,
    tits_form,
)

q = Quiver(2, (Arrow("a", 1, 2), Arrow("b", 2, 2)))
print("quiver:", ", ".join(str(a) for a in q.arrows))
print("euler form:", euler_form(q))
print("tits form:", tits_form(q))

dq = double(q)
print("\ndouble:", ", ".join(str(a) for a in dq.arrows))

# Paths store arrows in traversal order; the product p * q traverses q first
# and vanishes unless source(p) == target(q).
a = Path.of_arrow(dq, "a")
b = Path.of_arrow(dq, "b")
print("\ncompose(b, a) :", compose(b, a), " (traverse a, then b)")
print("compose(a, b) :", compose(a, b), " (endpoints mismatch)")

# Closed paths up to rotation are necklace words; the stored rotation is the
# lexicographically least one, so equal classes compare equal.
cycle = Path(dq, ("b", "a*", "a"))
print("\ncycle b a* a canonicalizes to:", canonical_necklace(cycle))

# The trace projection sends open paths to zero and closed paths to their
# class, so commutators die:
astar = Path.of_arrow(dq, "a*")
commutator = compose(a, astar) - compose(astar, a)
print("projection of a.a* - a*.a :", project_to_necklaces(commutator))

# Opening a necklace at every occurrence of an arrow is the basic derivative:
w = NecklaceWord(dq, ("a", "b", "a*"))
print("\nd[a b a*]/db :", partial_derivative(w, "b"))

# The moment element sum_a (a a* - a* a) drives everything in later demos:
print("moment element:", moment_element(q))
