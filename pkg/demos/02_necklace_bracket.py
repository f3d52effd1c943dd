"""The necklace Lie algebra: bracket, hamiltonian fields, central extension.

Necklace words of a double quiver carry a Lie bracket: open the first
necklace at an arrow, the second at the reversed arrow, glue the loose ends,
sum over all occurrences, then antisymmetrize.  Equivalently it is the
Poisson bracket induced by the canonical 2-form sum_a da* da.
"""
import random

from necklacekit import (
    Arrow,
    NecklaceWord,
    Quiver,
    derivation_commutator,
    double,
    hamiltonian_derivation,
    kontsevich_bracket,
    moment_element,
    project_to_necklaces,
)

loop = Quiver(1, (Arrow("x", 1, 1),))
dl = double(loop)

w1 = NecklaceWord(dl, ("x", "x"))
w2 = NecklaceWord(dl, ("x*", "x*"))
print("{[x x], [x* x*]} =", kontsevich_bracket(w1, w2))

# Every necklace word w has a hamiltonian derivation theta_w with
# theta_w(a) = -dw/da*, theta_w(a*) = dw/da:
theta1 = hamiltonian_derivation(w1)
theta2 = hamiltonian_derivation(w2)
print("theta_[x x] :", theta1)
print("theta_[x* x*] :", theta2)

# The assignment w -> theta_w turns brackets into commutators of
# derivations; its kernel is spanned by the vertex classes, so the necklace
# Lie algebra is a central extension of the symplectic derivations.
commutator = derivation_commutator(theta1, theta2)
print("[theta1, theta2] :", commutator)
print("theta of the bracket :", hamiltonian_derivation(kontsevich_bracket(w1, w2), dl))

vertex = NecklaceWord.vertex_class(dl, 1)
print("theta of a vertex class is zero:", hamiltonian_derivation(vertex, dl).is_zero())

# Spot-check the Jacobi identity on random words of the richer double:
q = Quiver(2, (Arrow("a", 1, 2), Arrow("b", 2, 2)))
dq = double(q)
from necklacekit import necklaces_of_length

rng = random.Random(1)
pool = [w for length in (1, 2, 3) for w in necklaces_of_length(dq, length)]
for trial in range(3):
    u, v, w = (rng.choice(pool) for _ in range(3))
    jacobi = (
        kontsevich_bracket(u, kontsevich_bracket(v, w))
        + kontsevich_bracket(v, kontsevich_bracket(w, u))
        + kontsevich_bracket(w, kontsevich_bracket(u, v))
    )
    print(f"jacobi({u}, {v}, {w}) = {jacobi}")

# Brackets against the class of the moment element recover theta_w:
m_class = project_to_necklaces(moment_element(q))
u = pool[5]
print("\n{w, [moment]} =", kontsevich_bracket(u, m_class), "for w =", u)
