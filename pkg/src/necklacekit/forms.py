"""Relative noncommutative differential forms of a path algebra.

A degree-n basis element is a tuple (p0; p1, ..., pn) standing for
p0 dp1 ... dpn, where the pi are paths, len(pi) >= 1 for i >= 1, and the
source of each entry equals the target of the next (tensor products over
the vertex algebra vanish otherwise).  Products are computed by fusing one
adjacent pair at a time with alternating signs; a fused tuple survives only
if it still satisfies those constraints.

Everything is graded by (degree, total path length) and the grading is
preserved by the differential, products, contraction and Lie derivative,
so each graded piece is a finite-dimensional exact-rational vector space.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .linalg import RowReducer
from .paths import (
    Derivation,
    LinearCombination,
    NecklaceWord,
    Path,
    PathSum,
    concat,
    necklaces_of_length,
    paths_of_length,
)
from .quiver import DoubleQuiver, Quiver, double

DEGREE_CAP = 3
LENGTH_CAP = 6


class BoundExceeded(ValueError):
    """A graded computation was requested beyond the configured caps."""


@dataclass(frozen=True)
class FormBasisElement:
    """The class of lead dtails[0] ... dtails[n-1] in the relative form algebra."""

    lead: Path
    tails: tuple[Path, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "tails", tuple(self.tails))
        entries = (self.lead,) + self.tails
        for i, p in enumerate(entries):
            if i >= 1 and p.length < 1:
                raise ValueError("differential slots need paths of length >= 1")
            if i + 1 < len(entries) and p.source != entries[i + 1].target:
                raise ValueError(
                    f"entries {i} and {i + 1} do not match up: source {p.source} "
                    f"vs target {entries[i + 1].target}"
                )

    @property
    def degree(self) -> int:
        return len(self.tails)

    @property
    def total_length(self) -> int:
        return self.lead.length + sum(p.length for p in self.tails)

    @property
    def quiver(self) -> Quiver:
        return self.lead.quiver

    def __str__(self) -> str:
        text = str(self.lead)
        for p in self.tails:
            text += f" d({p})"
        return text

    def __repr__(self) -> str:
        return f"Form({self})"


def _valid_tuple(entries: tuple[Path, ...]) -> bool:
    for i, p in enumerate(entries):
        if i >= 1 and p.length < 1:
            return False
        if i + 1 < len(entries) and p.source != entries[i + 1].target:
            return False
    return True


def _mul_basis(
    x: FormBasisElement, y: FormBasisElement
) -> Iterator[tuple[FormBasisElement, int]]:
    entries = (x.lead,) + x.tails + (y.lead,) + y.tails
    n = x.degree
    for i in range(n + 1):
        fused = concat(entries[i], entries[i + 1])
        if fused is None:
            continue
        candidate = entries[:i] + (fused,) + entries[i + 2 :]
        if _valid_tuple(candidate):
            sign = 1 if (n - i) % 2 == 0 else -1
            yield FormBasisElement(candidate[0], candidate[1:]), sign


class FormSum(LinearCombination):
    """Rational combination of form basis elements, graded by (degree, length)."""

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scaled(other)
        if not isinstance(other, FormSum):
            return NotImplemented
        acc: dict[FormBasisElement, Fraction] = {}
        for x, c in self._terms.items():
            for y, d in other._terms.items():
                cd = c * d
                for elt, sign in _mul_basis(x, y):
                    new = acc.get(elt, Fraction(0)) + sign * cd
                    if new:
                        acc[elt] = new
                    else:
                        acc.pop(elt, None)
        result = FormSum.__new__(FormSum)
        result._terms = acc
        return result

    def degrees(self) -> set[int]:
        return {elt.degree for elt in self._terms}

    def components(self) -> dict[tuple[int, int], "FormSum"]:
        """Split into homogeneous (degree, total length) pieces."""
        acc: dict[tuple[int, int], dict] = {}
        for elt, coeff in self._terms.items():
            acc.setdefault((elt.degree, elt.total_length), {})[elt] = coeff
        out = {}
        for key, terms in acc.items():
            piece = FormSum.__new__(FormSum)
            piece._terms = terms
            out[key] = piece
        return out

    def __str__(self) -> str:
        from .paths import _format_sum

        return _format_sum(self, str)


def form_of(x: PathSum) -> FormSum:
    """Embed a path-algebra element as a degree-0 form."""
    return FormSum((FormBasisElement(p, ()), c) for p, c in x.terms())


def form_unit(q: Quiver) -> FormSum:
    return FormSum((FormBasisElement(Path.trivial(q, v), ()), 1) for v in q.vertices)


def differential(x: FormSum) -> FormSum:
    """d(p0; p1, ..., pn) = (e; p0, p1, ..., pn), zero when the lead is a vertex."""
    acc = []
    for elt, coeff in x.terms():
        if elt.lead.length == 0:
            continue
        lead = Path.trivial(elt.lead.quiver, elt.lead.target)
        acc.append((FormBasisElement(lead, (elt.lead,) + elt.tails), coeff))
    return FormSum(acc)


def d_of_path_sum(x: PathSum) -> FormSum:
    return differential(form_of(x))


def contract(theta: Derivation, x: FormSum) -> FormSum:
    """The degree -1 super-derivation with i(a) = 0 and i(da) = theta(a)."""
    total = FormSum.zero()
    for elt, coeff in x.terms():
        n = elt.degree
        for i in range(1, n + 1):
            replaced = form_of(theta(elt.tails[i - 1]))
            if replaced.is_zero():
                continue
            term = FormSum.of(FormBasisElement(elt.lead, elt.tails[: i - 1])) * replaced
            rest = elt.tails[i:]
            if rest:
                suffix = FormSum.of(
                    FormBasisElement(Path.trivial(elt.quiver, rest[0].target), rest)
                )
                term = term * suffix
            sign = coeff if i % 2 == 1 else -coeff
            total = total + sign * term
    return total


def lie_derivative(theta: Derivation, x: FormSum) -> FormSum:
    """The degree-0 derivation with L(a) = theta(a) and L(da) = d theta(a)."""
    total = FormSum.zero()
    for elt, coeff in x.terms():
        n = elt.degree
        tails = elt.tails
        lead_image = theta(elt.lead)
        if not lead_image.is_zero():
            term = form_of(lead_image)
            if tails:
                term = term * FormSum.of(
                    FormBasisElement(Path.trivial(elt.quiver, tails[0].target), tails)
                )
            total = total + coeff * term
        for i in range(1, n + 1):
            replaced = d_of_path_sum(theta(tails[i - 1]))
            if replaced.is_zero():
                continue
            term = FormSum.of(FormBasisElement(elt.lead, tails[: i - 1])) * replaced
            rest = tails[i:]
            if rest:
                term = term * FormSum.of(
                    FormBasisElement(Path.trivial(elt.quiver, rest[0].target), rest)
                )
            total = total + coeff * term
    return total


def symplectic_form(q: Quiver) -> FormSum:
    """The canonical 2-form sum_a da* da of a double quiver."""
    dq = q if isinstance(q, DoubleQuiver) else double(q)
    total = FormSum.zero()
    for arr in dq.base_arrows:
        da = d_of_path_sum(PathSum.of(Path.of_arrow(dq, arr.label)))
        da_star = d_of_path_sum(PathSum.of(Path.of_arrow(dq, dq.star(arr.label))))
        total = total + da_star * da
    return total


# ---------------------------------------------------------------------------
# graded bases and exact dimension counts


def _check_caps(degree: int, length: int, degree_cap: int, length_cap: int) -> None:
    if degree < 0 or length < 0:
        raise ValueError("degree and length must be nonnegative")
    if degree > degree_cap or length > length_cap:
        raise BoundExceeded(
            f"graded piece (degree={degree}, length={length}) exceeds caps "
            f"(degree<={degree_cap}, length<={length_cap}); raise the caps explicitly"
        )


def _compositions(total: int, count: int) -> Iterator[tuple[int, ...]]:
    """Splittings total = l0 + l1 + ... + lcount with l0 >= 0 and li >= 1."""
    if count == 0:
        yield (total,)
        return
    for l0 in range(0, total - count + 1):
        yield from ((l0,) + rest for rest in _positive_compositions(total - l0, count))


def _positive_compositions(total: int, count: int) -> Iterator[tuple[int, ...]]:
    if count == 1:
        yield (total,)
        return
    for first in range(1, total - count + 2):
        for rest in _positive_compositions(total - first, count - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def omega_basis(q: Quiver, degree: int, length: int) -> tuple[FormBasisElement, ...]:
    """Deterministically ordered basis of the (degree, length) graded piece."""
    if degree == 0:
        return tuple(FormBasisElement(p, ()) for p in paths_of_length(q, length))
    if length < degree:
        return ()
    out = []
    for split in _compositions(length, degree):
        for path in paths_of_length(q, length):
            arrows = path.arrows
            pieces: list[Path] = []
            pos = length
            for size in split:
                if size == 0:
                    # only the lead slot can be empty; it sits at the path's end
                    pieces.append(Path.trivial(q, path.target))
                else:
                    pieces.append(Path(q, arrows[pos - size : pos]))
                    pos -= size
            out.append(FormBasisElement(pieces[0], tuple(pieces[1:])))
    return tuple(out)


@lru_cache(maxsize=None)
def _basis_index(q: Quiver, degree: int, length: int) -> dict[FormBasisElement, int]:
    return {elt: i for i, elt in enumerate(omega_basis(q, degree, length))}


def _vector_of(x: FormSum, q: Quiver, degree: int, length: int) -> dict[int, Fraction]:
    index = _basis_index(q, degree, length)
    vec = {}
    for elt, coeff in x.terms():
        if elt.degree != degree or elt.total_length != length:
            raise ValueError("form is not homogeneous of the requested bidegree")
        vec[index[elt]] = coeff
    return vec


@lru_cache(maxsize=None)
def _d_image_reducer(q: Quiver, degree: int, length: int) -> tuple[RowReducer, int]:
    """Row space of d applied to the (degree, length) piece, plus its rank."""
    reducer = RowReducer()
    for elt in omega_basis(q, degree, length):
        image = differential(FormSum.of(elt))
        if image.is_zero():
            continue
        reducer.add(_vector_of(image, q, degree + 1, length))
    return reducer, reducer.rank


def graded_homology_dim(
    q: Quiver,
    degree: int,
    length: int,
    *,
    degree_cap: int = DEGREE_CAP,
    length_cap: int = LENGTH_CAP,
) -> int:
    """Exact dimension of ker d / im d on one graded piece of the form algebra."""
    _check_caps(degree, length, degree_cap, length_cap)
    dim_here = len(omega_basis(q, degree, length))
    _, rank_out = _d_image_reducer(q, degree, length)
    kernel = dim_here - rank_out
    if degree == 0:
        return kernel
    _, rank_in = _d_image_reducer(q, degree - 1, length)
    return kernel - rank_in


@lru_cache(maxsize=None)
def _commutator_reducer(q: Quiver, degree: int, length: int) -> RowReducer:
    """Row space of all supercommutators landing in the (degree, length) piece."""
    reducer = RowReducer()
    target_index = _basis_index(q, degree, length)
    if not target_index:
        return reducer

    def vectors_of(x: FormSum, y: FormSum, sign: int):
        comm = x * y - sign * (y * x)
        if comm.is_zero():
            return None
        return _vector_of(comm, q, degree, length)

    for i in range(0, degree // 2 + 1):
        j = degree - i
        sign = -1 if (i * j) % 2 == 1 else 1
        for l1 in range(0, length + 1):
            l2 = length - l1
            xs = omega_basis(q, i, l1)
            ys = omega_basis(q, j, l2)
            if not xs or not ys:
                continue
            if i < j:
                pairs = ((x, y) for x in xs for y in ys)
            elif l1 < l2:
                pairs = ((x, y) for x in xs for y in ys)
            elif l1 > l2:
                continue
            else:
                pairs = (
                    (xs[s], ys[t]) for s in range(len(xs)) for t in range(s, len(ys))
                )
            for x, y in pairs:
                vec = vectors_of(FormSum.of(x), FormSum.of(y), sign)
                if vec:
                    reducer.add(vec)
    return reducer


def karoubi_dim(
    q: Quiver,
    degree: int,
    length: int,
    *,
    degree_cap: int = DEGREE_CAP,
    length_cap: int = LENGTH_CAP,
) -> tuple[int, tuple[FormBasisElement, ...]]:
    """Dimension of the supercommutator quotient on one graded piece.

    Returns the dimension together with basis elements whose classes span the
    quotient (the non-pivot coordinates of the commutator row space).
    """
    _check_caps(degree, length, degree_cap, length_cap)
    basis = omega_basis(q, degree, length)
    reducer = _commutator_reducer(q, degree, length)
    pivots = reducer.pivot_columns
    reps = tuple(elt for idx, elt in enumerate(basis) if idx not in pivots)
    return len(basis) - reducer.rank, reps


def karoubi_homology_dim(
    q: Quiver,
    degree: int,
    length: int,
    *,
    degree_cap: int = DEGREE_CAP,
    length_cap: int = LENGTH_CAP,
) -> int:
    """Homology of the induced differential on the supercommutator quotients."""
    _check_caps(degree, length, degree_cap, length_cap)
    dim_here = len(omega_basis(q, degree, length))
    w_next = _commutator_reducer(q, degree + 1, length)
    stacked = _copy_reducer(w_next)
    extra = 0
    for elt in omega_basis(q, degree, length):
        image = differential(FormSum.of(elt))
        if image.is_zero():
            continue
        if stacked.add(_vector_of(image, q, degree + 1, length)):
            extra += 1
    kernel_dim = dim_here - extra
    w_here = _commutator_reducer(q, degree, length)
    boundary = _copy_reducer(w_here)
    image_dim = boundary.rank
    if degree >= 1:
        for elt in omega_basis(q, degree - 1, length):
            image = differential(FormSum.of(elt))
            if not image.is_zero():
                boundary.add(_vector_of(image, q, degree, length))
        image_dim = boundary.rank
    return kernel_dim - image_dim


def _copy_reducer(reducer: RowReducer) -> RowReducer:
    clone = RowReducer()
    clone._pivots = {col: dict(row) for col, row in reducer._pivots.items()}
    return clone


def in_commutator_span(
    x: FormSum,
    q: Quiver,
    *,
    degree_cap: int = DEGREE_CAP,
    length_cap: int = LENGTH_CAP,
) -> bool:
    """Whether every homogeneous piece of x is a sum of supercommutators."""
    for (degree, length), piece in x.components().items():
        _check_caps(degree, length, degree_cap, length_cap)
        reducer = _commutator_reducer(q, degree, length)
        if not reducer.contains(_vector_of(piece, q, degree, length)):
            return False
    return True


def is_symplectic(
    theta: Derivation,
    *,
    degree_cap: int = DEGREE_CAP,
    length_cap: int = LENGTH_CAP,
) -> bool:
    """Whether the Lie derivative of the canonical 2-form vanishes in the quotient."""
    lw = lie_derivative(theta, symplectic_form(theta.quiver))
    return in_commutator_span(lw, theta.quiver, degree_cap=degree_cap, length_cap=length_cap)


# ---------------------------------------------------------------------------
# reduction of 1-forms to the quotient basis p da with p.a an oriented cycle


def reduce_to_dr1(x: FormSum) -> FormSum:
    """Rewrite a 1-form into the quotient basis of classes p da with p.a closed.

    Uses the rewriting q d(rp) = pq dr + qr dp to shorten differential slots,
    then drops the classes p da where p.a is not a cycle.
    """
    acc: dict[FormBasisElement, Fraction] = {}
    for elt, coeff in x.terms():
        if elt.degree != 1:
            raise ValueError("reduce_to_dr1 expects a homogeneous 1-form")
        for (p0, arrow_path), c in _dr1_terms(elt.lead, elt.tails[0]).items():
            elt1 = FormBasisElement(p0, (arrow_path,))
            new = acc.get(elt1, Fraction(0)) + coeff * c
            if new:
                acc[elt1] = new
            else:
                acc.pop(elt1, None)
    result = FormSum.__new__(FormSum)
    result._terms = acc
    return result


def _dr1_terms(p0: Path, p1: Path) -> dict[tuple[Path, Path], Fraction]:
    q = p0.quiver
    if p1.length == 1:
        product = concat(p0, p1)
        if product is not None and product.is_cycle():
            return {(p0, p1): Fraction(1)}
        return {}
    first = Path.of_arrow(q, p1.arrows[0])
    rest = Path(q, p1.arrows[1:])
    out: dict[tuple[Path, Path], Fraction] = {}
    left = concat(first, p0)
    if left is not None:
        for key, c in _dr1_terms(left, rest).items():
            out[key] = out.get(key, Fraction(0)) + c
    right = concat(p0, rest)
    if right is not None:
        for key, c in _dr1_terms(right, first).items():
            out[key] = out.get(key, Fraction(0)) + c
    return {k: v for k, v in out.items() if v}


def tau(theta: Derivation) -> FormSum:
    """Image of a derivation under contraction with the canonical 2-form, in dR1."""
    return reduce_to_dr1(contract(theta, symplectic_form(theta.quiver)))


def necklace_differential(w: NecklaceWord) -> FormSum:
    """d of a necklace class, reduced to the dR1 basis."""
    if not w.arrows:
        return FormSum.zero()
    return reduce_to_dr1(d_of_path_sum(PathSum.of(w.representative())))


def dr0_dimension(q: Quiver, length: int) -> int:
    """Independent count of necklace classes of a given length."""
    return len(necklaces_of_length(q, length))
