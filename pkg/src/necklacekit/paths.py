"""Exact arithmetic in the path algebra of a quiver and its necklace quotient.

Paths store their arrows in traversal order (first-traversed arrow first);
the algebra product ``p * q`` is nonzero exactly when ``source(p) ==
target(q)`` and then traverses ``q`` first.  Text I/O writes traversal order
with spaces (``a b a*``) and ``e<i>`` for the trivial path at vertex i.

Coefficients are exact rationals throughout; there is no floating point in
this module.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Union

from .quiver import DoubleQuiver, Quiver, double

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class Path:
    """An oriented path: either a trivial path at a vertex or a chain of arrows."""

    quiver: Quiver
    arrows: tuple[str, ...]
    vertex: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "arrows", tuple(self.arrows))
        if self.arrows:
            if self.vertex is not None:
                raise ValueError("a path has either arrows or a vertex, not both")
            prev = None
            for label in self.arrows:
                arr = self.quiver.arrow(label)
                if prev is not None and prev.target != arr.source:
                    raise ValueError(
                        f"arrows do not compose: {prev.label!r} ends at {prev.target}, "
                        f"{arr.label!r} starts at {arr.source}"
                    )
                prev = arr
        else:
            if self.vertex is None:
                raise ValueError("a trivial path needs a vertex")
            if not 1 <= self.vertex <= self.quiver.vertex_count:
                raise ValueError(f"vertex {self.vertex} out of range")

    @classmethod
    def trivial(cls, q: Quiver, vertex: int) -> "Path":
        return cls(q, (), vertex)

    @classmethod
    def of_arrow(cls, q: Quiver, label: str) -> "Path":
        return cls(q, (label,))

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def source(self) -> int:
        if not self.arrows:
            return self.vertex  # type: ignore[return-value]
        return self.quiver.arrow(self.arrows[0]).source

    @property
    def target(self) -> int:
        if not self.arrows:
            return self.vertex  # type: ignore[return-value]
        return self.quiver.arrow(self.arrows[-1]).target

    def is_cycle(self) -> bool:
        return self.source == self.target

    def __str__(self) -> str:
        if not self.arrows:
            return f"e{self.vertex}"
        return " ".join(self.arrows)

    def __repr__(self) -> str:
        return f"Path({self})"


def concat(p: Path, q: Path) -> Path | None:
    """Algebra product p.q as a single path, or None when endpoints mismatch."""
    if p.quiver != q.quiver:
        raise ValueError("paths live over different quivers")
    if p.source != q.target:
        return None
    if not p.arrows:
        return q
    if not q.arrows:
        return p
    return Path(p.quiver, q.arrows + p.arrows)


class LinearCombination:
    """Shared behaviour of exact linear combinations with basis-element keys."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable[tuple] = ()) -> None:
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for key, coeff in items:
            coeff = Fraction(coeff)
            if not coeff:
                continue
            new = acc.get(key, Fraction(0)) + coeff
            if new:
                acc[key] = new
            else:
                acc.pop(key, None)
        self._terms = acc

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def of(cls, key, coeff: Scalar = 1):
        return cls(((key, Fraction(coeff)),))

    def terms(self) -> Iterator[tuple]:
        return iter(self._terms.items())

    def coefficient(self, key) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash((type(self).__name__, frozenset(self._terms.items())))

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        acc = dict(self._terms)
        for key, coeff in other._terms.items():
            new = acc.get(key, Fraction(0)) + coeff
            if new:
                acc[key] = new
            else:
                acc.pop(key, None)
        result = type(self).__new__(type(self))
        result._terms = acc
        return result

    def __neg__(self):
        result = type(self).__new__(type(self))
        result._terms = {k: -v for k, v in self._terms.items()}
        return result

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self + (-other)

    def _scaled(self, scalar: Scalar):
        scalar = Fraction(scalar)
        result = type(self).__new__(type(self))
        result._terms = {} if not scalar else {k: v * scalar for k, v in self._terms.items()}
        return result

    def __rmul__(self, scalar):
        if isinstance(scalar, (int, Fraction)):
            return self._scaled(scalar)
        return NotImplemented


class PathSum(LinearCombination):
    """Element of the path algebra: finite rational combination of paths."""

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scaled(other)
        if not isinstance(other, PathSum):
            return NotImplemented
        acc: dict[Path, Fraction] = {}
        for p, c in self._terms.items():
            for q, d in other._terms.items():
                pq = concat(p, q)
                if pq is None:
                    continue
                new = acc.get(pq, Fraction(0)) + c * d
                if new:
                    acc[pq] = new
                else:
                    acc.pop(pq, None)
        result = PathSum.__new__(PathSum)
        result._terms = acc
        return result

    def __str__(self) -> str:
        return _format_sum(self, str)


def unit(q: Quiver) -> PathSum:
    """The identity sum of all vertex idempotents e_1 + ... + e_k."""
    return PathSum((Path.trivial(q, v), Fraction(1)) for v in q.vertices)


def compose(p: Path, q: Path) -> PathSum:
    """Product of two paths as a PathSum (zero when endpoints mismatch)."""
    pq = concat(p, q)
    return PathSum.zero() if pq is None else PathSum.of(pq)


@dataclass(frozen=True)
class NecklaceWord:
    """Cyclic equivalence class of a closed path, stored as its least rotation.

    Length-zero classes are vertex classes and carry only the vertex.
    The constructor canonicalizes, so equal classes compare equal.
    """

    quiver: Quiver
    arrows: tuple[str, ...]
    vertex: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "arrows", tuple(self.arrows))
        if self.arrows:
            if self.vertex is not None:
                raise ValueError("a necklace has either arrows or a vertex, not both")
            path = Path(self.quiver, self.arrows)
            if not path.is_cycle():
                raise ValueError(
                    f"not a closed cycle: starts at {path.source}, ends at {path.target}"
                )
            object.__setattr__(self, "arrows", _min_rotation(self.arrows))
        else:
            if self.vertex is None:
                raise ValueError("a vertex class needs a vertex")
            if not 1 <= self.vertex <= self.quiver.vertex_count:
                raise ValueError(f"vertex {self.vertex} out of range")

    @classmethod
    def vertex_class(cls, q: Quiver, vertex: int) -> "NecklaceWord":
        return cls(q, (), vertex)

    @property
    def length(self) -> int:
        return len(self.arrows)

    def representative(self) -> Path:
        """A closed path representing this class (the stored rotation)."""
        if not self.arrows:
            return Path.trivial(self.quiver, self.vertex)  # type: ignore[arg-type]
        return Path(self.quiver, self.arrows)

    def __str__(self) -> str:
        if not self.arrows:
            return f"[e{self.vertex}]"
        return "[" + " ".join(self.arrows) + "]"

    def __repr__(self) -> str:
        return f"NecklaceWord({self})"


def _min_rotation(labels: tuple[str, ...]) -> tuple[str, ...]:
    return min(labels[i:] + labels[:i] for i in range(len(labels)))


class NecklaceSum(LinearCombination):
    """Rational combination of necklace words (an element of the trace quotient)."""

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scaled(other)
        return NotImplemented

    def __str__(self) -> str:
        return _format_sum(self, str)


def canonical_necklace(cycle: Path) -> NecklaceWord:
    """Necklace class of a closed path; rejects non-closed input."""
    if not cycle.is_cycle():
        raise ValueError(
            f"not a closed cycle: starts at {cycle.source}, ends at {cycle.target}"
        )
    if not cycle.arrows:
        return NecklaceWord.vertex_class(cycle.quiver, cycle.vertex)  # type: ignore[arg-type]
    return NecklaceWord(cycle.quiver, cycle.arrows)


def project_to_necklaces(x: PathSum) -> NecklaceSum:
    """Quotient map to necklaces: cycles keep their class, open paths die."""
    acc: dict[NecklaceWord, Fraction] = {}
    for path, coeff in x.terms():
        if not path.is_cycle():
            continue
        word = canonical_necklace(path)
        new = acc.get(word, Fraction(0)) + coeff
        if new:
            acc[word] = new
        else:
            acc.pop(word, None)
    result = NecklaceSum.__new__(NecklaceSum)
    result._terms = acc
    return result


def partial_derivative(w: NecklaceWord | NecklaceSum, label: str) -> PathSum:
    """Open a necklace at every occurrence of an arrow.

    Each occurrence contributes the complementary path, read in traversal
    order from the arrow's target back to its source; vertex classes have
    all partials zero.
    """
    if isinstance(w, NecklaceSum):
        total = PathSum.zero()
        for word, coeff in w.terms():
            total = total + coeff * partial_derivative(word, label)
        return total
    arr = w.quiver.arrow(label)
    if not w.arrows:
        return PathSum.zero()
    acc: dict[Path, Fraction] = {}
    labels = w.arrows
    for j, lab in enumerate(labels):
        if lab != label:
            continue
        complement = labels[j + 1 :] + labels[:j]
        if complement:
            path = Path(w.quiver, complement)
        else:
            path = Path.trivial(w.quiver, arr.target)
        acc[path] = acc.get(path, Fraction(0)) + 1
    return PathSum(acc)


def moment_element(q: Quiver) -> PathSum:
    """The element sum_a (a a* - a* a) of the doubled path algebra."""
    dq = q if isinstance(q, DoubleQuiver) else double(q)
    total = PathSum.zero()
    for arr in dq.base_arrows:
        a = Path.of_arrow(dq, arr.label)
        astar = Path.of_arrow(dq, dq.star(arr.label))
        total = total + compose(a, astar) - compose(astar, a)
    return total


class Derivation:
    """Vertex-fixing derivation of a doubled path algebra, given on arrows.

    The image of an arrow must run from that arrow's source to its target
    (as a sum of such paths); vertices map to zero and the extension to
    paths is by the Leibniz rule.
    """

    def __init__(self, quiver: DoubleQuiver, images: Mapping[str, PathSum]) -> None:
        if not isinstance(quiver, DoubleQuiver):
            raise ValueError("derivations are defined over a double quiver")
        self.quiver = quiver
        full: dict[str, PathSum] = {}
        for arr in quiver.arrows:
            image = images.get(arr.label, PathSum.zero())
            for path, _ in image.terms():
                if path.quiver != quiver:
                    raise ValueError("derivation image lives over a different quiver")
                if path.source != arr.source or path.target != arr.target:
                    raise ValueError(
                        f"image of {arr.label!r} must run {arr.source}->{arr.target}, "
                        f"got a path {path.source}->{path.target}"
                    )
            full[arr.label] = image
        unknown = set(images) - set(full)
        if unknown:
            raise ValueError(f"unknown arrow labels in derivation: {sorted(unknown)}")
        self.images = full

    def of_arrow(self, label: str) -> PathSum:
        self.quiver.arrow(label)
        return self.images[label]

    def __call__(self, x: Path | PathSum) -> PathSum:
        if isinstance(x, Path):
            if not x.arrows:
                return PathSum.zero()
            total = PathSum.zero()
            labels = x.arrows
            for j, lab in enumerate(labels):
                image = self.images[lab]
                if image.is_zero():
                    continue
                prefix = (
                    PathSum.of(Path(x.quiver, labels[:j]))
                    if j
                    else PathSum.of(Path.trivial(x.quiver, x.source))
                )
                suffix = (
                    PathSum.of(Path(x.quiver, labels[j + 1 :]))
                    if j + 1 < len(labels)
                    else PathSum.of(Path.trivial(x.quiver, x.target))
                )
                total = total + suffix * image * prefix
            return total
        total = PathSum.zero()
        for path, coeff in x.terms():
            total = total + coeff * self(path)
        return total

    def __eq__(self, other) -> bool:
        if not isinstance(other, Derivation):
            return NotImplemented
        return self.quiver == other.quiver and self.images == other.images

    def __add__(self, other: "Derivation") -> "Derivation":
        if not isinstance(other, Derivation):
            return NotImplemented
        if self.quiver != other.quiver:
            raise ValueError("derivations live over different quivers")
        return Derivation(
            self.quiver,
            {lab: self.images[lab] + other.images[lab] for lab in self.images},
        )

    def __neg__(self) -> "Derivation":
        return Derivation(self.quiver, {lab: -img for lab, img in self.images.items()})

    def __sub__(self, other: "Derivation") -> "Derivation":
        return self + (-other)

    def __rmul__(self, scalar) -> "Derivation":
        if isinstance(scalar, (int, Fraction)):
            return Derivation(
                self.quiver, {lab: scalar * img for lab, img in self.images.items()}
            )
        return NotImplemented

    def is_zero(self) -> bool:
        return all(img.is_zero() for img in self.images.values())

    def __repr__(self) -> str:
        parts = ", ".join(
            f"{lab} -> {img}" for lab, img in sorted(self.images.items()) if not img.is_zero()
        )
        return f"Derivation({parts or '0'})"


def zero_derivation(dq: DoubleQuiver) -> Derivation:
    return Derivation(dq, {})


def euler_derivation(dq: DoubleQuiver) -> Derivation:
    """The derivation fixing vertices and sending every arrow to itself."""
    return Derivation(dq, {a.label: PathSum.of(Path.of_arrow(dq, a.label)) for a in dq.arrows})


@lru_cache(maxsize=None)
def paths_of_length(q: Quiver, length: int) -> tuple[Path, ...]:
    """All paths of the given length, in deterministic label-lexicographic order."""
    if length < 0:
        raise ValueError("length must be nonnegative")
    if length == 0:
        return tuple(Path.trivial(q, v) for v in q.vertices)
    if length == 1:
        return tuple(Path.of_arrow(q, a.label) for a in sorted(q.arrows, key=lambda a: a.label))
    shorter = paths_of_length(q, length - 1)
    out = []
    for p in shorter:
        for arr in sorted(q.arrows, key=lambda a: a.label):
            if arr.source == p.target:
                out.append(Path(q, p.arrows + (arr.label,)))
    return tuple(sorted(out, key=lambda p: p.arrows))


def paths_between(q: Quiver, source: int, target: int, length: int) -> tuple[Path, ...]:
    return tuple(
        p for p in paths_of_length(q, length) if p.source == source and p.target == target
    )


def necklaces_of_length(q: Quiver, length: int) -> tuple[NecklaceWord, ...]:
    """All necklace classes of the given length, deduplicated and sorted."""
    if length == 0:
        return tuple(NecklaceWord.vertex_class(q, v) for v in q.vertices)
    classes = {
        canonical_necklace(p) for p in paths_of_length(q, length) if p.is_cycle()
    }
    return tuple(sorted(classes, key=lambda w: w.arrows))


def _format_sum(x: LinearCombination, key_str) -> str:
    if x.is_zero():
        return "0"
    parts = []
    for key, coeff in sorted(x.terms(), key=lambda kv: str(kv[0])):
        body = key_str(key)
        if coeff == 1:
            text = body
        elif coeff == -1:
            text = f"-{body}"
        else:
            text = f"{coeff} {body}"
        parts.append(text)
    return " + ".join(parts).replace("+ -", "- ")
