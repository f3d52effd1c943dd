"""Classification of (dimension vector, weight) pairs for deformed
preprojective algebras: roots on the weight hyperplane, the flatness and
simple-representation sets cut out by the p-value inequalities, minimality
and the coadjoint-orbit verdict, representation types, local quivers from
Ext^1 counts, and the Luna-slice smoothness checks.

Membership conventions:

* decompositions always have at least two parts; a one-part "decomposition"
  would make the strict inequality vacuously false for every vector and
  empty the simple-representation set;
* membership additionally requires the vector itself to be a positive root
  with zero pairing against the weight, which is forced on representations
  by the trace of the deformed relation;
* "minimal" is with respect to the componentwise partial order.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .quiver import (
    Arrow,
    DimVector,
    Quiver,
    Weight,
    as_dim_vector,
    as_weight,
    bilinear,
    componentwise_leq,
    componentwise_lt,
    euler_form,
    num_parameters,
    tits_form,
    weight_pairing,
)
from .roots import ENTRY_CAP, RootClass, box_vectors, classify_root

Decomposition = tuple[tuple[DimVector, int], ...]
"""Multiset of (part, multiplicity) pairs, parts in descending lex order."""

RepType = tuple[tuple[int, DimVector], ...]
"""Semisimple type: (multiplicity, dimension vector) pairs, parts descending."""


def _check_entry_cap(alpha: Sequence[int], entry_cap: int) -> None:
    if any(a > entry_cap for a in alpha):
        raise ValueError(f"dimension vector {tuple(alpha)} exceeds the entry cap {entry_cap}")


def delta_lambda(
    q: Quiver,
    lam: Sequence,
    bound: Sequence[int],
    *,
    entry_cap: int = ENTRY_CAP,
) -> list[DimVector]:
    """Positive roots beta <= bound with exact pairing lambda . beta = 0."""
    lam = as_weight(q, lam)
    bound = as_dim_vector(q, bound)
    _check_entry_cap(bound, entry_cap)
    out = []
    for vec in box_vectors(bound):
        if weight_pairing(lam, vec) != 0:
            continue
        if classify_root(q, vec).is_root:
            out.append(vec)
    return out


def decompositions(
    q: Quiver,
    alpha: Sequence[int],
    lam: Sequence,
    *,
    entry_cap: int = ENTRY_CAP,
) -> Iterator[Decomposition]:
    """All ways to write alpha as a sum of at least two hyperplane roots.

    Parts are drawn from the roots beta < alpha with lambda . beta = 0;
    multisets are produced once each, by non-increasing selection over the
    descending-lex ordering of the candidate parts.
    """
    alpha = as_dim_vector(q, alpha)
    _check_entry_cap(alpha, entry_cap)
    parts = [
        beta
        for beta in delta_lambda(q, lam, alpha, entry_cap=entry_cap)
        if componentwise_lt(beta, alpha)
    ]
    parts.sort(reverse=True)
    yield from _sum_multisets(parts, alpha, minimum_parts=2)


def _sum_multisets(
    parts: list[DimVector], target: DimVector, *, minimum_parts: int
) -> Iterator[tuple[tuple[DimVector, int], ...]]:
    k = len(target)

    def rec(idx: int, remaining: tuple[int, ...], count: int, acc: list):
        if all(r == 0 for r in remaining):
            if count >= minimum_parts:
                yield tuple(acc)
            return
        if idx >= len(parts):
            return
        beta = parts[idx]
        top = min(
            (remaining[i] // beta[i] for i in range(k) if beta[i] > 0), default=0
        )
        for mult in range(top, -1, -1):
            if mult:
                rest = tuple(remaining[i] - mult * beta[i] for i in range(k))
                if any(r < 0 for r in rest):
                    continue
                acc.append((beta, mult))
                yield from rec(idx + 1, rest, count + mult, acc)
                acc.pop()
            else:
                yield from rec(idx + 1, remaining, count, acc)

    yield from rec(0, target, 0, [])


def parameter_sum(q: Quiver, decomposition: Decomposition) -> int:
    """Sum of multiplicity-weighted p-values over the parts."""
    return sum(mult * num_parameters(q, beta) for beta, mult in decomposition)


@dataclass(frozen=True)
class SigmaMembership:
    """Verdict for the weak (flatness) and strict (simple) inequalities.

    When a verdict is negative the witness is a decomposition realizing the
    failure; when the vector is not a hyperplane root both verdicts are
    False and ``reason`` says why.
    """

    alpha: DimVector
    in_s: bool
    in_sigma: bool
    root_class: RootClass | None = None
    on_hyperplane: bool = True
    p_alpha: int | None = None
    witness_s: Decomposition | None = None
    witness_sigma: Decomposition | None = None
    reason: str = ""


def sigma_membership(
    q: Quiver,
    alpha: Sequence[int],
    lam: Sequence,
    *,
    entry_cap: int = ENTRY_CAP,
) -> SigmaMembership:
    """Test the defining inequalities over every decomposition of alpha."""
    alpha = as_dim_vector(q, alpha)
    lam = as_weight(q, lam)
    _check_entry_cap(alpha, entry_cap)
    if all(a == 0 for a in alpha):
        return SigmaMembership(alpha, False, False, None, True, None, reason="zero vector")
    root_class = classify_root(q, alpha)
    on_hyperplane = weight_pairing(lam, alpha) == 0
    if not root_class.is_root or not on_hyperplane:
        reason = "not a root" if not root_class.is_root else "nonzero pairing with the weight"
        return SigmaMembership(
            alpha, False, False, root_class, on_hyperplane, None, reason=reason
        )
    p_alpha = num_parameters(q, alpha)
    in_s, in_sigma = True, True
    witness_s = witness_sigma = None
    worst = None
    worst_sum = None
    for decomposition in decompositions(q, alpha, lam, entry_cap=entry_cap):
        total = parameter_sum(q, decomposition)
        if worst_sum is None or total > worst_sum:
            worst, worst_sum = decomposition, total
    if worst_sum is not None:
        if p_alpha < worst_sum:
            in_s, witness_s = False, worst
        if p_alpha <= worst_sum:
            in_sigma, witness_sigma = False, worst
    return SigmaMembership(
        alpha,
        in_s,
        in_sigma,
        root_class,
        on_hyperplane,
        p_alpha,
        witness_s,
        witness_sigma,
    )


def minimal_in_sigma(
    q: Quiver,
    alpha: Sequence[int],
    lam: Sequence,
    *,
    entry_cap: int = ENTRY_CAP,
) -> tuple[bool, DimVector | None]:
    """Whether no strictly smaller nonzero vector satisfies the strict inequalities."""
    alpha = as_dim_vector(q, alpha)
    if not sigma_membership(q, alpha, lam, entry_cap=entry_cap).in_sigma:
        raise ValueError(f"{alpha} does not satisfy the strict inequalities")
    for beta in box_vectors(alpha):
        if not componentwise_lt(beta, alpha):
            continue
        if sigma_membership(q, beta, lam, entry_cap=entry_cap).in_sigma:
            return False, beta
    return True, None


@dataclass(frozen=True)
class CoadjointVerdict:
    alpha: DimVector
    coadjoint: bool
    reason: str
    membership: SigmaMembership
    minimal: bool | None = None
    minimal_witness: DimVector | None = None
    dim_fiber: int | None = None
    dim_quotient: int | None = None


def coadjoint_verdict(
    q: Quiver,
    alpha: Sequence[int],
    lam: Sequence,
    *,
    entry_cap: int = ENTRY_CAP,
) -> CoadjointVerdict:
    """Coadjoint-orbit test: strict membership plus componentwise minimality.

    When the vector satisfies the strict inequalities the verdict carries
    the fiber dimension 1 + alpha.alpha - 2 chi(alpha, alpha) and the
    quotient dimension 2 - T(alpha, alpha).
    """
    alpha = as_dim_vector(q, alpha)
    membership = sigma_membership(q, alpha, lam, entry_cap=entry_cap)
    if not membership.in_sigma:
        reason = membership.reason or "strict inequality fails"
        return CoadjointVerdict(alpha, False, reason, membership)
    chi = euler_form(q)
    t_matrix = tits_form(q)
    dot = sum(a * a for a in alpha)
    dim_fiber = 1 + dot - 2 * bilinear(chi, alpha, alpha)
    dim_quotient = 2 - bilinear(t_matrix, alpha, alpha)
    minimal, witness = minimal_in_sigma(q, alpha, lam, entry_cap=entry_cap)
    if not minimal:
        return CoadjointVerdict(
            alpha,
            False,
            f"not minimal: {witness} is a smaller member",
            membership,
            minimal,
            witness,
            dim_fiber,
            dim_quotient,
        )
    return CoadjointVerdict(
        alpha, True, "minimal member", membership, True, None, dim_fiber, dim_quotient
    )


def rep_types(
    q: Quiver,
    alpha: Sequence[int],
    lam: Sequence,
    *,
    entry_cap: int = ENTRY_CAP,
) -> list[RepType]:
    """All semisimple types: multisets of strict members summing to alpha."""
    alpha = as_dim_vector(q, alpha)
    _check_entry_cap(alpha, entry_cap)
    simples = [
        beta
        for beta in box_vectors(alpha)
        if componentwise_leq(beta, alpha)
        and sigma_membership(q, beta, lam, entry_cap=entry_cap).in_sigma
    ]
    simples.sort(reverse=True)
    out = []
    for multiset in _sum_multisets(simples, alpha, minimum_parts=1):
        out.append(tuple((mult, beta) for beta, mult in multiset))
    return out


def ext1_dim(q: Quiver, beta_i: Sequence[int], beta_j: Sequence[int], same_simple: bool) -> int:
    """Ext^1 dimension between simple modules from their dimension vectors:
    2 - T(b, b) for a simple against itself, -T(b_i, b_j) for distinct ones."""
    t_matrix = tits_form(q)
    value = bilinear(t_matrix, beta_i, beta_j)
    count = 2 - value if same_simple else -value
    if count < 0:
        raise ValueError(
            f"negative self-extension count {count}; {tuple(beta_i)}, {tuple(beta_j)} "
            "are not dimension vectors of distinct simples"
        )
    return count


@dataclass(frozen=True)
class LocalQuiverSetting:
    """Quiver on the simple factors with Ext^1 counts as arrow multiplicities."""

    quiver: Quiver
    dim_vector: DimVector
    ext_matrix: tuple[tuple[int, ...], ...]


def local_quiver(q: Quiver, rep_type: RepType) -> LocalQuiverSetting:
    """Assemble the local quiver of a semisimple type from the Ext^1 counts."""
    z = len(rep_type)
    ext = [[0] * z for _ in range(z)]
    for i in range(z):
        for j in range(z):
            ext[i][j] = ext1_dim(q, rep_type[i][1], rep_type[j][1], same_simple=(i == j))
    arrows = []
    for i in range(z):
        for j in range(z):
            for m in range(ext[i][j]):
                arrows.append(Arrow(f"u{i + 1}_{j + 1}_{m + 1}", i + 1, j + 1))
    local = Quiver(z, tuple(arrows))
    dim_vector = tuple(mult for mult, _ in rep_type)
    return LocalQuiverSetting(local, dim_vector, tuple(tuple(row) for row in ext))


@dataclass(frozen=True)
class SliceCheck:
    smooth: bool
    lhs: int
    rhs: int


def slice_smooth_check(
    q: Quiver,
    rep_type: RepType,
    alpha: Sequence[int],
    lam: Sequence,
) -> SliceCheck:
    """Luna-slice dimension count for the undeformed algebra.

    Compares alpha.alpha + sum(e_i^2) - T(alpha, alpha) against
    alpha.alpha + 1 - T(alpha, alpha); the slice is smooth exactly when the
    multiplicity vector is a single 1.  The right-hand side equals the
    dimension of the representation scheme only when alpha satisfies the
    weak inequalities; the counts themselves are defined regardless.
    """
    alpha = as_dim_vector(q, alpha)
    lam = as_weight(q, lam)
    if any(l != 0 for l in lam):
        raise ValueError("the slice count applies to the zero weight only")
    total = [0] * q.vertex_count
    for mult, beta in rep_type:
        for i, b in enumerate(beta):
            total[i] += mult * b
    if tuple(total) != alpha:
        raise ValueError(f"type sums to {tuple(total)}, not {alpha}")
    dot = sum(a * a for a in alpha)
    t_value = bilinear(tits_form(q), alpha, alpha)
    lhs = dot + sum(mult * mult for mult, _ in rep_type) - t_value
    rhs = dot + 1 - t_value
    return SliceCheck(lhs == rhs, lhs, rhs)


@dataclass(frozen=True)
class TwoAlphaCheck:
    applies: bool
    alpha: DimVector
    lhs: int | None = None
    rhs: int | None = None
    smooth: bool | None = None
    reason: str = ""


def two_alpha_nonsmooth(
    q: Quiver,
    alpha: Sequence[int],
    lam: Sequence,
    *,
    entry_cap: int = ENTRY_CAP,
) -> TwoAlphaCheck:
    """Slice count at a squared simple: 4 a.a + 4 - 4 T(a,a) vs 4 a.a + 1 - 4 T(a,a).

    Applies when both alpha and 2 alpha satisfy the strict inequalities; the
    two counts always differ by 3, so the doubled representation space is
    never smooth there.
    """
    alpha = as_dim_vector(q, alpha)
    double_alpha = tuple(2 * a for a in alpha)
    if not sigma_membership(q, alpha, lam, entry_cap=entry_cap).in_sigma:
        return TwoAlphaCheck(False, alpha, reason=f"{alpha} fails the strict inequalities")
    if not sigma_membership(q, double_alpha, lam, entry_cap=entry_cap).in_sigma:
        return TwoAlphaCheck(
            False, alpha, reason=f"{double_alpha} fails the strict inequalities"
        )
    dot = sum(a * a for a in alpha)
    t_value = bilinear(tits_form(q), alpha, alpha)
    lhs = 4 * dot + 4 - 4 * t_value
    rhs = 4 * dot + 1 - 4 * t_value
    return TwoAlphaCheck(True, alpha, lhs, rhs, lhs == rhs)


@dataclass(frozen=True)
class TypeReport:
    rep_type: RepType
    local: LocalQuiverSetting
    slice_check: SliceCheck | None


@dataclass(frozen=True)
class ClassifyReport:
    """Full verdict sheet for one (dimension vector, weight) pair."""

    quiver: Quiver
    alpha: DimVector
    lam: Weight
    root_class: RootClass
    on_hyperplane: bool
    delta_sample: tuple[DimVector, ...]
    membership: SigmaMembership
    verdict: CoadjointVerdict
    types: tuple[TypeReport, ...]
    two_alpha: TwoAlphaCheck | None


def classify(
    q: Quiver,
    alpha: Sequence[int],
    lam: Sequence,
    *,
    entry_cap: int = ENTRY_CAP,
) -> ClassifyReport:
    """Run the whole classification pipeline for one (alpha, lambda) pair."""
    alpha = as_dim_vector(q, alpha)
    lam = as_weight(q, lam)
    root_class = classify_root(q, alpha)
    membership = sigma_membership(q, alpha, lam, entry_cap=entry_cap)
    verdict = coadjoint_verdict(q, alpha, lam, entry_cap=entry_cap)
    delta_sample = tuple(delta_lambda(q, lam, alpha, entry_cap=entry_cap))
    zero_weight = all(l == 0 for l in lam)
    reports = []
    for rep_type in rep_types(q, alpha, lam, entry_cap=entry_cap):
        slice_check = None
        if zero_weight:
            slice_check = slice_smooth_check(q, rep_type, alpha, lam)
        reports.append(TypeReport(rep_type, local_quiver(q, rep_type), slice_check))
    two_alpha = None
    if all(a % 2 == 0 for a in alpha) and any(alpha):
        half = tuple(a // 2 for a in alpha)
        check = two_alpha_nonsmooth(q, half, lam, entry_cap=entry_cap)
        if check.applies:
            two_alpha = check
    return ClassifyReport(
        q,
        alpha,
        lam,
        root_class,
        membership.on_hyperplane,
        delta_sample,
        membership,
        verdict,
        tuple(reports),
        two_alpha,
    )
