"""Which (dimension vector, weight) pairs give coadjoint orbits.

The quotient variety of semisimple representations of the deformed
preprojective algebra at weight lambda is a coadjoint orbit of the necklace
Lie algebra exactly when the dimension vector is a minimal nonzero member
of the strict-inequality set.  This demo walks the classification for the
particle phase space and for the Kleinian singularity of the affine
two-cycle quiver.
"""
from fractions import Fraction

from necklacekit import (
    Arrow,
    Quiver,
    classify,
    delta_lambda,
    local_quiver,
    rep_types,
    sigma_membership,
    slice_smooth_check,
    two_alpha_nonsmooth,
)

q = Quiver(2, (Arrow("a", 1, 2), Arrow("b", 2, 2)))
lam = (Fraction(-2), Fraction(1))

print("hyperplane roots up to (3,6):", delta_lambda(q, lam, (3, 6)))
for alpha in ((1, 2), (2, 4), (3, 6)):
    report = classify(q, alpha, lam)
    print(f"\nalpha = {alpha}:")
    print(f"  in Sigma: {report.membership.in_sigma}")
    print(f"  coadjoint: {report.verdict.coadjoint} ({report.verdict.reason})")
    if report.verdict.dim_fiber is not None:
        print(f"  fiber dim {report.verdict.dim_fiber}, quotient dim {report.verdict.dim_quotient}")
    for tr in report.types:
        print("  type:", "; ".join(f"{m} x {tuple(b)}" for m, b in tr.rep_type))

# At (1,2) the quotient is the phase space of two particles (dimension 4);
# at (2,4) the doubled simple forces a singular representation scheme:
check = two_alpha_nonsmooth(q, (1, 2), lam)
print(f"\ndoubled simple count: {check.lhs} vs {check.rhs} -> not smooth")

# The affine two-cycle at the zero weight: the isotropic vector delta has
# two semisimple types, and only the simple one sits in the smooth locus --
# the quotient surface has one isolated singular point.
affine = Quiver(2, (Arrow("a", 1, 2), Arrow("b", 2, 1)))
zero = (Fraction(0), Fraction(0))
delta = (1, 1)
print("\naffine two-cycle, alpha = (1,1), weight 0:")
for rep_type in rep_types(affine, delta, zero):
    check = slice_smooth_check(affine, rep_type, delta, zero)
    setting = local_quiver(affine, rep_type)
    parts = "; ".join(f"{m} x {tuple(b)}" for m, b in rep_type)
    print(
        f"  type ({parts}): slice {check.lhs} vs {check.rhs} -> "
        f"{'smooth' if check.smooth else 'singular point'}; "
        f"local quiver has {len(setting.quiver.arrows)} arrows on {setting.quiver.vertex_count} vertices"
    )

# Unit vectors are always strict members wherever they meet the hyperplane:
print("\n(1,0) strict member at weight 0:", sigma_membership(q, (1, 0), zero).in_sigma)
