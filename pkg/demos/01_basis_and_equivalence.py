# %% [markdown]
# # Natural basis and equivalence decisions
#
# Frequencies are written as rational vectors over declared generators, here
# 1 and sqrt(2). Everything below is exact until we evaluate a sum.

# %%
from fractions import Fraction as F

from bohrequiv import (
    ExponentSet,
    ExponentialSum,
    GroundGeneratorSet,
    decide_equiv,
    decide_equiv_prop1_all_n,
    natural_basis,
)

gens = GroundGeneratorSet((("1", "1"), ("sqrt2", "1.41421356237309504880168872420969807857")))
exps = ExponentSet.from_coords(gens, [(2, 0), (3, 0), (0, 1), (F(1, 2), 1)])

# %%
# greedy left-to-right basis: 2 and sqrt2; 3 = (3/2)*2 and 1/2 + sqrt2 = (1/4)*2 + sqrt2
b = natural_basis(exps)
print("basis indices:", b.basis_indices)
for fr, r, d in zip(exps, b.coord_matrix, b.row_denominators):
    print(f"  {fr.value:8.5f}  coords {[str(c) for c in r]}  d = {d}")

# %% [markdown]
# Two sums are equivalent when every coefficient turns by the phase of one
# additive map on the frequencies. The decision returns a certificate or an
# integer witness.

# %%
f1 = ExponentialSum.from_polar(exps, [(1, 0), (2, 0), (1, 0), (F(1, 3), 0)])
f2 = ExponentialSum.from_polar(exps, [(1, F(1, 2)), (2, F(3, 4)), (1, F(1, 8)), (F(1, 3), F(1, 4))])
v = decide_equiv(f1, f2)
print(v.equivalent, v.x0_turns, v.shift, v.residues)

# %%
# change one phase: the 3 = (3/2)*2 row can no longer follow
f3 = ExponentialSum.from_polar(exps, [(1, F(1, 2)), (2, F(1, 2)), (1, F(1, 8)), (F(1, 3), F(1, 4))])
v = decide_equiv(f1, f3)
print(v.equivalent, v.reason, "witness", v.witness)

# %% [markdown]
# Per-row residues are not free. With frequencies 1, 1/2 and 3/2 the last two
# rows have denominator 2, but one integer shift moves both together, so
# flipping only the middle sign is *not* an equivalence.

# %%
g1 = GroundGeneratorSet((("1", "1"),))
halves = ExponentSet.from_coords(g1, [(1,), (F(1, 2),), (F(3, 2),)])
a = ExponentialSum.from_polar(halves, [(1, 0)] * 3)
c = ExponentialSum.from_polar(halves, [(1, 0), (1, F(1, 2)), (1, 0)])
print("decide_equiv:", decide_equiv(a, c).witness)
print("truncation oracle fails at n =", decide_equiv_prop1_all_n(a, c).failing_n)
