# %% [markdown]
# # Walking around an equivalence class
#
# `generate_member` turns parameters in [0, 1)^m plus a residue tuple into a
# new sum of the same class. Residue tuples must come from one integer shift.

# %%
from fractions import Fraction as F

import numpy as np

from bohrequiv import (
    ExponentSet,
    ExponentialSum,
    GroundGeneratorSet,
    admissible_residues,
    decide_equiv,
    evaluate_many,
    generate_member,
    natural_basis,
    translation_parameters,
)
from bohrequiv.errors import InadmissibleResidues

gens = GroundGeneratorSet((("1", "1"), ("sqrt2", "1.41421356237309504880168872420969807857")))
exps = ExponentSet.from_coords(gens, [(1, 0), (F(1, 2), 0), (0, 1), (F(1, 3), F(2, 3))])
f = ExponentialSum.from_polar(exps, [(1, 0), (F(1, 2), 0), (1, F(1, 4)), (F(1, 5), 0)])
b = natural_basis(exps)
group = admissible_residues(b.coord_matrix)
print("row denominators", b.row_denominators, "->", len(group), "admissible tuples of",
      np.prod(b.row_denominators))

# %%
rng = np.random.default_rng(0)
for _ in range(5):
    x = tuple(F(int(v), 97) for v in rng.integers(0, 97, b.dim))
    k = group[rng.integers(len(group))]
    g = generate_member(f, x, k)
    v = decide_equiv(f, g)
    print(k, v.equivalent, v.x0_turns == x)

# %%
try:
    generate_member(f, (0, 0), (0, 1, 0, 0))
except InadmissibleResidues as err:
    print("refused:", err)

# %% [markdown]
# A vertical translate f(s + i t0) belongs to the class. Reducing t0 g / 2pi
# mod 1 drops an integer part, which reappears in the residues.

# %%
t0 = 12.5
x, k = translation_parameters(b, t0)
g = generate_member(f, x, k)
t = np.linspace(-50, 50, 2001)
print("residues", k, "max error", np.max(np.abs(evaluate_many(g, 0.0, t) - evaluate_many(f, 0.0, t + t0))))
