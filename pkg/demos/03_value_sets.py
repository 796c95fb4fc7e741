# %% [markdown]
# # Value sets on vertical lines
#
# For f(s) = e^s + e^{sqrt2 s} the values on Re s = 0 fill the disk |w| <= 2.
# The auxiliary function over the torus gives that closure directly.

# %%
import os
import tempfile
from fractions import Fraction as F

import numpy as np

from bohrequiv import (
    ExponentSet,
    ExponentialSum,
    GroundGeneratorSet,
    directed_hausdorff,
    generate_member,
    sample_line,
    sample_torus,
    verify_theorem1,
)

gens = GroundGeneratorSet((("1", "1"), ("sqrt2", "1.41421356237309504880168872420969807857")))
f = ExponentialSum.from_polar(ExponentSet.from_coords(gens, [(1, 0), (0, 1)]), [(1, 0), (1, 0)])

torus = sample_torus(f, 0.0, 120)
print("torus points", len(torus), "max |w|", np.abs(torus.points).max())

# %%
# longer stretches of the line creep closer to every torus value
for t_max in (50, 200, 800):
    line = sample_line(f, 0.0, t_max, 0.01)
    print(t_max, "line->torus %.4f" % directed_hausdorff(line, torus),
          "torus->line %.4f" % directed_hausdorff(torus, line))

# %%
g = generate_member(f, (F(3, 10), F(77, 100)))
rep = verify_theorem1(f, g, -0.1, 0.1, 3, 800.0, 0.01, 0.05)
print({k: rep[k] for k in ("d_12", "d_21", "pass")})

# %%
out = os.path.join(tempfile.mkdtemp(), "torus.csv")
with open(out, "w") as fh:
    torus.to_csv(fh)
print("wrote", out)
