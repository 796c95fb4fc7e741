# %% [markdown]
# # Sum documents and the command line
#
# Sums travel as JSON with rationals as "p/q" strings. The same files drive
# the `bohrequiv` command.

# %%
import json
import os
import tempfile

from bohrequiv import load_sum, serialize_sum
from bohrequiv.cli import main

doc = {
    "generators": [{"symbol": "1", "value": "1"}],
    "frequencies": [["1"], ["2"]],
    "coefficients": [{"modulus": "1", "phase_turns": "0"}, {"modulus": "1", "phase_turns": "0"}],
}
work = tempfile.mkdtemp()
a = os.path.join(work, "a.json")
with open(a, "w") as fh:
    json.dump(doc, fh)

f = load_sum(a)
print(serialize_sum(f)["coefficients"])

# %%
doc["coefficients"][0]["phase_turns"] = "1/4"
b = os.path.join(work, "b.json")
with open(b, "w") as fh:
    json.dump(doc, fh)

# exit code 1: not equivalent, witness (2, -1)
print("exit", main(["equiv", a, b, "--oracle"]))

# %%
print("exit", main(["generate", a, "--seed", "2024", "--out", os.path.join(work, "c.json")]))
print("exit", main(["equiv", a, os.path.join(work, "c.json")]))
