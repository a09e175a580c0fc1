"""
Bandlimited functions that are integers at every integer.

Dividing sin(pi t) by a scaled polynomial with integer roots gives a
function whose only nonzero integer samples sit at the roots. Scaling by
the lcm of the pairwise root-distance products makes those samples integers.
The same function is also a finite sinc series with those integers as
coefficients.
"""

import numpy as np

from latticefn import (SincSeries, build_rooted_sinc, eval_rooted_sinc, root_values,
                       verify_sinc_identity)
from latticefn.plotting import emit_plot_csv, lattice_crossings

roots = [-1, 2, -3]
f = build_rooted_sinc(roots)
print("roots", roots, "products", list(f.products), "-> 1/a =", f.inv_a)
print("root values with a = 1:", [str(v) for v in root_values(roots, 1)])
print("root values with 1/a = 30:", {r: int(v) for r, v in f.exact_root_values().items()})

n = np.arange(-6, 7)
print("integer samples:", dict(zip(n.tolist(), np.round(eval_rooted_sinc(f, n)).astype(int).tolist())))

grid = np.linspace(-20, 20, 10_001)
print("max |sinc series - rooted sinc| on [-20, 20]:", verify_sinc_identity(roots, 1, grid))

g = SincSeries({-1: 6, 2: 5, -3: 1})
t = np.round(np.linspace(-6, 6, 121), 12)
table = {"t": t, "rooted_sinc": f(t), "sinc_series": g(t)}
print("lattice crossings of g:", lattice_crossings(t, table["sinc_series"])[:6], "...")
print(emit_plot_csv({"t": t[::30], "f": table["rooted_sinc"][::30]}))
