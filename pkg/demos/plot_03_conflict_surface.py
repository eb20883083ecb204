"""
Conflict surface of a CBBA family
=================================

``M1(A) = x + yi`` and ``M1(B) = (1 - x) - yi`` always sum to one. The pair
is a valid CBBA only where both magnitudes are at most 1. That region is the
lens where the unit disks around (0, 0) and (1, 0) overlap. Here ``|K|``
against ``M2(A) = 0.5 + 0.5i``, ``M2(B) = 0.5 - 0.5i`` is tabulated over
that lens.
"""
import numpy as np

from gds import conflict, default_m2, m1_of, sweep_grid, write_csv
from gds.sweep import SweepSpec

grid = sweep_grid(SweepSpec(201, 401))
print("grid:", grid.k.shape, "feasible cells:", int(grid.feasible.sum()))

# %%
# Notable points. ``|K|`` vanishes at (0.5, -0.5) and exceeds 1 near the top
# of the lens, where the classical rule would not apply at all.
for x, y in [(1.0, 0.0), (0.0, 0.0), (0.5, -0.8660), (0.5, -0.5), (0.5, 0.8660)]:
    print(f"x={x:<4} y={y:<7} |K| = {conflict(m1_of(x, y), default_m2()).k_magnitude:.4f}")

i, j = np.unravel_index(np.nanargmax(grid.k), grid.k.shape)
print(f"max |K| on grid: {grid.k[i, j]:.4f} at ({grid.xs[i]:.3f}, {grid.ys[j]:.3f})")

# %%
# The surface is symmetric under ``x -> 1 - x``.
print("mirror symmetric:", np.allclose(grid.k, grid.k[::-1], equal_nan=True))

# %%
# Export for plotting, or draw it directly when matplotlib is around.
csv_text = write_csv(grid.cells())
print(csv_text.splitlines()[:3])

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    X, Y = np.meshgrid(grid.xs, grid.ys, indexing="ij")
    fig, ax = plt.subplots(figsize=(5, 6))
    cs = ax.contourf(X, Y, grid.k, levels=30)
    fig.colorbar(cs, label="|K|")
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    ax.set_aspect("equal")
    fig.savefig("conflict_surface.png", dpi=120)
