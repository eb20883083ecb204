"""
Generalized Dempster combination
================================

Two CBBAs are combined by multiplying masses pairwise and sending each
product to the intersection of the two propositions. The products that land
on the empty set add up to the complex conflict coefficient ``K``, and the
rest is divided by ``1 - K``. The rule works for any ``K != 1``, including
``|K| > 1``.
"""
from pathlib import Path

from gds import classical_combine, combine, conflict, focal_elements, lift, parse_evidence
from gds.mass import Bba

HERE = Path(__file__).parent if "__file__" in globals() else Path("demos")

# %%
# Two complex bodies of evidence
# ------------------------------
frame, bodies = parse_evidence(HERE / "evidence" / "example1.json", tol=1e-3)
m1, m2 = bodies["m1"], bodies["m2"]
report = conflict(m1, m2)
print(f"K = {report.k.re:+.4f}{report.k.im:+.4f}i, |K| = {report.k_magnitude:.4f}")

fused = combine(m1, m2)
for p, v in focal_elements(fused):
    print(f"M({p}) = {v.re:+.4f}{v.im:+.4f}i  (|M| = {abs(v):.4f})")
print("sum:", fused.total())

# %%
# The order of the bodies does not matter.
print("commutative:", combine(m2, m1).is_close(fused, 1e-12))

# %%
# Real masses reduce to the classical rule
# ----------------------------------------
# With zero phases everywhere and ``K < 1``, the generalized rule gives the
# classical Dempster result.
frame3, real = parse_evidence(HERE / "evidence" / "example3.json")
b1, b2 = (Bba(frame3, tuple(v.re for v in real[k].values)) for k in ("m1", "m2"))
classical = classical_combine(b1, b2)
generalized = combine(lift(b1), lift(b2))
print("K =", conflict(lift(b1), lift(b2)).k)
for p, x in classical.items():
    print(f"m({p}) = {x:.4f}   M({p}) = {generalized[p]}")
