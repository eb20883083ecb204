"""
Complex mass functions
======================

A complex basic belief assignment (CBBA) gives every proposition a complex
mass. The masses must sum to exactly ``1 + 0i`` and each must lie in the
unit disk. The magnitude of a mass says how strongly the evidence supports
the proposition. The phase carries extra information that the real theory
cannot express.
"""
import math

from gds import Complex, Frame, Polar, bel_c, focal_elements, from_polar, pl_c, powerset, to_polar, validate_cbba

# %%
# Frames and propositions
# -----------------------
# Propositions are bitmasks over an ordered frame. The power set is enumerated
# in ascending bitmask order, empty set first.
frame = Frame(["A", "B"])
print([str(p) for p in powerset(frame)])

# %%
# Building a CBBA
# ---------------
# Masses may be given in rectangular or polar form. Polar phases use the
# full-plane arctangent, so a mass with a negative real part keeps its
# quadrant.
A, B, AB = frame.proposition("A"), frame.proposition("B"), frame.omega
m = validate_cbba(
    {
        A: from_polar(Polar(0.2031, math.atan(-1.7678))),
        B: from_polar(Polar(0.7842, math.atan(0.5051))),
        AB: from_polar(Polar(0.2669, math.atan(-0.8839))),
    },
    frame,
    tol=1e-3,  # the magnitudes above are rounded to 4 decimals
)
for p, v in focal_elements(m):
    print(f"M({p}) = {v.re:+.4f}{v.im:+.4f}i   |M| = {abs(v):.4f}  phase = {v.phase:+.4f}")
print("sum:", m.total())

print(to_polar(Complex(-0.0010, 0.1634)))

# %%
# Belief and plausibility
# -----------------------
# Both are sums of mass *magnitudes*. Since magnitudes need not sum to one,
# ``Bel_c`` of the whole frame can exceed 1.
for p in powerset(frame):
    print(f"{str(p):>4}: Bel_c = {bel_c(m, p):.4f}  Pl_c = {pl_c(m, p):.4f}")
