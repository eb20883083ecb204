import itertools
import math
from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st

from gds import Complex, Frame, Proposition, powerset, validate_bba, validate_cbba

REPO = Path(__file__).resolve().parents[1]
EVIDENCE = REPO / "demos" / "evidence"

FRAMES = {n: Frame("ABCD"[:n]) for n in (1, 2, 3, 4)}

seeds = st.integers(min_value=0, max_value=2**32 - 1)
frame_sizes = st.sampled_from([2, 3, 4])


def tan_polar(r, tan_phase):
    """A mass written in the ``r e^{i arctan(t)}`` notation."""
    t = math.atan(tan_phase)
    return Complex(r * math.cos(t), r * math.sin(t))


@pytest.fixture
def ab():
    return FRAMES[2]


@pytest.fixture
def example1(ab):
    """The two 4-decimal reference CBBAs; they normalize only to ~1e-4."""
    A, B, AB = ab.proposition("A"), ab.proposition("B"), ab.omega
    m1 = validate_cbba(
        {A: tan_polar(0.2031, -1.7678), B: tan_polar(0.7842, 0.5051), AB: tan_polar(0.2669, -0.8839)},
        ab,
        tol=1e-3,
    )
    m2 = validate_cbba(
        {A: tan_polar(0.3606, 3.4641), B: tan_polar(0.6245, 0.2887), AB: tan_polar(0.6000, -1.7321)},
        ab,
        tol=1e-3,
    )
    return m1, m2


@pytest.fixture
def example3(ab):
    A, B = ab.proposition("A"), ab.proposition("B")
    return validate_bba({A: 0.8, B: 0.2}, ab), validate_bba({A: 0.9, B: 0.1}, ab)


def _focal_weights(rng, frame):
    n = frame.n_propositions
    k = int(rng.integers(1, n))
    focal = rng.choice(np.arange(1, n), size=k, replace=False)
    return focal, rng.dirichlet(np.ones(k))


def random_cbba(rng, frame):
    """Random valid CBBA: Dirichlet real parts plus a zero-sum complex
    perturbation shrunk until every magnitude is at most 1."""
    focal, w = _focal_weights(rng, frame)
    z = w.astype(complex)
    if len(focal) > 1:
        pert = rng.normal(size=len(focal)) + 1j * rng.normal(size=len(focal))
        pert -= pert.mean()
        scale = rng.uniform(0.0, 1.0)
        z = w + scale * pert
        while np.any(np.abs(z) > 1.0):
            scale /= 2
            z = w + scale * pert
    return validate_cbba({frame_prop(frame, b): complex(v) for b, v in zip(focal, z)}, frame)


def random_bba(rng, frame):
    focal, w = _focal_weights(rng, frame)
    return validate_bba({frame_prop(frame, b): float(v) for b, v in zip(focal, w)}, frame)


def frame_prop(frame, bits):
    return Proposition(frame, int(bits))


def naive_combine(m1, m2):
    """Conflict and unnormalized products from the full 2^N x 2^N table,
    over frozensets with builtin complex."""
    elems = m1.frame.elements
    subsets = [frozenset(c) for r in range(len(elems) + 1) for c in itertools.combinations(elems, r)]
    v1 = {frozenset(p.elements): complex(v) for p, v in zip(_props(m1), m1.values)}
    v2 = {frozenset(p.elements): complex(v) for p, v in zip(_props(m2), m2.values)}
    acc = {s: 0j for s in subsets}
    for a in subsets:
        for b in subsets:
            acc[a & b] += v1[a] * v2[b]
    k = acc.pop(frozenset())
    return k, acc


def _props(m):
    return list(powerset(m.frame))


def fused_dict(m):
    return {frozenset(p.elements): complex(v) for p, v in zip(_props(m), m.values) if p.bits}


# ---- acceptance reporting -------------------------------------------------

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number and title")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    marker = getattr(report, "_criterion", None)
    if marker is None:
        return
    n, title = marker
    ok = report.outcome == "passed"
    prev = _criteria.get(n, (title, True))
    _criteria[n] = (title, prev[1] and ok)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is not None:
        report._criterion = tuple(m.args)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        title, ok = _criteria[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title}")
