"""The number of divisors with discrepancy at most ``-6/7``.

Boundary components count with discrepancy ``-coefficient``.  Exceptional
divisors are found germ by germ.  On a weighted projective plane the germs are
the declared incidence points.  On a graph surface without declared germs the
pair is pulled back to the minimal resolution: exceptional curves whose
coefficient is at least ``6/7`` are witnesses, and every intersection point of
two curves with positive coefficient is searched as a smooth germ.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cyclic import SMOOTH
from .exact import AffineForm, fmt_rat, rat
from .germs import DEEP_THRESHOLD, Axis, Branch, Germ, count_deep_divisors
from .linalg import solve
from .surface import GraphSurface, LogSurface


@dataclass(frozen=True)
class Witness:
    source: str
    discrepancy: Fraction

    def describe(self) -> str:
        return f"{self.source}: a = {fmt_rat(self.discrepancy)}"


@dataclass(frozen=True)
class DeltaReport:
    t: Fraction
    delta: int
    witnesses: tuple

    def to_json(self) -> dict:
        return {
            "t": fmt_rat(self.t),
            "delta": self.delta,
            "witnesses": [{"source": w.source, "discrepancy": fmt_rat(w.discrepancy)} for w in self.witnesses],
        }


def resolution_coefficients(s: LogSurface):
    """Pullback coefficients of exceptional curves, as affine forms in ``t``."""
    g = s.surface
    if not g.vertices:
        return {}
    const = [Fraction(2 + c) for _v, c in g.vertices]
    slope = [Fraction(0)] * len(g.vertices)
    for b in s.boundary:
        vec = g.exceptional_vector(b.curve)
        for i, m in enumerate(vec):
            const[i] -= b.coefficient.constant * m
            slope[i] -= b.coefficient.slope * m
    a_const, a_slope = solve(g.matrix, [const, slope])
    return {v: AffineForm(c, sl) for (v, _), c, sl in zip(g.vertices, a_const, a_slope)}


def resolution_germs(s: LogSurface):
    """Smooth two-branch germs at intersection points on the minimal resolution."""
    g: GraphSurface = s.surface
    coef = dict(resolution_coefficients(s))
    curve_of = {}
    for b in s.boundary:
        coef[b.curve] = b.coefficient
        curve_of[b.curve] = b.name
    pairs = []
    for a, b in g.edges:
        pairs.append((a, b, 1))
    for h in g.handles:
        for target, m in h.incidences:
            if target in g._handles and target < h.name:
                continue
            pairs.append((h.name, target, m))
    germs = []
    for a, b, m in pairs:
        if a not in coef or b not in coef:
            continue
        for k in range(m):
            label = f"{curve_of.get(a, a)}*{curve_of.get(b, b)}" + (f"#{k + 1}" if m > 1 else "")
            germs.append(
                Germ(SMOOTH, (Branch(coef[a], Axis(1), curve_of.get(a, a)), Branch(coef[b], Axis(2), curve_of.get(b, b))), label)
            )
    return germs


def _germ_sources(s: LogSurface):
    if s.is_wps or s.germs:
        return list(s.germs), []
    coeffs = resolution_coefficients(s)
    return resolution_germs(s), sorted(coeffs.items())


def delta(s: LogSurface, t, threshold=DEEP_THRESHOLD) -> DeltaReport:
    t = rat(t)
    threshold = rat(threshold)
    witnesses = []
    for b in s.boundary:
        c = b.coefficient(t)
        if c >= 1:
            raise ValueError(f"not klt: coefficient of {b.name} is {fmt_rat(c)}")
        if c < 0:
            raise ValueError(f"negative coefficient on {b.name}")
        if c >= threshold:
            witnesses.append(Witness(b.name, -c))
    germs, exceptional = _germ_sources(s)
    for vid, form in exceptional:
        a = form(t)
        if a >= 1:
            raise ValueError(f"not klt: exceptional curve {vid} has coefficient {fmt_rat(a)}")
        if a >= threshold:
            witnesses.append(Witness(f"E[{vid}]", -a))
    for g in germs:
        if g.quot.smooth and len(g.branches) < 2 and all(isinstance(b.shape, Axis) for b in g.branches):
            continue
        _n, found = count_deep_divisors(g, t, threshold)
        for d in found:
            witnesses.append(Witness(f"{g.label}@{d.describe()}", d.discrepancy))
    return DeltaReport(t, len(witnesses), tuple(witnesses))


def default_samples(low, high, high_open: bool):
    low, high = rat(low), rat(high)
    top = high - Fraction(1, 1000) if high_open else high
    return [low, (low + high) / 2, top]


def delta_sweep(s: LogSurface, samples: Sequence):
    return [(rat(t), delta(s, t)) for t in samples]
