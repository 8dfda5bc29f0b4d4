"""Cyclic quotient singularities 1/n(q,1).

Coordinates: ``x`` carries weight ``q`` and ``y`` weight 1.  The curve
``{x=0}`` is the first axis; its coefficient is always called ``d1``.  A
monomial valuation is a point of the lattice ``Z^2 + Z*(q/n, 1/n)`` in the
first quadrant, and its log discrepancy with respect to
``d1{x=0} + d2{y=0}`` is ``x*(1-d1) + y*(1-d2)``.

Resolution chains are listed starting from the curve adjacent to ``{x=0}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor, gcd
from typing import Sequence

from .exact import AffineForm, rat
from .linalg import SingularMatrixError, is_negative_definite, solve


@dataclass(frozen=True, order=True)
class CyclicQuot:
    n: int
    q: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.n == 1:
            if self.q not in (0, 1):
                raise ValueError("a smooth point is encoded as (1, 0)")
            object.__setattr__(self, "q", 0)
            return
        if not 0 < self.q < self.n:
            raise ValueError(f"need 0 < q < n, got ({self.n},{self.q})")
        if gcd(self.n, self.q) != 1:
            raise ValueError("gcd(n,q) must be 1")

    @property
    def smooth(self) -> bool:
        return self.n == 1

    @property
    def dual(self) -> "CyclicQuot":
        """The same point with the two axes exchanged: 1/n(q', 1), q*q' = 1 mod n."""
        if self.smooth:
            return self
        return CyclicQuot(self.n, pow(self.q, -1, self.n))

    def __str__(self):
        if self.smooth:
            return "smooth"
        return f"1/{self.n}({self.q},1)"


SMOOTH = CyclicQuot(1, 0)


@dataclass(frozen=True, order=True)
class LatticeValuation:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", rat(self.x))
        object.__setattr__(self, "y", rat(self.y))

    def __add__(self, other):
        return LatticeValuation(self.x + other.x, self.y + other.y)

    def scaled(self, k) -> "LatticeValuation":
        return LatticeValuation(self.x * k, self.y * k)

    def swapped(self) -> "LatticeValuation":
        return LatticeValuation(self.y, self.x)

    def __str__(self):
        from .exact import fmt_rat

        return f"({fmt_rat(self.x)},{fmt_rat(self.y)})"


def hj_expand(s: CyclicQuot) -> list[int]:
    """Self-intersections of the minimal resolution of ``s``."""
    if s.smooth:
        raise ValueError("nothing to resolve: smooth point")
    a, b = s.n, s.q
    chain = []
    while b:
        c = -(-a // b)
        chain.append(-c)
        a, b = b, c * b - a
    return chain


def hj_reconstruct(chain: Sequence[int]) -> CyclicQuot:
    """Inverse of :func:`hj_expand`."""
    if not chain:
        raise ValueError("empty chain")
    if any(c > -2 for c in chain):
        raise ValueError("not a minimal chain: entries must be <= -2")
    value = Fraction(-chain[-1])
    for c in reversed(chain[:-1]):
        value = -c - 1 / value
    return CyclicQuot(value.numerator, value.denominator)


def chain_matrix(chain: Sequence[int]) -> list[list[int]]:
    k = len(chain)
    m = [[0] * k for _ in range(k)]
    for i, c in enumerate(chain):
        m[i][i] = c
        if i + 1 < k:
            m[i][i + 1] = m[i + 1][i] = 1
    return m


def chain_discrepancies(chain: Sequence[int], left_mult=0, right_mult=0) -> list[AffineForm]:
    """Coefficients ``a_i`` with ``(K + sum a_i E_i + L*C_L + R*C_R) . E_j = 0``.

    The result is the negated discrepancy of each chain curve (the diagram
    convention).  ``left_mult`` is the multiplicity of the branch meeting the
    first curve, ``right_mult`` that of the branch meeting the last one.  The
    chain only has to be negative definite, so blown-up chains containing
    (-1)-curves are accepted.
    """
    left = AffineForm.coerce(left_mult)
    right = AffineForm.coerce(right_mult)
    m = chain_matrix(chain)
    if not is_negative_definite(m):
        raise ValueError("chain is not negative definite")
    k = len(chain)
    const = [Fraction(2 + c) for c in chain]
    slope = [Fraction(0)] * k
    const[0] -= left.constant
    slope[0] -= left.slope
    const[-1] -= right.constant
    slope[-1] -= right.slope
    try:
        a_const, a_slope = solve(m, [const, slope])
    except SingularMatrixError as exc:  # pragma: no cover - excluded by definiteness
        raise ArithmeticError("singular chain system") from exc
    return [AffineForm(c, s) for c, s in zip(a_const, a_slope)]


def resolution_valuations(s: CyclicQuot) -> list[LatticeValuation]:
    """Lattice vectors of the chain curves, in chain order (first adjacent to ``{x=0}``)."""
    chain = hj_expand(s)
    prev = LatticeValuation(1, 0)
    cur = LatticeValuation(Fraction(s.q, s.n), Fraction(1, s.n))
    out = [cur]
    for c in chain[:-1]:
        prev, cur = cur, cur.scaled(-c) + prev.scaled(-1)
        out.append(cur)
    return out


def in_lattice(s: CyclicQuot, v: LatticeValuation) -> bool:
    ny = v.y * s.n
    if ny.denominator != 1:
        return False
    if s.smooth:
        return v.x.denominator == 1
    j = ny.numerator % s.n
    return (v.x - Fraction(j * s.q, s.n)).denominator == 1


def is_primitive(s: CyclicQuot, v: LatticeValuation) -> bool:
    top = int(max(v.x, v.y) * s.n)
    for k in range(2, top + 1):
        if in_lattice(s, v.scaled(Fraction(1, k))):
            return False
    return True


def lattice_points(s: CyclicQuot, xmax: Fraction, ymax: Fraction, open_cone: bool = True):
    """Primitive lattice points with ``0 < x <= xmax`` and ``0 < y <= ymax``."""
    lo = 1 if open_cone else 0
    for m in range(lo, floor(ymax * s.n) + 1):
        y = Fraction(m, s.n)
        x0 = Fraction((m * s.q) % s.n, s.n) if not s.smooth else Fraction(0)
        xs = x0
        while xs <= xmax:
            if xs > 0 or (not open_cone and (xs, y) != (0, 0)):
                v = LatticeValuation(xs, y)
                if is_primitive(s, v):
                    yield v
            xs += 1


def toric_log_discrepancy(s: CyclicQuot, d1, d2, v: LatticeValuation) -> AffineForm:
    """Log discrepancy ``x(1-d1) + y(1-d2)`` of the monomial valuation ``v``."""
    if not in_lattice(s, v):
        raise ValueError(f"{v} is not a point of the lattice of {s}")
    d1 = AffineForm.coerce(d1)
    d2 = AffineForm.coerce(d2)
    return (1 - d1) * v.x + (1 - d2) * v.y


def enumerate_deep_valuations(s: CyclicQuot, d1, d2, p, threshold=Fraction(1, 7)):
    """All primitive valuations in the open cone with log discrepancy <= threshold at ``p``.

    Returns ``(valuation, log_discrepancy)`` pairs ordered by log discrepancy
    and then lexicographically.
    """
    p = rat(p)
    threshold = rat(threshold)
    if threshold <= 0:
        raise ValueError("threshold must be positive")
    e1 = 1 - AffineForm.coerce(d1)(p)
    e2 = 1 - AffineForm.coerce(d2)(p)
    if e1 <= 0 or e2 <= 0:
        raise ValueError("not klt along axis, enumeration unbounded")
    out = []
    for v in lattice_points(s, threshold / e1, threshold / e2):
        ell = v.x * e1 + v.y * e2
        if ell <= threshold:
            out.append((v, ell))
    out.sort(key=lambda item: (item[1], item[0].x, item[0].y))
    return out


def min_log_discrepancy_toric(s: CyclicQuot, d1, d2, p):
    """Minimal log discrepancy over exceptional toric valuations, with its witness."""
    p = rat(p)
    e1 = 1 - AffineForm.coerce(d1)(p)
    e2 = 1 - AffineForm.coerce(d2)(p)
    if e1 <= 0 or e2 <= 0:
        raise ValueError("not klt along axis")
    if s.smooth:
        first = LatticeValuation(1, 1)
    else:
        first = LatticeValuation(Fraction(s.q, s.n), Fraction(1, s.n))
    best = first.x * e1 + first.y * e2
    candidates = [(best, first)]
    for v in lattice_points(s, best / e1, best / e2):
        candidates.append((v.x * e1 + v.y * e2, v))
    return min(candidates, key=lambda item: (item[0], item[1].x, item[1].y))


