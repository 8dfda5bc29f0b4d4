"""Local log pairs on surfaces and their deep valuations.

A germ is a cyclic quotient point (possibly smooth) together with boundary
branches.  Each branch is given in the orbifold coordinates ``x, y`` of
:class:`~logdelta.cyclic.CyclicQuot` by one of the shapes

* ``Axis(1)`` is ``{x=0}``, ``Axis(2)`` is ``{y=0}``;
* ``Tangent(1, m)`` is ``{x + y^m = 0}``, ``Tangent(2, m)`` is ``{y + x^m = 0}``;
* ``Newton(p, r)`` is ``{x^p + y^r = 0}``; when ``gcd(p, r) > 1`` it is a
  non-degenerate union of ``gcd`` smooth branches permuted by the group.

The value of a monomial valuation ``v = (v1, v2)`` on a branch is the minimum
over the monomials of its equation.  The log discrepancy of ``v`` is
``v1 + v2 - sum(c * v(branch))``, a convex piecewise linear function of ``v``.

Deep valuations are searched among monomial valuations and, for every
non-axis branch, among valuations centred at the point where its strict
transform meets the exceptional curve of the weighted blow-up along the kink
ray.  That second germ is smooth with two transverse branches, so it is
purely toric and the search stops there.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence, Union

from .cyclic import SMOOTH, CyclicQuot, LatticeValuation, in_lattice, lattice_points
from .exact import AffineForm, NO_SOLUTION, ALL_VALUES, af_solve_zero, fmt_rat, rat

DEEP_THRESHOLD = Fraction(6, 7)


@dataclass(frozen=True)
class Axis:
    axis: int

    def __post_init__(self):
        if self.axis not in (1, 2):
            raise ValueError("axis must be 1 or 2")

    def value(self, v1, v2):
        return v1 if self.axis == 1 else v2

    def kink(self):
        return None

    def swapped(self):
        return Axis(3 - self.axis)

    def __str__(self):
        return f"axis{self.axis}"


@dataclass(frozen=True)
class Tangent:
    axis: int
    order: int

    def __post_init__(self):
        if self.axis not in (1, 2):
            raise ValueError("axis must be 1 or 2")
        if self.order < 2:
            raise ValueError("tangency order must be at least 2")

    def value(self, v1, v2):
        if self.axis == 1:
            return min(v1, self.order * v2)
        return min(v2, self.order * v1)

    def kink(self):
        return (self.order, 1) if self.axis == 1 else (1, self.order)

    def swapped(self):
        return Tangent(3 - self.axis, self.order)

    def __str__(self):
        return f"tangent{self.axis}^{self.order}"


@dataclass(frozen=True)
class Newton:
    p: int
    r: int

    def __post_init__(self):
        if self.p < 2 or self.r < 2:
            raise ValueError("Newton branch x^p + y^r needs p, r >= 2")

    def value(self, v1, v2):
        return min(self.p * v1, self.r * v2)

    def kink(self):
        return (self.r, self.p)

    def swapped(self):
        return Newton(self.r, self.p)

    def __str__(self):
        return f"newton({self.p},{self.r})"


Shape = Union[Axis, Tangent, Newton]


@dataclass(frozen=True)
class Branch:
    coefficient: AffineForm
    shape: Shape
    curve: str = ""

    def __post_init__(self):
        object.__setattr__(self, "coefficient", AffineForm.coerce(self.coefficient))

    def swapped(self) -> "Branch":
        return Branch(self.coefficient, self.shape.swapped(), self.curve)


@dataclass(frozen=True)
class Germ:
    quot: CyclicQuot
    branches: tuple = ()
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "branches", tuple(self.branches))
        axes = [b.shape.axis for b in self.branches if isinstance(b.shape, Axis)]
        if len(axes) != len(set(axes)):
            raise ValueError("at most one branch per coordinate axis")
        for b in self.branches:
            if not _semi_invariant(self.quot, b.shape):
                raise ValueError(f"{b.shape} is not invariant under {self.quot}")

    def swapped(self) -> "Germ":
        return Germ(self.quot.dual, tuple(b.swapped() for b in self.branches), self.label)

    def at(self, p):
        """Coefficients evaluated at ``p``, checked to lie below 1."""
        p = rat(p)
        values = [b.coefficient(p) for b in self.branches]
        for b, c in zip(self.branches, values):
            if c >= 1:
                raise ValueError(f"not klt: coefficient {fmt_rat(c)} of {b.curve or b.shape} is >= 1")
            if c < 0:
                raise ValueError("negative boundary coefficient")
        return values


def _semi_invariant(s: CyclicQuot, shape) -> bool:
    if s.smooth or isinstance(shape, Axis):
        return True
    n, q = s.n, s.q
    if isinstance(shape, Tangent):
        if shape.axis == 1:
            return (q - shape.order) % n == 0
        return (1 - shape.order * q) % n == 0
    return (shape.p * q - shape.r) % n == 0


def log_discrepancy(g: Germ, values, v: LatticeValuation) -> Fraction:
    total = v.x + v.y
    for b, c in zip(g.branches, values):
        total -= c * b.shape.value(v.x, v.y)
    return total


def _primitive_on_ray(s: CyclicQuot, direction) -> LatticeValuation:
    a, c = direction
    for j in range(1, s.n * max(a, c) + 1):
        v = LatticeValuation(Fraction(a * j, s.n * max(a, c)), Fraction(c * j, s.n * max(a, c)))
        if in_lattice(s, v):
            return v
    raise AssertionError("ray has no lattice point")  # pragma: no cover


def _breakpoints(g: Germ):
    rays = [(1, 0), (0, 1)]
    for b in g.branches:
        k = b.shape.kink()
        if k is not None and k not in rays:
            rays.append(k)
    return rays


def _slope_bound(g: Germ, values) -> Fraction:
    """Minimum of log discrepancy over the simplex ``v1 + v2 = 1``."""
    best = None
    for a, c in _breakpoints(g):
        s = Fraction(1, a + c)
        ell = log_discrepancy(g, values, LatticeValuation(a * s, c * s))
        best = ell if best is None else min(best, ell)
    return best


@dataclass(frozen=True)
class DeepValuation:
    """A valuation found by the search.

    ``path`` is the monomial weight at the germ, followed (for recursion hits)
    by the monomial weight at the secondary point on the exceptional curve.
    """

    path: tuple
    log_discrepancy: Fraction

    @property
    def discrepancy(self) -> Fraction:
        return self.log_discrepancy - 1

    def describe(self) -> str:
        return ">".join(str(v) for v in self.path)


def _secondary_germs(g: Germ, values):
    """One smooth germ per non-axis branch: exceptional curve on axis 1, strict transform on axis 2."""
    out = []
    for b, c in zip(g.branches, values):
        k = b.shape.kink()
        if k is None:
            continue
        w = _primitive_on_ray(g.quot, k)
        ell = log_discrepancy(g, values, w)
        exc = 1 - ell
        sec = Germ(SMOOTH, (Branch(exc, Axis(1), "E"), Branch(c, Axis(2), b.curve)), g.label)
        out.extend([(w, sec, [exc, c])] * _points_on_kink(g.quot, b.shape))
    return out


def _points_on_kink(s: CyclicQuot, shape) -> int:
    """Points where the strict transform meets the kink divisor.

    Only a non-primitive ``x^p + y^r`` can split: the roots of the restriction
    to the kink divisor are counted up to the action of the group.
    """
    if not isinstance(shape, Newton):
        return 1
    g = gcd(shape.p, shape.r)
    if g == 1:
        return 1
    step = (shape.p * (s.q if not s.smooth else 0) - shape.r) // g
    n = s.n
    orbit = next(j for j in range(1, g + 1) if (j * step) % n == 0 and g % j == 0)
    return g // orbit


def _scan(g: Germ, values, bound: Fraction):
    kappa = _slope_bound(g, values)
    if kappa <= 0:
        raise ValueError("not klt: some valuation has non-positive log discrepancy")
    radius = bound / kappa
    for v in lattice_points(g.quot, radius, radius):
        if v.x + v.y > radius:
            continue
        ell = log_discrepancy(g, values, v)
        if ell <= bound:
            yield v, ell


def _collect(g: Germ, values, bound: Fraction, depth: int, prefix=()):
    found = [DeepValuation(prefix + (v,), ell) for v, ell in _scan(g, values, bound)]
    if depth > 0:
        for w, sec, sec_values in _secondary_germs(g, values):
            if sec_values[0] < 0:
                continue
            if sec_values[0] >= 1:
                raise ValueError("not klt: exceptional curve of the kink blow-up has coefficient >= 1")
            found.extend(_collect(sec, sec_values, bound, depth - 1, prefix + (w,)))
    return found


MAX_DEPTH = 6


def _sort_key(d: DeepValuation):
    return (d.log_discrepancy, len(d.path), tuple((v.x, v.y) for v in d.path))


def path_log_discrepancy(g: Germ, path, p) -> Fraction:
    """Log discrepancy at parameter ``p`` of a valuation found by the search."""
    values = [b.coefficient(rat(p)) for b in g.branches]
    if len(path) == 1:
        return log_discrepancy(g, values, path[0])
    for w, sec, sec_values in _secondary_germs(g, values):
        if w == path[0]:
            return path_log_discrepancy(sec, path[1:], p)
    raise ValueError("path does not start at a kink ray of this germ")


def path_log_discrepancy_form(g: Germ, path) -> AffineForm:
    """The same quantity as an affine form in the parameter."""
    at0 = path_log_discrepancy(g, path, 0)
    return AffineForm(at0, path_log_discrepancy(g, path, 1) - at0)


def deep_valuations(g: Germ, p, threshold=DEEP_THRESHOLD, depth: int = MAX_DEPTH):
    """Valuations over the germ with discrepancy at most ``-threshold`` at parameter ``p``."""
    values = g.at(p)
    bound = 1 - rat(threshold)
    found = _collect(g, values, bound, depth)
    found.sort(key=_sort_key)
    return found


def count_deep_divisors(g: Germ, p, threshold=DEEP_THRESHOLD):
    """Number of exceptional valuations with ``a <= -threshold`` and the list of witnesses."""
    found = deep_valuations(g, p, threshold)
    return len(found), found


def min_discrepancy_germ(g: Germ, p):
    """Minimal discrepancy over the searched valuations, with the witness.

    Ties are broken by path length and then lexicographically on the weights.
    """
    values = g.at(p)
    if g.quot.smooth:
        start = LatticeValuation(1, 1)
    else:
        start = LatticeValuation(Fraction(g.quot.q, g.quot.n), Fraction(1, g.quot.n))
    bound = log_discrepancy(g, values, start)
    for w, _sec, sec_values in _secondary_germs(g, values):
        bound = min(bound, log_discrepancy(g, values, w), 2 - sum(sec_values))
    if bound <= 0:
        raise ValueError("not klt")
    found = _collect(g, values, bound, MAX_DEPTH)
    best = min(found, key=_sort_key)
    if best.log_discrepancy <= 0:
        raise ValueError("not klt")
    return best.discrepancy, best


@dataclass(frozen=True)
class VidcCase:
    case: int
    valid: bool
    reason: str = ""

    def __bool__(self):
        return self.valid


def classify_germ(g: Germ, p) -> VidcCase:
    """Match a germ carrying one branch of coefficient >= 6/7 to the three local models.

    Returns a :class:`VidcCase`; ``case`` is 0 when the germ fits none of the
    models (then ``valid`` is False and ``reason`` says why).
    """
    values = g.at(p)
    big = [i for i, c in enumerate(values) if c >= DEEP_THRESHOLD]
    if len(big) > 1:
        raise ValueError("k > 1 violates the local classification: two branches with coefficient >= 6/7")
    if not big:
        raise ValueError("no branch with coefficient >= 6/7")
    ic = big[0]
    b = values[ic]
    others = [(br, c) for i, (br, c) in enumerate(zip(g.branches, values)) if i != ic]
    if len(others) > 1:
        return VidcCase(0, False, "k > 1: more than one further branch through the point")
    cshape = g.branches[ic].shape
    other = others[0] if others else None
    curved = not isinstance(cshape, Axis) or (other is not None and not isinstance(other[0].shape, Axis))
    if curved:
        shapes = {type(cshape), type(other[0].shape)} if other else {type(cshape)}
        if (
            g.quot.smooth
            and other is not None
            and shapes == {Axis, Tangent}
            and max(getattr(cshape, "order", 0), getattr(other[0].shape, "order", 0)) == 2
            and other[1] == Fraction(1, 2)
            and _same_axis(cshape, other[0].shape)
        ):
            ok = b < Fraction(13, 14)
            return VidcCase(1, ok, "" if ok else f"b = {fmt_rat(b)} >= 13/14")
        return VidcCase(0, False, "branch configuration is not one of the local models")
    b1 = other[1] if other else Fraction(0)
    if g.quot.smooth:
        ok = b + b1 < Fraction(13, 7)
        return VidcCase(2, ok, "" if ok else f"b + b1 = {fmt_rat(b + b1)} >= 13/7")
    q = g.quot.q if cshape.axis == 1 else g.quot.dual.q
    n = g.quot.n
    lhs = (Fraction(n, 7) - 1 + b1) / (1 - b)
    ok = lhs < q
    return VidcCase(3, ok, "" if ok else f"(n/7-1+b1)/(1-b) = {fmt_rat(lhs)} >= q = {q}")


def _same_axis(s1, s2) -> bool:
    a = s1 if isinstance(s1, Axis) else s2
    t = s2 if isinstance(s1, Axis) else s1
    return a.axis == t.axis


@dataclass(frozen=True, order=True)
class BlowupWeights:
    alpha: int
    beta: int
    theta: int

    def __post_init__(self):
        if min(self.alpha, self.beta, self.theta) < 1:
            raise ValueError("weights must be positive")
        if gcd(self.alpha, self.beta) != 1:
            raise ValueError("gcd(alpha, beta) must be 1")


def solve_blowup_weights(
    m1,
    m2,
    b_low,
    b_high,
    high_open: bool = True,
    alpha_ge_beta_plus_1: bool = False,
    theta_max: int = 6,
):
    """All ``(weights, b)`` with ``alpha(1-m1(b)) + beta(1-m2(b)) = 1/theta``.

    ``b`` ranges over ``[b_low, b_high)`` (or the closed interval when
    ``high_open`` is False).  The multiplicities ``m1``, ``m2`` are affine
    forms in ``b``.  Order: theta ascending, then alpha, then beta.
    """
    m1 = AffineForm.coerce(m1)
    m2 = AffineForm.coerce(m2)
    lo, hi = rat(b_low), rat(b_high)
    if lo > hi or (high_open and lo == hi):
        raise ValueError("empty parameter range")
    e1 = [1 - m1(lo), 1 - m1(hi)]
    e2 = [1 - m2(lo), 1 - m2(hi)]
    if max(e1) <= 0 or max(e2) <= 0:
        raise ValueError("no klt solutions: a multiplicity is >= 1 on the whole range")
    inf1, inf2 = min(e1), min(e2)
    if inf1 <= 0 or inf2 <= 0:
        raise ValueError("multiplicity reaches 1 inside the range; split the range first")
    out = []
    for theta in range(1, theta_max + 1):
        target = Fraction(1, theta)
        amax = int((target - inf2) / inf1) if target > inf2 else 0
        for alpha in range(1, amax + 1):
            bmax = int((target - alpha * inf1) / inf2)
            for beta in range(1, bmax + 1):
                if gcd(alpha, beta) != 1:
                    continue
                if alpha_ge_beta_plus_1 and alpha < beta + 1:
                    continue
                f = (1 - m1) * alpha + (1 - m2) * beta - target
                root = af_solve_zero(f)
                if root is NO_SOLUTION:
                    continue
                if root is ALL_VALUES:
                    raise ValueError("equation holds identically; weights are not isolated")
                if root < lo or root > hi or (high_open and root == hi):
                    continue
                out.append((BlowupWeights(alpha, beta, theta), root))
    return out


def is_log_canonical(g: Germ, values: Sequence[Fraction]) -> bool:
    """lc test for explicit coefficient values, which may equal 1."""
    values = [rat(v) for v in values]
    if any(v > 1 or v < 0 for v in values):
        return False
    if _slope_bound(g, values) < 0:
        return False
    for _w, _sec, sec_values in _secondary_germs(g, values):
        if sec_values[0] > 1:
            return False
    return True
