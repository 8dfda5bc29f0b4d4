"""Projective surfaces of Picard number one with a boundary ``tC + sum b_i B_i``.

Two descriptions are supported.  A :class:`WPS` is a weighted projective
plane whose curves are referred to by degree.  A :class:`GraphSurface` is
given by its minimal resolution: the exceptional curves (vertices), and the
remaining curves of interest (handles) with their self-intersection, genus
and incidences on the resolution.  Intersections on the singular surface are
computed from Mumford pullbacks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor
from typing import Optional, Sequence, Union

from .cyclic import CyclicQuot, hj_reconstruct
from .exact import AffineForm, NO_SOLUTION, af_solve_zero, rat
from .germs import Axis, is_log_canonical
from .linalg import SingularMatrixError, is_negative_definite, solve


@dataclass(frozen=True)
class WPS:
    weights: tuple

    def __post_init__(self):
        w = tuple(int(a) for a in self.weights)
        if len(w) != 3 or min(w) < 1:
            raise ValueError("a weighted projective plane needs three positive weights")
        object.__setattr__(self, "weights", w)

    @property
    def volume(self) -> int:
        a, b, c = self.weights
        return a * b * c

    @property
    def anticanonical_degree(self) -> int:
        return sum(self.weights)

    def intersect(self, d, e) -> Fraction:
        if d < 0 or e < 0:
            raise ValueError("degrees must be non-negative")
        return Fraction(d * e, self.volume)

    def canonical_dot(self, d) -> Fraction:
        return Fraction(-self.anticanonical_degree * d, self.volume)

    def vertex_quot(self, i: int) -> CyclicQuot:
        """Type of the vertex where only coordinate ``i`` is nonzero, with ``x = x_j``, ``y = x_k`` (j < k)."""
        a = self.weights
        j, k = [m for m in range(3) if m != i]
        n = a[i]
        if n == 1:
            return CyclicQuot(1, 0)
        return CyclicQuot(n, (a[j] * pow(a[k], -1, n)) % n)

    def effective_degree(self, d: int) -> bool:
        """Whether some effective Weil divisor has degree ``d``."""
        if d < 0:
            return False
        reach = [False] * (d + 1)
        reach[0] = True
        for s in range(1, d + 1):
            reach[s] = any(s >= a and reach[s - a] for a in self.weights)
        return reach[d]

    def __str__(self):
        return "P(%d,%d,%d)" % self.weights


def wps_intersect(w: WPS, d: int, e: int) -> Fraction:
    return w.intersect(d, e)


@dataclass(frozen=True)
class Handle:
    name: str
    selfint: int
    genus: int = 0
    incidences: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "incidences", tuple((t, int(m)) for t, m in self.incidences))


@dataclass
class GraphSurface:
    vertices: tuple
    edges: tuple
    handles: tuple
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        self.vertices = tuple((str(v), int(c)) for v, c in self.vertices)
        self.edges = tuple((str(a), str(b)) for a, b in self.edges)
        self.handles = tuple(self.handles)
        ids = [v for v, _ in self.vertices]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate vertex id")
        self._index = {v: i for i, v in enumerate(ids)}
        self._handles = {h.name: h for h in self.handles}
        for a, b in self.edges:
            if a not in self._index or b not in self._index:
                raise ValueError(f"edge {a}-{b} references an unknown vertex")
        for h in self.handles:
            for target, _m in h.incidences:
                if target not in self._index and target not in self._handles:
                    raise ValueError(f"handle {h.name} meets unknown curve {target}")
        if self.vertices and not is_negative_definite(self.matrix):
            raise ValueError("exceptional intersection matrix is not negative definite")

    @property
    def matrix(self):
        n = len(self.vertices)
        m = [[0] * n for _ in range(n)]
        for i, (_v, c) in enumerate(self.vertices):
            m[i][i] = c
        for a, b in self.edges:
            i, j = self._index[a], self._index[b]
            m[i][j] += 1
            m[j][i] += 1
        return m

    def handle(self, name: str) -> Handle:
        try:
            return self._handles[name]
        except KeyError:
            raise KeyError(f"unknown curve {name!r}") from None

    def handle_names(self):
        return [h.name for h in self.handles]

    def exceptional_vector(self, name: str):
        """``H~ . E_i`` for every exceptional curve."""
        vec = [0] * len(self.vertices)
        for target, m in self.handle(name).incidences:
            if target in self._index:
                vec[self._index[target]] += m
        return vec

    def strict_dot(self, h1: str, h2: str) -> int:
        """Intersection of the strict transforms on the resolution."""
        if h1 == h2:
            return self.handle(h1).selfint
        total = 0
        for target, m in self.handle(h1).incidences:
            if target == h2:
                total += m
        for target, m in self.handle(h2).incidences:
            if target == h1:
                total += m
        return total

    def correction(self, name: str):
        """Coefficients ``x`` of the pullback ``H* = H~ + sum x_i E_i``."""
        key = ("corr", name)
        if key not in self._cache:
            h = self.exceptional_vector(name)
            if not self.vertices:
                self._cache[key] = []
            else:
                try:
                    (x,) = solve(self.matrix, [[-v for v in h]])
                except SingularMatrixError as exc:  # pragma: no cover
                    raise ArithmeticError("singular exceptional matrix") from exc
                self._cache[key] = x
        return self._cache[key]

    def canonical_correction(self):
        """Coefficients ``z`` with ``pi^* K = K~ + sum z_i E_i`` (negated discrepancies)."""
        key = ("K",)
        if key not in self._cache:
            rhs = [2 + c for _v, c in self.vertices]
            self._cache[key] = solve(self.matrix, [rhs])[0] if self.vertices else []
        return self._cache[key]

    def intersect(self, h1: str, h2: str) -> Fraction:
        x1 = self.correction(h1)
        v2 = self.exceptional_vector(h2)
        return self.strict_dot(h1, h2) + sum(a * b for a, b in zip(x1, v2))

    def canonical_dot(self, name: str) -> Fraction:
        h = self.handle(name)
        k_strict = 2 * h.genus - 2 - h.selfint
        z = self.canonical_correction()
        return k_strict + sum(a * b for a, b in zip(z, self.exceptional_vector(name)))

    def gram(self, names: Optional[Sequence[str]] = None):
        names = list(names) if names is not None else self.handle_names()
        return [[self.intersect(a, b) for b in names] for a in names]

    def components(self):
        """Connected components of the exceptional configuration (lists of vertex ids)."""
        adj = {v: set() for v, _ in self.vertices}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        seen, comps = set(), []
        for v, _ in self.vertices:
            if v in seen:
                continue
            stack, comp = [v], []
            seen.add(v)
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in sorted(adj[u]):
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(comp)
        return comps, adj

    def points_on(self, name: str):
        """Singular points met by a handle, as ``(component, CyclicQuot | None)``.

        The quotient type is normalised so that the handle is the first axis;
        it is ``None`` when the component is not a chain met at an end.
        """
        comps, adj = self.components()
        selfint = dict(self.vertices)
        meets = {}
        for target, m in self.handle(name).incidences:
            if target in self._index:
                meets[target] = meets.get(target, 0) + m
        out = []
        for comp in comps:
            touched = [v for v in comp if v in meets]
            if not touched:
                continue
            chain = _as_chain(comp, adj)
            quot = None
            if chain is not None and len(touched) == 1 and meets[touched[0]] == 1:
                if chain[-1] == touched[0]:
                    chain = chain[::-1]
                if chain[0] == touched[0]:
                    quot = hj_reconstruct([selfint[v] for v in chain])
            out.append((tuple(comp), quot))
        return out


def _as_chain(comp, adj):
    if len(comp) == 1:
        return list(comp)
    inside = set(comp)
    ends = [v for v in comp if len(adj[v] & inside) == 1]
    if len(ends) != 2 or any(len(adj[v] & inside) > 2 for v in comp):
        return None
    order, prev = [ends[0]], None
    while len(order) < len(comp):
        nxt = [w for w in adj[order[-1]] & inside if w != prev]
        prev = order[-1]
        order.append(nxt[0])
    return order


def graph_intersect(g: GraphSurface, h1: str, h2: str) -> Fraction:
    return g.intersect(h1, h2)


@dataclass(frozen=True)
class BoundaryEntry:
    name: str
    coefficient: AffineForm
    curve: Union[int, str]

    def __post_init__(self):
        object.__setattr__(self, "coefficient", AffineForm.coerce(self.coefficient))


@dataclass
class LogSurface:
    surface: Union[WPS, GraphSurface]
    boundary: tuple
    germs: tuple = ()
    c_name: str = "C"

    def __post_init__(self):
        self.boundary = tuple(self.boundary)
        self.germs = tuple(self.germs)
        names = [b.name for b in self.boundary]
        if len(set(names)) != len(names):
            raise ValueError("duplicate boundary component name")
        self._by_name = {b.name: b for b in self.boundary}
        for g in self.germs:
            for br in g.branches:
                if br.curve != "E" and br.curve not in self._by_name:
                    raise ValueError(f"germ {g.label} references undeclared curve {br.curve!r}")
        if isinstance(self.surface, GraphSurface):
            for b in self.boundary:
                self.surface.handle(b.curve)

    @property
    def is_wps(self) -> bool:
        return isinstance(self.surface, WPS)

    def entry(self, name: str) -> BoundaryEntry:
        return self._by_name[name]

    @property
    def C(self) -> BoundaryEntry:
        return self._by_name[self.c_name]

    @property
    def others(self):
        return [b for b in self.boundary if b.name != self.c_name]

    def dot(self, n1: str, n2: str) -> Fraction:
        c1, c2 = self.entry(n1).curve, self.entry(n2).curve
        return self.surface.intersect(c1, c2)

    def kdot(self, name: str) -> Fraction:
        return self.surface.canonical_dot(self.entry(name).curve)

    def degree_form(self, test=None) -> AffineForm:
        """``(K + D) . A`` as an affine form in ``t`` for the test class ``A``."""
        if test is None:
            test = self.test_class()
        s = self.surface
        total = AffineForm.const(s.canonical_dot(test) if not self.is_wps else -s.anticanonical_degree)
        for b in self.boundary:
            weight = b.curve if self.is_wps else s.intersect(b.curve, test)
            total = total + b.coefficient * weight
        return total

    def test_class(self):
        """Ample test class: a hyperplane-degree one class on a WPS, else C or a positive handle."""
        if self.is_wps:
            return None
        c = self.C.curve
        if self.surface.intersect(c, c) > 0:
            return c
        for b in self.others:
            if self.surface.intersect(b.curve, b.curve) > 0:
                return b.curve
        raise ValueError("no boundary curve with positive self-intersection")

    def points_on_c(self):
        """Quotient types of singular points on C with C as the first axis."""
        if not self.is_wps and not self.germs:
            return [q for _comp, q in self.surface.points_on(self.C.curve)]
        out = []
        for g in self.germs:
            if g.quot.smooth:
                continue
            for br in g.branches:
                if br.curve != self.c_name:
                    continue
                if not isinstance(br.shape, Axis):
                    out.append(None)
                elif br.shape.axis == 1:
                    out.append(g.quot)
                else:
                    out.append(g.quot.dual)
        return out


def solve_b(s: LogSurface):
    """The value of ``t`` making ``K + D`` numerically trivial, or NoSolution."""
    root = af_solve_zero(s.degree_form())
    if root is NO_SOLUTION or not isinstance(root, Fraction):
        return NO_SOLUTION
    return root


def t_max(s: LogSurface):
    return solve_b(s)


@dataclass(frozen=True)
class Adjunction:
    deg_diff: Fraction
    c2: Fraction
    c2_tilde: Fraction
    pa: int
    pa_intersection: Fraction
    c2_intersection: Fraction


def adjunction(s: LogSurface, b, pa: int) -> Adjunction:
    """Adjunction data for C when ``K + bC + sum b_i B_i`` is numerically trivial.

    ``pa`` is the arithmetic genus assumed for C; it is cross-checked by
    ``pa_intersection``, computed from ``(K + C).C = 2 p_a - 2 + deg Diff``.
    """
    b = rat(b)
    if b == 1:
        raise ValueError("b = 1: division by zero")
    points = s.points_on_c()
    if any(q is None for q in points):
        raise ValueError("C passes through a point where it is not a toric axis")
    deg_diff = sum((1 - Fraction(1, q.n) for q in points), Fraction(0))
    others = sum((b_i.coefficient(b) * s.dot(b_i.name, s.c_name) for b_i in s.others), Fraction(0))
    c2 = (2 * pa - 2 + deg_diff + others) / (1 - b)
    c2_int = s.dot(s.c_name, s.c_name)
    c2_tilde = c2 - sum((Fraction(q.q, q.n) for q in points), Fraction(0))
    pa_int = (s.kdot(s.c_name) + c2_int - deg_diff + 2) / 2
    return Adjunction(deg_diff, c2, c2_tilde, pa, pa_int, c2_int)


def complement_index(s: LogSurface, t, max_n: int = 100) -> int:
    """Smallest ``n`` for which ``K + D`` admits an ``n``-complement, by degree feasibility.

    Works on weighted projective planes, where Weil divisor classes are
    determined by degree.  Local lc conditions are tested at every declared germ.
    """
    if not s.is_wps:
        raise ValueError("complement search needs a weighted projective plane")
    t = rat(t)
    w = s.surface
    coeffs = {b.name: b.coefficient(t) for b in s.boundary}
    for n in range(1, max_n + 1):
        plus = {}
        ok = True
        for name, c in coeffs.items():
            lower = Fraction(floor((n + 1) * c), n)
            d = max(c, lower)
            if (d * n).denominator != 1 or d > 1:
                ok = False
                break
            plus[name] = d
        if not ok:
            continue
        residual = w.anticanonical_degree - sum(plus[b.name] * b.curve for b in s.boundary)
        if residual < 0 or (residual * n).denominator != 1:
            continue
        if not w.effective_degree(int(residual * n)):
            continue
        if all(is_log_canonical(g, [plus[br.curve] for br in g.branches]) for g in s.germs):
            return n
    raise ValueError("index exceeds search bound")
