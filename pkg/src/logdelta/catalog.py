"""The catalog of δ = 1 pairs and the verifier that replays its numbers.

Records are stored as JSON with rationals written as ``"p/q"`` strings.
Each record describes one pair ``(S, tC + sum b_i B_i)`` over an interval of
``t``: a weighted projective plane or a minimal-resolution graph, the
boundary, the incidence germs, the interval and the marker of ``C``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Optional

import jsonschema

from .cyclic import CyclicQuot
from .delta import DeltaReport, _germ_sources, delta
from .exact import AffineForm, fmt_rat, parse_form, rat
from .germs import (
    Axis,
    Branch,
    Germ,
    Newton,
    Tangent,
    DEEP_THRESHOLD,
    deep_valuations,
    path_log_discrepancy_form,
)
from .linalg import rank
from .surface import WPS, BoundaryEntry, GraphSurface, Handle, LogSurface, adjunction, solve_b

SCHEMA_VERSION = 1
FAMILY_COUNT = 56
SIXSEVENTHS = Fraction(6, 7)
NODE_LIMIT = Fraction(13, 14)
CHECK_NAMES = ("t_max", "delta", "marker", "positivity", "endpoint", "structure")


class CatalogError(ValueError):
    pass


def _load_schema():
    return json.loads(resources.files("logdelta.data").joinpath("schema.json").read_text())


def default_catalog_path() -> Path:
    return Path(str(resources.files("logdelta.data").joinpath("catalog.json")))


# ---------------------------------------------------------------------------
# record <-> objects

def _shape(d):
    kind = d["kind"]
    if kind == "axis":
        return Axis(d["axis"])
    if kind == "tangent":
        return Tangent(d["axis"], d["order"])
    return Newton(d["p"], d["r"])


def _shape_json(shape):
    if isinstance(shape, Axis):
        return {"kind": "axis", "axis": shape.axis}
    if isinstance(shape, Tangent):
        return {"kind": "tangent", "axis": shape.axis, "order": shape.order}
    return {"kind": "newton", "p": shape.p, "r": shape.r}


@dataclass
class CaseRecord:
    id: str
    family: int
    marker: object
    surface: LogSurface
    t_interval: tuple
    params: dict = field(default_factory=dict)
    variant: Optional[str] = None
    endpoint_delta: Optional[int] = None
    provenance: str = ""

    @property
    def low(self) -> Fraction:
        return self.t_interval[0]

    @property
    def high(self) -> Fraction:
        return self.t_interval[1]

    @property
    def high_open(self) -> bool:
        return self.t_interval[2]

    @property
    def notes(self):
        return [self.variant] if self.variant else []

    @classmethod
    def from_json(cls, d: dict) -> "CaseRecord":
        surf = d["surface"]
        if surf["kind"] == "wps":
            base = WPS(tuple(surf["weights"]))
        else:
            base = GraphSurface(
                tuple((v, c) for v, c in surf["vertices"]),
                tuple((a, b) for a, b in surf["edges"]),
                tuple(
                    Handle(h["name"], h["selfint"], h.get("genus", 0), tuple((t, m) for t, m in h["incidences"]))
                    for h in surf["handles"]
                ),
            )
        boundary = [BoundaryEntry(b["name"], parse_form(b["coefficient"]), b["curve"]) for b in d["boundary"]]
        coef = {b.name: b.coefficient for b in boundary}
        if coef.get("C") != AffineForm(0, 1):
            raise CatalogError(f"{d['id']}: the coefficient of C must be the parameter t")
        for name, form in coef.items():
            if name != "C" and not form.is_constant:
                raise CatalogError(f"{d['id']}: coefficient of {name} depends on t")
            if name != "C" and not _standard(form.constant):
                raise CatalogError(f"{d['id']}: coefficient of {name} is {fmt_rat(form.constant)}, not of the form (k-1)/k")
        germs = []
        for g in d.get("germs", []):
            branches = []
            for br in g["branches"]:
                if br["curve"] not in coef:
                    raise CatalogError(f"{d['id']}: germ {g['label']} references undeclared curve {br['curve']!r}")
                branches.append(Branch(coef[br["curve"]], _shape(br), br["curve"]))
            germs.append(Germ(CyclicQuot(*g["quot"]), tuple(branches), g["label"]))
        ti = d["t_interval"]
        return cls(
            id=d["id"],
            family=d["family"],
            marker=d["marker"],
            surface=LogSurface(base, tuple(boundary), tuple(germs)),
            t_interval=(rat(ti["low"]), rat(ti["high"]), bool(ti["high_open"])),
            params=dict(d.get("params", {})),
            variant=d.get("variant"),
            endpoint_delta=d.get("endpoint_delta"),
            provenance=d.get("provenance", ""),
        )

    def to_json(self) -> dict:
        s = self.surface
        if s.is_wps:
            surf = {"kind": "wps", "weights": list(s.surface.weights)}
        else:
            g = s.surface
            surf = {
                "kind": "graph",
                "vertices": [[v, c] for v, c in g.vertices],
                "edges": [[a, b] for a, b in g.edges],
                "handles": [
                    {"name": h.name, "selfint": h.selfint, "genus": h.genus, "incidences": [[t, m] for t, m in h.incidences]}
                    for h in g.handles
                ],
            }
        out = {
            "id": self.id,
            "family": self.family,
            "params": dict(self.params),
            "variant": self.variant,
            "marker": self.marker,
            "surface": surf,
            "boundary": [
                {"name": b.name, "coefficient": b.coefficient.to_text("t"), "curve": b.curve} for b in s.boundary
            ],
            "germs": [
                {
                    "label": g.label,
                    "quot": [g.quot.n, g.quot.q],
                    "branches": [{"curve": br.curve, **_shape_json(br.shape)} for br in g.branches],
                }
                for g in s.germs
            ],
            "t_interval": {"low": fmt_rat(self.low), "high": fmt_rat(self.high), "high_open": self.high_open},
            "provenance": self.provenance,
        }
        if self.endpoint_delta is not None:
            out["endpoint_delta"] = self.endpoint_delta
        return out


# ---------------------------------------------------------------------------
# loading and lint

def _local_intersection(s1, s2, n: int) -> Fraction:
    orders = {
        Axis: lambda sh: (10**9, 1) if sh.axis == 1 else (1, 10**9),
        Tangent: lambda sh: (sh.order, 1) if sh.axis == 1 else (1, sh.order),
        Newton: lambda sh: (sh.r, sh.p),
    }
    v = s1.value(*orders[type(s2)](s2))
    if v >= 10**9:
        raise CatalogError("two branches coincide")
    return Fraction(v, n)


def _standard(c: Fraction) -> bool:
    """``c = (k-1)/k`` for a positive integer ``k``."""
    return 0 <= c < 1 and (1 / (1 - c)).denominator == 1


def incidence_lint(r: CaseRecord):
    """Problems with the declared incidences: returns a list of messages.

    Every pair of boundary curves must meet exactly in the declared germs
    (intersection numbers add up), and every singular point of the surface
    lying on a boundary curve must be declared.
    """
    s = r.surface
    if not s.germs:
        return []
    problems = []
    local = {}
    for g in s.germs:
        brs = g.branches
        for i in range(len(brs)):
            for j in range(i + 1, len(brs)):
                key = tuple(sorted((brs[i].curve, brs[j].curve)))
                local[key] = local.get(key, Fraction(0)) + _local_intersection(brs[i].shape, brs[j].shape, g.quot.n)
    names = [b.name for b in s.boundary]
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            total = s.dot(a, b)
            got = local.get(tuple(sorted((a, b))), Fraction(0))
            if got != total:
                problems.append(f"{r.id}: {a}.{b} = {fmt_rat(total)} but declared incidences give {fmt_rat(got)}")
    if s.is_wps:
        w = s.surface
        declared = {g.label for g in s.germs}
        for b in s.boundary:
            for i, a in enumerate(w.weights):
                if a > 1 and b.curve % a and f"P{i + 1}" not in declared:
                    problems.append(f"{r.id}: {b.name} passes through undeclared point P{i + 1}")
    return problems


def load_records(data) -> list:
    if isinstance(data, dict):
        if data.get("schema_version") != SCHEMA_VERSION:
            raise CatalogError(f"schema version mismatch: expected {SCHEMA_VERSION}, got {data.get('schema_version')}")
        entries = data.get("records", [])
    else:
        raise CatalogError("catalog must be a JSON object")
    if not entries:
        raise CatalogError("no records")
    validator = jsonschema.Draft202012Validator(_load_schema())
    errors = sorted(validator.iter_errors(data), key=lambda e: list(e.absolute_path))
    if errors:
        e = errors[0]
        where = "/".join(str(p) for p in e.absolute_path) or "<root>"
        raise CatalogError(f"schema violation at {where}: {e.message}")
    records = []
    seen = set()
    for d in entries:
        if d["id"] in seen:
            raise CatalogError(f"duplicate record id {d['id']}")
        seen.add(d["id"])
        try:
            rec = CaseRecord.from_json(d)
        except CatalogError:
            raise
        except (ValueError, KeyError) as exc:
            raise CatalogError(f"{d['id']}: {exc}") from exc
        problems = incidence_lint(rec)
        if problems:
            raise CatalogError("lint: " + problems[0])
        records.append(rec)
    return records


def load_catalog(path=None) -> list:
    """Load, validate and lint a catalog file (the bundled one by default)."""
    path = Path(path) if path is not None else default_catalog_path()
    text = path.read_text()
    if not text.strip():
        raise CatalogError("no records")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CatalogError(f"invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    try:
        return load_records(data)
    except CatalogError as exc:
        line = _record_line(text, data, str(exc))
        if line is None:
            raise
        raise CatalogError(f"{exc} (record starting near line {line})") from exc


def _record_line(text: str, data, message: str):
    m = re.search(r"at records/(\d+)", message)
    if not m or not isinstance(data, dict):
        return None
    try:
        rid = data["records"][int(m.group(1))]["id"]
    except (IndexError, KeyError, TypeError):
        return None
    needle = re.compile(r'"id"\s*:\s*' + re.escape(json.dumps(rid)))
    for no, line in enumerate(text.splitlines(), 1):
        if needle.search(line):
            return no
    return None


def dump_catalog(records) -> dict:
    return {"schema_version": SCHEMA_VERSION, "records": [r.to_json() for r in records]}


def families(records):
    return sorted({r.family for r in records})


# ---------------------------------------------------------------------------
# verification

@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    expected: str
    actual: str

    def to_json(self):
        return {"name": self.name, "passed": self.passed, "expected": self.expected, "actual": self.actual}


@dataclass
class VerificationReport:
    record_id: str
    checks: list

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failed_checks(self):
        return [c.name for c in self.checks if not c.passed]

    def to_json(self):
        return {"id": self.record_id, "passed": self.passed, "checks": [c.to_json() for c in self.checks]}


def _safe_delta(s, t) -> Optional[DeltaReport]:
    try:
        return delta(s, t)
    except ValueError:
        return None


def _delta_text(rep):
    return "not klt" if rep is None else str(rep.delta)


def degeneration_point(r: CaseRecord):
    """Smallest ``t`` above which an extra deep divisor appears, near the printed endpoint.

    Each extra witness found at the endpoint has an affine log discrepancy in
    ``t`` (over a germ, or as an exceptional curve of the minimal resolution);
    the degeneration point is the smallest solution of ``log discrepancy = 1/7``
    among them.  ``None`` if nothing degenerates.
    """
    s = r.surface
    rep = _safe_delta(s, r.high)
    if rep is None:
        return None
    germs, exceptional = _germ_sources(s)
    by_label = {g.label: g for g in germs}
    forms = {f"E[{vid}]": form for vid, form in exceptional}
    points = []
    for w in rep.witnesses:
        if w.source in forms:
            form = forms[w.source]
            if form.slope != 0:
                points.append((DEEP_THRESHOLD - form.constant) / form.slope)
            continue
        g = by_label.get(w.source.split("@", 1)[0]) if "@" in w.source else None
        if g is None:
            continue
        for d in deep_valuations(g, r.high):
            form = path_log_discrepancy_form(g, d.path)
            if form.slope != 0:
                points.append((Fraction(1, 7) - form.constant) / form.slope)
    return min(points) if points else None


def _check_tmax(r: CaseRecord) -> Check:
    s = r.surface
    tm = solve_b(s)
    if not isinstance(tm, Fraction):
        return Check("t_max", False, fmt_rat(r.high), "no solution")
    if not r.high_open:
        return Check("t_max", tm == r.high, f"t_max = {fmt_rat(r.high)}", f"t_max = {fmt_rat(tm)}")
    if r.endpoint_delta is not None:
        # the annotated endpoint value is checked on its own
        return Check("t_max", tm >= r.high, f"t_max >= {fmt_rat(r.high)}", f"t_max = {fmt_rat(tm)}")
    rep = _safe_delta(s, r.high)
    degenerate = rep is None or rep.delta != 1
    point = degeneration_point(r) if rep is not None else r.high
    if rep is None:
        point = r.high if tm > r.high else None
    ok = tm >= r.high and degenerate and point == r.high
    return Check(
        "t_max",
        ok,
        f"t_max >= {fmt_rat(r.high)}, degenerates exactly at {fmt_rat(r.high)}",
        f"t_max = {fmt_rat(tm)}, delta {_delta_text(rep)} at endpoint, degenerates at {fmt_rat(point) if point is not None else 'none'}",
    )


def _check_delta(r: CaseRecord) -> Check:
    # an empty printed interval collapses to its lower end
    samples = [r.low, (r.low + max(r.low, r.high)) / 2]
    values = []
    for t in samples:
        values.append(_delta_text(_safe_delta(r.surface, t)))
    ok = r.low == SIXSEVENTHS and all(v == "1" for v in values)
    return Check(
        "delta",
        ok,
        "low = 6/7, delta 1 at 6/7 and midpoint",
        f"low = {fmt_rat(r.low)}, delta " + ", ".join(values),
    )


def marker_data(r: CaseRecord):
    """``(p_a, C~^2)`` of C computed from the surface alone."""
    s = r.surface
    tm = solve_b(s)
    adj = adjunction(s, tm, 0)
    return adj.pa_intersection, adj.c2_intersection - sum(
        (Fraction(q.q, q.n) for q in s.points_on_c() if q is not None), Fraction(0)
    ), adj


def _check_marker(r: CaseRecord) -> Check:
    try:
        pa, c2t, _adj = marker_data(r)
    except (ValueError, ArithmeticError) as exc:
        return Check("marker", False, str(r.marker), f"error: {exc}")
    tm = solve_b(r.surface)
    if r.marker == "ell":
        ok = pa == 1 and tm < NODE_LIMIT
        return Check("marker", ok, "p_a = 1 (node shallow)", f"p_a = {fmt_rat(pa)}, t_max = {fmt_rat(tm)}")
    ok = pa == 0 and c2t == r.marker
    return Check("marker", ok, f"p_a = 0, C~^2 = {r.marker}", f"p_a = {fmt_rat(pa)}, C~^2 = {fmt_rat(c2t)}")


def _check_positivity(r: CaseRecord) -> Check:
    s = r.surface
    c2 = s.dot(s.c_name, s.c_name)
    form = s.degree_form()
    # with a positive slope, nefness on the interval is the t_max condition
    ok = c2 > 0 and form.slope > 0
    return Check(
        "positivity",
        ok,
        "C^2 > 0, (K+D).A increasing in t",
        f"C^2 = {fmt_rat(c2)}, (K+D).A = {form.to_text('t')}",
    )


def _check_endpoint(r: CaseRecord) -> Check:
    if r.endpoint_delta is None:
        return Check("endpoint", True, "no annotation", "skipped")
    rep = _safe_delta(r.surface, r.high)
    return Check("endpoint", rep is not None and rep.delta == r.endpoint_delta, str(r.endpoint_delta), _delta_text(rep))


def _check_structure(r: CaseRecord) -> Check:
    s = r.surface
    problems = incidence_lint(r)
    if not s.is_wps:
        g = s.surface
        names = g.handle_names()
        gr = rank(g.gram(names))
        if gr != 1:
            problems.append(f"Picard rank of handles is {gr}")
    return Check("structure", not problems, "consistent incidences, rank 1", "; ".join(problems) or "ok")


def verify_case(r: CaseRecord) -> VerificationReport:
    checks = [
        _check_tmax(r),
        _check_delta(r),
        _check_marker(r),
        _check_positivity(r),
        _check_endpoint(r),
        _check_structure(r),
    ]
    return VerificationReport(r.id, checks)


def _id_key(rid: str):
    return [int(x) if x.isdigit() else x for x in re.split(r"(\d+)", rid)]


@dataclass
class Summary:
    reports: list

    @property
    def passed(self):
        return sum(1 for r in self.reports if r.passed)

    @property
    def failed(self):
        return len(self.reports) - self.passed

    def family_counts(self, records):
        fam_of = {r.id: r.family for r in records}
        status = {}
        for rep in self.reports:
            f = fam_of[rep.record_id]
            status[f] = status.get(f, True) and rep.passed
        return sum(status.values()), len(status)


def verify_all(records, parallel: bool = False) -> Summary:
    ordered = sorted(records, key=lambda r: _id_key(r.id))
    if parallel:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor() as ex:
            reports = list(ex.map(verify_case, ordered))
    else:
        reports = [verify_case(r) for r in ordered]
    return Summary(reports)


def find_records(records, key: str):
    """Records matching an id exactly, or all records of a family / parametrised row."""
    exact = [r for r in records if r.id == key]
    if exact:
        return exact
    if key.isdigit():
        return [r for r in records if r.family == int(key)]
    return [r for r in records if r.id.split("/")[0].split("[")[0] == key]
