"""The logarithmic Jacobian ideal and its blowup charts, in any
characteristic, plus the composite Nash / normalized-Nash step.

The exponent set of the ideal collects sums of rank-many generators whose
determinant survives in the base field; each minimal exponent yields an
affine chart, redundant charts are absorbed (their defining monomial ratio
is a unit), and survivors are quotiented by units and optionally saturated.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .cones import dual_rays, saturate
from .intlinalg import NoSolution, determinant, dot, hermite_normal_form, solve_rational, vsub
from .semigroups import AffineSemigroup, NotPointedError, unit_quotient


class EmptyLogJacobian(ValueError):
    """No rank-subset of the generators has nonzero determinant in the base
    field; the blowup is undefined."""


def validate_characteristic(ch) -> int:
    """Characteristics are 0 or a prime number."""
    if isinstance(ch, bool) or not isinstance(ch, int):
        raise ValueError("characteristic must be an integer (0 or a prime)")
    if ch == 0:
        return 0
    if ch < 2:
        raise ValueError(f"characteristic must be 0 or a prime, got {ch}")
    k = 2
    while k * k <= ch:
        if ch % k == 0:
            raise ValueError(f"characteristic must be 0 or a prime, got {ch}")
        k += 1
    return ch


@dataclass(frozen=True)
class MonomialIdeal:
    """Finite exponent set inside an ambient semigroup, sorted and
    duplicate-free."""

    ambient: AffineSemigroup
    exponents: tuple

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(sorted(set(self.exponents))))


@dataclass(frozen=True)
class Chart:
    """One affine chart of a monomial-ideal blowup.

    ``semigroup`` is generated by the ambient generators together with all
    exponent differences against ``base_exponent`` (same lattice as the
    ambient).  ``vertex`` marks bases that are vertices of the Newton
    polyhedron (advisory), ``absorbed_by`` points at a chart that makes this
    one redundant.
    """

    base_exponent: tuple
    semigroup: AffineSemigroup
    vertex: bool
    vertex_certificate: tuple | None
    absorbed_by: int | None


@dataclass(frozen=True)
class StepChart:
    """A surviving chart after unit quotient (and optional saturation)."""

    base_exponent: tuple
    semigroup: AffineSemigroup
    unit_rank: int
    vertex: bool


def log_jacobian(s: AffineSemigroup, ch) -> MonomialIdeal:
    """Exponents ``a_{i1} + ... + a_{id}`` over rank-subsets of the
    generators with ``det(a_{i1}, ..., a_{id})`` nonzero in characteristic
    ``ch`` (nonzero in Z for ch = 0, nonzero mod p for ch = p)."""
    ch = validate_characteristic(ch)
    if not s.is_pointed:
        raise NotPointedError("log_jacobian expects a pointed semigroup")
    d = s.rank
    exps = set()
    for sub in combinations(s.generators, d):
        dv = determinant([[g[i] for i in range(d)] for g in sub])
        if (dv != 0) if ch == 0 else (dv % ch != 0):
            exps.add(tuple(sum(g[i] for g in sub) for i in range(d)))
    if not exps:
        raise EmptyLogJacobian(
            f"every rank-subset determinant vanishes in characteristic {ch}"
        )
    return MonomialIdeal(ambient=s, exponents=tuple(sorted(exps)))


def minimalize(ideal: MonomialIdeal) -> MonomialIdeal:
    """Inclusion-minimal exponent set generating the same monomial ideal:
    drop m whenever m ∈ m' + Γ for another exponent m'."""
    s = ideal.ambient
    ell = s.positive_functional()
    order = sorted(ideal.exponents, key=lambda m: (dot(ell, m), m))
    kept = []
    for m in order:
        em = dot(ell, m)
        reducible = False
        for m2 in kept:
            if dot(ell, m2) >= em:
                break
            if s.member(vsub(m, m2)):
                reducible = True
                break
        if not reducible:
            kept.append(m)
    return MonomialIdeal(ambient=s, exponents=tuple(sorted(kept)))


def _hnf_rows_and_pivots(vectors):
    H, _ = hermite_normal_form(list(vectors))
    rows = [tuple(r) for r in H if any(r)]
    pivots = [next(j for j, x in enumerate(r) if x) for r in rows]
    return rows, pivots


def _in_lattice(rows, pivots, v):
    """Integer membership of v in the lattice spanned by HNF rows."""
    v = list(v)
    for row, p in zip(rows, pivots):
        if v[p] % row[p] != 0:
            return False
        c = v[p] // row[p]
        if c:
            for j in range(p, len(v)):
                v[j] -= c * row[j]
    return not any(v)


def blowup_charts(ideal: MonomialIdeal) -> list:
    """One chart per exponent, with vertex flags and absorption.

    Vertex flags come from a single double description of the homogenized
    Newton cone (exponents at height 1, recession generators at height 0):
    an exponent is a vertex iff its lift is an extreme ray, and the sum of
    its tight facet normals is a strict separating functional, checked
    before the flag is set.

    Chart j is absorbed by chart i iff m_j - m_i is a unit of chart j's
    semigroup (equivalently both differences lie in that semigroup); units
    form the lattice spanned by the chart generators inside the lineality
    space, so the test is exact lattice membership.  Among charts absorbing
    each other mutually (equal semigroups) the lexicographically first base
    exponent survives.
    """
    s = ideal.ambient
    d = s.rank
    exps = ideal.exponents
    n = len(exps)

    lifted = [e + (1,) for e in exps] + [g + (0,) for g in s.generators]
    facets, equations = dual_rays(lifted, d + 1)
    if equations:
        raise AssertionError("Newton cone of a full-rank semigroup must be full-dimensional")
    vertex_flags = []
    vertex_certs = []
    for e in exps:
        lift = e + (1,)
        tight = [f for f in facets if dot(f, lift) == 0]
        if tight:
            H, _ = hermite_normal_form(tight)
            rk = sum(1 for row in H if any(row))
        else:
            rk = 0
        is_vertex = rk == d
        cert = None
        if is_vertex:
            cert = tuple(sum(f[i] for f in tight) for i in range(d))
            for other in exps:
                if other != e and not dot(cert, e) < dot(cert, other):
                    raise AssertionError("vertex certificate failed verification")
            for g in s.generators:
                if not dot(cert, g) > 0:
                    raise AssertionError("vertex certificate failed verification")
        vertex_flags.append(is_vertex)
        vertex_certs.append(cert)

    chart_semigroups = []
    unit_lattices = []
    for e in exps:
        gens = list(s.generators) + [vsub(o, e) for o in exps if o != e]
        # differences of lattice points: same ambient lattice, already canonical
        chart = AffineSemigroup(d, gens)
        chart_semigroups.append(chart)
        units = chart.unit_group_generators()
        unit_lattices.append(_hnf_rows_and_pivots(units) if units else ((), ()))

    def absorbs(j, i):
        diff = vsub(exps[j], exps[i])
        if not any(diff):
            return True
        rows, pivots = unit_lattices[j]
        return bool(rows) and _in_lattice(rows, pivots, diff)

    rel = [[absorbs(j, i) if i != j else False for i in range(n)] for j in range(n)]
    absorbed_by = []
    for j in range(n):
        target = None
        for i in range(n):
            if i != j and rel[j][i] and not rel[i][j]:
                target = i
                break
        if target is None:
            for i in range(j):
                if rel[j][i] and rel[i][j]:
                    target = i
                    break
        absorbed_by.append(target)

    return [
        Chart(
            base_exponent=exps[j],
            semigroup=chart_semigroups[j],
            vertex=vertex_flags[j],
            vertex_certificate=vertex_certs[j],
            absorbed_by=absorbed_by[j],
        )
        for j in range(n)
    ]


def step_charts(s: AffineSemigroup, ch, normalized: bool) -> list:
    """Surviving charts of one (normalized) Nash blowup step, each presented
    by its minimal generators after quotienting units (and saturating when
    ``normalized``); ordered by base exponent."""
    ideal = minimalize(log_jacobian(s, ch))
    out = []
    for chart in blowup_charts(ideal):
        if chart.absorbed_by is not None:
            continue
        pointed, unit_rank = unit_quotient(chart.semigroup)
        if pointed.rank == 0:
            sg = pointed
        elif normalized:
            basis = saturate(pointed.generators, pointed.rank)
            sg = AffineSemigroup(pointed.rank, basis, _minimal=tuple(basis))
        else:
            minimal = pointed.minimal_generators()
            sg = AffineSemigroup(pointed.rank, minimal, _minimal=minimal)
        out.append(
            StepChart(
                base_exponent=chart.base_exponent,
                semigroup=sg,
                unit_rank=unit_rank,
                vertex=chart.vertex,
            )
        )
    return out


def nash_step(s: AffineSemigroup, ch, normalized: bool) -> list:
    """Chart semigroups of one Nash (or normalized Nash) blowup step in
    characteristic ``ch``, in lexicographic generator order."""
    charts = step_charts(s, ch, normalized)
    return [
        c.semigroup
        for c in sorted(charts, key=lambda c: (c.semigroup.rank, c.semigroup.generators))
    ]
