"""Blowup core: logarithmic Jacobian ideals, minimalization, charts,
absorption, vertex certificates, and the composed step."""
import random

import pytest

from nashlab.blowup import (
    EmptyLogJacobian,
    MonomialIdeal,
    blowup_charts,
    log_jacobian,
    minimalize,
    nash_step,
    step_charts,
    validate_characteristic,
)
from nashlab.cones import saturate
from nashlab.intlinalg import dot
from nashlab.semigroups import AffineSemigroup, NotPointedError, canonicalize, is_smooth, isomorphic

from .helpers import _lattice_contains, scramble, smooth_corpus


def test_validate_characteristic():
    for ch in (0, 2, 3, 5, 7, 97):
        assert validate_characteristic(ch) == ch
    for bad in (1, 4, 6, -3, 2.5, True, "2"):
        with pytest.raises(ValueError):
            validate_characteristic(bad)


def test_log_jacobian_of_the_cusp():
    s = canonicalize([(2,), (3,)])
    ideal = log_jacobian(s, 0)
    assert ideal.exponents == ((2,), (3,))
    # characteristic 2 kills the even generator's determinant
    ideal2 = log_jacobian(s, 2)
    assert ideal2.exponents == ((3,),)
    ideal3 = log_jacobian(s, 3)
    assert ideal3.exponents == ((2,),)


def test_log_jacobian_quadric_surface():
    s = canonicalize([(1, 0), (1, 1), (1, 2)])
    ideal = log_jacobian(s, 0)
    # dets: (1,0),(1,1) -> 1; (1,0),(1,2) -> 2; (1,1),(1,2) -> 1
    assert ideal.exponents == ((2, 1), (2, 2), (2, 3))
    ideal2 = log_jacobian(s, 2)
    assert ideal2.exponents == ((2, 1), (2, 3))


def test_log_jacobian_requires_pointed():
    with pytest.raises(NotPointedError):
        log_jacobian(AffineSemigroup(1, [(1,), (-1,)]), 0)


def test_log_jacobian_empty_in_characteristic_dividing_all_minors():
    # deliberately non-canonical: the index-2 sublattice 2Z inside Z
    s = AffineSemigroup(1, [(2,)])
    with pytest.raises(EmptyLogJacobian):
        log_jacobian(s, 2)
    assert log_jacobian(s, 3).exponents == ((2,),)


def test_minimalize_drops_ideal_redundant_exponents():
    s = canonicalize([(1, 0), (0, 1)])
    ideal = MonomialIdeal(ambient=s, exponents=((1, 0), (2, 0), (1, 1)))
    assert minimalize(ideal).exponents == ((1, 0),)
    # incomparable exponents all stay
    ideal2 = MonomialIdeal(ambient=s, exponents=((2, 0), (0, 3)))
    assert minimalize(ideal2).exponents == ((0, 3), (2, 0))


def test_minimalize_cusp_keeps_both():
    s = canonicalize([(2,), (3,)])
    ideal = log_jacobian(s, 0)
    # (3)-(2) = 1 is not in the semigroup, so both exponents are minimal
    assert minimalize(ideal).exponents == ((2,), (3,))


def test_blowup_charts_of_the_cusp():
    s = canonicalize([(2,), (3,)])
    charts = blowup_charts(minimalize(log_jacobian(s, 0)))
    assert [c.base_exponent for c in charts] == [(2,), (3,)]
    # chart at 2: {2,3,1} = N; chart at 3 contains -1, so it is absorbed
    assert charts[0].absorbed_by is None
    assert charts[1].absorbed_by == 0
    assert charts[0].semigroup.generators == ((1,), (2,), (3,))
    # Newton polyhedron of {2,3} on N: 2 is the only vertex
    assert charts[0].vertex is True
    assert charts[1].vertex is False
    cert = charts[0].vertex_certificate
    assert cert is not None and dot(cert, (2,)) < dot(cert, (3,))


def test_vertex_certificates_strictly_separate():
    rng = random.Random(401)
    for s in smooth_corpus(rng, 4) + [canonicalize([(1, 0), (1, 1), (1, 2)])]:
        ideal = minimalize(log_jacobian(s, 0))
        charts = blowup_charts(ideal)
        assert any(c.vertex for c in charts)
        for c in charts:
            if c.vertex:
                w = c.vertex_certificate
                for other in ideal.exponents:
                    if other != c.base_exponent:
                        assert dot(w, other) > dot(w, c.base_exponent)
                for g in s.generators:
                    assert dot(w, g) > 0
            else:
                assert c.vertex_certificate is None


def test_absorption_flags_are_unit_lattice_facts():
    """absorbed_by must point at a chart whose base differs by a unit of the
    absorbed chart's semigroup (checked against an independent unit-lattice
    computation)."""
    rng = random.Random(402)
    from .helpers import brute_dual_rays

    for gens in ([(2,), (3,)], [(1, 0), (1, 1), (1, 2)], [(1, 0), (2, 1), (1, 3)]):
        s = canonicalize(gens)
        ideal = minimalize(log_jacobian(s, 0))
        charts = blowup_charts(ideal)
        for j, c in enumerate(charts):
            cg = c.semigroup.generators
            facets, equations = brute_dual_rays(cg, s.rank)
            units = [
                g
                for g in cg
                if all(dot(f, g) == 0 for f in facets)
                and all(dot(e, g) == 0 for e in equations)
            ]
            for i, other in enumerate(charts):
                diff = tuple(a - b for a, b in zip(c.base_exponent, other.base_exponent))
                in_units = _lattice_contains(units, diff)
                if c.absorbed_by == i:
                    assert in_units
            if c.absorbed_by is None:
                # no strict absorber and no earlier mutual partner
                for i, other in enumerate(charts):
                    if i == j:
                        continue
                    diff = tuple(a - b for a, b in zip(c.base_exponent, other.base_exponent))
                    if _lattice_contains(units, diff):
                        # must be mutual with a later index
                        assert i > j


def test_nash_step_resolves_cusp_in_characteristic_zero():
    s = canonicalize([(2,), (3,)])
    charts = nash_step(s, 0, False)
    assert len(charts) == 1
    assert is_smooth(charts[0])


def test_nash_step_is_identity_on_cusp_in_characteristic_two():
    s = canonicalize([(2,), (3,)])
    charts = nash_step(s, 2, False)
    assert len(charts) == 1
    assert isomorphic(charts[0], s) is not None


def test_nash_step_single_iso_chart_on_smooth_inputs():
    rng = random.Random(403)
    for s in smooth_corpus(rng, 6):
        charts = nash_step(s, 0, False)
        assert len(charts) == 1
        assert isomorphic(charts[0], s) is not None


def test_step_charts_metadata_and_normalization():
    s = canonicalize([(1, 0), (1, 1), (1, 2)])  # A1
    plain = step_charts(s, 0, False)
    assert all(c.unit_rank >= 0 for c in plain)
    assert [c.base_exponent for c in plain] == sorted(c.base_exponent for c in plain)
    norm = step_charts(s, 0, True)
    for c in norm:
        if c.semigroup.rank > 0:
            assert c.semigroup.generators == saturate(c.semigroup.generators, c.semigroup.rank)


def test_nash_step_invariant_under_scrambling():
    """Charts of a scrambled copy are the scrambles of the charts."""
    rng = random.Random(404)
    s = canonicalize([(1, 0), (1, 1), (1, 2)])
    t = scramble(s, rng)
    cs = nash_step(s, 0, False)
    ct = nash_step(t, 0, False)
    assert len(cs) == len(ct)
    matched = set()
    for a in cs:
        hit = next(
            i for i, b in enumerate(ct) if i not in matched and isomorphic(a, b) is not None
        )
        matched.add(hit)


def test_blowup_charts_reports_all_exponents():
    s = canonicalize([(1, 0), (1, 1), (1, 2)])
    ideal = minimalize(log_jacobian(s, 0))
    charts = blowup_charts(ideal)
    assert [c.base_exponent for c in charts] == list(ideal.exponents)
    survivors = [c for c in charts if c.absorbed_by is None]
    assert survivors
