"""Affine semigroups: canonicalization, membership, minimal generators,
unit quotients, smoothness, and isomorphism up to unimodular change of
lattice coordinates.

A semigroup is the set of N-combinations of finitely many integer vectors.
After :func:`canonicalize` the generated group is the full lattice Z^rank,
which every blowup-facing operation assumes.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .cones import Cone
from .intlinalg import (
    determinant,
    dot,
    hermite_normal_form,
    kernel_basis,
    smith_normal_form,
    solve_rational,
    vsub,
)


class NotPointedError(ValueError):
    """Operation needs a pointed semigroup; apply unit_quotient first."""


class AffineSemigroup:
    """Semigroup generated by integer vectors in Z^rank.

    The generator list is deduplicated, zero-free and sorted; caches for the
    cone, minimal generators and membership are built lazily and never
    mutate observable state.
    """

    def __init__(self, rank, generators, lattice_basis=None, _minimal=None):
        gens = tuple(sorted({tuple(g) for g in generators if any(g)}))
        for g in gens:
            if len(g) != rank:
                raise ValueError("generator has wrong dimension")
        if rank < 0:
            raise ValueError("rank must be nonnegative")
        if rank > 0 and not gens:
            raise ValueError("semigroup of positive rank needs a nonzero generator")
        self.rank = rank
        self.generators = gens
        self.lattice_basis = lattice_basis
        self._cone = None
        self._functional = None
        self._member_cache = {}
        self._mingens = _minimal
        self._key = None

    def __eq__(self, other):
        return (
            isinstance(other, AffineSemigroup)
            and self.rank == other.rank
            and self.generators == other.generators
        )

    def __hash__(self):
        return hash((self.rank, self.generators))

    def __repr__(self):
        return f"AffineSemigroup(rank={self.rank}, generators={list(self.generators)})"

    def __getstate__(self):
        return (self.rank, self.generators, self.lattice_basis, self._mingens)

    def __setstate__(self, state):
        rank, gens, basis, minimal = state
        self.__init__(rank, gens, lattice_basis=basis, _minimal=minimal)

    @property
    def cone(self):
        if self._cone is None:
            self._cone = Cone(self.rank, self.generators)
        return self._cone

    @property
    def is_pointed(self):
        return self.cone.is_pointed

    def positive_functional(self):
        """Integer functional strictly positive on every nonzero semigroup
        element (sum of the facet normals); requires a pointed semigroup."""
        if self._functional is None:
            if not self.is_pointed:
                raise NotPointedError("no strictly positive functional on a non-pointed semigroup")
            f = tuple(
                sum(fac[i] for fac in self.cone.facets) for i in range(self.rank)
            )
            for g in self.generators:
                if dot(f, g) <= 0:
                    raise AssertionError("positive functional failed on a generator")
            self._functional = f
        return self._functional

    def unit_group_generators(self):
        """Generators lying in the lineality space of the cone; they span the
        unit group U(Γ) = Γ ∩ (−Γ) as a lattice."""
        cone = self.cone
        return tuple(g for g in self.generators if cone.contains(tuple(-x for x in g)))

    def member(self, v) -> bool:
        """Whether v is an N-combination of the generators.

        Depth-first search over v minus partial sums, pruned by cone
        containment and graded by a strictly positive functional, memoized
        across calls.  Requires a pointed semigroup (termination bound).
        """
        v = tuple(v)
        if len(v) != self.rank:
            raise ValueError("vector has wrong dimension")
        if not any(v):
            return True
        if not self.is_pointed:
            raise NotPointedError("member requires a pointed semigroup; apply unit_quotient first")
        cache = self._member_cache
        hit = cache.get(v)
        if hit is not None:
            return hit
        ell = self.positive_functional()
        graded = sorted((dot(ell, g), g) for g in self.generators)
        cone = self.cone
        stack = [[v, None, 0]]
        while stack:
            frame = stack[-1]
            x = frame[0]
            if x in cache:
                stack.pop()
                continue
            if frame[1] is None:
                if not cone.contains(x):
                    cache[x] = False
                    stack.pop()
                    continue
                ex = dot(ell, x)
                kids = []
                for ev, g in graded:
                    if ev > ex:
                        break
                    kids.append(vsub(x, g))
                frame[1] = kids
            kids = frame[1]
            i = frame[2]
            outcome = None
            push = None
            while i < len(kids):
                y = kids[i]
                if not any(y):
                    outcome = True
                    break
                r = cache.get(y)
                if r is True:
                    outcome = True
                    break
                if r is None:
                    push = y
                    break
                i += 1
            frame[2] = i
            if outcome:
                cache[x] = True
                stack.pop()
            elif push is not None:
                stack.append([push, None, 0])
            else:
                cache[x] = False
                stack.pop()
        return cache[v]

    def minimal_generators(self):
        """The unique inclusion-minimal generating set (pointed case): the
        elements of Γ not expressible as a sum of two nonzero elements."""
        if self._mingens is None:
            if self.rank == 0:
                self._mingens = ()
                return self._mingens
            if not self.is_pointed:
                raise NotPointedError("minimal generators are only unique for pointed semigroups")
            ell = self.positive_functional()
            order = sorted(self.generators, key=lambda g: (dot(ell, g), g))
            kept = []
            for g in order:
                eg = dot(ell, g)
                reducible = False
                for h in kept:
                    if dot(ell, h) >= eg:
                        break
                    if self.member(vsub(g, h)):
                        reducible = True
                        break
                if not reducible:
                    kept.append(g)
            self._mingens = tuple(sorted(kept))
        return self._mingens


def canonicalize(gens) -> AffineSemigroup:
    """Re-coordinatize so the generated group is the full lattice.

    Takes arbitrary integer vectors, drops zeros and duplicates, computes a
    lattice basis of the generated group (Hermite normal form) and rewrites
    every generator in that basis.  The basis rows are recorded on the result
    as ``lattice_basis`` (new coordinates -> original lattice).
    """
    pts = [tuple(g) for g in gens]
    if not pts:
        raise ValueError("no generators given")
    dim = len(pts[0])
    for p in pts:
        if len(p) != dim:
            raise ValueError("generators have mixed dimensions")
    nz = sorted({p for p in pts if any(p)})
    if not nz:
        raise ValueError("all generators are zero")
    H, _ = hermite_normal_form(nz)
    basis = [row for row in H if any(row)]
    r = len(basis)
    Bt = [[basis[i][j] for i in range(r)] for j in range(dim)]
    out = []
    for g in nz:
        x = solve_rational(Bt, g)
        if any(c.denominator != 1 for c in x):
            raise AssertionError("generator not in its own lattice basis span")
        out.append(tuple(int(c) for c in x))
    return AffineSemigroup(r, out, lattice_basis=tuple(tuple(row) for row in basis))


def unit_quotient(s: AffineSemigroup):
    """Quotient by the saturation of the unit group.

    Returns ``(pointed_image, unit_rank)``; a pointed input comes back
    unchanged with unit rank 0.
    """
    units = s.unit_group_generators()
    if not units:
        return s, 0
    d = s.rank
    F = kernel_basis(units)
    if F:
        sat = kernel_basis(F)
    else:
        sat = [tuple(1 if i == j else 0 for j in range(d)) for i in range(d)]
    u = len(sat)
    M = [[sat[j][i] for j in range(u)] for i in range(d)]
    S, P, _ = smith_normal_form(M)
    for i in range(u):
        if S[i][i] != 1:
            raise AssertionError("saturated lattice must have unit invariant factors")
    img = []
    for g in s.generators:
        y = [dot(P[i], g) for i in range(d)]
        img.append(tuple(y[u:]))
    img = [g for g in img if any(g)]
    return AffineSemigroup(d - u, img), u


def is_smooth(s: AffineSemigroup) -> bool:
    """Toric smoothness: after quotienting units, the pointed part must be
    free on a lattice basis (rank many minimal generators, determinant ±1)."""
    pointed, _ = unit_quotient(s)
    if pointed.rank == 0:
        return True
    mg = pointed.minimal_generators()
    if len(mg) != pointed.rank:
        return False
    M = [[g[i] for i in range(pointed.rank)] for g in mg]
    return abs(determinant(M)) == 1


@dataclass(frozen=True)
class IsoCertificate:
    """Witness of a torus-equivariant isomorphism: a unimodular matrix U with
    U · (minimal generators of source) = minimal generators of target."""

    matrix: tuple
    mapping: tuple  # pairs (source minimal generator, its image)

    def apply(self, v):
        return tuple(dot(row, v) for row in self.matrix)

    def verify(self, source: AffineSemigroup, target: AffineSemigroup) -> bool:
        if source.rank != target.rank:
            return False
        d = source.rank
        if d == 0:
            return target.rank == 0
        if len(self.matrix) != d or abs(determinant([list(r) for r in self.matrix])) != 1:
            return False
        src = source.minimal_generators()
        tgt = set(target.minimal_generators())
        image = {self.apply(g) for g in src}
        if image != tgt or len(image) != len(src):
            return False
        return all(self.apply(a) == b for a, b in self.mapping)


def isomorphic(a: AffineSemigroup, b: AffineSemigroup):
    """Search for a unimodular map carrying the minimal generators of ``a``
    bijectively onto those of ``b``; returns a verified
    :class:`IsoCertificate` or None.

    Pruned by rank, minimal-generator count and the value multiset of the
    canonical positive functional (all isomorphism invariants); then anchors
    a basis inside the minimal generators of ``a`` and tries value-compatible
    image tuples in ``b``.
    """
    if a.rank != b.rank:
        return None
    d = a.rank
    if d == 0:
        return IsoCertificate(matrix=(), mapping=())
    if not a.is_pointed or not b.is_pointed:
        raise NotPointedError("isomorphism search expects pointed semigroups")
    ma, mb = a.minimal_generators(), b.minimal_generators()
    if len(ma) != len(mb):
        return None
    ella, ellb = a.positive_functional(), b.positive_functional()
    if sorted(dot(ella, g) for g in ma) != sorted(dot(ellb, g) for g in mb):
        return None
    anchor = []
    for g in ma:
        stacked = anchor + [g]
        H, _ = hermite_normal_form(stacked)
        if sum(1 for row in H if any(row)) == len(stacked):
            anchor.append(g)
        if len(anchor) == d:
            break
    if len(anchor) < d:
        return None  # minimal generators do not span: cannot happen for canonical pointed inputs
    A_cols = [[anchor[j][i] for j in range(d)] for i in range(d)]
    det_a = abs(determinant(A_cols))
    anchor_vals = [dot(ella, g) for g in anchor]
    by_val = {}
    for g in mb:
        by_val.setdefault(dot(ellb, g), []).append(g)
    source_set = set(ma)
    target_set = set(mb)

    used = set()
    pick = [None] * d

    def attempt():
        B_cols = [[pick[j][i] for j in range(d)] for i in range(d)]
        if abs(determinant(B_cols)) != det_a:
            return None
        # U * anchor_j = pick_j for all j: solve A^T u_t = (pick values) per row
        At = [[A_cols[j][i] for j in range(d)] for i in range(d)]
        rows = []
        for t in range(d):
            rhs = [pick[j][t] for j in range(d)]
            x = solve_rational(At, rhs)
            if any(c.denominator != 1 for c in x):
                return None
            rows.append(tuple(int(c) for c in x))
        if abs(determinant([list(r) for r in rows])) != 1:
            return None
        image = {tuple(dot(r, g) for r in rows) for g in source_set}
        if image != target_set:
            return None
        mapping = tuple(sorted((g, tuple(dot(r, g) for r in rows)) for g in ma))
        return IsoCertificate(matrix=tuple(rows), mapping=mapping)

    def dfs(i):
        if i == d:
            return attempt()
        for g in by_val.get(anchor_vals[i], ()):
            if g in used:
                continue
            used.add(g)
            pick[i] = g
            found = dfs(i + 1)
            used.discard(g)
            if found is not None:
                return found
        return None

    cert = dfs(0)
    if cert is not None and not cert.verify(a, b):
        raise AssertionError("isomorphism certificate failed re-verification")
    return cert


def invariant_key(s: AffineSemigroup) -> bytes:
    """Byte string constant on isomorphism classes (necessary, never
    sufficient): rank, minimal generator count, and the sorted multiset of
    absolute rank-minors of the minimal generators."""
    if s._key is None:
        if s.rank == 0:
            payload = (0, 0, ())
        else:
            mg = s.minimal_generators()
            dets = sorted(
                abs(determinant([[g[i] for i in range(s.rank)] for g in sub]))
                for sub in combinations(mg, s.rank)
            )
            payload = (s.rank, len(mg), tuple(dets))
        s._key = repr(payload).encode("ascii")
    return s._key


def to_json_dict(s: AffineSemigroup) -> dict:
    return {"rank": s.rank, "generators": [list(g) for g in s.generators]}


def from_json_dict(data) -> AffineSemigroup:
    """Parse the canonical JSON form and canonicalize the result."""
    if not isinstance(data, dict):
        raise ValueError("semigroup JSON must be an object")
    if "generators" not in data:
        raise ValueError("semigroup JSON needs a 'generators' field")
    gens = data["generators"]
    if not isinstance(gens, list) or not gens:
        raise ValueError("'generators' must be a nonempty list of integer vectors")
    rank = data.get("rank")
    for g in gens:
        if not isinstance(g, list) or not all(isinstance(x, int) for x in g):
            raise ValueError("generators must be lists of integers")
        if rank is not None and len(g) != rank:
            raise ValueError("generator length disagrees with 'rank'")
    return canonicalize(gens)
