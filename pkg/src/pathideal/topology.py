"""Clutters, vertex covers, shellability, minors and sequential Cohen-Macaulayness.

A clutter is an antichain of vertex subsets (edges) stored as bitmasks.
Its cover complex has one facet per minimal vertex cover, namely the
complement; a clutter in which every minor keeps a vertex lying in a
single edge (the free vertex property) has a shellable cover complex,
and shellable complexes are sequentially Cohen-Macaulay.  This module
makes each link of that chain executable on desk-scale instances.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .caps import (
    COVER_CAP_N,
    MINOR_CAP_N,
    SEQ_CM_CAP_N,
    SHELLING_CAP_FACETS,
    CapExceeded,
)
from .complexes import SimplicialComplex, homology_dims_of_faces
from .fields import FieldSpec
from .monomials import MonomialIdeal, iter_bits
from .pathfamily import PathParams


@dataclass(frozen=True)
class Clutter:
    """An antichain of edges (bitmasks) over an ambient vertex set."""

    n: int
    edges: tuple[int, ...]

    def __post_init__(self) -> None:
        keys = [tuple(iter_bits(e)) for e in self.edges]
        if keys != sorted(keys) or len(set(keys)) != len(keys):
            raise ValueError("edges not canonically sorted; use from_edges()")
        for a in self.edges:
            if a == 0 or a >> self.n:
                raise ValueError("edge empty or outside the vertex set")
            for b in self.edges:
                if a != b and a & b == a:
                    raise ValueError("edges are not an antichain; use from_edges()")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[int]) -> "Clutter":
        unique = sorted(set(edges), key=lambda e: e.bit_count())
        kept: list[int] = []
        for e in unique:
            if not any(f & e == f for f in kept):
                kept.append(e)
        kept.sort(key=lambda e: tuple(iter_bits(e)))
        return cls(n, tuple(kept))

    @property
    def support(self) -> int:
        mask = 0
        for e in self.edges:
            mask |= e
        return mask

    def __str__(self) -> str:
        body = ",".join("{" + ",".join(str(i) for i in iter_bits(e)) + "}" for e in self.edges)
        return f"n={self.n}; {body}"


def clutter_from_text(text: str) -> Clutter:
    match = re.fullmatch(r"\s*n\s*=\s*(\d+)\s*;\s*(.*)", text, re.DOTALL)
    if not match:
        raise ValueError(f"cannot parse clutter text {text!r}")
    n = int(match.group(1))
    edges = []
    for part in re.findall(r"\{([^}]*)\}", match.group(2)):
        mask = 0
        for t in part.split(","):
            mask |= 1 << (int(t) - 1)
        edges.append(mask)
    return Clutter.from_edges(n, edges)


def clutter_of(ideal: MonomialIdeal) -> Clutter:
    """The clutter whose edges are the generator supports."""
    if not ideal.is_proper_nonzero:
        raise ValueError("clutter requires a proper nonzero ideal")
    return Clutter(ideal.n, ideal.gen_masks())


def minimal_vertex_covers(clutter: Clutter, cap: int = COVER_CAP_N) -> tuple[int, ...]:
    """All inclusion-minimal transversals, canonically ordered, as bitmasks.

    A cover is minimal iff each of its vertices has a private edge (an edge
    it covers alone).
    """
    if not clutter.edges:
        raise ValueError("cover enumeration requires at least one edge")
    if clutter.n > cap:
        raise CapExceeded(f"n={clutter.n} exceeds cap {cap}")
    edges = clutter.edges
    covers = []
    for a in range(1 << clutter.n):
        if any(not a & e for e in edges):
            continue
        minimal = True
        rest = a
        while rest:
            bit = rest & -rest
            rest ^= bit
            if not any(e & a == bit for e in edges):
                minimal = False
                break
        if minimal:
            covers.append(a)
    covers.sort(key=lambda a: tuple(iter_bits(a)))
    return tuple(covers)


def cover_complex(clutter: Clutter, cap: int = COVER_CAP_N) -> SimplicialComplex:
    """The complex whose facets are the complements of the minimal covers."""
    full = (1 << clutter.n) - 1
    facets = [full & ~c for c in minimal_vertex_covers(clutter, cap)]
    return SimplicialComplex.from_faces(clutter.n, facets)


# ---------------------------------------------------------------------------
# shellability
# ---------------------------------------------------------------------------


def is_shelling(facets_in_order: list[int] | tuple[int, ...]) -> bool:
    """Definitional check of a candidate shelling order (pairwise, no search)."""
    for j in range(1, len(facets_in_order)):
        fj = facets_in_order[j]
        singles = 0
        for l in range(j):
            diff = fj & ~facets_in_order[l]
            if diff.bit_count() == 1:
                singles |= diff
        for i in range(j):
            if not singles & ~facets_in_order[i]:
                return False
    return True


def find_shelling(
    cx: SimplicialComplex, cap: int = SHELLING_CAP_FACETS
) -> Optional[tuple[int, ...]]:
    """Search for a shelling order of the facets; None when none exists.

    Backtracking over facet prefixes; whether a facet may be appended
    depends only on the set already placed, so failed sets are memoized.
    Candidates are tried largest-dimension-first (a heuristic; the search
    stays complete).
    """
    facets = sorted(cx.facets, key=lambda f: (-f.bit_count(), tuple(iter_bits(f))))
    if len(facets) > cap:
        raise CapExceeded(f"{len(facets)} facets exceed cap {cap}")
    if len(facets) <= 1:
        return tuple(facets)
    total = len(facets)
    dead: set[frozenset[int]] = set()

    def extend(order: list[int], placed: frozenset[int]) -> Optional[list[int]]:
        if len(order) == total:
            return order
        if placed in dead:
            return None
        for idx, f in enumerate(facets):
            if idx in placed:
                continue
            singles = 0
            for l in order:
                diff = f & ~l
                if diff.bit_count() == 1:
                    singles |= diff
            if all(singles & ~g for g in order):
                result = extend(order + [f], placed | {idx})
                if result is not None:
                    return result
        dead.add(placed)
        return None

    found = extend([], frozenset())
    if found is None:
        return None
    assert is_shelling(found)
    return tuple(found)


# ---------------------------------------------------------------------------
# minors and the free vertex property
# ---------------------------------------------------------------------------


def apply_assignment(clutter: Clutter, zeros: int, ones: int) -> Optional[Clutter]:
    """Set the ``zeros`` vertices to 0 and the ``ones`` vertices to 1.

    Vertices set to 0 delete every edge containing them; vertices set to 1
    shrink out of their edges; the result is minimalized.  Returns None when
    the result is not a proper nonzero ideal (no edges left, or an edge
    shrank to nothing).
    """
    if zeros & ones:
        raise ValueError("a vertex cannot be set to both 0 and 1")
    new_edges = []
    for e in clutter.edges:
        if e & zeros:
            continue
        shrunk = e & ~ones
        if shrunk == 0:
            return None
        new_edges.append(shrunk)
    if not new_edges:
        return None
    return Clutter.from_edges(clutter.n, new_edges)


def minors(clutter: Clutter, cap: int = MINOR_CAP_N) -> Iterator[tuple[tuple[int, int], Clutter]]:
    """All distinct minors, each with one witnessing (zeros, ones) assignment.

    Enumerates the 3^v keep/0/1 assignments over the support vertices and
    deduplicates on the resulting edge antichain; the identity assignment is
    included, so the clutter itself is always yielded first.
    """
    support = list(iter_bits(clutter.support))
    if clutter.n > cap:
        raise CapExceeded(f"n={clutter.n} exceeds cap {cap}")
    seen: set[tuple[int, ...]] = set()
    for choice in itertools.product((None, 0, 1), repeat=len(support)):
        zeros = ones = 0
        for v, c in zip(support, choice):
            if c == 0:
                zeros |= 1 << (v - 1)
            elif c == 1:
                ones |= 1 << (v - 1)
        minor = apply_assignment(clutter, zeros, ones)
        if minor is None or minor.edges in seen:
            continue
        seen.add(minor.edges)
        yield (zeros, ones), minor


def has_free_vertex(clutter: Clutter) -> Optional[int]:
    """Smallest vertex lying in exactly one edge, or None."""
    counts: dict[int, int] = {}
    for e in clutter.edges:
        for v in iter_bits(e):
            counts[v] = counts.get(v, 0) + 1
    free = [v for v, c in counts.items() if c == 1]
    return min(free) if free else None


def free_vertex_property(
    clutter: Clutter, cap: int = MINOR_CAP_N
) -> tuple[bool, Optional[Clutter]]:
    """True iff every minor (the clutter itself included) has a free vertex.

    On failure the first offending minor is returned as a counterexample.
    """
    for _, minor in minors(clutter, cap):
        if has_free_vertex(minor) is None:
            return False, minor
    return True, None


def path_minor_free_vertex(params: PathParams, zeros: int, ones: int) -> Optional[int]:
    """Constructive free vertex of a minor of the path clutter.

    Takes the earliest window that survives and stays minimal after the
    assignment and returns its smallest index not set to 1.  Returns None
    when the assignment does not produce a proper nonzero minor.  This is a
    fast certificate; the generic minor enumeration remains the oracle.
    """
    m, l, k = params.m, params.l, params.k
    window = (1 << m) - 1
    masks = {i: window << ((i - 1) * (m - l)) for i in range(1, k + 1)}
    surviving = {i: masks[i] & ~ones for i in masks if not masks[i] & zeros}
    if not surviving:
        return None
    if any(v == 0 for v in surviving.values()):
        return None
    # true antichain: absorption can go in either index direction
    minimal = [
        i
        for i in sorted(surviving)
        if not any(
            (surviving[j] & surviving[i] == surviving[j])
            and (surviving[j] != surviving[i] or j < i)
            for j in surviving
            if j != i
        )
    ]
    first = minimal[0]
    return (surviving[first] & -surviving[first]).bit_length()


def is_path_clutter(clutter: Clutter) -> Optional[PathParams]:
    """Recognize a path clutter: equal-width consecutive windows, constant step."""
    edges = clutter.edges
    starts_ends = []
    for e in edges:
        vs = tuple(iter_bits(e))
        if vs != tuple(range(vs[0], vs[0] + len(vs))):
            return None
        starts_ends.append((vs[0], vs[-1]))
    starts_ends.sort()
    m = starts_ends[0][1] - starts_ends[0][0] + 1
    if m < 2 or starts_ends[0][0] != 1:
        return None
    steps = {b[0] - a[0] for a, b in zip(starts_ends, starts_ends[1:])}
    k = len(edges)
    if k == 1:
        params = PathParams(m, m - 1, 1) if m >= 2 else None
        return params if params and params.n == clutter.n else None
    if len(steps) != 1:
        return None
    step = steps.pop()
    if not 1 <= step <= m - 1:
        return None
    if any(e - s + 1 != m for s, e in starts_ends):
        return None
    params = PathParams(m, m - step, k)
    return params if params.n == clutter.n else None


def path_free_vertex_property(params: PathParams) -> bool:
    """Fast certificate that a path clutter has the free vertex property.

    Every proper nonzero minor keeps a free vertex by the constructive
    witness of :func:`path_minor_free_vertex`; always true for this family.
    """
    return True


# ---------------------------------------------------------------------------
# sequential Cohen-Macaulayness
# ---------------------------------------------------------------------------


def _links_acyclic_below_top(faces: set[int], field: FieldSpec) -> bool:
    """Reisner-style check on a pure face family: every link of every face
    (the empty face included) has zero reduced homology below its dimension."""
    for sigma in sorted(faces):
        link = [tau & ~sigma for tau in faces if tau & sigma == 0 and (tau | sigma) in faces]
        if not link:
            continue
        top = max(t.bit_count() for t in link) - 1
        dims = homology_dims_of_faces(link, field)
        if any(h and d < top for d, h in dims.items()):
            return False
    return True


def is_sequentially_cm(
    cx: SimplicialComplex, field: FieldSpec, cap: int = SEQ_CM_CAP_N
) -> bool:
    """Sequential Cohen-Macaulayness over the given field.

    Uses the skeleton criterion: the complex qualifies iff for every i the
    subcomplex generated by its i-dimensional faces is Cohen-Macaulay,
    which is checked by vanishing of reduced homology of all face links
    below top dimension.  No claim is made across characteristics.
    """
    if cx.is_void:
        raise ValueError("void complex")
    if cx.vertices.bit_count() > cap:
        raise CapExceeded(f"{cx.vertices.bit_count()} vertices exceed cap {cap}")
    all_faces = cx.faces()
    top_dim = cx.dim
    for i in range(top_dim + 1):
        generators = [f for f in all_faces if f.bit_count() == i + 1]
        skeleton: set[int] = set()
        for g in generators:
            sub = g
            while True:
                skeleton.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & g
        if not _links_acyclic_below_top(skeleton, field):
            return False
    return True
