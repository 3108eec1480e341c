"""Graded Betti tables of squarefree monomial ideals by two independent routes.

Both routes produce the table of the ideal (not of the quotient ring):

* the combinatorial route sums reduced homology of induced subcomplexes of
  the associated simplicial complex, one subcomplex per vertex subset W,
  contributing to column ``j = |W|`` in homological degree ``i = j - d - 2``;
* the algebraic route tensors the resolution indexed by generator subsets
  with the residue field, keeping only subset differentials that do not
  change the lcm, and reads the table off strand-by-strand homology.

Agreement of the two on a shared instance is the core anti-bug check of
the package; nothing in their inner loops is shared beyond the exact rank
primitives.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from .caps import HOCHSTER_CAP_N, TAYLOR_CAP_K, CapExceeded
from .complexes import ChainComplex, SimplicialComplex, homology_dims_of_faces
from .fields import GF2, FieldSpec, rank_sparse
from .monomials import MonomialIdeal


class BettiTable:
    """Sparse table (i, j) -> multiplicity, in the ideal convention.

    All public tables are tables of the ideal; the quotient-ring table is
    the shift i -> i+1 and is never stored.
    """

    convention = "ideal"

    def __init__(self, entries: Mapping[tuple[int, int], int]):
        clean: dict[tuple[int, int], int] = {}
        for (i, j), b in entries.items():
            if b < 0:
                raise ValueError(f"negative multiplicity at ({i}, {j})")
            if b == 0:
                continue
            if i < 0 or j < 0:
                raise ValueError(f"negative index ({i}, {j})")
            clean[(i, j)] = b
        gen_degrees = [j for (i, j) in clean if i == 0]
        if gen_degrees:
            min_deg = min(gen_degrees)
            for (i, j) in clean:
                if j < i + min_deg:
                    raise ValueError(f"entry ({i}, {j}) below the generator degree bound")
        self._entries = clean

    @property
    def entries(self) -> dict[tuple[int, int], int]:
        return dict(self._entries)

    def items_sorted(self) -> list[tuple[int, int, int]]:
        return [(i, j, b) for (i, j), b in sorted(self._entries.items())]

    def get(self, i: int, j: int) -> int:
        return self._entries.get((i, j), 0)

    def __bool__(self) -> bool:
        return bool(self._entries)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BettiTable) and self._entries == other._entries

    def __hash__(self) -> int:
        return hash(frozenset(self._entries.items()))

    def to_text(self) -> str:
        """Golden-file form: one `i j beta` line per entry, sorted."""
        return "".join(f"{i} {j} {b}\n" for i, j, b in self.items_sorted())

    def digest(self) -> str:
        return ";".join(f"{i},{j}:{b}" for i, j, b in self.items_sorted())

    def __repr__(self) -> str:
        return f"BettiTable({self._entries!r})"


@dataclass(frozen=True)
class Invariants:
    pd: int
    reg: int


@dataclass(frozen=True)
class Depths:
    depth_I: int
    depth_RI: int


def invariants_of(table: BettiTable) -> Invariants:
    """Projective dimension and regularity read off a nonempty table."""
    if not table:
        raise ValueError("empty Betti table has no invariants")
    items = table.items_sorted()
    return Invariants(pd=max(i for i, _, _ in items), reg=max(j - i for i, j, _ in items))


def depth_of(ideal: MonomialIdeal, table: BettiTable) -> Depths:
    """Depth in both conventions: the ideal as a module, and the quotient ring."""
    depth_i = ideal.n - invariants_of(table).pd
    return Depths(depth_I=depth_i, depth_RI=depth_i - 1)


def _require_proper_nonzero(ideal: MonomialIdeal) -> None:
    if ideal.is_zero:
        raise ValueError("zero ideal")
    if ideal.is_unit:
        raise ValueError("unit ideal")


def _face_masks(n: int, gen_masks: Iterable[int]) -> np.ndarray:
    """All faces of the associated complex: subsets containing no generator."""
    masks = np.arange(1 << n, dtype=np.int64)
    is_face = np.ones(masks.shape, dtype=bool)
    for g in gen_masks:
        is_face &= (masks & g) != g
    return masks[is_face]


def stanley_reisner_complex(ideal: MonomialIdeal, cap: int = HOCHSTER_CAP_N) -> SimplicialComplex:
    """The complex whose faces are the variable subsets containing no generator."""
    _require_proper_nonzero(ideal)
    if ideal.n > cap:
        raise CapExceeded(f"n={ideal.n} exceeds cap {cap}")
    faces = set(int(f) for f in _face_masks(ideal.n, ideal.gen_masks()))
    # f is a facet iff adding any missing vertex leaves the complex
    facets = []
    for f in faces:
        maximal = True
        for v in range(ideal.n):
            bit = 1 << v
            if not f & bit and (f | bit) in faces:
                maximal = False
                break
        if maximal:
            facets.append(f)
    return SimplicialComplex.from_faces(ideal.n, facets)


def _union_closure(gen_masks: Iterable[int]) -> list[int]:
    """All distinct unions of subfamilies of the generator supports."""
    unions = {0}
    for g in gen_masks:
        unions |= {u | g for u in unions}
    unions.discard(0)
    return sorted(unions)


def _check_degree_row(ideal: MonomialIdeal, table: BettiTable) -> None:
    hist = ideal.degree_histogram()
    row = {j: b for (i, j), b in table.entries.items() if i == 0}
    assert row == hist, f"column 0 of the table {row} does not match generator degrees {hist}"


def betti_hochster(
    ideal: MonomialIdeal,
    field: FieldSpec = GF2,
    cap: int = HOCHSTER_CAP_N,
    prune_cones: bool = True,
) -> BettiTable:
    """Betti table summed from homology of induced subcomplexes.

    With ``prune_cones`` (default) only vertex subsets that equal the union
    of the generator supports they contain are visited; any other subset
    induces a cone, which is contractible and contributes nothing.
    """
    _require_proper_nonzero(ideal)
    n = ideal.n
    if n > cap:
        raise CapExceeded(f"n={n} exceeds cap {cap}")
    gen_masks = ideal.gen_masks()
    all_faces = _face_masks(n, gen_masks)
    if prune_cones:
        candidates = _union_closure(gen_masks)
    else:
        candidates = list(range(1, 1 << n))
    entries: dict[tuple[int, int], int] = {}
    for w in candidates:
        sub = all_faces[(all_faces & ~w) == 0]
        dims = homology_dims_of_faces((int(f) for f in sub), field)
        j = w.bit_count()
        for d, h in dims.items():
            i = j - d - 2
            if h and i >= 0:
                entries[(i, j)] = entries.get((i, j), 0) + h
    table = BettiTable(entries)
    _check_degree_row(ideal, table)
    return table


def taylor_strand_complexes(
    ideal: MonomialIdeal, cap: int = TAYLOR_CAP_K
) -> dict[int, ChainComplex]:
    """The tensored subset resolution, split into one chain complex per degree.

    Basis elements are generator subsets S at homological degree |S| with
    internal degree |lcm S|; a differential term S -> S\\{g} survives the
    tensor exactly when dropping g does not change the lcm, so each internal
    degree j carries its own complex.
    """
    gen_masks = ideal.gen_masks()
    k = len(gen_masks)
    if k > cap:
        raise CapExceeded(f"k={k} exceeds cap {cap}")
    total = 1 << k
    lcm = [0] * total
    for s in range(1, total):
        low = s & -s
        lcm[s] = lcm[s ^ low] | gen_masks[low.bit_length() - 1]

    groups: dict[tuple[int, int], list[int]] = {}
    for s in range(total):
        key = (s.bit_count(), lcm[s].bit_count())
        groups.setdefault(key, []).append(s)
    index = {key: {s: i for i, s in enumerate(subsets)} for key, subsets in groups.items()}

    strands: dict[int, ChainComplex] = {}
    for j in sorted({j for _, j in groups}):
        top = max(h for h, jj in groups if jj == j)
        sizes = [len(groups.get((h, j), [])) for h in range(top + 1)]
        boundaries: list[list[list[tuple[int, int]]]] = [[]]
        for h in range(1, top + 1):
            prev = index.get((h - 1, j), {})
            cols = []
            for s in groups.get((h, j), []):
                entries_col = []
                for pos in range(k):
                    bit = 1 << pos
                    if not s & bit:
                        continue
                    s2 = s ^ bit
                    if lcm[s2] == lcm[s]:
                        sign = -1 if (s & (bit - 1)).bit_count() % 2 else 1
                        entries_col.append((prev[s2], sign))
                cols.append(entries_col)
            boundaries.append(cols)
        strands[j] = ChainComplex(sizes, boundaries)
    return strands


def betti_taylor_tor(
    ideal: MonomialIdeal, field: FieldSpec = GF2, cap: int = TAYLOR_CAP_K
) -> BettiTable:
    """Betti table from strand homology of the tensored subset resolution."""
    _require_proper_nonzero(ideal)
    entries: dict[tuple[int, int], int] = {}
    for j, chain in taylor_strand_complexes(ideal, cap).items():
        top = len(chain.sizes) - 1
        ranks = [0] * (top + 2)
        for h in range(1, top + 1):
            ranks[h] = rank_sparse(chain.boundaries[h], chain.sizes[h - 1], field)
        for h in range(1, top + 1):
            dim = chain.sizes[h] - ranks[h] - ranks[h + 1]
            if dim:
                entries[(h - 1, j)] = dim
    table = BettiTable(entries)
    _check_degree_row(ideal, table)
    return table


def betti_table(
    ideal: MonomialIdeal,
    field: FieldSpec = GF2,
    method: str = "auto",
    cap_n: int = HOCHSTER_CAP_N,
    cap_k: int = TAYLOR_CAP_K,
) -> BettiTable:
    """Compute the Betti table by the requested method.

    ``auto`` picks the route with the smaller exponential (subset count);
    ``both`` runs the two routes and insists on exact agreement.
    """
    _require_proper_nonzero(ideal)
    n, k = ideal.n, len(ideal.gens)
    if method == "hochster":
        return betti_hochster(ideal, field, cap=cap_n)
    if method == "taylor":
        return betti_taylor_tor(ideal, field, cap=cap_k)
    if method == "auto":
        prefer_hochster = n <= k
        if prefer_hochster and n <= cap_n:
            return betti_hochster(ideal, field, cap=cap_n)
        if k <= cap_k:
            return betti_taylor_tor(ideal, field, cap=cap_k)
        if n <= cap_n:
            return betti_hochster(ideal, field, cap=cap_n)
        raise CapExceeded(f"n={n} and k={k} both exceed their caps ({cap_n}, {cap_k})")
    if method == "both":
        via_homology = betti_hochster(ideal, field, cap=cap_n)
        via_strands = betti_taylor_tor(ideal, field, cap=cap_k)
        if via_homology != via_strands:
            raise RuntimeError(
                "the two Betti routes disagree on "
                f"{ideal} over {field}: {via_homology.digest()} vs {via_strands.digest()}"
            )
        return via_homology
    raise ValueError(f"unknown method {method!r}")
