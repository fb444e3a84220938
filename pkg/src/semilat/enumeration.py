"""Exhaustive search for maximal subsemilattices of T(n).

The substrate is the commuting graph over all idempotents: vertices in
canonical order, adjacency decided by the block-wise commuting test.  Maximal
subsemilattices coincide with maximal cliques of that graph — the product of
two commuting idempotents is an idempotent commuting with every common
neighbor, so a maximal clique is automatically product-closed, and a clique
strictly containing a subsemilattice generates a strictly larger one.  That
identification is not taken on faith: the n <= 3 brute-force oracle pins it
in the test suite, and every emitted clique is re-verified axiom by axiom.

Cliques are enumerated by pivoted recursive expansion with candidate and
excluded sets held as bit vectors indexed by idempotent index.  The search
tree partitions at the top level, so extra workers own disjoint branches and
a canonical merge keeps the output byte-stable regardless of worker count.
"""

from __future__ import annotations

import multiprocessing
import sys
from dataclasses import dataclass
from functools import lru_cache

from .semilattice import Semilattice, find_violation, verify_semilattice
from .transform import (
    Transformation,
    commutes_with_idempotent,
    enumerate_idempotents,
    orbit_decomposition,
    points,
)

DEFAULT_CAP = 5
HARD_CAP = 6
ORACLE_CAP = 3

_MIN_RECURSION = 10_000


class CapExceeded(ValueError):
    """Requested ground set is above the configured enumeration cap."""


def _effective_cap(cap: int | None) -> int:
    return min(DEFAULT_CAP if cap is None else cap, HARD_CAP)


def _check_cap(n: int, cap: int | None) -> None:
    limit = _effective_cap(cap)
    if n < 1:
        raise ValueError(f"ground-set size must be positive, got {n}")
    if n > limit:
        raise CapExceeded(
            f"n={n} exceeds the enumeration cap {limit} (hard maximum {HARD_CAP})"
        )


@dataclass(frozen=True)
class CommutingGraph:
    """Symmetric, irreflexive adjacency over the canonical idempotent list.

    ``rows[i]`` is the neighbor set of vertex i as a bit vector.
    """

    n: int
    vertices: tuple[Transformation, ...]
    rows: tuple[int, ...]

    def __post_init__(self):
        v = len(self.vertices)
        if len(self.rows) != v:
            raise ValueError("adjacency rows do not match the vertex list")
        for i, row in enumerate(self.rows):
            if (row >> i) & 1:
                raise ValueError(f"vertex {i} is adjacent to itself")
            if row >> v:
                raise ValueError(f"row {i} mentions vertices beyond the list")
        for i in range(v):
            m = self.rows[i] >> (i + 1)
            while m:
                lsb = m & -m
                j = i + 1 + lsb.bit_length() - 1
                if not (self.rows[j] >> i) & 1:
                    raise ValueError(f"adjacency not symmetric at {i}, {j}")
                m ^= lsb

    def adjacent(self, i: int, j: int) -> bool:
        return bool((self.rows[i] >> j) & 1)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2


@lru_cache(maxsize=None)
def build_commuting_graph(n: int) -> CommutingGraph:
    """Edges between distinct commuting idempotents, via the block test."""
    verts = enumerate_idempotents(n)
    decs = [orbit_decomposition(e) for e in verts]
    v = len(verts)
    rows = [0] * v
    for i in range(v):
        dec = decs[i]
        for j in range(i + 1, v):
            if commutes_with_idempotent(dec, verts[j]):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return CommutingGraph(n, verts, tuple(rows))


def _bron_kerbosch(rows, r: int, p: int, x: int, out: list) -> None:
    # Pivoted expansion; r, p, x are bit vectors over vertex indices.
    if p == 0 and x == 0:
        out.append(r)
        return
    m = p | x
    best = -1
    pivot_nbrs = 0
    while m:
        lsb = m & -m
        v = lsb.bit_length() - 1
        m ^= lsb
        c = (p & rows[v]).bit_count()
        if c > best:
            best = c
            pivot_nbrs = rows[v]
    cand = p & ~pivot_nbrs
    while cand:
        lsb = cand & -cand
        v = lsb.bit_length() - 1
        cand ^= lsb
        nv = rows[v]
        _bron_kerbosch(rows, r | lsb, p & nv, x & nv, out)
        p &= ~lsb
        x |= lsb


def _toplevel_branches(rows) -> list[tuple[int, int, int]]:
    """The first expansion level as independent (r, p, x) jobs."""
    full = (1 << len(rows)) - 1
    p, x = full, 0
    best = -1
    pivot_nbrs = 0
    m = p
    while m:
        lsb = m & -m
        v = lsb.bit_length() - 1
        m ^= lsb
        c = (p & rows[v]).bit_count()
        if c > best:
            best = c
            pivot_nbrs = rows[v]
    branches = []
    cand = p & ~pivot_nbrs
    while cand:
        lsb = cand & -cand
        v = lsb.bit_length() - 1
        cand ^= lsb
        nv = rows[v]
        branches.append((lsb, p & nv, x & nv))
        p &= ~lsb
        x |= lsb
    return branches


_WORKER_ROWS: tuple[int, ...] = ()


def _init_worker(rows: tuple[int, ...]) -> None:
    global _WORKER_ROWS
    _WORKER_ROWS = rows
    sys.setrecursionlimit(max(sys.getrecursionlimit(), _MIN_RECURSION))


def _run_branch(job: tuple[int, int, int]) -> list[int]:
    out: list[int] = []
    _bron_kerbosch(_WORKER_ROWS, *job, out)
    return out


def _maximal_clique_bitsets(rows: tuple[int, ...], workers: int) -> list[int]:
    sys.setrecursionlimit(max(sys.getrecursionlimit(), _MIN_RECURSION))
    if workers <= 1 or len(rows) < 32:
        out: list[int] = []
        _bron_kerbosch(rows, 0, (1 << len(rows)) - 1, 0, out)
        return sorted(out)
    branches = _toplevel_branches(rows)
    with multiprocessing.Pool(
        workers, initializer=_init_worker, initargs=(rows,)
    ) as pool:
        chunks = pool.map(_run_branch, branches)
    merged = set()
    for chunk in chunks:
        merged.update(chunk)
    return sorted(merged)


def _semilattice_sort_key(s: Semilattice):
    return (-len(s.elements), s.key())


def _enumerate(n: int, workers: int) -> tuple[Semilattice, ...]:
    graph = build_commuting_graph(n)
    rows = graph.rows
    cliques = _maximal_clique_bitsets(rows, workers)
    semis = []
    full = (1 << len(rows)) - 1
    for clique in cliques:
        common = full
        for i in points(clique):
            common &= rows[i]
        if common:
            raise RuntimeError("search emitted a non-maximal clique")
        members = [graph.vertices[i] for i in points(clique)]
        semis.append(verify_semilattice(n, members))
    semis.sort(key=_semilattice_sort_key)
    return tuple(semis)


@lru_cache(maxsize=None)
def _enumerate_cached(n: int) -> tuple[Semilattice, ...]:
    return _enumerate(n, workers=1)


def enumerate_maximal_semilattices(
    n: int, workers: int = 1, cap: int | None = None
) -> tuple[Semilattice, ...]:
    """Every maximal subsemilattice of T(n), verified and canonically ordered.

    Output is sorted by size descending, then lexicographically on the carrier,
    and is identical for any worker count.
    """
    _check_cap(n, cap)
    if workers < 1:
        raise ValueError(f"workers must be positive, got {workers}")
    if workers == 1:
        return _enumerate_cached(n)
    return _enumerate(n, workers)


def max_size_semilattices(
    n: int, workers: int = 1, cap: int | None = None
) -> tuple[Semilattice, ...]:
    """The maximal subsemilattices of the largest cardinality."""
    semis = enumerate_maximal_semilattices(n, workers=workers, cap=cap)
    top = len(semis[0])
    return tuple(s for s in semis if len(s) == top)


@dataclass(frozen=True)
class SpectrumEntry:
    size: int
    count: int
    witness: Semilattice


@dataclass(frozen=True)
class SpectrumReport:
    """Histogram of maximal-subsemilattice cardinalities, with witnesses.

    Which sizes occur is an open question; nothing here beyond the maximum
    row (size 2^(n-1), count n) is backed by a theorem.
    """

    n: int
    entries: tuple[SpectrumEntry, ...]  # ascending by size
    total_maximal: int
    max_size: int

    def counts(self) -> dict[int, int]:
        return {e.size: e.count for e in self.entries}


def spectrum(n: int, workers: int = 1, cap: int | None = None) -> SpectrumReport:
    """Group the full enumeration by cardinality.

    The witness for each size is the canonically smallest maximal
    subsemilattice of that size, so reports are deterministic.
    """
    semis = enumerate_maximal_semilattices(n, workers=workers, cap=cap)
    by_size: dict[int, list[Semilattice]] = {}
    for s in semis:
        by_size.setdefault(len(s), []).append(s)
    entries = tuple(
        SpectrumEntry(size, len(group), min(group, key=Semilattice.key))
        for size, group in sorted(by_size.items())
    )
    report = SpectrumReport(n, entries, len(semis), max(by_size))
    expected_top = 1 << (n - 1)
    if report.max_size != expected_top or report.counts()[expected_top] != n:
        raise RuntimeError(
            f"extremal row of the spectrum at n={n} contradicts the theorem: "
            f"{report.counts()}"
        )
    return report


def brute_force_subsemilattices(n: int) -> tuple[Semilattice, ...]:
    """ALL subsemilattices of T(n) by filtering every nonempty idempotent
    subset, n <= 3 only.

    This is the independent oracle: it relies on nothing but the naive
    axiom check, and anchors the clique identification, the maximality
    test, and the small-n size spectra.
    """
    if n > ORACLE_CAP:
        raise ValueError(f"brute-force oracle is capped at n={ORACLE_CAP}")
    idems = enumerate_idempotents(n)
    v = len(idems)
    found = []
    for mask in range(1, 1 << v):
        members = [idems[i] for i in points(mask)]
        if find_violation(n, members) is None:
            found.append(Semilattice(n, tuple(members)))
    found.sort(key=_semilattice_sort_key)
    return tuple(found)
