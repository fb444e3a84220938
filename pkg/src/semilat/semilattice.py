"""Verified sets of pairwise commuting idempotents and their order structure.

A subsemilattice of T(n) is a nonempty set of idempotents that pairwise
commute and is closed under composition.  :func:`verify_semilattice` is the
checked constructor; :func:`find_violation` is the same check as a pure
inspection that names the failing axiom and elements.

The extremal examples are the "collapse" semilattices: fix a sink point t,
and for each subset A of the remaining points take the map fixing A pointwise
and sending everything else to t.  Those 2^(n-1) maps commute (the product of
the maps for A and B is the map for A ∩ B) and form a maximal subsemilattice
isomorphic to the power set of the non-sink points.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache, reduce as _fold
from typing import Iterable, Optional

from .transform import (
    Transformation,
    commutes_with_idempotent,
    compose,
    enumerate_idempotents,
    is_idempotent,
    orbit_decomposition,
)


@dataclass(frozen=True)
class Violation:
    """A concrete witness that a candidate set is not a semilattice."""

    axiom: str  # "idempotence" | "commutativity" | "closure"
    elements: tuple[Transformation, ...]
    product: Optional[Transformation] = None

    def describe(self) -> str:
        words = ", ".join(e.word() for e in self.elements)
        if self.axiom == "idempotence":
            return f"idempotence fails for [{words}]"
        if self.axiom == "commutativity":
            return f"commutativity fails for the pair [{words}]"
        missing = self.product.word() if self.product else "?"
        return f"closure fails for the pair [{words}]: product [{missing}] is missing"


class SemilatticeError(ValueError):
    """Raised by the checked constructor; carries the :class:`Violation`."""

    def __init__(self, violation: Violation):
        super().__init__(violation.describe())
        self.violation = violation


def _canonical(n: int, elements: Iterable[Transformation]) -> tuple[Transformation, ...]:
    elems = sorted(set(elements), key=lambda t: t.images)
    for e in elems:
        if e.n != n:
            raise ValueError(f"element [{e.word()}] lives on {e.n} points, expected {n}")
    return tuple(elems)


def find_violation(n: int, elements: Iterable[Transformation]) -> Optional[Violation]:
    """First axiom failure of a candidate set, or None if it is a semilattice.

    Checks idempotence element by element, then commutativity and closure pair
    by pair, all in canonical order, so the reported witness is deterministic.
    """
    elems = _canonical(n, elements)
    if not elems:
        raise ValueError("empty candidate")
    present = set(elems)
    for e in elems:
        if not is_idempotent(e):
            return Violation("idempotence", (e,))
    for i, a in enumerate(elems):
        for b in elems[i + 1 :]:
            ab = compose(a, b)
            if ab != compose(b, a):
                return Violation("commutativity", (a, b))
            if ab not in present:
                return Violation("closure", (a, b), product=ab)
    return None


@dataclass(frozen=True)
class Semilattice:
    """A subsemilattice of T(n), carried in canonical (lexicographic) order.

    Equality is set equality of the carriers.  The constructor enforces the
    structural invariants (nonempty, single ground set, sorted unique carrier);
    the algebraic axioms are the business of :func:`verify_semilattice`, which
    is the constructor everything untrusted should go through.
    """

    n: int
    elements: tuple[Transformation, ...]

    def __post_init__(self):
        if not self.elements:
            raise ValueError("a semilattice is nonempty")
        prev = None
        for e in self.elements:
            if e.n != self.n:
                raise ValueError(
                    f"element [{e.word()}] lives on {e.n} points, expected {self.n}"
                )
            if prev is not None and prev.images >= e.images:
                raise ValueError("carrier must be strictly sorted by image table")
            prev = e

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, t: Transformation) -> bool:
        return t in set(self.elements)

    def key(self) -> tuple[tuple[int, ...], ...]:
        """Canonical sort/deduplication key: the tuple of image tables."""
        return tuple(e.images for e in self.elements)


def verify_semilattice(n: int, candidate: Iterable[Transformation]) -> Semilattice:
    """Checked constructor: raises :class:`SemilatticeError` on any violation."""
    elems = _canonical(n, candidate)
    violation = find_violation(n, elems)
    if violation is not None:
        raise SemilatticeError(violation)
    return Semilattice(n, elems)


@dataclass(frozen=True)
class PosetRelation:
    """A partial order on an indexed carrier, as a boolean matrix.

    ``leq[i][j]`` means element i is below element j.  The constructor rejects
    relations that are not reflexive, antisymmetric, and transitive.
    """

    carrier: tuple
    leq: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        k = len(self.carrier)
        if len(self.leq) != k or any(len(row) != k for row in self.leq):
            raise ValueError("relation matrix does not match the carrier")
        leq = self.leq
        for i in range(k):
            if not leq[i][i]:
                raise ValueError(f"not reflexive at index {i}")
            for j in range(k):
                if i != j and leq[i][j] and leq[j][i]:
                    raise ValueError(f"not antisymmetric at indices {i}, {j}")
                if leq[i][j]:
                    for l in range(k):
                        if leq[j][l] and not leq[i][l]:
                            raise ValueError(
                                f"not transitive at indices {i}, {j}, {l}"
                            )

    def is_leq(self, i: int, j: int) -> bool:
        return self.leq[i][j]


def natural_order(s: Semilattice) -> PosetRelation:
    """The order ``a ≤ b iff a = ab``; composition realizes the meet."""
    elems = s.elements
    leq = tuple(
        tuple(a == compose(a, b) for b in elems) for a in elems
    )
    return PosetRelation(elems, leq)


def meet(s: Semilattice, a: Transformation, b: Transformation) -> Transformation:
    """Greatest lower bound of two members under the natural order."""
    members = set(s.elements)
    for x in (a, b):
        if x not in members:
            raise ValueError(f"[{x.word()}] is not an element of the semilattice")
    return compose(a, b)


def collapse_map(n: int, t: int, kept: Iterable[int]) -> Transformation:
    """The map fixing each point of ``kept`` and sending every other point to t."""
    if not 0 <= t < n:
        raise ValueError(f"sink {t} outside [0, {n})")
    keep = set(kept)
    if t in keep:
        raise ValueError(f"kept set may not contain the sink {t}")
    images = [x if x in keep else t for x in range(n)]
    bad = keep.difference(range(n))
    if bad:
        raise ValueError(f"kept points {sorted(bad)} outside [0, {n})")
    return Transformation(n, tuple(images))


@lru_cache(maxsize=None)
def collapse_semilattice(n: int, t: int) -> Semilattice:
    """All 2^(n-1) collapse maps with sink t: the extremal subsemilattice.

    Closure is by construction (the product of the maps keeping A and B is the
    map keeping A ∩ B), so the carrier is assembled directly.
    """
    if not 0 <= t < n:
        raise ValueError(f"sink {t} outside [0, {n})")
    others = [x for x in range(n) if x != t]
    elems = []
    for mask in range(1 << (n - 1)):
        kept = [others[i] for i in range(n - 1) if (mask >> i) & 1]
        elems.append(collapse_map(n, t, kept))
    elems.sort(key=lambda e: e.images)
    return Semilattice(n, tuple(elems))


def is_injective_except_sink(t: int, a: Transformation) -> bool:
    """True iff ``a`` fixes t and every image value other than t has exactly
    one preimage.

    The idempotents satisfying this for a fixed t are exactly the collapse
    maps with sink t.
    """
    if not 0 <= t < a.n:
        raise ValueError(f"sink {t} outside [0, {a.n})")
    if a.images[t] != t:
        return False
    counts = [0] * a.n
    for y in a.images:
        counts[y] += 1
    return all(counts[y] == 1 for y in set(a.images) if y != t)


@dataclass(frozen=True)
class MaximalityResult:
    is_maximal: bool
    witness: Optional[Transformation] = None  # an extending idempotent when not maximal

    def __bool__(self) -> bool:
        return self.is_maximal


def is_maximal(
    s: Semilattice, all_idempotents: Optional[tuple[Transformation, ...]] = None
) -> MaximalityResult:
    """Whether no idempotent outside the carrier commutes with all of it.

    An outside idempotent commuting with everything would generate a strictly
    larger subsemilattice (products of commuting idempotents are idempotents
    commuting with every common centralizer), so this single-element scan
    decides maximality.  The witness is the first extender in canonical order.
    """
    idems = all_idempotents if all_idempotents is not None else enumerate_idempotents(s.n)
    members = set(s.elements)
    for f in idems:
        if f in members:
            continue
        dec = orbit_decomposition(f)
        if all(commutes_with_idempotent(dec, e) for e in s.elements):
            return MaximalityResult(False, f)
    return MaximalityResult(True, None)


@dataclass(frozen=True, eq=False)
class BooleanLatticeResult:
    """Outcome of the power-set recognition, with the isomorphism witness.

    When the order is Boolean, ``atom_sets`` maps every element to the set of
    atoms below it; that map is a bijection onto the full power set of the
    atoms and sends composition to intersection.
    """

    is_boolean: bool
    atoms: tuple[Transformation, ...]
    reason: str = ""
    atom_sets: Optional[dict[Transformation, frozenset[Transformation]]] = field(
        default=None, repr=False
    )

    def __bool__(self) -> bool:
        return self.is_boolean


def is_boolean_lattice(s: Semilattice) -> BooleanLatticeResult:
    """Recognize whether the natural order is a power set of its atoms."""
    order = natural_order(s)
    leq = order.leq
    elems = s.elements
    k = len(elems)
    bottom_elem = _fold(compose, elems)
    index = {e: i for i, e in enumerate(elems)}
    bottom = index[bottom_elem]
    atom_idx = [
        i
        for i in range(k)
        if i != bottom
        and all(j in (i, bottom) for j in range(k) if leq[j][i])
    ]
    atoms = tuple(elems[i] for i in atom_idx)
    if k != 1 << len(atom_idx):
        return BooleanLatticeResult(
            False, atoms, reason=f"{k} elements but {len(atom_idx)} atoms"
        )
    below = [frozenset(a for a in atom_idx if leq[a][i]) for i in range(k)]
    if len(set(below)) != k:
        return BooleanLatticeResult(False, atoms, reason="atom sets are not distinct")
    for i in range(k):
        for j in range(k):
            if leq[i][j] != (below[i] <= below[j]):
                return BooleanLatticeResult(
                    False, atoms, reason="order does not match atom-set inclusion"
                )
            p = index[compose(elems[i], elems[j])]
            if below[p] != below[i] & below[j]:
                return BooleanLatticeResult(
                    False, atoms, reason="composition does not match intersection"
                )
    witness = {
        elems[i]: frozenset(elems[a] for a in below[i]) for i in range(k)
    }
    return BooleanLatticeResult(True, atoms, atom_sets=witness)


def transitivity_order(s: Semilattice) -> PosetRelation:
    """The order induced on points: ``x ≤ y`` iff x = y or x = y·e for some e.

    For a valid semilattice this is a partial order (the constructor checks).
    """
    n = s.n
    leq = tuple(
        tuple(
            x == y or any(e.images[y] == x for e in s.elements) for y in range(n)
        )
        for x in range(n)
    )
    return PosetRelation(tuple(range(n)), leq)


def semilattice_of_size(n: int, t: int, m: int) -> Semilattice:
    """A subsemilattice of the sink-t collapse family with exactly m elements.

    Starting from the full family, repeatedly delete a maximal element of the
    natural order: among the currently maximal kept-sets take those of largest
    size and delete the lexicographically smallest.  The currently maximal
    kept-sets are always exactly the largest remaining size class, so the
    deletion order is: size descending, lexicographic ascending within a size.
    Every prefix of deletions leaves a family closed under intersection.
    """
    if not 0 <= t < n:
        raise ValueError(f"sink {t} outside [0, {n})")
    total = 1 << (n - 1)
    if not 1 <= m <= total:
        raise ValueError(f"size {m} outside [1, {total}]")
    others = [x for x in range(n) if x != t]
    subsets = []
    for mask in range(total):
        subsets.append(tuple(others[i] for i in range(n - 1) if (mask >> i) & 1))
    subsets.sort(key=lambda pts: (-len(pts), pts))
    survivors = subsets[total - m :]
    elems = sorted(
        (collapse_map(n, t, pts) for pts in survivors), key=lambda e: e.images
    )
    return Semilattice(n, tuple(elems))
