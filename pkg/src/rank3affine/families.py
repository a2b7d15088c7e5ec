"""Connection sets of the three strongly regular graph families.

All sets live in dlog space: a connection set is a subset of Z_{q-1} whose
image under exp is the actual subset of F_q^*.  The three constructions:

  * generalized Paley (Van Lint-Schrijver): the index-ell subgroup <omega^ell>,
    requiring ell prime with ord_ell(p) = ell - 1 and q = p^((ell-1)k);
  * classical Paley: the nonzero squares, i.e. even dlog indices, q = 1 mod 4;
  * Peisert: <omega^4> united with <omega^4>*omega^i for i in {1, 3},
    requiring p = 3 mod 4 and r even.

Symmetry (S = -S, needed for an undirected graph) is enforced at
construction; allow_directed=True skips the check for exploratory use.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (CharCondition, ContainsZero, DegreeCondition, EmptySet,
                     NotPrime, NotSymmetric, OrderCondition, QuarticUnavailable)
from .fields import FiniteField, is_prime


# ---------------------------------------------------------------------------
# family labels
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Paley:
    pass


@dataclass(frozen=True)
class GeneralizedPaley:
    ell: int
    k: int


@dataclass(frozen=True)
class Peisert:
    variant: int


@dataclass(frozen=True)
class Unmatched:
    pass


FamilyLabel = Paley | GeneralizedPaley | Peisert | Unmatched


def label_to_json(label: FamilyLabel) -> dict:
    if isinstance(label, Paley):
        return {"family": "paley"}
    if isinstance(label, GeneralizedPaley):
        return {"family": "generalized-paley", "ell": label.ell, "k": label.k}
    if isinstance(label, Peisert):
        return {"family": "peisert", "variant": label.variant}
    return {"family": "unmatched"}


def latin_square_tag(label: GeneralizedPaley) -> str:
    """Parameter bookkeeping for the generalized Paley family."""
    if label.ell == 2:
        return "classical-paley"
    return "latin-square" if label.k % 2 == 1 else "negative-latin-square"


# ---------------------------------------------------------------------------
# connection sets
# ---------------------------------------------------------------------------

class ConnectionSet:
    """Subset of F_q^* in dlog coordinates, tagged with its family label."""

    def __init__(self, field: FiniteField, indices, label: FamilyLabel = Unmatched()):
        indices = frozenset(indices)
        if not indices:
            raise EmptySet("connection set must be nonempty")
        n = field.q - 1
        if not all(0 <= i < n for i in indices):
            raise ValueError(f"indices must lie in [0, {n})")
        self.field = field
        self.indices = indices
        self.label = label

    @classmethod
    def from_elements(cls, field: FiniteField, elements,
                      label: FamilyLabel = Unmatched()) -> "ConnectionSet":
        elements = set(elements)
        if 0 in elements:
            raise ContainsZero("connection set may not contain the zero element")
        return cls(field, (field.dlog(x) for x in elements), label)

    def element_codes(self) -> frozenset:
        return frozenset(self.field.exp(i) for i in self.indices)

    def is_symmetric(self) -> bool:
        """Whether S = -S as field elements."""
        if self.field.p == 2:
            return True
        half = (self.field.q - 1) // 2
        n = self.field.q - 1
        return all((i + half) % n in self.indices for i in self.indices)

    def complement(self) -> "ConnectionSet":
        rest = frozenset(range(self.field.q - 1)) - self.indices
        return ConnectionSet(self.field, rest, Unmatched())

    def sorted_indices(self) -> list[int]:
        return sorted(self.indices)

    def to_json(self) -> dict:
        doc = {"indices": self.sorted_indices(), "size": len(self.indices)}
        doc.update(label_to_json(self.label))
        doc["field"] = self.field.descriptor()
        return doc

    def __len__(self) -> int:
        return len(self.indices)

    def __repr__(self) -> str:
        return (f"ConnectionSet(GF({self.field.q}), size={len(self.indices)}, "
                f"label={self.label!r})")


def _require_symmetric(conn: ConnectionSet, allow_directed: bool, detail: str) -> ConnectionSet:
    if not allow_directed and not conn.is_symmetric():
        raise NotSymmetric(detail)
    return conn


def mult_order(x: int, modulus: int) -> int:
    """Multiplicative order of x modulo modulus (x must be a unit)."""
    cur = x % modulus
    order = 1
    while cur != 1 % modulus:
        cur = cur * x % modulus
        order += 1
        if order > modulus:
            raise ValueError(f"{x} is not a unit mod {modulus}")
    return order


def vls_index_set(q: int, ell: int) -> frozenset:
    """Indices of <omega^ell> in Z_{q-1} (requires ell | q - 1)."""
    return frozenset(range(0, q - 1, ell))


def vls_connection_set(field: FiniteField, ell: int,
                       allow_directed: bool = False) -> ConnectionSet:
    """The index-ell subgroup of F_q^* as a generalized Paley connection set."""
    if not is_prime(ell):
        raise NotPrime(f"ell = {ell} is not prime")
    if field.p % ell == 0:
        raise OrderCondition(f"p = {field.p} is divisible by ell = {ell}")
    o = mult_order(field.p, ell)
    if o != ell - 1:
        raise OrderCondition(f"ord_{ell}({field.p}) = {o} != {ell - 1}")
    if field.r % (ell - 1) != 0:
        raise DegreeCondition(f"(ell - 1) = {ell - 1} does not divide r = {field.r}")
    k = field.r // (ell - 1)
    # ell | p^(ell-1) - 1 | q - 1, so the subgroup has index exactly ell
    conn = ConnectionSet(field, vls_index_set(field.q, ell), GeneralizedPaley(ell, k))
    return _require_symmetric(
        conn, allow_directed,
        f"<omega^{ell}> is not closed under negation for q = {field.q}"
        f" (q = 3 mod 4)")


def paley_index_set(q: int) -> frozenset:
    return frozenset(range(0, q - 1, 2))


def paley_connection_set(field: FiniteField) -> ConnectionSet:
    """The nonzero squares; undirected only for q = 1 mod 4."""
    if field.q % 4 != 1:
        raise NotSymmetric(
            f"q = {field.q} = {field.q % 4} mod 4; the squares are symmetric "
            f"only when q = 1 mod 4")
    return ConnectionSet(field, paley_index_set(field.q), Paley())


def peisert_index_set(q: int, variant: int) -> frozenset:
    return frozenset(i for i in range(q - 1) if i % 4 in (0, variant))


def peisert_connection_set(field: FiniteField, variant: int = 1) -> ConnectionSet:
    """<omega^4> u <omega^4> omega^variant, variant in {1, 3}."""
    if variant not in (1, 3):
        raise ValueError(f"variant must be 1 or 3, got {variant}")
    if field.p % 4 != 3:
        raise CharCondition(f"p = {field.p} = {field.p % 4} mod 4; need p = 3 mod 4")
    if field.r % 2 != 0:
        raise DegreeCondition(f"r = {field.r} must be even")
    conn = ConnectionSet(field, peisert_index_set(field.q, variant), Peisert(variant))
    assert len(conn) * 2 == field.q - 1
    return conn


@dataclass(frozen=True)
class QuarticCoarsening:
    """One of the three pairings of the quartic classes into equal halves."""

    first: frozenset
    second: frozenset
    label: FamilyLabel


def coarsenings_of_quartic_partition(field: FiniteField) -> list[QuarticCoarsening]:
    """The three two-class coarsenings of {C, Cw, Cw^2, Cw^3}, C = <omega^4>.

    Returned in the order Paley, Peisert variant 1, Peisert variant 3.  The
    Paley coarsening equals the squares/non-squares split.
    """
    q = field.q
    if (q - 1) % 4 != 0:
        raise QuarticUnavailable(f"q - 1 = {q - 1} is not divisible by 4")
    cls = [frozenset(i for i in range(q - 1) if i % 4 == j) for j in range(4)]
    paley = QuarticCoarsening(cls[0] | cls[2], cls[1] | cls[3], Paley())
    assert paley.first == paley_index_set(q)
    v1 = QuarticCoarsening(cls[0] | cls[1], cls[2] | cls[3], Peisert(1))
    v3 = QuarticCoarsening(cls[0] | cls[3], cls[1] | cls[2], Peisert(3))
    return [paley, v1, v3]
