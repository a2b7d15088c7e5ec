"""Exhaustive classification of two-orbit partitions of F_q^*.

GammaL(1, q) acting on F_q^* becomes, in dlog coordinates, the affine group
Z_{q-1} x| <p>: multiplication by omega is translation by 1 and the
Frobenius map is multiplication by p.  Enumerating two-orbit subgroup
partitions of that context and matching each against the family connection
sets (literal set equality, up to complement and up to a translation in
index space, which is a multiplicative shift of the connection set and a
graph isomorphism) checks that the Paley, generalized Paley and Peisert
sets are the only possibilities.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import (CapExceeded, CharCondition, DegenerateModulus,
                     DegreeCondition, NotPrime, OrderCondition)
from .families import (FamilyLabel, GeneralizedPaley, Paley, Peisert, Unmatched,
                       label_to_json, paley_index_set, peisert_connection_set,
                       vls_connection_set)
from .fields import FiniteField, build_field
from .znaction import (AffineActionContext, Case1, Case2, LemmaCase,
                       OrbitPartition, Violation, _classify_reduced,
                       case_to_json, two_orbit_partitions_with_generators)

DEFAULT_Q_CAP = 4096


def gammal1_context(field: FiniteField) -> AffineActionContext:
    """The dlog-space context (n = q - 1, a = p); Frobenius has order r."""
    if field.q == 2:
        raise DegenerateModulus(
            "q = 2: F_q^* is a single point, no two-orbit partitions exist")
    ctx = AffineActionContext(field.q - 1, field.p % (field.q - 1))
    # p^j = 1 mod (q-1) forces p^j - 1 >= q - 1, so the order is exactly r
    assert ctx.m_ord == field.r
    return ctx


@dataclass(frozen=True)
class ClassifiedPartition:
    partition: OrbitPartition
    lemma_case: LemmaCase
    family: FamilyLabel
    complemented: bool
    shift: int

    def to_json(self, include_classes: bool = True) -> dict:
        c1, c2 = self.partition.classes_sorted()
        doc: dict = {}
        if include_classes:
            doc["classes"] = [c1, c2]
        doc["lemma_case"] = case_to_json(self.lemma_case)
        doc["family"] = label_to_json(self.family)
        doc["complemented"] = self.complemented
        doc["shift"] = self.shift
        return doc


@dataclass
class ClassificationReport:
    field: FiniteField
    entries: list[ClassifiedPartition]
    unmatched_count: int

    def families_present(self) -> list[str]:
        seen = set()
        for e in self.entries:
            if not isinstance(e.family, Unmatched):
                seen.add(family_key(e.family))
        return sorted(seen)

    def to_json(self, include_classes: bool = True) -> dict:
        desc = self.field.descriptor()
        return {
            "q": desc["q"],
            "p": desc["p"],
            "r": desc["r"],
            "field": desc,
            "partitions": [e.to_json(include_classes) for e in self.entries],
            "families": self.families_present(),
            "unmatched": self.unmatched_count,
        }


def family_key(label: FamilyLabel) -> str:
    if isinstance(label, Paley):
        return "paley"
    if isinstance(label, GeneralizedPaley):
        return f"generalized-paley({label.ell},{label.k})"
    if isinstance(label, Peisert):
        return f"peisert({label.variant})"
    return "unmatched"


def _match_family(field: FiniteField, part: OrbitPartition,
                  case: LemmaCase) -> tuple[FamilyLabel, bool, int]:
    """Literal index-set match against the family the case points at.

    Returns (label, complemented, shift) where the matched class equals the
    family set translated by shift (multiplication by omega^shift on the
    field side).
    """
    n = field.q - 1
    if isinstance(case, Case1):
        if case.m == 2:
            base = paley_index_set(field.q)
            label: FamilyLabel = Paley()
        else:
            try:
                conn = vls_connection_set(field, case.m, allow_directed=True)
            except (NotPrime, OrderCondition, DegreeCondition):
                return Unmatched(), False, 0
            base, label = conn.indices, conn.label
        target = frozenset((x + case.shift) % n for x in base)
        if part.o1 == target:
            return label, False, case.shift
        if part.o2 == target:
            return label, True, case.shift
        return Unmatched(), False, 0
    if isinstance(case, Case2):
        try:
            conn = peisert_connection_set(field, case.variant)
        except (CharCondition, DegreeCondition):
            return Unmatched(), False, 0
        if part.o1 == conn.indices:
            return conn.label, False, 0
        if part.o2 == conn.indices:
            return conn.label, True, 0
        return Unmatched(), False, 0
    return Unmatched(), False, 0


def classify_field(field: FiniteField, cap: int = DEFAULT_Q_CAP) -> ClassificationReport:
    """Classify every two-orbit partition of F_q^* under GammaL(1, q)."""
    if field.q > cap:
        raise CapExceeded(f"q = {field.q} exceeds the classification cap {cap}")
    if field.q == 2:
        return ClassificationReport(field, [], 0)
    ctx = gammal1_context(field)
    found = two_orbit_partitions_with_generators(ctx, cap=cap)
    entries = []
    unmatched = 0
    for red in sorted(found, key=lambda r: (len(r.r1) * ((field.q - 1) // r.m),
                                            r.m, sorted(r.r1))):
        part = red.lift(field.q - 1)
        case = _classify_reduced(ctx, red)
        family, complemented, shift = _match_family(field, part, case)
        if isinstance(family, Unmatched) or isinstance(case, Violation):
            unmatched += 1
        entries.append(ClassifiedPartition(part, case, family, complemented, shift))
    return ClassificationReport(field, entries, unmatched)


# ---------------------------------------------------------------------------
# theorem-level sweep
# ---------------------------------------------------------------------------

def as_prime_power(q: int) -> tuple[int, int] | None:
    """(p, r) with q = p^r, or None if q is not a prime power >= 2."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if p * p > q:
            return (q, 1)
        if q % p == 0:
            r = 0
            while q % p == 0:
                q //= p
                r += 1
            return (p, r) if q == 1 else None
    return None


def prime_powers_up_to(q_max: int) -> list[int]:
    return [q for q in range(2, q_max + 1) if as_prime_power(q) is not None]


def verify_theorem(q_values, cap: int = DEFAULT_Q_CAP, sink=None) -> dict:
    """Run classify_field over the given q values and tally unmatched counts.

    When sink is given, the full per-field reports (with class arrays) are
    streamed to it as one JSON document.
    """
    fields_summary = []
    unmatched_total = 0
    if sink:
        sink.write('{"fields": [\n')
    first = True
    for q in sorted(set(q_values)):
        pr = as_prime_power(q)
        if pr is None:
            raise ValueError(f"q = {q} is not a prime power")
        p, r = pr
        if q > cap:
            raise CapExceeded(f"q = {q} exceeds the classification cap {cap}")
        field = build_field(p, r)
        report = classify_field(field, cap=cap)
        unmatched_total += report.unmatched_count
        fields_summary.append({
            "q": q, "p": p, "r": r,
            "partitions": len(report.entries),
            "families": report.families_present(),
            "unmatched": report.unmatched_count,
        })
        if sink:
            sink.write(("" if first else ",\n") + json.dumps(report.to_json()))
            first = False
    summary = {
        "fields": fields_summary,
        "fields_checked": len(fields_summary),
        "unmatched_total": unmatched_total,
        "all_matched": unmatched_total == 0,
    }
    if sink:
        sink.write('\n], "fields_checked": %d, "unmatched_total": %d, '
                   '"all_matched": %s}\n'
                   % (len(fields_summary), unmatched_total,
                      "true" if unmatched_total == 0 else "false"))
    return summary
