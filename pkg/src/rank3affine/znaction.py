"""The affine action of X = Z_n x| <alpha> on Z_n and its two-orbit subgroups.

alpha is multiplication by a unit a mod n, and the group element (t, s) acts
by u -> a^s * u + t.  The central computation enumerates, for a given
context (n, a), every partition {O1, O2} of Z_n that arises as the orbit
partition of some subgroup Y <= X with exactly two orbits (singleton classes
included), and classifies each partition into one of two shapes:

  case 1: the radical index m of O1 is prime, O1 is a coset c + mZ_n, and
          multiplication by a is transitive on the nonzero classes mod m;
  case 2: m = 4, the classes are equal halves pairing the cosets of 4Z_n as
          {0, i} vs {2, -i} residues with i in {1, 3}, and a = -1 mod 4.

Everything here is exact and exhaustive.  The enumeration is sound because X
has a cyclic normal subgroup Z_n with cyclic quotient, so every subgroup is
generated by one translation (k, 0) with k | n together with one extra
element (t, s) whose image generates the projection to <alpha>; and because
the orbits of <(k,0), (t,s)> on Z_n are exactly the preimages of the cycles
of the single induced affine map u -> (a^s mod k) * u + t on Z_k.

Soundness in detail: if Y <= X has exactly two orbits, put <k> = Y & Z_n
(so k | n) and let s | ord(a) generate the image of Y in <alpha>.  Some
(t, s) lies in Y, and Y = <(k,0), (t,s)> with t mattering only mod k.
Conversely every generated pair is a genuine subgroup, so candidate hits are
never spurious.  Iterating k | n, s | ord(a), t in Z_k therefore covers every
subgroup, and distinct candidates producing the same partition are merged.

Note the partition set of a context is closed under translation: conjugating
Y by the translation u -> u + c (an element of X) translates both orbits by
c.  Case 1 therefore carries the coset shift c explicitly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .errors import CapExceeded, EmptySet, MalformedPartition
from .fields import is_prime

DEFAULT_N_CAP = 4096


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def units(n: int) -> list[int]:
    return [a for a in range(1, n) if gcd(a, n) == 1]


def radical(S, n: int) -> int:
    """Index divisor d of n with {u : S + u = S} = d Z_n; d = n means trivial.

    The shift stabilizer of any subset is a subgroup of Z_n, hence equal to
    d Z_n for a divisor d, so it suffices to test divisors in increasing
    order and return the first that stabilizes S.
    """
    if not S:
        raise EmptySet("radical of the empty set is undefined")
    S = frozenset(S)
    for d in divisors(n):
        if d == n:
            break
        if all((x + d) % n in S for x in S):
            return d
    return n


@dataclass(frozen=True)
class AffineMapZn:
    """Element (t, s) of Z_n x| <alpha>, acting as u -> a^s * u + t."""

    t: int
    s: int


class AffineActionContext:
    """Immutable context (n, a): alpha = multiplication by a on Z_n."""

    def __init__(self, n: int, a: int):
        if n < 2:
            raise ValueError(f"modulus n = {n} must be >= 2")
        a %= n
        if gcd(a, n) != 1:
            raise ValueError(f"a = {a} is not a unit mod {n}")
        self.n = n
        self.a = a
        powers = [1]
        x = a % n
        while x != 1 % n:
            powers.append(x)
            x = x * a % n
        self.m_ord = len(powers)
        self._a_pow = powers

    def apply(self, g: AffineMapZn, u: int) -> int:
        return (self._a_pow[g.s % self.m_ord] * u + g.t) % self.n

    def compose(self, g: AffineMapZn, h: AffineMapZn) -> AffineMapZn:
        """The map 'g then h' as a single element."""
        s = (g.s + h.s) % self.m_ord
        t = (self._a_pow[h.s % self.m_ord] * g.t + h.t) % self.n
        return AffineMapZn(t, s)

    def inverse(self, g: AffineMapZn) -> AffineMapZn:
        s = (-g.s) % self.m_ord
        t = (-self._a_pow[s] * g.t) % self.n
        return AffineMapZn(t, s)

    def identity(self) -> AffineMapZn:
        return AffineMapZn(0, 0)

    def __repr__(self) -> str:
        return f"AffineActionContext(n={self.n}, a={self.a}, m_ord={self.m_ord})"


def orbits(ctx: AffineActionContext, generators) -> list[frozenset]:
    """Orbit partition of Z_n under the subgroup generated by the maps.

    Union-find closure: orbits of a generated permutation group are the
    connected components of the union of the generators' functional graphs.
    """
    parent = list(range(ctx.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in generators:
        mult = ctx._a_pow[g.s % ctx.m_ord]
        for u in range(ctx.n):
            v = (mult * u + g.t) % ctx.n
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[rv] = ru
    classes: dict[int, list[int]] = {}
    for u in range(ctx.n):
        classes.setdefault(find(u), []).append(u)
    return sorted((frozenset(c) for c in classes.values()),
                  key=lambda c: (len(c), min(c)))


# ---------------------------------------------------------------------------
# partitions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OrbitPartition:
    """Two-class partition of Z_n, ordered by (size, smallest element).

    m is the index of the common radical of the classes: rad(O1) = m Z_n.
    """

    n: int
    o1: frozenset
    o2: frozenset
    m: int

    @classmethod
    def from_classes(cls, n: int, c1, c2) -> "OrbitPartition":
        c1, c2 = frozenset(c1), frozenset(c2)
        if not c1 or not c2 or (c1 & c2) or len(c1) + len(c2) != n \
                or not all(0 <= x < n for x in c1 | c2):
            raise MalformedPartition(
                f"classes do not form a two-class partition of Z_{n}")
        if (len(c1), min(c1)) > (len(c2), min(c2)):
            c1, c2 = c2, c1
        m = radical(c1, n)
        return cls(n, c1, c2, m)

    def classes_sorted(self) -> tuple[list[int], list[int]]:
        return sorted(self.o1), sorted(self.o2)

    def residues(self) -> frozenset:
        """Residues of O1 modulo the radical index m."""
        return frozenset(x % self.m for x in self.o1)

    def sort_key(self):
        return (len(self.o1), tuple(sorted(self.o1)))


@dataclass(frozen=True)
class _ReducedPartition:
    """Partition quotiented by its radical: classes are unions of m-cosets.

    r1 holds the residues mod m of the canonical first class; the second
    class has the complementary residues.  The full partition of Z_n is
    {x : x % m in r1} vs the rest.
    """

    m: int
    r1: frozenset

    @property
    def r2(self) -> frozenset:
        return frozenset(range(self.m)) - self.r1

    def sizes(self, n: int) -> tuple[int, int]:
        s1 = len(self.r1) * (n // self.m)
        return s1, n - s1

    def lift(self, n: int) -> OrbitPartition:
        mark = bytearray(self.m)
        for x in self.r1:
            mark[x] = 1
        c1 = frozenset(x for x in range(n) if mark[x % self.m])
        c2 = frozenset(x for x in range(n) if not mark[x % self.m])
        return OrbitPartition.from_classes(n, c1, c2)


def _reduce_partition(m: int, r1, r2) -> _ReducedPartition:
    # class sizes scale the residue counts by the common factor n/m, so the
    # canonical (size, min) comparison can run on residues directly
    r1, r2 = frozenset(r1), frozenset(r2)
    if (len(r1), min(r1)) > (len(r2), min(r2)):
        r1 = r2
    return _ReducedPartition(m, r1)


# ---------------------------------------------------------------------------
# two-orbit subgroup enumeration
# ---------------------------------------------------------------------------

def _affine_cycle_count(k: int, b: int, t: int) -> int:
    """Number of cycles of u -> b*u + t on Z_k, bailing out above 2."""
    seen = bytearray(k)
    count = 0
    for start in range(k):
        if seen[start]:
            continue
        count += 1
        if count > 2:
            return count
        u = start
        while not seen[u]:
            seen[u] = 1
            u = (b * u + t) % k
    return count


def _affine_cycles(k: int, b: int, t: int) -> list[list[int]]:
    seen = bytearray(k)
    cycles = []
    for start in range(k):
        if seen[start]:
            continue
        cyc = []
        u = start
        while not seen[u]:
            seen[u] = 1
            cyc.append(u)
            u = (b * u + t) % k
        cycles.append(cyc)
    return cycles


@lru_cache(maxsize=None)
def _two_orbit_shifts(k: int, b: int) -> tuple[int, ...]:
    """All t in Z_k for which u -> b*u + t has exactly two cycles.

    For b = 1 the map is a translation with gcd(t, k) cycles.  Otherwise the
    maps with t and t + c*(1-b) are conjugate under u -> u + c, so the cycle
    count only depends on t mod gcd(b-1, k) and one scan per residue class
    suffices.
    """
    if k == 1:
        return ()
    b %= k
    if b == 1:
        return tuple(t for t in range(k) if gcd(t, k) == 2)
    g = gcd(b - 1, k)
    hits: list[int] = []
    for t0 in range(g):
        if _affine_cycle_count(k, b, t0) == 2:
            hits.extend(range(t0, k, g))
    return tuple(sorted(hits))


def _reduce_candidate(k: int, b: int, t: int) -> _ReducedPartition:
    c1, c2 = _affine_cycles(k, b, t)
    small = c1 if len(c1) <= len(c2) else c2
    m = radical(small, k)
    return _reduce_partition(m, {x % m for x in c1}, {x % m for x in c2})


def two_orbit_partitions_with_generators(
        ctx: AffineActionContext,
        cap: int = DEFAULT_N_CAP,
) -> dict[_ReducedPartition, tuple[AffineMapZn, AffineMapZn]]:
    """Reduced two-orbit partitions, each with one witness generator pair.

    The witness pair ((k, 0), (t, s)) generates a subgroup whose orbit
    partition lifts the key.
    """
    if ctx.n > cap:
        raise CapExceeded(f"n = {ctx.n} exceeds the enumeration cap {cap}")
    found: dict[_ReducedPartition, tuple[AffineMapZn, AffineMapZn]] = {}
    for k in divisors(ctx.n):
        for s in divisors(ctx.m_ord):
            b = pow(ctx.a, s, k) if k > 1 else 0
            for t in _two_orbit_shifts(k, b):
                red = _reduce_candidate(k, b, t)
                if red not in found:
                    found[red] = (AffineMapZn(k % ctx.n, 0),
                                  AffineMapZn(t, s % ctx.m_ord))
    return found


def enumerate_two_orbit_partitions(
        ctx: AffineActionContext,
        cap: int = DEFAULT_N_CAP,
) -> set[OrbitPartition]:
    """All orbit partitions of two-orbit subgroups of Z_n x| <alpha>."""
    return {red.lift(ctx.n)
            for red in two_orbit_partitions_with_generators(ctx, cap)}


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Case1:
    """O1 = shift + m Z_n with m prime; alpha transitive mod m."""

    m: int
    shift: int


@dataclass(frozen=True)
class Case2:
    """m = 4, equal halves pairing residues {0, variant} vs {2, -variant}."""

    variant: int


@dataclass(frozen=True)
class Violation:
    reason: str


LemmaCase = Case1 | Case2 | Violation


def _quotient_transitive(a: int, m: int) -> bool:
    # orbit of 1 under multiplication by a must cover all nonzero classes
    if gcd(a, m) != 1:
        return False
    seen = 0
    cur = 1 % m
    while True:
        seen += 1
        cur = cur * a % m
        if cur == 1 % m:
            break
    return seen == m - 1


def _classify_reduced(ctx: AffineActionContext, red: _ReducedPartition) -> LemmaCase:
    m, r1 = red.m, red.r1
    if m > 1 and is_prime(m):
        if len(r1) != 1:
            return Violation(
                f"radical index {m} is prime but the small class is not a single coset")
        if not _quotient_transitive(ctx.a % m, m):
            return Violation(
                f"multiplication by a is not transitive on the nonzero classes mod {m}")
        return Case1(m, next(iter(r1)))
    if m == 4:
        if red.sizes(ctx.n)[0] * 2 != ctx.n:
            return Violation("radical index 4 but the classes are not equal halves")
        if r1 not in (frozenset({0, 1}), frozenset({0, 3})):
            return Violation(
                f"coset residues {sorted(r1)} do not match the 0/i vs 2/-i pairing")
        if ctx.a % 4 != 3:
            return Violation("a is not -1 modulo 4")
        return Case2(1 if 1 in r1 else 3)
    return Violation(f"radical index {m} is neither prime nor 4")


def classify_partition(ctx: AffineActionContext, part: OrbitPartition) -> LemmaCase:
    """Match a two-orbit partition against the two admissible shapes."""
    if not isinstance(part, OrbitPartition) or part.n != ctx.n:
        raise MalformedPartition("partition does not live on this context's Z_n")
    red = _reduce_partition(part.m,
                            {x % part.m for x in part.o1},
                            {x % part.m for x in part.o2})
    return _classify_reduced(ctx, red)


def case_to_json(case: LemmaCase) -> dict:
    if isinstance(case, Case1):
        return {"case": 1, "m": case.m, "shift": case.shift}
    if isinstance(case, Case2):
        return {"case": 2, "variant": case.variant}
    return {"case": "violation", "reason": case.reason}


# ---------------------------------------------------------------------------
# exhaustive verification
# ---------------------------------------------------------------------------

def verify_lemma(n_max: int, cap: int = DEFAULT_N_CAP, sink=None,
                 include_classes: bool = False) -> dict:
    """Classify every two-orbit partition for all n <= n_max and units a.

    Returns a summary dict with per-context counts and the full list of
    violations (expected empty).  When sink (a writable text stream) is
    given, a complete JSON report is streamed to it; partition entries carry
    the exact compact descriptors (m and shift, or variant), from which the
    classes are reconstructible, plus the literal class arrays when
    include_classes is set (they can be very large for prime n).
    """
    if n_max > cap:
        raise CapExceeded(f"n_max = {n_max} exceeds the cap {cap}")
    violations = []
    contexts = []
    total = 0
    if sink:
        sink.write('{"n_max": %d, "contexts": [\n' % n_max)
    first = True
    for n in range(2, n_max + 1):
        for a in units(n):
            ctx = AffineActionContext(n, a)
            found = two_orbit_partitions_with_generators(ctx, cap=cap)
            reds = sorted(found, key=lambda r: (len(r.r1) * (n // r.m),
                                                r.m, sorted(r.r1)))
            entries = []
            counts = [0, 0, 0]  # case1, case2, violations
            for red in reds:
                case = _classify_reduced(ctx, red)
                entry = case_to_json(case)
                if isinstance(case, Case1):
                    counts[0] += 1
                elif isinstance(case, Case2):
                    counts[1] += 1
                else:
                    counts[2] += 1
                    lifted = red.lift(n)
                    violations.append({
                        "n": n, "a": a,
                        "classes": [sorted(lifted.o1), sorted(lifted.o2)],
                        "reason": case.reason,
                    })
                if include_classes:
                    lifted = red.lift(n)
                    c1, c2 = lifted.classes_sorted()
                    entry["classes"] = [c1, c2]
                entries.append(entry)
            total += len(entries)
            if sink:
                ctx_doc = {"n": n, "a": a, "m_ord": ctx.m_ord,
                           "partitions": entries,
                           "case1": counts[0], "case2": counts[1],
                           "violations": counts[2]}
                sink.write(("" if first else ",\n") + json.dumps(ctx_doc))
                first = False
            contexts.append({"n": n, "a": a, "m_ord": ctx.m_ord,
                             "partitions": len(entries),
                             "case1": counts[0], "case2": counts[1],
                             "violations": counts[2]})
    summary = {
        "n_max": n_max,
        "contexts_checked": len(contexts),
        "partitions_checked": total,
        "violation_count": len(violations),
        "violations": violations,
        "contexts": contexts,
    }
    if sink:
        sink.write('\n], "partitions_checked": %d, "violation_count": %d, '
                   '"violations": %s}\n'
                   % (total, len(violations), json.dumps(violations)))
    return summary
