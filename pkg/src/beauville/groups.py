"""Permutation groups given by generators.

``GroupHandle`` answers transitivity, block systems, primitivity and exact
order.  Order comes from a deterministic Schreier-Sims stabilizer chain.
``jordan_certificates`` looks for cheap witnesses (an element with a
suitable cycle structure) that force ``<gens> >= A_n``; ``is_alternating``
uses them as a fast path and falls back to the order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from math import factorial, gcd
from typing import Sequence

from .perm import Permutation, format_cycles

Raw = tuple  # 0-based image tuple


def _mul(p: Raw, q: Raw) -> Raw:
    return tuple(map(q.__getitem__, p))


def _inv(p: Raw) -> Raw:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


class StabilizerChain:
    """Deterministic Schreier-Sims on 0-based image tuples.

    Level ``i`` holds a base point, the generators added at that level and a
    transversal ``{point: u}`` with ``u[base] == point``.  Every Schreier
    generator is sifted; those that do not sift to the identity are added
    one level down, so the chain is complete when construction returns.
    """

    def __init__(self, gens: Sequence[Raw], degree: int):
        self.degree = degree
        self.identity = tuple(range(degree))
        self.base: list[int] = []
        self.gens: list[list[Raw]] = []
        self.trans: list[dict[int, Raw]] = []
        for g in gens:
            if g != self.identity:
                self._extend(0, g)

    def _strip(self, g: Raw, start: int = 0) -> tuple[Raw, int]:
        for i in range(start, len(self.base)):
            pt = g[self.base[i]]
            u = self.trans[i].get(pt)
            if u is None:
                return g, i
            if pt != self.base[i]:
                g = _mul(g, _inv(u))
        return g, len(self.base)

    def _extend(self, i: int, g: Raw) -> None:
        residue, _ = self._strip(g, i)
        if residue == self.identity:
            return
        if i == len(self.base):
            b = next(p for p in range(self.degree) if g[p] != p)
            self.base.append(b)
            self.gens.append([])
            self.trans.append({b: self.identity})
        gens = self.gens[i]
        trans = self.trans[i]
        gens.append(g)
        gi = len(gens) - 1
        pending = [(p, gi) for p in trans]
        frontier = list(trans)
        new_points = []
        while frontier:
            nxt = []
            for p in frontier:
                u = trans[p]
                for s in gens:
                    q = s[p]
                    if q not in trans:
                        trans[q] = _mul(u, s)
                        nxt.append(q)
            new_points.extend(nxt)
            frontier = nxt
        pending.extend((q, j) for q in new_points for j in range(len(gens)))
        for p, j in pending:
            s = gens[j]
            q = s[p]
            h = _mul(_mul(trans[p], s), _inv(trans[q]))
            if h != self.identity:
                self._extend(i + 1, h)

    @property
    def order(self) -> int:
        out = 1
        for t in self.trans:
            out *= len(t)
        return out

    def contains(self, g: Raw) -> bool:
        residue, _ = self._strip(g, 0)
        return residue == self.identity


def closure(gens: Sequence[Raw], degree: int, limit: int | None = None) -> set[Raw]:
    """All elements of ``<gens>`` by breadth-first multiplication."""
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for e in frontier:
            for s in gens:
                f = _mul(e, s)
                if f not in seen:
                    seen.add(f)
                    nxt.append(f)
                    if limit is not None and len(seen) > limit:
                        return seen
        frontier = nxt
    return seen


def orbit_partition(gens: Sequence[Raw], degree: int) -> list[list[int]]:
    """0-based orbits, each sorted, ordered by least point."""
    parent = list(range(degree))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for g in gens:
        for i, v in enumerate(g):
            ri, rv = find(i), find(v)
            if ri != rv:
                parent[max(ri, rv)] = min(ri, rv)
    groups: dict[int, list[int]] = {}
    for i in range(degree):
        groups.setdefault(find(i), []).append(i)
    return [groups[r] for r in sorted(groups)]


def minimal_block(gens: Sequence[Raw], degree: int, a: int, b: int) -> list[int]:
    """Class map of the finest invariant partition putting ``a`` and ``b`` together."""
    parent = list(range(degree))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    parent[max(a, b)] = min(a, b)
    queue = [(a, b)]
    while queue:
        x, y = queue.pop()
        for g in gens:
            u, v = find(g[x]), find(g[y])
            if u != v:
                parent[max(u, v)] = min(u, v)
                queue.append((g[x], g[y]))
    return [find(i) for i in range(degree)]


@dataclass(frozen=True)
class JordanCertificate:
    """A witness element plus the criterion it triggers."""

    criterion: str
    witness: Permutation
    word: str
    hypothesis: str  # "transitive" or "primitive"
    conditions: tuple[tuple[str, int], ...] = ()

    def as_dict(self) -> dict:
        return {
            "criterion": self.criterion,
            "witness": format_cycles(self.witness),
            "word": self.word,
            "hypothesis": self.hypothesis,
            "conditions": {k: v for k, v in self.conditions},
        }


CRITERIA_PRIMITIVE = ("jordan-cycle", "short-orbit", "double-transposition")
CRITERIA_TRANSITIVE = ("coprime-long-cycle", "two-coprime-cycles", "two-coprime-cycles-fixed-point")


def criteria_for(ctype: Sequence[int], n: int) -> list[tuple[str, str, tuple]]:
    """Criteria an element of cycle type ``ctype`` would trigger.

    Returns ``(criterion, hypothesis, conditions)`` triples; the group-level
    hypothesis (transitive or primitive) still has to be checked.
    """
    parts = [c for c in ctype if c > 1]
    fixed = len(ctype) - len(parts)
    out = []
    if len(parts) == 1:
        m = parts[0]
        if 2 <= m <= n - 3:
            out.append(("jordan-cycle", "primitive", (("m", m),)))
        if 1 < m and 2 * m < n:
            out.append(("short-orbit", "primitive", (("m", m),)))
        if gcd(m, n) == 1 and n < 2 * m and m < n - 2:
            out.append(("coprime-long-cycle", "transitive", (("m", m), ("gcd", 1))))
    if sorted(parts) == [2, 2] and n >= 9:
        out.append(("double-transposition", "primitive", (("n", n),)))
    if len(parts) == 2:
        c, d = sorted(parts)
        if gcd(c, d) == 1 and fixed == 0:
            out.append(("two-coprime-cycles", "transitive", (("c", c), ("d", d))))
        if gcd(c, d) == 1 and fixed == 1 and n % (1 + c) and n % (1 + d):
            out.append(("two-coprime-cycles-fixed-point", "transitive", (("c", c), ("d", d))))
    return out


def _is_prime(m: int) -> bool:
    return m >= 2 and all(m % q for q in range(2, int(m ** 0.5) + 1))


class GroupHandle:
    """Subgroup of S_n generated by a list of permutations (lazy caches)."""

    def __init__(self, gens: Sequence[Permutation], degree: int | None = None):
        gens = list(gens)
        if degree is None:
            if not gens:
                raise ValueError("need generators or an explicit degree")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise ValueError(f"generator of degree {g.degree} in a degree-{degree} group")
        self.degree = degree
        self.gens = gens
        self._raw = [g.img for g in gens]

    @cached_property
    def orbits(self) -> list[frozenset[int]]:
        return [frozenset(p + 1 for p in orb) for orb in orbit_partition(self._raw, self.degree)]

    @property
    def is_transitive(self) -> bool:
        return len(self.orbits) == 1

    @cached_property
    def block_systems(self) -> list[tuple[frozenset[int], ...]]:
        if not self.is_transitive:
            raise ValueError("block systems are only defined for transitive groups")
        n = self.degree
        found: dict[tuple, tuple[frozenset[int], ...]] = {}
        for b in range(1, n):
            cls = minimal_block(self._raw, n, 0, b)
            if len(set(cls)) == 1:
                continue
            key = tuple(cls)
            if key not in found:
                blocks: dict[int, set[int]] = {}
                for i, r in enumerate(cls):
                    blocks.setdefault(r, set()).add(i + 1)
                found[key] = tuple(sorted((frozenset(s) for s in blocks.values()), key=min))
        systems = list(found.values())
        first = [next(bl for bl in sysm if 1 in bl) for sysm in systems]
        minimal = [s for s, b in zip(systems, first) if not any(o < b for o in first)]
        return sorted(minimal, key=lambda s: (len(s[0]), [sorted(bl) for bl in s]))

    @property
    def is_primitive(self) -> bool:
        return self.is_transitive and not self.block_systems

    @cached_property
    def chain(self) -> StabilizerChain:
        return StabilizerChain(self._raw, self.degree)

    @property
    def order(self) -> int:
        return self.chain.order

    def __contains__(self, g: Permutation) -> bool:
        return self.chain.contains(g.img)

    def witnesses(self, max_word: int = 3):
        """Yield ``(word, element)`` for words of length <= max_word and their powers."""
        alphabet = []
        for i, g in enumerate(self.gens):
            alphabet.append((f"g{i + 1}", g))
            if g.order > 2:
                alphabet.append((f"g{i + 1}^-1", g ** -1))
        seen: set[tuple] = set()
        for length in range(1, max_word + 1):
            for letters in product(alphabet, repeat=length):
                w = letters[0][1]
                for _, s in letters[1:]:
                    w = w * s
                name = "*".join(nm for nm, _ in letters)
                o = w.order
                for e in range(1, o):
                    if o % e:
                        continue
                    h = w ** e
                    if h.img in seen:
                        continue
                    seen.add(h.img)
                    yield (name if e == 1 else f"({name})^{e}"), h

    def primitivity_witness(self) -> str | None:
        """Cheap sufficient condition for primitivity, if one applies."""
        if not self.is_transitive:
            return None
        n = self.degree
        for word, h in self.witnesses(1):
            parts = [c for c in h.cycle_type if c > 1]
            if len(parts) != 1:
                continue
            m = parts[0]
            if gcd(m, n) == 1 and 2 * m > n:
                return f"coprime-cycle:{word}"
            if _is_prime(m):
                supp = {p - 1 for p in h.support}
                if all(any(g[p] in supp for p in supp) for g in self._raw):
                    return f"prime-cycle-support:{word}"
        return None

    def jordan_certificates(self, max_word: int = 3) -> list[JordanCertificate]:
        if not self.gens or not self.is_transitive:
            return []
        n = self.degree
        certs: dict[str, JordanCertificate] = {}
        primitive: bool | None = None
        for word, h in self.witnesses(max_word):
            for crit, hyp, cond in criteria_for(h.cycle_type, n):
                if crit in certs:
                    continue
                if hyp == "primitive":
                    if primitive is None:
                        primitive = self.is_primitive
                    if not primitive:
                        continue
                certs[crit] = JordanCertificate(crit, h, word, hyp, cond)
            if len(certs) == len(CRITERIA_PRIMITIVE) + len(CRITERIA_TRANSITIVE):
                break
        order = CRITERIA_TRANSITIVE + CRITERIA_PRIMITIVE
        return sorted(certs.values(), key=lambda c: order.index(c.criterion))

    def first_jordan_certificate(self, max_word: int = 3) -> JordanCertificate | None:
        """Stop at the first witness whose hypothesis holds (generation fast path)."""
        if not self.gens or not self.is_transitive:
            return None
        n = self.degree
        primitive: bool | None = None
        for word, h in self.witnesses(max_word):
            for crit, hyp, cond in criteria_for(h.cycle_type, n):
                if hyp == "primitive":
                    if primitive is None:
                        primitive = self.is_primitive
                    if not primitive:
                        continue
                return JordanCertificate(crit, h, word, hyp, cond)
        return None


@dataclass(frozen=True)
class AltVerdict:
    value: bool
    tag: str
    detail: dict = field(default_factory=dict)

    def __bool__(self):
        return self.value


def alternating_order(n: int) -> int:
    return factorial(n) // 2


def is_alternating(gens: Sequence[Permutation], n: int, max_word: int = 3,
                   use_fast_path: bool = True) -> AltVerdict:
    """Decide ``<gens> == A_n`` and say which route decided it."""
    gens = list(gens)
    odd = [format_cycles(g) for g in gens if not g.is_even]
    if odd:
        return AltVerdict(False, "odd-generator", {"odd": odd})
    H = GroupHandle(gens, n)
    if n <= 2:
        return AltVerdict(True, "trivial-degree")
    if not H.is_transitive:
        return AltVerdict(False, "intransitive", {"orbits": len(H.orbits)})
    if use_fast_path:
        cert = H.first_jordan_certificate(max_word)
        if cert is not None:
            return AltVerdict(True, f"jordan:{cert.criterion}", cert.as_dict())
    order = H.order
    target = alternating_order(n)
    return AltVerdict(order == target, "order", {"order": order, "target": target})
