"""Counting generating pairs of small alternating groups.

phi2(H) is the number of ordered pairs generating H and d2(H) = phi2/|Aut H|
the number of Aut-orbits of such pairs.  Two independent routes are
provided: exhaustive enumeration over H x H, and Moebius inversion over the
full subgroup lattice, phi2(H) = sum_K mu(K) |K|^2.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from math import factorial, isqrt

from .conjugacy import alternating_elements, build_exceptional_aut, pair_canonical_form
from .groups import is_alternating
from .perm import Permutation, conjugate, lcm, p_part
from .triple import GeneratingTriple

log = logging.getLogger(__name__)

BRUTE_CAP = 360  # largest |A_n| enumerated pair by pair
CENSUS_CAP = 2520  # largest |A_n| handled by the class-weighted census
LATTICE_CAP = 360


class CapExceeded(ValueError):
    pass


def aut_order(n: int) -> int:
    """|Aut A_n| for n >= 5."""
    if n < 5:
        raise ValueError("A_n is simple and non-abelian only for n >= 5")
    return 2 * factorial(6) if n == 6 else factorial(n)


@dataclass(frozen=True)
class CountReport:
    group: str
    phi2: int
    aut_order: int
    d2: int
    method: str
    detail: dict = field(default_factory=dict, compare=False)

    def as_dict(self) -> dict:
        return {"group": self.group, "phi2": self.phi2, "aut_order": self.aut_order,
                "d2": self.d2, "method": self.method}


def _report(n: int, phi2: int, method: str, **detail) -> CountReport:
    aut = aut_order(n)
    if phi2 % aut:
        raise AssertionError(f"|Aut A_{n}| = {aut} does not divide phi2 = {phi2}")
    return CountReport(f"A{n}", phi2, aut, phi2 // aut, method, detail)


class AltTable:
    """Elements of A_n as indices 0..|A_n|-1 with a full multiplication table.

    ``mul[a][b]`` is the index of a*b (a applied first).
    """

    def __init__(self, n: int):
        self.n = n
        self.elements = alternating_elements(n)
        if len(self.elements) > BRUTE_CAP:
            raise CapExceeded(f"|A_{n}| = {len(self.elements)} exceeds table cap {BRUTE_CAP}")
        imgs = [g.img for g in self.elements]
        self.index = {img: i for i, img in enumerate(imgs)}
        idx = self.index
        self.mul = [[idx[tuple(map(b.__getitem__, a))] for b in imgs] for a in imgs]
        self.identity = idx[tuple(range(n))]

    def __len__(self):
        return len(self.elements)

    def generates(self, a: int, b: int) -> bool:
        """Whether elements a, b generate A_n; stops once past |A_n|/2."""
        half = len(self.elements) // 2
        mul = self.mul
        seen = bytearray(len(self.elements))
        seen[self.identity] = 1
        frontier = [self.identity]
        count = 1
        while frontier:
            nxt = []
            for e in frontier:
                row = mul[e]
                f = row[a]
                if not seen[f]:
                    seen[f] = 1
                    nxt.append(f)
                f = row[b]
                if not seen[f]:
                    seen[f] = 1
                    nxt.append(f)
            count += len(nxt)
            if count > half:
                return True
            frontier = nxt
        return False

    def subgroup_elements(self, gens: list[int]) -> list[int]:
        seen = {self.identity}
        frontier = [self.identity]
        out = [self.identity]
        while frontier:
            nxt = []
            for e in frontier:
                row = self.mul[e]
                for s in gens:
                    f = row[s]
                    if f not in seen:
                        seen.add(f)
                        nxt.append(f)
            out.extend(nxt)
            frontier = nxt
        return out


@lru_cache(maxsize=4)
def alt_table(n: int) -> AltTable:
    return AltTable(n)


def _count_rows(n: int, rows: range) -> int:
    T = alt_table(n)
    N = len(T)
    total = 0
    for a in rows:
        for b in range(N):
            if T.generates(a, b):
                total += 1
    return total


def phi2_bruteforce(n: int, workers: int = 1, chunks: int = 8) -> CountReport:
    """Count ordered generating pairs of A_n.

    For |A_n| <= 360 every pair is tested.  For A_7 each first entry is taken
    up to S_n-conjugacy and weighted by its class size; every second entry is
    still tested (see :func:`pair_census`).
    """
    if n < 5:
        raise ValueError("n must be at least 5")
    order = factorial(n) // 2
    if order <= BRUTE_CAP:
        N = order
        step = -(-N // chunks)
        ranges = [range(i, min(i + step, N)) for i in range(0, N, step)]
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as ex:
                parts = list(ex.map(_count_rows, [n] * len(ranges), ranges))
        else:
            parts = [_count_rows(n, r) for r in ranges]
        return _report(n, sum(parts), "brute", pairs=N * N)
    if order <= CENSUS_CAP:
        census = pair_census(n)
        phi2 = sum(c.class_size * sum(o for _, o in c.generating) for c in census)
        return _report(n, phi2, "brute-class-weighted", pairs=order * order)
    raise CapExceeded(f"|A_{n}| = {order} exceeds brute-force cap {CENSUS_CAP}")


# subgroup lattice

@dataclass
class SubgroupNode:
    key: tuple[int, ...]  # sorted element indices
    order: int
    mu: int = 0
    supers: list[int] = field(default_factory=list)
    mask: int = 0


def _dimino_join(T: AltTable, elems: list[int], eset: set[int], gens: list[int], g: int):
    """Elements of <K, g> for a subgroup K given by its elements and generators."""
    mul = T.mul
    elements = list(elems)
    allset = set(eset)
    all_gens = gens + [g]
    reps = [T.identity]

    def add_coset(r):
        new = [mul[k][r] for k in elems]
        elements.extend(new)
        allset.update(new)
        reps.append(r)

    add_coset(g)
    i = 0
    while i < len(reps):
        r = reps[i]
        i += 1
        row = mul[r]
        for s in all_gens:
            t = row[s]
            if t not in allset:
                add_coset(t)
    return elements, allset, all_gens


def subgroup_lattice(n: int) -> list[SubgroupNode]:
    """Every subgroup of A_n (|A_n| <= 360) with its Moebius value.

    Subgroups are grown from the cyclic ones by joining one cyclic subgroup
    at a time until nothing new appears.
    """
    if factorial(n) // 2 > LATTICE_CAP:
        raise CapExceeded(f"|A_{n}| exceeds lattice cap {LATTICE_CAP}")
    T = alt_table(n)
    cyclic: dict[int, int] = {}  # mask -> generator
    for g in range(len(T)):
        els = T.subgroup_elements([g])
        mask = sum(1 << e for e in els)
        cyclic.setdefault(mask, g)
    cyc_gens = sorted(cyclic.values())
    found: dict[int, tuple[list[int], set[int], list[int]]] = {}
    queue = []
    for mask, g in cyclic.items():
        els = T.subgroup_elements([g])
        found[mask] = (els, set(els), [g] if g != T.identity else [])
        queue.append(mask)
    while queue:
        mask = queue.pop()
        els, eset, gens = found[mask]
        for g in cyc_gens:
            if g in eset:
                continue
            jels, jset, jgens = _dimino_join(T, els, eset, gens, g)
            jmask = 0
            for e in jels:
                jmask |= 1 << e
            if jmask not in found:
                found[jmask] = (jels, jset, jgens)
                queue.append(jmask)
    nodes = [SubgroupNode(tuple(sorted(v[0])), len(v[0]), mask=m) for m, v in found.items()]
    nodes.sort(key=lambda s: (-s.order, s.key))
    for i, K in enumerate(nodes):
        K.supers = [j for j in range(i) if nodes[j].mask & K.mask == K.mask]
        K.mu = 1 if i == 0 else -sum(nodes[j].mu for j in K.supers)
    return nodes


def check_moebius(nodes: list[SubgroupNode]) -> bool:
    """sum_{L >= K} mu(L) == [K == top] for every node."""
    for i, K in enumerate(nodes):
        total = K.mu + sum(nodes[j].mu for j in K.supers)
        if total != (1 if i == 0 else 0):
            return False
    return True


def phi2_moebius(n: int) -> CountReport:
    nodes = subgroup_lattice(n)
    phi2 = sum(K.mu * K.order * K.order for K in nodes)
    return _report(n, phi2, "moebius", subgroups=len(nodes))


# exponents and primes

def exponent_An(n: int) -> int:
    """Exponent of A_n: lcm of the cycle lengths occurring in even permutations.

    An odd m fits as a single cycle; an even m needs a second even-length
    cycle, so m + 2 <= n.
    """
    if n > 64:
        raise ValueError("n > 64 unsupported")
    lengths = [m for m in range(1, n + 1) if m % 2 or m + 2 <= n]
    return lcm(*lengths)


def exponent_by_partitions(n: int) -> int:
    """Same quantity by walking all even partitions of n (small n only)."""
    out = 1

    def walk(rem, maxpart, parts):
        nonlocal out
        if rem == 0:
            if (n - len(parts)) % 2 == 0:
                out = lcm(out, lcm(*parts))
            return
        for m in range(min(rem, maxpart), 0, -1):
            parts.append(m)
            walk(rem - m, m, parts)
            parts.pop()

    walk(n, n, [])
    return out


def primes_upto(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p::p] = bytearray(len(range(p * p, n + 1, p)))
    return [i for i in range(n + 1) if sieve[i]]


def prime_pi(n: int) -> int:
    return len(primes_upto(n))


def prime_factors(m: int) -> list[int]:
    out = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return out


# class representatives of generating pairs

@dataclass
class ClassCensus:
    x: Permutation
    class_size: int
    generating: list[tuple[Permutation, int]]  # (y representative, orbit size)


def even_class_representatives(n: int) -> list[Permutation]:
    """One element per cycle type of even permutations (consecutive layout)."""
    reps = []

    def walk(rem, maxpart, parts):
        if rem == 0:
            if (n - len(parts)) % 2 == 0:
                cycles, start = [], 1
                for m in parts:
                    cycles.append(range(start, start + m))
                    start += m
                reps.append(Permutation.from_cycles(cycles, n))
            return
        for m in range(min(rem, maxpart), 0, -1):
            parts.append(m)
            walk(rem - m, m, parts)
            parts.pop()

    walk(n, n, [])
    return reps


def _centralizer(x: Permutation) -> list[Permutation]:
    n = x.degree
    out = []
    for img in permutations(range(n)):
        h = Permutation._raw(img)
        if conjugate(x, h) == x:
            out.append(h)
    return out


@lru_cache(maxsize=4)
def pair_census(n: int) -> tuple[ClassCensus, ...]:
    """Orbits of C_{S_n}(x) on A_n, for each class representative x.

    Every y in A_n is visited; one generation test is run per orbit.
    """
    order = factorial(n) // 2
    if order > CENSUS_CAP:
        raise CapExceeded(f"|A_{n}| = {order} exceeds census cap {CENSUS_CAP}")
    elements = alternating_elements(n)
    table = alt_table(n) if order <= BRUTE_CAP else None
    out = []
    for x in even_class_representatives(n):
        if x.is_identity():
            out.append(ClassCensus(x, 1, []))
            continue
        cent = _centralizer(x)
        class_size = factorial(n) // len(cent)
        seen: set[tuple] = set()
        generating = []
        for y in elements:
            if y.img in seen:
                continue
            orbit = {conjugate(y, c).img for c in cent}
            seen |= orbit
            rep = Permutation._raw(min(orbit))
            if table is not None:
                gen = table.generates(table.index[x.img], table.index[rep.img])
            else:
                gen = bool(is_alternating([x, rep], n))
            if gen:
                generating.append((rep, len(orbit)))
        out.append(ClassCensus(x, class_size, generating))
    return tuple(out)


def class_representatives(n: int, type_filter: tuple[int, int, int] | None = None,
                          ambient: str = "Aut") -> list[GeneratingTriple]:
    """One generating triple per Aut(A_n)-orbit (S_n-orbit if ambient="Sn").

    Representatives are sorted by their canonical pair form.
    """
    if n < 5:
        raise ValueError("n must be at least 5")
    reps: dict[tuple, GeneratingTriple] = {}
    for c in pair_census(n):
        for y, _ in c.generating:
            T = GeneratingTriple.from_pair(c.x, y, f"classrep:A{n}", "census")
            if type_filter is not None and T.type != tuple(type_filter):
                continue
            key = pair_canonical_form(T.x, T.y)
            reps[key] = T
    if n == 6 and ambient == "Aut":
        sigma = build_exceptional_aut()
        merged: dict[tuple, GeneratingTriple] = {}
        for key, T in reps.items():
            other = pair_canonical_form(sigma(T.x), sigma(T.y))
            k = min(key, other)
            if k not in merged or key < pair_canonical_form(merged[k].x, merged[k].y):
                merged[k] = T
        reps = merged
    return [reps[k] for k in sorted(reps)]


def check_semiregular(n: int, samples: int = 20) -> bool:
    """No non-identity element of S_n fixes any of the sampled 2-bases."""
    census = pair_census(n)
    pairs = [(c.x, y) for c in census for y, _ in c.generating][:samples]
    for x, y in pairs:
        for img in permutations(range(n)):
            h = Permutation._raw(img)
            if h.is_identity():
                continue
            if conjugate(x, h) == x and conjugate(y, h) == y:
                return False
    return True
