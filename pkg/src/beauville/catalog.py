"""Explicit generating triples of A_5..A_11 and parametric families for n >= 12.

Every triple is stored as (x, y); z is recomputed as (xy)^-1 and the
printed z, when there is one, is only compared against it.  Mismatches
become :class:`Diagnostic` records instead of exceptions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, product
from math import comb, gcd

from .conjugacy import equivalence_key
from .counting import class_representatives, exponent_An, prime_pi, primes_upto
from .groups import is_alternating
from .perm import Permutation, format_cycles, inverse, p_exponent, p_part, parse
from .triple import GeneratingTriple

__all__ = [
    "GeneratingTriple", "CatalogEntry", "Diagnostic", "CATALOG", "catalog_entries",
    "catalog_small", "catalog_diagnostics", "catalog_records", "recipe_triples",
    "family_transpositions", "family_transposition_representatives", "transposition_family_count",
    "family_Tp", "family_Tp_prime", "pool_inequivalent", "FamilyError",
    "family_p81", "family_p81_representatives",
]


class FamilyError(ValueError):
    """Illegal parameters, failed verification or an exhausted search."""


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    n: int
    x: str
    y: str | None  # None: solved from x and z
    z: str | None  # None: only x and y are given
    claimed: tuple[int, int, int]
    role: str = ""


@dataclass(frozen=True)
class Diagnostic:
    entry: str
    kind: str
    message: str


CATALOG: tuple[CatalogEntry, ...] = (
    CatalogEntry("A5-255", 5, "(1,2)(3,4)", "(1,4,2,3,5)", "(1,5,4,2,3)", (2, 5, 5), "pair1"),
    CatalogEntry("A5-335", 5, "(1,2,3)", "(3,4,5)", "(1,3,5,4,2)", (3, 3, 5), "pair2"),
    CatalogEntry("A5-555", 5, "(1,2,3,4,5)", "(1,4,5,2,3)", "(1,2,4,5,3)", (5, 5, 5), "square1"),
    CatalogEntry("A5-355", 5, "(1,2,4)", "(1,2,3,4,5)", "(1,5,2,4,3)", (3, 5, 5), "square2"),
    CatalogEntry("A6-355", 6, "(1,2,3)", "(1,3,4,5,6)", "(1,6,5,4,2)", (3, 5, 5), "pair1"),
    CatalogEntry("A6-445", 6, "(1,2,3,4)(5,6)", "(1,3)(2,5,4,6)", "(1,2,3,4,5)", (4, 4, 5), "printed"),
    # y solved from the printed x and z; differs from the printed y by swapping 4 and 6
    CatalogEntry("A6-445-xz", 6, "(1,2,3,4)(5,6)", None, "(1,2,3,4,5)", (4, 4, 5), "pair2"),
    # z = (a,b,c,d,e) = (1,2,3,4,5), f = 6, y solved from x and z
    CatalogEntry("A6-345-a", 6, "(1,6,3)", None, "(1,2,3,4,5)", (3, 4, 5), "coprime"),
    CatalogEntry("A6-345-b", 6, "(1,6,5)", None, "(1,2,3,4,5)", (3, 4, 5), "coprime"),
    CatalogEntry("A6-345-c", 6, "(1,2,6)(3,4,5)", None, "(1,2,3,4,5)", (3, 4, 5), "coprime"),
    CatalogEntry("A6-345-d", 6, "(1,6,4)(2,3,5)", None, "(1,2,3,4,5)", (3, 4, 5), "coprime"),
    CatalogEntry("A7-357-a", 7, "(1,2,3)", "(3,4,5,6,7)", "(1,3,7,6,5,4,2)", (3, 5, 7), "pair1,coprime"),
    CatalogEntry("A7-357-b", 7, "(1,2,3)(4,5,6)", "(1,6,7,3,4)", "(1,6,3,7,5,4,2)", (3, 5, 7), "coprime"),
    CatalogEntry("A7-477", 7, "(1,2,3,4)(5,6)", "(1,5,2,4,6,7,3)", "(1,2,6,3,7,5,4)", (4, 7, 7), "pair2"),
    CatalogEntry("A8-457-a", 8, "(1,2)(3,4,5,6)", "(1,4,3,7,8)", "(1,8,7,6,5,4,2)", (4, 5, 7), "pair1,coprime"),
    CatalogEntry("A8-377", 8, "(1,2,3)", "(3,2,4,5,6,7,8)", "(1,3,8,7,6,5,4)", (3, 7, 7), "pair2"),
    CatalogEntry("A8-457-b", 8, "(1,2)(3,4,5,6)", "(1,7,4,3,8)", "(1,8,6,5,4,7,2)", (4, 5, 7), "coprime"),
    CatalogEntry("A9-457-a", 9, "(1,2,3,4)(5,6,7,8)", "(1,4,5,8,9)", "(1,9,7,6,5,3,2)", (4, 5, 7), "pair1,coprime"),
    CatalogEntry("A9-5159", 9, "(1,2,3,4,5)", "(1,2,5)(3,6,7,8,9)", "(1,4,3,9,8,7,6,2,5)", (5, 15, 9), "pair2"),
    CatalogEntry("A9-457-b", 9, "(1,2,3,4)(5,6,7,8)", "(1,4,3,5,9)", "(1,9,8,7,6,5,2)", (4, 5, 7), "coprime"),
    CatalogEntry("A10-857-a", 10, "(1,2,3,4,5,6,7,8)(9,10)", "(1,8,7,9,10)", "(1,9,6,5,4,3,2)", (8, 5, 7), "pair1,coprime"),
    CatalogEntry("A10-955", 10, "(1,2,3,4,5,6,7,8,9)", "(1,3,5,7,10)", "(1,10,6,5,2)(3,9,8,7,4)", (9, 5, 5), "pair2"),
    CatalogEntry("A10-857-b", 10, "(1,2,3,4,5,6,7,8)(9,10)", "(1,8,7,6,9)", "(1,10,9,5,4,3,2)", (8, 5, 7), "coprime"),
    CatalogEntry("A11-589", 11, "(1,2,3,4,5)", "(2,11)(3,6,7,8,9,10,5,4)", "(1,5,10,9,8,7,6,2,4)", (5, 8, 9), "pair1"),
    CatalogEntry("A11-71111", 11, "(1,2,3,4,5,6,7)", "(1,6,7,2,4,5,8,9,10,11,3)",
                 "(1,2,6,7,5,3,11,10,9,8,4)", (7, 11, 11), "pair2"),
    CatalogEntry("A11-1138-a", 11, "(1,2,3,4,5,6,7,8,9,10,11)", "(1,4,2)", None, (11, 3, 8), "coprime"),
    CatalogEntry("A11-1138-b", 11, "(1,2,3,4,5,6,7,8,9,10,11)", "(1,10,2)", None, (11, 3, 8), "coprime"),
)

def catalog_entries(n: int) -> list[CatalogEntry]:
    if not 5 <= n <= 11:
        raise ValueError(f"catalog covers 5 <= n <= 11, got {n}")
    return [e for e in CATALOG if e.n == n]


def _check_entry(e: CatalogEntry) -> tuple[GeneratingTriple, list[Diagnostic]]:
    x = parse(e.x, e.n)
    if e.y is None:
        y = inverse(x) * inverse(parse(e.z, e.n))
    else:
        y = parse(e.y, e.n)
    T = GeneratingTriple.from_pair(x, y, f"catalog:{e.name}")
    diags = []
    if not (x.is_even and y.is_even):
        diags.append(Diagnostic(e.name, "odd", "x or y is an odd permutation"))
    if T.type != e.claimed:
        diags.append(Diagnostic(e.name, "type-mismatch",
                                f"claimed type {e.claimed}, recomputed {T.type} (z={format_cycles(T.z)})"))
    if e.z is not None:
        zp = parse(e.z, e.n)
        if zp.cycle_type != T.z.cycle_type:
            diags.append(Diagnostic(e.name, "z-cycle-type",
                                    f"printed z {e.z} has cycle type {zp.cycle_type}, "
                                    f"recomputed z {format_cycles(T.z)} has {T.z.cycle_type}"))
        elif zp != T.z:
            diags.append(Diagnostic(e.name, "z-differs",
                                    f"printed z {e.z} differs from recomputed {format_cycles(T.z)} "
                                    f"(cycle types agree)"))
    verdict = is_alternating([x, y], e.n)
    if not verdict:
        diags.append(Diagnostic(e.name, "not-generating", f"<x, y> != A_{e.n} ({verdict.tag})"))
    else:
        T = T.__class__(T.x, T.y, T.z, T.provenance, verdict.tag)
    return T, diags


def catalog_small(n: int) -> list[GeneratingTriple]:
    """All catalog triples of degree n, verified where possible.

    Entries that fail verification keep an empty proof tag; look them up
    with :func:`catalog_diagnostics`.
    """
    return [_check_entry(e)[0] for e in catalog_entries(n)]


def catalog_diagnostics(n: int | None = None) -> list[Diagnostic]:
    entries = CATALOG if n is None else catalog_entries(n)
    out = []
    for e in entries:
        out.extend(_check_entry(e)[1])
    return out


def catalog_records(n: int) -> list[dict]:
    """Export rows: degree, x, y, computed z, type, provenance, proof tag."""
    rows = []
    for e in catalog_entries(n):
        T, diags = _check_entry(e)
        rows.append({
            "degree": n, "name": e.name,
            "x": format_cycles(T.x), "y": format_cycles(T.y), "z": format_cycles(T.z),
            "type": list(T.type), "claimed_type": list(e.claimed),
            "provenance": T.provenance, "proof": T.proof,
            "diagnostics": [f"{d.kind}: {d.message}" for d in diags],
        })
    return rows


def _entry_triple(name: str) -> GeneratingTriple:
    e = next(e for e in CATALOG if e.name == name)
    T, diags = _check_entry(e)
    bad = [d for d in diags if d.kind != "z-differs"]
    if bad:
        raise FamilyError(f"catalog entry {name} does not verify: {bad}")
    return T


def recipe_triples(n: int, role: str) -> list[GeneratingTriple]:
    """Verified catalog triples of degree n tagged with ``role``.

    Roles: "pair1"/"pair2" (the two halves of the distinguishing pair),
    "coprime" (same-type triples with coprime periods), "square1"/"square2".
    """
    return [_entry_triple(e.name) for e in catalog_entries(n) if role in e.role.split(",")]


# coprime-period families for n >= 12

def transposition_family_count(n: int) -> int:
    """Number of classes of the coprime-period family."""
    if n % 2:
        return (n - 5) * (n - 6) * (n - 7) // 24
    return (n - 5) * (n - 6) * (n - 7) // 6


def family_transpositions(n: int, params: tuple[int, ...]) -> GeneratingTriple:
    """Odd n: params = (s, t, u, v); even n: params = (s, t, u, v) with s+1 used too."""
    if n < 12:
        raise FamilyError("family needs n >= 12")
    s, t, u, v = params
    if n % 2:
        L = n - 4
        if len({s, t, u, v}) != 4 or not all(1 <= a <= L for a in params):
            raise FamilyError(f"need four distinct points of 1..{L}, got {params}")
        x = Permutation.from_cycles([range(1, L + 1)], n)
        y = Permutation.from_cycles([(s, n - 3), (t, n - 2), (u, n - 1), (v, n)], n)
        expected = (n - 4, 2, n)
    else:
        L = n - 3
        pts = {s, s + 1, t, u, v}
        if len(pts) != 5 or not all(1 <= a <= L for a in pts):
            raise FamilyError(f"need s, s+1, t, u, v distinct in 1..{L}, got {params}")
        x = Permutation.from_cycles([range(1, L + 1)], n)
        y = Permutation.from_cycles([(s, s + 1), (t, n - 2), (u, n - 1), (v, n)], n)
        expected = (n - 3, 2, n - 1)
    T = GeneratingTriple.from_pair(x, y, f"transpositions:n={n}:params={','.join(map(str, params))}")
    if T.type != expected:
        raise FamilyError(f"family triple has type {T.type}, expected {expected}")
    if not (gcd(T.type[0], T.type[1]) == gcd(T.type[0], T.type[2]) == gcd(T.type[1], T.type[2]) == 1):
        raise FamilyError(f"periods {T.type} not mutually coprime")
    return T.verified()


def _least_shift(subset: tuple[int, ...], L: int) -> tuple[int, ...]:
    return min(tuple(sorted(((a - 1 + c) % L) + 1 for a in subset)) for c in range(L))


def family_transposition_representatives(n: int) -> list[tuple[int, ...]]:
    """One parameter tuple per equivalence class, in lexicographic order."""
    if n < 12:
        raise FamilyError("family needs n >= 12")
    if n % 2:
        L = n - 4
        reps = sorted({_least_shift(sub, L) for sub in combinations(range(1, L + 1), 4)})
        return reps
    L = n - 3
    return [(1, t, u, v) for t, u, v in combinations(range(3, L + 1), 3)]


# p-full and p-avoiding families

def _y_cycle_lengths(n: int) -> tuple[int, int]:
    m = n // 2
    return (m - 1, m + 1) if m % 2 == 0 else (m - 2, m + 2)


def _tp_x(n: int, p: int) -> Permutation:
    if p == 2:
        e = 2
        while 2 ** (e + 1) + 2 <= n:
            e += 1
        L = 2 ** e
        return Permutation.from_cycles([range(1, L + 1), (L + 1, L + 2)], n)
    L = p
    while L * p <= n:
        L *= p
    return Permutation.from_cycles([range(1, L + 1)], n)


def _tp_layouts(n: int, x: Permutation, seed: int, attempts: int):
    """Orderings of 1..n: an interleaved layout first, then seeded shuffles."""
    supp = sorted(x.support)
    rest = [i for i in range(1, n + 1) if i not in x.support]
    inter = []
    a, b = list(supp), list(rest)
    while a or b:
        if a:
            inter.append(a.pop(0))
        if b:
            inter.append(b.pop(0))
    yield inter
    rng = random.Random(f"Tp:{n}:{x.cycle_type}:{seed}")
    for _ in range(attempts):
        order = list(range(1, n + 1))
        rng.shuffle(order)
        yield order


def family_Tp(n: int, p: int, seed: int = 0, attempts: int = 2000) -> GeneratingTriple:
    """A generating triple of A_n whose x is p-full and is the only cycle.

    y has two cycles of coprime lengths (m -+ 1 or m -+ 2, n = 2m or 2m + 1),
    plus a fixed point for odd n; a placement of y is searched until z has at
    least two non-trivial cycles and <x, y> = A_n.
    """
    if n < 12:
        raise FamilyError("family needs n >= 12")
    if p not in primes_upto(n):
        raise FamilyError(f"{p} is not a prime <= {n}")
    x = _tp_x(n, p)
    c, d = _y_cycle_lengths(n)
    x_cycles = [set(cy) for cy in x.cycle_data.nontrivial]
    full = p_part(exponent_An(n), p)
    tried = 0
    for order in _tp_layouts(n, x, seed, attempts):
        tried += 1
        if n % 2:
            # y's fixed point sits on the cycle of x that must meet all of y
            fixed = next(pt for pt in order if pt in x_cycles[0])
            order = [pt for pt in order if pt != fixed]
        C, D = order[:c], order[c:c + d]
        if p == 2:
            hub = next((cy for cy in x_cycles if cy & set(C) and cy & set(D)), None)
            if hub is None or (n % 2 and fixed not in hub):
                continue
        else:
            if not (x.support & set(C) and x.support & set(D)):
                continue
        y = Permutation.from_cycles([C, D], n)
        T = GeneratingTriple.from_pair(x, y, "")
        if len(T.z.cycle_data.nontrivial) < 2:
            continue
        if sum(1 for g in T if g.order % full == 0) < 1:
            continue
        verdict = is_alternating([x, y], n)
        if not verdict:
            continue
        prov = (f"T_p:n={n}:p={p}:layout={tried - 1}:seed={seed}"
                f":y={format_cycles(y)}")
        return GeneratingTriple(T.x, T.y, T.z, prov, verdict.tag)
    raise FamilyError(f"no admissible placement for T_{p} in A_{n} after {tried} layouts")


def _avoid_cycles(n: int, q: int, r: int, lengths: list[int]) -> list[list[int]]:
    """Cycles c_3..c_r: c_i starts at point i and takes m_i - 1 points from q+1..n."""
    pool = list(range(q + 1, n + 1))
    out = []
    for i, m in zip(range(3, r + 1), lengths):
        out.append([i] + pool[:m - 1])
        pool = pool[m - 1:]
    if pool:
        raise FamilyError("unused points in the p-avoiding construction")
    return out


def _prev_prime(p: int) -> int:
    return max(q for q in primes_upto(p - 1))


def _tp_prime_candidate(n: int, p: int) -> tuple[Permutation, list, str, tuple]:
    """x, the fixed part of y, the c_i cycles, a case label and the expected z structure."""
    if p >= 5:
        q = 7 if p == 5 else _prev_prime(p)
        x = Permutation.from_cycles([range(1, q + 1)], n)

        def tail(lengths_generic, lengths_alt, use_alt):
            lengths = lengths_alt if use_alt else lengths_generic
            return _avoid_cycles(n, q, 2 + len(lengths), lengths)

        generic = [n - q + 1]
        alt = [2, n - q]
        if p == 5:
            if n % 2 == 0:
                if n % 5 != 3:
                    head, case, zs = [(2, 6)], "p5-even", (3, n - 3)
                else:
                    head, case, zs = [(2, 5)], "p5-even-3mod5", (4, n - 4)
            else:
                if n % 5 != 2:
                    head, case, zs = [(1, 2), (6, 7)], "p5-odd", (n - 2,)
                else:
                    head, case, zs = [(1, 2), (5, 7)], "p5-odd-2mod5", (n - 3, 2)
            use_alt = (n - q + 1) % 5 == 0
            return x, head, tail(generic, alt, use_alt), f"{case}:r={4 if use_alt else 3}", zs
        if n % 2 == 0:
            if n % p == 1:
                return x, [(2, q)], tail(generic, alt, False), "even-1modp:r=3", (n - 2, 2)
            use_alt = n % p == (q - 1) % p
            return (x, [(1, 2)], tail(generic, alt, use_alt),
                    f"even:r={4 if use_alt else 3}", (n - 1,))
        if q == p - 2 == n - 2:
            head = [(1, q, 2)]
            return x, head, _avoid_cycles(n, q, 4, [2, 2]), "odd-twin:r=4", (n - 2,)
        use_alt = n % p == (q - 1) % p
        if n % p != 2:
            return (x, [(1, q, 2)], tail(generic, alt, use_alt),
                    f"odd:r={4 if use_alt else 3}", (n - 2,))
        return (x, [(1, 2, q)], tail(generic, alt, use_alt),
                f"odd-2modp:r={4 if use_alt else 3}", (n,))
    raise AssertionError("p < 5 handled separately")


def _structure(z: Permutation) -> tuple[int, ...]:
    return tuple(c for c in z.cycle_type if c > 1)


def family_Tp_prime(n: int, p: int) -> GeneratingTriple:
    """A generating triple of A_n in which no element is p-full.

    For p >= 5, x is a q-cycle with q the prime below p (q = 7 when p = 5)
    and y is assembled from short cycles on supp(x) plus cycles c_i
    sweeping up the remaining points; p = 2, 3 use explicit formulas.
    """
    if n < 12:
        raise FamilyError("family needs n >= 12")
    if p not in primes_upto(n):
        raise FamilyError(f"{p} is not a prime <= {n}")
    if p == 3:
        if n % 2:
            if n % 9:
                x = Permutation.from_cycles([range(1, n + 1)], n)
                y = Permutation.from_cycles([(1, 2, 3)], n)
                case, zs = "p3-odd", (n,)
            else:
                x = Permutation.from_cycles([range(1, n - 3), (n - 3, n - 2, n - 1)], n)
                y = Permutation.from_cycles([(1, 3, 2), (n - 4, n - 3, n)], n)
                case, zs = "p3-odd-0mod9", (n - 2,)
        else:
            if n % 9 != 1:
                x = Permutation.from_cycles([range(1, n)], n)
                y = Permutation.from_cycles([(1, n, 2)], n)
                case, zs = "p3-even", (n - 1,)
            else:
                x = Permutation.from_cycles([range(1, n - 2)], n)
                y = Permutation.from_cycles([(1, n, 2), (3, 5, 4), (n - 3, n - 2, n - 1)], n)
                case, zs = "p3-even-1mod9", (n - 3,)
        candidates = [(x, y, case, zs)]
    elif p == 2:
        if n % 2:
            x = Permutation.from_cycles([range(1, n - 1)], n)
            y = Permutation.from_cycles([(n - 3, n - 1), (n - 2, n)], n)
            candidates = [(x, y, "p2-odd", (n,))]
        else:
            x = Permutation.from_cycles([range(1, n)], n)
            y = Permutation.from_cycles([(1, 2), (n - 1, n)], n)
            candidates = [(x, y, "p2-even", (n - 1,))]
    else:
        x, head, tails, case, zs = _tp_prime_candidate(n, p)
        candidates = []
        # orientation of each sweeping cycle is not pinned down; try both
        for flips in product((False, True), repeat=len(tails)):
            cycles = list(head)
            for cyc, flip in zip(tails, flips):
                cycles.append([cyc[0]] + cyc[1:][::-1] if flip else cyc)
            y = Permutation.from_cycles(cycles, n)
            candidates.append((x, y, f"{case}:flips={''.join('1' if f else '0' for f in flips)}", zs))
    full = p_part(exponent_An(n), p)
    failures = []
    for x, y, case, zs in candidates:
        T = GeneratingTriple.from_pair(x, y, "")
        if not (x.is_even and y.is_even):
            failures.append(f"{case}: odd element")
            continue
        if _structure(T.z) != tuple(sorted(zs, reverse=True)):
            failures.append(f"{case}: z structure {_structure(T.z)} != {zs}")
            continue
        if any(g.order % full == 0 for g in T):
            failures.append(f"{case}: a {p}-full element")
            continue
        if p in (2, 3) and any(c % (p * p) == 0 for g in T for c in g.cycle_type):
            failures.append(f"{case}: cycle length divisible by {p * p}")
            continue
        verdict = is_alternating([x, y], n)
        if not verdict:
            failures.append(f"{case}: <x, y> != A_n ({verdict.tag})")
            continue
        prov = f"T'_p:n={n}:p={p}:case={case}:y={format_cycles(y)}"
        return GeneratingTriple(T.x, T.y, T.z, prov, verdict.tag)
    raise FamilyError(f"T'_{p} for A_{n} failed: {'; '.join(failures)}")


def nu_p_count(T: GeneratingTriple, p: int) -> int:
    full = p_part(exponent_An(T.degree), p)
    return sum(1 for g in T if g.order % full == 0)


# pools of further inequivalent triples

def _random_even(rng: random.Random, n: int) -> Permutation:
    order = list(range(1, n + 1))
    rng.shuffle(order)
    p = Permutation(order)
    if not p.is_even:
        order[0], order[1] = order[1], order[0]
        p = Permutation(order)
    return p


def _pool_sources(n: int, seed: int):
    if n <= 7:
        yield from class_representatives(n)
        return
    if n >= 12:
        for params in family_transposition_representatives(n):
            yield from family_transpositions(n, params).expansions()
    rng = random.Random(f"pool:{n}:{seed}")
    while True:
        x, y = _random_even(rng, n), _random_even(rng, n)
        T = GeneratingTriple.from_pair(x, y, f"random:n={n}:seed={seed}")
        verdict = is_alternating([x, y], n)
        if verdict:
            yield GeneratingTriple(T.x, T.y, T.z, T.provenance, verdict.tag)
        else:
            yield None  # lets the caller bound the search


def pool_inequivalent(n: int, count: int, exclusions=(), seed: int = 0,
                      max_tries: int | None = None) -> list[GeneratingTriple]:
    """``count`` mutually inequivalent generating triples avoiding ``exclusions``.

    Exclusions are matched together with all of their cyclic rotations.
    Sources, in order: Aut-class representatives (n <= 7); the coprime-period
    family and its rotations/inverse reversals (n >= 12); seeded random
    pairs (n >= 8).
    """
    if count < 0:
        raise ValueError("count must be non-negative")
    if count == 0:
        return []
    banned = set()
    for E in exclusions:
        for R in GeneratingTriple(E[0], E[1], E[2]).rotations():
            banned.add(equivalence_key(R.x, R.y))
    out = []
    if max_tries is None:
        max_tries = 200 * count + 2000
    tries = 0
    for T in _pool_sources(n, seed):
        tries += 1
        if tries > max_tries:
            break
        if T is None:
            continue
        key = equivalence_key(T.x, T.y)
        if key in banned:
            continue
        banned.add(key)
        out.append(T)
        if len(out) == count:
            return out
    raise FamilyError(f"pool exhausted: found {len(out)} of {count} inequivalent triples for A_{n}")


# public aliases
family_p81 = family_transpositions
family_p81_representatives = family_transposition_representatives
