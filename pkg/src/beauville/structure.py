"""Beauville structures on G = A_n^k.

A product triple is stored coordinate by coordinate: coordinate j holds a
generating triple (x_j, y_j, z_j) of A_n, and (a, b, c) is read off as
(x_j)_j, (y_j)_j, (z_j)_j.  Everything the constructors return has gone
through :func:`verify_structure`.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, factorial, gcd

from .catalog import (
    FamilyError, family_transpositions, family_transposition_representatives, family_Tp, family_Tp_prime,
    pool_inequivalent, recipe_triples,
)
from .conjugacy import build_exceptional_aut, class_label, equivalence_key, simultaneous_conjugacy
from .counting import class_representatives, exponent_An, prime_factors, prime_pi, primes_upto
from .groups import StabilizerChain, alternating_order, is_alternating
from .perm import Permutation, conjugate, lcm, p_exponent, p_part
from .triple import GeneratingTriple

DEFAULT_CAP = 10_000
KNOWN_D2 = {5: 19, 6: 53}  # recomputed by counting.phi2_bruteforce in the test suite


class AssemblyError(ValueError):
    """A recipe's hypotheses fail or its output does not verify."""


class Infeasible(ValueError):
    """Parameters outside what can be built (cap, d_2 bound)."""


# product elements and triples

@dataclass(frozen=True)
class ProductElement:
    components: tuple[Permutation, ...]

    @property
    def k(self) -> int:
        return len(self.components)

    @property
    def n(self) -> int:
        return self.components[0].degree

    @property
    def order(self) -> int:
        return lcm(*(g.order for g in self.components))

    def __mul__(self, other: "ProductElement") -> "ProductElement":
        return ProductElement(tuple(g * h for g, h in zip(self.components, other.components)))

    def __pow__(self, e: int) -> "ProductElement":
        return ProductElement(tuple(g ** e for g in self.components))

    def is_identity(self) -> bool:
        return all(g.is_identity() for g in self.components)


@dataclass(frozen=True)
class ProductTriple:
    coords: tuple[GeneratingTriple, ...]

    @property
    def k(self) -> int:
        return len(self.coords)

    @property
    def n(self) -> int:
        return self.coords[0].degree

    def element(self, i: int) -> ProductElement:
        return ProductElement(tuple(T[i] for T in self.coords))

    @property
    def a(self) -> ProductElement:
        return self.element(0)

    @property
    def b(self) -> ProductElement:
        return self.element(1)

    @property
    def c(self) -> ProductElement:
        return self.element(2)

    @property
    def type(self) -> tuple[int, int, int]:
        return tuple(lcm(*(T[i].order for T in self.coords)) for i in range(3))


@dataclass(frozen=True)
class ProfileData:
    profile: tuple[int, ...]
    summit: frozenset[int]  # 1-based coordinates


def is_hyperbolic(periods) -> bool:
    return sum(Fraction(1, m) for m in periods) < 1


def genus(group_order: int, periods) -> int:
    """Riemann-Hurwitz genus of a smooth three-point cover with these periods."""
    g = 1 + Fraction(group_order, 2) * (1 - sum(Fraction(1, m) for m in periods))
    if g.denominator != 1:
        raise ValueError(f"non-integral genus {g} for |G|={group_order}, periods {periods}")
    return int(g)


def profile(g: ProductElement, p: int) -> ProfileData:
    exps = tuple(p_exponent(h.order, p) for h in g.components)
    top = max(exps)
    summit = frozenset(j + 1 for j, e in enumerate(exps) if e == top) if top else frozenset()
    return ProfileData(exps, summit)


def nu_p(T, p: int, n: int | None = None) -> int:
    """Number of p-full entries of a triple in A_n."""
    n = T[0].degree if n is None else n
    full = p_part(exponent_An(n), p)
    return sum(1 for g in (T[0], T[1], T[2]) if g.order % full == 0)


def is_p_distinguishing(T1, T2, p: int, n: int | None = None) -> bool:
    return nu_p(T1, p, n) != nu_p(T2, p, n)


def is_strongly_p_distinguishing(T1, T2, p: int, n: int | None = None) -> bool:
    if not is_p_distinguishing(T1, T2, p, n):
        return False
    n = T1[0].degree if n is None else n
    p2_divides_exp = exponent_An(n) % (p * p) == 0
    for T in (T1, T2):
        if nu_p(T, p, n) == 0 and p2_divides_exp:
            if any(g.order % p == 0 for g in (T[0], T[1], T[2])):
                return False
    return True


# generation of A_n^k

@dataclass
class Verdict:
    value: bool
    evidence: dict = field(default_factory=dict)

    def __bool__(self):
        return self.value


def _digest(obj) -> str:
    blob = json.dumps(obj, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def _invariant(T: GeneratingTriple) -> tuple:
    # cycle types are not preserved by the exceptional automorphism of A_6
    if T.degree == 6:
        return T.type
    return (T.type, T.x.cycle_type, T.y.cycle_type, T.z.cycle_type)


def pair_subgroup_order(T1: GeneratingTriple, T2: GeneratingTriple) -> int:
    """|<(x1, x2), (y1, y2)>| acting on 2n points."""
    n = T1.degree
    gens = []
    for g1, g2 in ((T1.x, T2.x), (T1.y, T2.y)):
        gens.append(tuple(g1.img) + tuple(n + i for i in g2.img))
    return StabilizerChain(gens, 2 * n).order


def _goursat_pairs(k: int, samples: int) -> list[tuple[int, int]]:
    if k < 2 or samples <= 0:
        return []
    cand = [(0, 1), (k - 2, k - 1), (0, k - 1), (k // 2 - 1, k // 2)]
    out = []
    for pr in cand:
        if pr[0] < pr[1] and pr not in out:
            out.append(pr)
    return out[:samples]


def generates_product(coords, n: int | None = None, goursat_samples: int = 3) -> Verdict:
    """Whether the coordinate triples generate A_n^k.

    True iff every coordinate generates A_n and no two coordinates are
    Aut(A_n)-equivalent.  Pairs with different (type, cycle types) are
    separated by that invariant; the rest by the canonical pair form, which
    is complete.  A few coordinate pairs are cross-checked by computing the
    order of their pair subgroup, which must be |A_n|^2.
    """
    coords = list(coords)
    n = coords[0].degree if n is None else n
    tags = []
    for j, T in enumerate(coords):
        verdict = is_alternating([T.x, T.y], n)
        if not verdict:
            raise AssemblyError(f"coordinate {j + 1} does not generate A_{n} ({verdict.tag})")
        tags.append(verdict.tag)
    buckets: dict[tuple, list[int]] = {}
    for j, T in enumerate(coords):
        buckets.setdefault(_invariant(T), []).append(j)
    invariant_pairs = len(coords) * (len(coords) - 1) // 2 - sum(
        len(b) * (len(b) - 1) // 2 for b in buckets.values())
    canonical_pairs = 0
    for members in buckets.values():
        seen: dict[tuple, int] = {}
        for j in members:
            key = equivalence_key(coords[j].x, coords[j].y)
            if key in seen:
                i = seen[key]
                h = simultaneous_conjugacy(coords[i].x, coords[i].y, coords[j].x, coords[j].y)
                how = "S_n" if h is not None else "Aut(A_6)"
                return Verdict(False, {"equivalent": [i + 1, j + 1], "via": how, "proof_tags": tags})
            seen[key] = j
        canonical_pairs += len(members) * (len(members) - 1) // 2
    full = alternating_order(n) ** 2
    goursat = []
    for i, j in _goursat_pairs(len(coords), goursat_samples):
        order = pair_subgroup_order(coords[i], coords[j])
        goursat.append([i + 1, j + 1, order])
        if order != full:
            return Verdict(False, {"goursat_failure": [i + 1, j + 1, order], "proof_tags": tags})
    return Verdict(True, {"proof_tags": tags, "invariant_separated": invariant_pairs,
                          "canonical_separated": canonical_pairs, "goursat": goursat})


# condition (3)

def _components_conjugate(e1: list[Permutation], e2: list[Permutation]) -> tuple[bool, int, str]:
    """Componentwise A_n-conjugacy; returns (conjugate, first separating coordinate, reason)."""
    for j, (g, h) in enumerate(zip(e1, e2)):
        gi, hi = g.is_identity(), h.is_identity()
        if gi and hi:
            continue
        if gi != hi:
            return False, j + 1, "support"
        lg, lh = class_label(g), class_label(h)
        if lg != lh:
            reason = "cycle-type" if lg.cycle_type != lh.cycle_type else "split-class"
            return False, j + 1, reason
    return True, 0, "conjugate"


def condition3_exact(P1: ProductTriple, P2: ProductTriple) -> Verdict:
    """No non-identity power of a1, b1, c1 is G-conjugate to a power of a2, b2, c2.

    Reduced to elements of prime order: for each (d1, d2) and each prime p
    dividing both orders, d1^(o1/p) is compared with d2^(m*o2/p) for every
    m in 1..p-1, conjugacy in G being conjugacy in every coordinate.
    """
    names = ("a", "b", "c")
    records = []
    ok = True
    for i1 in range(3):
        d1 = P1.element(i1)
        o1 = d1.order
        for i2 in range(3):
            d2 = P2.element(i2)
            o2 = d2.order
            common = [p for p in prime_factors(o1) if o2 % p == 0]
            for p in common:
                e1 = [g ** (o1 // p) for g in d1.components]
                base2 = [g ** (o2 // p) for g in d2.components]
                for m in range(1, p):
                    e2 = [g ** m for g in base2]
                    conj, j, reason = _components_conjugate(e1, e2)
                    records.append({"pair": f"{names[i1]}1,{names[i2]}2", "p": p, "m": m,
                                    "conjugate": int(conj), "coordinate": j, "reason": reason})
                    if conj:
                        ok = False
    per_prime: dict[int, list] = {}
    for r in records:
        per_prime.setdefault(r["p"], []).append(r)
    digests = {str(p): _digest(rs) for p, rs in sorted(per_prime.items())}
    failures = [r for r in records if r["conjugate"]]
    return Verdict(ok, {"checks": len(records), "failures": failures[:5],
                        "prime_digests": digests, "records": records})


def sigma_bruteforce(P: ProductTriple, group_elements: list[tuple[Permutation, ...]]) -> set:
    """All G-conjugates of all powers of a, b, c (as tuples of image tuples)."""
    out = set()
    for d in (P.a, P.b, P.c):
        for e in range(d.order):
            g = d ** e
            for h in group_elements:
                out.add(tuple(conjugate(gj, hj).img for gj, hj in zip(g.components, h)))
    return out


# verification

@dataclass
class VerificationReport:
    conditions: dict  # name -> 0/1, in check order
    proof_tags: list  # per side, per coordinate
    evidence: dict

    @property
    def ok(self) -> bool:
        return all(self.conditions.values())

    @property
    def first_failure(self) -> str | None:
        return next((name for name, v in self.conditions.items() if not v), None)

    def as_dict(self) -> dict:
        return {"conditions": dict(self.conditions), "proof_tags": self.proof_tags,
                "evidence": self.evidence}


def verify_structure(P1: ProductTriple, P2: ProductTriple, goursat_samples: int = 3) -> VerificationReport:
    """Re-check everything from the permutations alone."""
    conds: dict[str, int] = {}
    evidence: dict = {}
    tags: list = [[], []]
    n, k = P1.n, P1.k
    shape_ok = P2.n == n and P2.k == k and all(g.degree == n for P in (P1, P2) for T in P.coords for g in T)
    conds["well-formed"] = int(shape_ok)
    if not shape_ok:
        return VerificationReport(conds, tags, evidence)
    conds["even"] = int(all(g.is_even for P in (P1, P2) for T in P.coords for g in T))
    if not conds["even"]:
        return VerificationReport(conds, tags, evidence)
    conds["relation"] = int(all(T.is_triple() for P in (P1, P2) for T in P.coords))
    gen_ok = True
    for side, P in enumerate((P1, P2)):
        try:
            v = generates_product(P.coords, n, goursat_samples)
        except AssemblyError as exc:
            evidence[f"generation_{side + 1}"] = {"error": str(exc)}
            gen_ok = False
            continue
        tags[side] = v.evidence.get("proof_tags", [])
        evidence[f"generation_{side + 1}"] = {k_: v_ for k_, v_ in v.evidence.items() if k_ != "proof_tags"}
        gen_ok = gen_ok and v.value
    conds["generation"] = int(gen_ok)
    conds["hyperbolic"] = int(is_hyperbolic(P1.type) and is_hyperbolic(P2.type))
    c3 = condition3_exact(P1, P2)
    conds["condition-3"] = int(c3.value)
    evidence["condition_3"] = {"checks": c3.evidence["checks"],
                               "prime_digests": c3.evidence["prime_digests"],
                               "failures": c3.evidence["failures"]}
    evidence["types"] = [list(P1.type), list(P2.type)]
    return VerificationReport(conds, tags, evidence)


@dataclass
class BeauvilleStructure:
    triples: tuple[ProductTriple, ProductTriple]
    report: VerificationReport
    recipe: str
    parameters: dict
    seed: int = 0

    @property
    def n(self) -> int:
        return self.triples[0].n

    @property
    def k(self) -> int:
        return self.triples[0].k

    @property
    def type(self) -> tuple[tuple[int, int, int], tuple[int, int, int]]:
        return (self.triples[0].type, self.triples[1].type)


@dataclass
class NoStructure:
    n: int
    k: int
    reason: str
    report: dict = field(default_factory=dict)


@dataclass
class Unsupported:
    n: int
    k: int
    reason: str


def _finish(sides, recipe, params, seed) -> BeauvilleStructure:
    P1, P2 = ProductTriple(tuple(sides[0])), ProductTriple(tuple(sides[1]))
    report = verify_structure(P1, P2)
    if not report.ok:
        raise AssemblyError(f"{recipe}: condition {report.first_failure} failed")
    return BeauvilleStructure((P1, P2), report, recipe, params, seed)


def _rotation_keys_distinct(triples) -> bool:
    keys = [equivalence_key(R.x, R.y) for T in triples for R in T.rotations()]
    return len(set(keys)) == len(keys)


def _relevant_primes(n: int) -> list[int]:
    return primes_upto(n)  # the primes dividing |A_n|


# assembly recipes

def assemble_strongly_distinguishing(pairs, k: int, n: int, seed: int = 0, cap: int = DEFAULT_CAP) -> BeauvilleStructure:
    """Strongly distinguishing pairs: cyclic blocks in coordinates 1..3t, pool after.

    Side i puts the rotations of T_{i,1}, ..., T_{i,t} in blocks of three and
    fills the remaining k - 3t coordinates from its own pool.
    """
    t = len(pairs)
    if t < 1 or k < 3 * t:
        raise AssemblyError(f"need k >= 3t = {3 * t}, got k={k}")
    if k > cap:
        raise Infeasible(f"k={k} exceeds cap {cap}")
    for p in _relevant_primes(n):
        if not any(is_strongly_p_distinguishing(T1, T2, p, n) for T1, T2 in pairs):
            raise AssemblyError(f"no strongly {p}-distinguishing pair")
    for i in range(2):
        if not _rotation_keys_distinct([pr[i] for pr in pairs]):
            raise AssemblyError(f"side {i + 1}: the 3t rotated triples are not mutually inequivalent")
    sides = []
    for i in range(2):
        own = [pr[i] for pr in pairs]
        blocks = [T.rotate(r) for T in own for r in range(3)]
        fill = pool_inequivalent(n, k - 3 * t, own, seed=seed)
        sides.append(blocks + fill)
    return _finish(sides, "strongly-distinguishing-pairs", {"t": t}, seed)


def assemble_distinguishing(pairs, k: int, n: int, seed: int = 0, cap: int = DEFAULT_CAP) -> BeauvilleStructure:
    """Distinguishing pairs: own blocks, then the other side's blocks, then pool."""
    t = len(pairs)
    if t < 1 or k < 6 * t:
        raise AssemblyError(f"need k >= 6t = {6 * t}, got k={k}")
    if k > cap:
        raise Infeasible(f"k={k} exceeds cap {cap}")
    for p in _relevant_primes(n):
        if not any(is_p_distinguishing(T1, T2, p, n) for T1, T2 in pairs):
            raise AssemblyError(f"no {p}-distinguishing pair")
    everything = [T for pr in pairs for T in pr]
    if not _rotation_keys_distinct(everything):
        raise AssemblyError("the 6t rotated triples are not mutually inequivalent")
    blocks = [[T.rotate(r) for T in (pr[i] for pr in pairs) for r in range(3)] for i in range(2)]
    fill = pool_inequivalent(n, k - 6 * t, everything, seed=seed)
    sides = [blocks[0] + blocks[1] + fill, blocks[1] + blocks[0] + fill]
    return _finish(sides, "distinguishing-pairs", {"t": t}, seed)


def assemble_coprime_periods(triples, k: int, n: int, seed: int = 0, cap: int = DEFAULT_CAP) -> BeauvilleStructure:
    """r >= 2 inequivalent triples of one type with mutually coprime periods.

    The first two coordinates are (T1, T2) on one side and (T1, T2 rotated)
    on the other; the rest come from the 6r rotations and inverse reversals.
    """
    triples = list(triples)
    r = len(triples)
    if r < 2:
        raise AssemblyError("need at least two triples")
    if not 2 <= k <= 6 * r:
        raise AssemblyError(f"need 2 <= k <= 6r = {6 * r}, got k={k}")
    if k > cap:
        raise Infeasible(f"k={k} exceeds cap {cap}")
    types = {T.type for T in triples}
    if len(types) != 1:
        raise AssemblyError(f"triples have different types {sorted(types)}")
    l, m, q = next(iter(types))
    if gcd(l, m) != 1 or gcd(l, q) != 1 or gcd(m, q) != 1:
        raise AssemblyError(f"periods {(l, m, q)} are not mutually coprime")
    keys = [equivalence_key(T.x, T.y) for T in triples]
    if len(set(keys)) != r:
        raise AssemblyError("triples are not mutually inequivalent")
    expanded = [E for T in triples for E in T.expansions()]
    T1, T2 = triples[0], triples[1]
    heads = ([T1, T2], [T1, T2.rotate(1)])
    fills = []
    for head in heads:
        used = {equivalence_key(H.x, H.y) for H in head}
        fills.append([E for E in expanded if equivalence_key(E.x, E.y) not in used])
    # The head coordinates only separate summits that meet {1, 2}; a summit
    # lying wholly in the fill can repeat on the other side.  On side 2 the
    # arrangements (l,m,n) and (m,n,l) put every period into a summit that
    # meets {1, 2}, so those go first; any remainder is rotated until no
    # p-summit is shared.
    safe = {(l, m, q), (m, q, l)}
    fills[1] = ([E for E in fills[1] if E.type in safe] + [E for E in fills[1] if E.type not in safe])
    fills = [f[:k - 2] for f in fills]
    side1 = heads[0] + fills[0]
    primes = prime_factors(l * m * q)
    for shift in range(max(1, k - 2)):
        side2 = heads[1] + fills[1][shift:] + fills[1][:shift]
        if summits_disjoint(ProductTriple(tuple(side1)), ProductTriple(tuple(side2)), primes):
            return _finish([side1, side2], "coprime-periods",
                           {"r": r, "type": [l, m, q], "fill_shift": shift}, seed)
    raise AssemblyError(f"no fill order with disjoint summits for k={k}, r={r}")


def p_summits(P: ProductTriple, p: int) -> set[frozenset[int]]:
    return {s for s in (profile(P.element(i), p).summit for i in range(3)) if s}


def summits_disjoint(P1: ProductTriple, P2: ProductTriple, primes) -> bool:
    """Sufficient for condition (3): no prime has a p-summit shared by the two sides."""
    return all(not (p_summits(P1, p) & p_summits(P2, p)) for p in primes)


A5_SQUARED_CONJUGATOR = "(4,5)"


def a5_squared() -> BeauvilleStructure:
    """Type (15,5,5; 15,5,5) structure on A_5 x A_5."""
    square1 = recipe_triples(5, "square1")[0]  # type (5,5,5)
    square2 = recipe_triples(5, "square2")[0]  # type (3,5,5)
    g = Permutation.from_cycles([(4, 5)], 5)
    twisted = GeneratingTriple(conjugate(square1.x, g), conjugate(square1.y, g),
                               conjugate(square1.z, g), square1.provenance + "|conj(4,5)",
                               square1.proof)
    sides = [[square1, square2], [square2, twisted]]
    return _finish(sides, "a5-squared", {"conjugator": A5_SQUARED_CONJUGATOR}, 0)


def a5_obstruction() -> dict:
    """Condition (3) over all pairs of A_5 class representatives (k = 1)."""
    reps = class_representatives(5)
    passing = 0
    checks = 0
    for T1 in reps:
        for T2 in reps:
            checks += 1
            if condition3_exact(ProductTriple((T1,)), ProductTriple((T2,))).value:
                passing += 1
    return {"classes": len(reps), "pair_checks": checks, "passing": passing}


# dispatcher

def transposition_family_bound(n: int) -> int:
    return (n - 5) * (n - 6) * (n - 7) // 4


def coprime_catalog_triples(n: int) -> list[GeneratingTriple]:
    """The catalog's coprime-period triples of degree n, one per Aut-class."""
    out, seen = [], set()
    for T in recipe_triples(n, "coprime"):
        key = equivalence_key(T.x, T.y)
        if key not in seen:
            seen.add(key)
            out.append(T)
    return out


def distinguishing_family_pairs(n: int) -> list[tuple[GeneratingTriple, GeneratingTriple]]:
    return [(family_Tp(n, p), family_Tp_prime(n, p)) for p in primes_upto(n)]


def build_beauville(n: int, k: int, cap: int | None = None, seed: int = 0,
                    attempts: int = 3):
    """A verified Beauville structure on A_n^k, NoStructure, or Unsupported."""
    cap = DEFAULT_CAP if cap is None else cap
    if n < 5 or k < 1:
        raise Infeasible(f"need n >= 5 and k >= 1, got n={n}, k={k}")
    if k > cap:
        raise Infeasible(f"k={k} exceeds cap {cap}")
    if n in KNOWN_D2 and k > KNOWN_D2[n]:
        raise Infeasible(f"A_{n}^{k} is not 2-generated: k exceeds d_2(A_{n}) = {KNOWN_D2[n]}")
    if k == 1:
        if n == 5:
            return NoStructure(5, 1, "every generating triple of A_5 contains an element of order 5, "
                                     "and all of them are conjugate to powers of each other",
                               a5_obstruction())
        return Unsupported(n, 1, "the case k = 1 (simple groups) is not constructed here")
    last: Exception | None = None
    for attempt in range(attempts):
        s = seed + attempt
        try:
            S = _dispatch(n, k, s, cap)
            S.parameters = dict(S.parameters, attempt=attempt)
            return S
        except (AssemblyError, FamilyError) as exc:
            last = exc
    raise AssemblyError(f"no verified structure for A_{n}^{k} after {attempts} attempts: {last}")


def _dispatch(n: int, k: int, seed: int, cap: int) -> BeauvilleStructure:
    if n <= 11:
        if k == 2:
            if n == 5:
                return a5_squared()
            return assemble_coprime_periods(coprime_catalog_triples(n), 2, n, seed, cap)
        pair = (recipe_triples(n, "pair1")[0], recipe_triples(n, "pair2")[0])
        return assemble_strongly_distinguishing([pair], k, n, seed, cap)
    if k <= transposition_family_bound(n):
        r = max(2, ceil(k / 6))
        reps = family_transposition_representatives(n)[:r]
        return assemble_coprime_periods([family_transpositions(n, params) for params in reps], k, n, seed, cap)
    return assemble_distinguishing(distinguishing_family_pairs(n), k, n, seed, cap)


def range_arithmetic_holds(n: int) -> bool:
    """6 pi(n) <= 3(n + 1) <= (n-5)(n-6)(n-7)/4, so the two n >= 12 recipes overlap."""
    return 6 * prime_pi(n) <= 3 * (n + 1) <= Fraction((n - 5) * (n - 6) * (n - 7), 4)


def group_order(n: int, k: int) -> int:
    return (factorial(n) // 2) ** k


# public aliases
assemble_lemma52 = assemble_strongly_distinguishing
assemble_lemma53 = assemble_distinguishing
assemble_lemma54 = assemble_coprime_periods
