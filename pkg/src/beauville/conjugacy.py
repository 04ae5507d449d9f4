"""Conjugacy in S_n and A_n, simultaneous conjugacy of pairs, and Aut(A_6).

Triples are compared through their first two entries: the third is forced
by ``xyz = 1``.  Equivalence under Aut(A_n) is S_n-conjugacy except for
n = 6, where the outer automorphism that is not induced by S_6 is built
explicitly (see :func:`build_exceptional_aut`).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Sequence

from .groups import closure, orbit_partition
from .perm import Permutation, conjugate


@dataclass(frozen=True)
class ClassLabel:
    cycle_type: tuple[int, ...]
    split: bool
    half: int | None = None  # which A_n-class, when the S_n-class splits


def splits_in_An(ctype: Sequence[int]) -> bool:
    return all(c % 2 for c in ctype) and len(set(ctype)) == len(ctype)


def _standard_conjugator(x: Permutation, ctype: Sequence[int] | None = None) -> list[int]:
    """0-based images of an h taking the standard representative of x's class to x.

    The standard representative lays cycles out on consecutive points in
    non-increasing length order.
    """
    cycles = sorted(x.cycle_data.cycles, key=lambda c: (-len(c), c[0]))
    h = []
    for cyc in cycles:
        h.extend(p - 1 for p in cyc)
    return h


def _parity_of(img: Sequence[int]) -> int:
    n = len(img)
    seen = [False] * n
    ncycles = 0
    for i in range(n):
        if not seen[i]:
            ncycles += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = img[j]
    return -1 if (n - ncycles) % 2 else 1


def class_label(x: Permutation) -> ClassLabel:
    """A_n-class of an even permutation (S_n-class for odd ones)."""
    ctype = x.cycle_type
    if not x.is_even or not splits_in_An(ctype):
        return ClassLabel(ctype, False)
    h = _standard_conjugator(x)
    return ClassLabel(ctype, True, 0 if _parity_of(h) == 1 else 1)


def conjugate_in_Sn(x: Permutation, y: Permutation) -> Permutation | None:
    """Some h with x^h == y, or None when the cycle types differ."""
    if x.degree != y.degree:
        raise ValueError("degree mismatch")
    if x.cycle_type != y.cycle_type:
        return None
    hx = _standard_conjugator(x)
    hy = _standard_conjugator(y)
    img = [0] * x.degree
    for a, b in zip(hx, hy):
        img[a] = b
    h = Permutation._raw(tuple(img))
    assert conjugate(x, h) == y
    return h


def conjugator_in_An(x: Permutation, y: Permutation) -> Permutation | None:
    """An even h with x^h == y, or None."""
    if not (x.is_even and y.is_even):
        raise ValueError("conjugacy in A_n needs even permutations")
    h = conjugate_in_Sn(x, y)
    if h is None or h.is_even:
        return h
    # fix the parity with an odd element of the centralizer of y
    cyc = y.cycle_data.cycles
    even_len = next((c for c in cyc if len(c) % 2 == 0), None)
    if even_len is not None:
        c = Permutation.from_cycles([even_len], y.degree)
    else:
        by_len: dict[int, tuple] = {}
        pair = None
        for cy in cyc:
            if len(cy) in by_len:
                pair = (by_len[len(cy)], cy)
                break
            by_len[len(cy)] = cy
        if pair is None:
            return None  # split class, every conjugator has the same parity
        c = Permutation.from_cycles([(a, b) for a, b in zip(*pair)], y.degree)
    h = h * c
    assert h.is_even and conjugate(x, h) == y
    return h


def conjugate_in_An(x: Permutation, y: Permutation) -> bool:
    if not (x.is_even and y.is_even):
        raise ValueError("conjugacy in A_n needs even permutations")
    return class_label(x) == class_label(y)


def simultaneous_conjugacy(x: Permutation, y: Permutation, x2: Permutation, y2: Permutation,
                           ambient: str = "Sn") -> Permutation | None:
    """Some h with x^h == x2 and y^h == y2 (h even when ambient is "An").

    Backtracks over images of one anchor point per orbit of <x, y>; once an
    anchor's image is fixed the rest of its orbit is forced.
    """
    n = x.degree
    if len({n, y.degree, x2.degree, y2.degree}) != 1:
        raise ValueError("degree mismatch")
    if ambient not in ("Sn", "An"):
        raise ValueError(f"unknown ambient {ambient!r}")
    if x.cycle_type != x2.cycle_type or y.cycle_type != y2.cycle_type:
        return None
    if (x * y).cycle_type != (x2 * y2).cycle_type:
        return None
    xi, yi, x2i, y2i = x.img, y.img, x2.img, y2.img
    pairs = ((xi, x2i), (yi, y2i))

    def local(img_x, img_y):
        cx, cy = _cycle_lengths(img_x), _cycle_lengths(img_y)
        return [(cx[i], cy[i]) for i in range(n)]

    inv1 = local(xi, yi)
    inv2 = local(x2i, y2i)
    anchors = [orb[0] for orb in orbit_partition((xi, yi), n)]
    h = [-1] * n
    used = [False] * n

    def assign(a: int, c: int) -> list[int] | None:
        h[a] = c
        used[c] = True
        done = [a]
        k = 0
        while k < len(done):
            u = done[k]
            k += 1
            for g, g2 in pairs:
                v, w = g[u], g2[h[u]]
                if h[v] < 0:
                    if used[w] or inv1[v] != inv2[w]:
                        undo(done)
                        return None
                    h[v] = w
                    used[w] = True
                    done.append(v)
                elif h[v] != w:
                    undo(done)
                    return None
        return done

    def undo(done):
        for u in done:
            used[h[u]] = False
            h[u] = -1

    def search(idx: int) -> Permutation | None:
        if idx == len(anchors):
            cand = Permutation._raw(tuple(h))
            if ambient == "An" and not cand.is_even:
                return None
            return cand
        a = anchors[idx]
        for c in range(n):
            if used[c] or inv1[a] != inv2[c]:
                continue
            done = assign(a, c)
            if done is None:
                continue
            found = search(idx + 1)
            if found is not None:
                return found
            undo(done)
        return None

    found = search(0)
    if found is not None:
        assert conjugate(x, found) == x2 and conjugate(y, found) == y2
    return found


def _cycle_lengths(img: Sequence[int]) -> list[int]:
    n = len(img)
    out = [0] * n
    for i in range(n):
        if out[i]:
            continue
        cyc = [i]
        j = img[i]
        while j != i:
            cyc.append(j)
            j = img[j]
        for p in cyc:
            out[p] = len(cyc)
    return out


def pair_canonical_form(x: Permutation, y: Permutation) -> tuple[int, ...]:
    """Complete S_n-conjugacy invariant of a pair generating a transitive group.

    Relabels points in breadth-first order from each admissible start point
    and keeps the least relabelled (x, y).
    """
    n = x.degree
    xi, yi = x.img, y.img
    cx, cy = _cycle_lengths(xi), _cycle_lengths(yi)
    inv = [(cx[i], cy[i]) for i in range(n)]
    best_inv = min(inv)
    best = None
    for v in range(n):
        if inv[v] != best_inv:
            continue
        label = [-1] * n
        label[v] = 0
        order = [v]
        k = 0
        while k < len(order):
            u = order[k]
            k += 1
            w = xi[u]
            if label[w] < 0:
                label[w] = len(order)
                order.append(w)
            w = yi[u]
            if label[w] < 0:
                label[w] = len(order)
                order.append(w)
        if len(order) < n:
            raise ValueError("pair does not generate a transitive group")
        key = tuple(label[xi[u]] for u in order) + tuple(label[yi[u]] for u in order)
        if best is None or key < best:
            best = key
    return best


# the exceptional automorphism of A_6

@dataclass(frozen=True)
class ExceptionalAut:
    """An automorphism of A_6 stored as its action on all 360 elements."""

    table: dict  # 0-based image tuple -> 0-based image tuple
    subgroup_generators: tuple[Permutation, Permutation]

    def __call__(self, g: Permutation) -> Permutation:
        return Permutation._raw(self.table[g.img])

    def verify(self) -> None:
        elements = list(self.table)
        if len(elements) != 360 or len(set(self.table.values())) != 360:
            raise AssertionError("exceptional automorphism is not a bijection of A_6")
        gens = [Permutation.from_cycles([(1, 2, 3, 4, 5)], 6).img,
                Permutation.from_cycles([(1, 2, 3, 4, 6)], 6).img]
        if len(closure(gens, 6)) != 360:
            raise AssertionError("test generators do not generate A_6")
        mul = lambda p, q: tuple(map(q.__getitem__, p))
        for g in elements:
            for s in gens:
                if self.table[mul(g, s)] != mul(self.table[g], self.table[s]):
                    raise AssertionError("exceptional automorphism is not multiplicative")
        for g in elements:
            ct = Permutation._raw(g).cycle_type
            if ct == (3, 1, 1, 1) and Permutation._raw(self.table[g]).cycle_type != (3, 3):
                raise AssertionError("3-cycles must map to products of two 3-cycles")


def alternating_elements(n: int) -> list[Permutation]:
    """All even permutations of degree n, sorted by image tuple."""
    out = []
    for img in permutations(range(n)):
        if _parity_of(img) == 1:
            out.append(Permutation._raw(img))
    return out


@lru_cache(maxsize=1)
def build_exceptional_aut() -> ExceptionalAut:
    """Act on the cosets of a transitive A_5 inside A_6."""
    elems = alternating_elements(6)
    five = next(g for g in elems if g.cycle_type == (5, 1))
    K = None
    gens = None
    for b in elems:
        if b.cycle_type != (2, 2, 1, 1):
            continue
        sub = closure([five.img, b.img], 6, limit=60)
        if len(sub) == 60 and len(orbit_partition(list(sub), 6)) == 1:
            K, gens = sub, (five, b)
            break
    if K is None:
        raise RuntimeError("no transitive A_5 found in A_6")
    mul = lambda p, q: tuple(map(q.__getitem__, p))
    coset_of: dict[tuple, int] = {}
    reps = []
    for g in elems:
        if g.img in coset_of:
            continue
        idx = len(reps)
        reps.append(g.img)
        for k in K:
            coset_of[mul(k, g.img)] = idx
    if len(reps) != 6:
        raise RuntimeError("expected six cosets")
    table = {}
    for h in elems:
        table[h.img] = tuple(coset_of[mul(r, h.img)] for r in reps)
    aut = ExceptionalAut(table, gens)
    aut.verify()
    return aut


def equivalence_key(x: Permutation, y: Permutation) -> tuple:
    """Aut(A_n)-invariant of a generating pair of A_n."""
    key = pair_canonical_form(x, y)
    if x.degree == 6:
        sigma = build_exceptional_aut()
        key = min(key, pair_canonical_form(sigma(x), sigma(y)))
    return key


def triple_equivalent(T, T2, n: int | None = None, ambient: str = "Aut") -> bool:
    """Whether an automorphism of A_n carries T to T2 (position by position).

    ``ambient="Sn"`` restricts to automorphisms induced by S_n; only n = 6
    makes a difference.
    """
    x, y = T[0], T[1]
    x2, y2 = T2[0], T2[1]
    if n is None:
        n = x.degree
    if {x.degree, x2.degree} != {n}:
        raise ValueError("degree mismatch")
    if simultaneous_conjugacy(x, y, x2, y2, "Sn") is not None:
        return True
    if n == 6 and ambient == "Aut":
        sigma = build_exceptional_aut()
        return simultaneous_conjugacy(x, y, sigma(x2), sigma(y2), "Sn") is not None
    return False


def rotations(T) -> list[tuple[Permutation, Permutation, Permutation]]:
    x, y, z = T[0], T[1], T[2]
    return [(x, y, z), (y, z, x), (z, x, y)]
