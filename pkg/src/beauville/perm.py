"""Permutations of {1..n} and their cycle invariants.

Composition is left to right: ``p * q`` applies ``p`` first, then ``q``, so
``(p * q)(i) == q(p(i))``.  Points are 1-based in every external form; the
internal image tuple ``img`` is 0-based and is what the hot loops use.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence


def lcm(*values: int) -> int:
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out


@dataclass(frozen=True)
class CycleData:
    cycle_type: tuple[int, ...]  # non-increasing, fixed points included as 1s
    cycles: tuple[tuple[int, ...], ...]  # 1-based, each starting at its least point
    support: frozenset[int]
    parity: int  # +1 even, -1 odd

    @property
    def nontrivial(self) -> tuple[tuple[int, ...], ...]:
        return tuple(c for c in self.cycles if len(c) > 1)


class Permutation:
    """An immutable bijection of {1..degree}.

    Build from 1-based images, ``Permutation([2, 1, 3])``, or via
    :meth:`from_cycles` / :func:`parse`.
    """

    __slots__ = ("img", "_cycles", "_hash")

    def __init__(self, images: Sequence[int]):
        img = tuple(int(i) - 1 for i in images)
        if sorted(img) != list(range(len(img))):
            raise ValueError(f"not a permutation of 1..{len(img)}: {list(images)}")
        if not img:
            raise ValueError("degree must be positive")
        object.__setattr__(self, "img", img)
        object.__setattr__(self, "_cycles", None)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, img: tuple[int, ...]) -> "Permutation":
        # trusted 0-based constructor for internal kernels
        p = object.__new__(cls)
        object.__setattr__(p, "img", img)
        object.__setattr__(p, "_cycles", None)
        object.__setattr__(p, "_hash", None)
        return p

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 1:
            raise ValueError("degree must be positive")
        return cls._raw(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Iterable[int]], degree: int) -> "Permutation":
        img = list(range(degree))
        seen: set[int] = set()
        for cyc in cycles:
            cyc = [int(c) for c in cyc]
            for c in cyc:
                if not 1 <= c <= degree:
                    raise ValueError(f"point {c} outside 1..{degree}")
                if c in seen:
                    raise ValueError(f"point {c} repeated in cycle notation")
                seen.add(c)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a - 1] = b - 1
        return cls._raw(tuple(img))

    @property
    def degree(self) -> int:
        return len(self.img)

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in self.img)

    def __call__(self, point: int) -> int:
        return self.img[point - 1] + 1

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.img == other.img

    def __lt__(self, other: "Permutation") -> bool:
        return (len(self.img), self.img) < (len(other.img), other.img)

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(self.img)
            object.__setattr__(self, "_hash", h)
        return h

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __pow__(self, e: int) -> "Permutation":
        return power(self, e)

    def __invert__(self) -> "Permutation":
        return inverse(self)

    def __repr__(self):
        return f"Permutation({format_cycles(self)!r}, degree={self.degree})"

    def __str__(self):
        return format_cycles(self)

    def __reduce__(self):
        return (Permutation, (self.images,))

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.img))

    @property
    def cycle_data(self) -> CycleData:
        cd = self._cycles
        if cd is None:
            cd = _cycle_data(self.img)
            object.__setattr__(self, "_cycles", cd)
        return cd

    @property
    def cycle_type(self) -> tuple[int, ...]:
        return self.cycle_data.cycle_type

    @property
    def order(self) -> int:
        return lcm(*self.cycle_type)

    @property
    def parity(self) -> int:
        return self.cycle_data.parity

    @property
    def is_even(self) -> bool:
        return self.cycle_data.parity == 1

    @property
    def support(self) -> frozenset[int]:
        return self.cycle_data.support


def _cycle_data(img: tuple[int, ...]) -> CycleData:
    n = len(img)
    seen = [False] * n
    cycles = []
    for start in range(n):
        if seen[start]:
            continue
        cyc = []
        j = start
        while not seen[j]:
            seen[j] = True
            cyc.append(j + 1)
            j = img[j]
        cycles.append(tuple(cyc))
    ctype = tuple(sorted((len(c) for c in cycles), reverse=True))
    support = frozenset(p for c in cycles if len(c) > 1 for p in c)
    parity = -1 if (n - len(cycles)) % 2 else 1
    return CycleData(ctype, tuple(cycles), support, parity)


def _check_degrees(p: Permutation, q: Permutation) -> None:
    if len(p.img) != len(q.img):
        raise ValueError(f"degree mismatch: {p.degree} != {q.degree}")


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply ``p`` then ``q``."""
    _check_degrees(p, q)
    return Permutation._raw(tuple(map(q.img.__getitem__, p.img)))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p.img)
    for i, v in enumerate(p.img):
        inv[v] = i
    return Permutation._raw(tuple(inv))


def power(p: Permutation, e: int) -> Permutation:
    n = len(p.img)
    if e < 0:
        p, e = inverse(p), -e
    # walk each cycle e steps; linear in n regardless of e
    img = [0] * n
    for cyc in p.cycle_data.cycles:
        m = len(cyc)
        s = e % m
        for idx, pt in enumerate(cyc):
            img[pt - 1] = cyc[(idx + s) % m] - 1
    return Permutation._raw(tuple(img))


def order(p: Permutation) -> int:
    return p.order


def conjugate(g: Permutation, h: Permutation) -> Permutation:
    """g^h = h^-1 g h; a cycle (a b ...) of g becomes (h(a) h(b) ...)."""
    _check_degrees(g, h)
    img = [0] * len(g.img)
    hi = h.img
    for i, v in enumerate(g.img):
        img[hi[i]] = hi[v]
    return Permutation._raw(tuple(img))


def cycle_data(p: Permutation) -> CycleData:
    return p.cycle_data


def from_cycles(cycles, degree: int) -> Permutation:
    return Permutation.from_cycles(cycles, degree)


def identity(degree: int) -> Permutation:
    return Permutation.identity(degree)


def cycle(*points: int, degree: int) -> Permutation:
    return Permutation.from_cycles([points], degree)


# text forms

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def format_cycles(p: Permutation) -> str:
    parts = ["(" + ",".join(map(str, c)) + ")" for c in p.cycle_data.nontrivial]
    return "".join(parts) if parts else "()"


def format_images(p: Permutation) -> str:
    return "[" + ",".join(map(str, p.images)) + "]"


def parse_cycles(text: str, degree: int) -> Permutation:
    s = text.strip()
    if not s.startswith("("):
        raise ValueError(f"cycle notation must start with '(': {text!r}")
    if _CYCLE_RE.sub("", s).strip():
        raise ValueError(f"unparseable cycle notation: {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(s):
        body = body.strip()
        if not body:
            continue
        cycles.append([int(tok) for tok in re.split(r"\s*,\s*|\s+", body)])
    return Permutation.from_cycles(cycles, degree)


def parse_images(text: str) -> Permutation:
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"image-array form must be bracketed: {text!r}")
    body = s[1:-1].strip()
    if not body:
        raise ValueError("empty image array")
    return Permutation([int(tok) for tok in body.split(",")])


def parse(text: str, degree: int | None = None) -> Permutation:
    """Parse either ``[2,1,3]`` or ``(1,2)(3,4,5)``; cycle form needs ``degree``."""
    s = text.strip()
    if s.startswith("["):
        p = parse_images(s)
        if degree is not None and p.degree != degree:
            raise ValueError(f"expected degree {degree}, got {p.degree}")
        return p
    if degree is None:
        raise ValueError("cycle notation needs an explicit degree")
    return parse_cycles(s, degree)


def cycle_type_parity(ctype: Sequence[int]) -> int:
    return -1 if (sum(ctype) - len(ctype)) % 2 else 1


def cycle_type_counts(ctype: Sequence[int]) -> Counter:
    return Counter(ctype)


def p_part(m: int, p: int) -> int:
    """Largest power of ``p`` dividing ``m``."""
    out = 1
    while m % p == 0:
        m //= p
        out *= p
    return out


def p_exponent(m: int, p: int) -> int:
    e = 0
    while m % p == 0:
        m //= p
        e += 1
    return e
