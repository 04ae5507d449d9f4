from __future__ import annotations

from dataclasses import dataclass, replace

from .groups import is_alternating
from .perm import Permutation, format_cycles, inverse


@dataclass(frozen=True)
class GeneratingTriple:
    """(x, y, z) with x*y*z = 1; ``z`` is always recomputed as (xy)^-1."""

    x: Permutation
    y: Permutation
    z: Permutation
    provenance: str = ""
    proof: str = ""

    @classmethod
    def from_pair(cls, x: Permutation, y: Permutation, provenance: str = "",
                  proof: str = "") -> "GeneratingTriple":
        return cls(x, y, inverse(x * y), provenance, proof)

    @property
    def degree(self) -> int:
        return self.x.degree

    @property
    def type(self) -> tuple[int, int, int]:
        return (self.x.order, self.y.order, self.z.order)

    def __iter__(self):
        return iter((self.x, self.y, self.z))

    def __getitem__(self, i):
        return (self.x, self.y, self.z)[i]

    def __len__(self):
        return 3

    def is_triple(self) -> bool:
        return (self.x * self.y * self.z).is_identity()

    def rotate(self, r: int = 1) -> "GeneratingTriple":
        els = (self.x, self.y, self.z)
        r %= 3
        x, y, z = els[r:] + els[:r]
        tag = f"{self.provenance}|rot{r}" if r else self.provenance
        return GeneratingTriple(x, y, z, tag, self.proof)

    def rotations(self) -> list["GeneratingTriple"]:
        return [self.rotate(r) for r in range(3)]

    def inverse_reversal(self) -> "GeneratingTriple":
        return GeneratingTriple(inverse(self.z), inverse(self.y), inverse(self.x),
                                f"{self.provenance}|inv", self.proof)

    def expansions(self) -> list["GeneratingTriple"]:
        """The three rotations of the triple and of its inverse reversal."""
        return self.rotations() + self.inverse_reversal().rotations()

    def verified(self) -> "GeneratingTriple":
        """Copy carrying a generation proof tag; raises if <x, y> != A_n."""
        if not self.is_triple():
            raise ValueError(f"x*y*z != 1 for {self}")
        verdict = is_alternating([self.x, self.y], self.degree)
        if not verdict:
            raise ValueError(f"<x, y> is not A_{self.degree} ({verdict.tag}): {self}")
        return replace(self, proof=verdict.tag)

    def with_provenance(self, provenance: str) -> "GeneratingTriple":
        return replace(self, provenance=provenance)

    def __str__(self):
        return (f"x={format_cycles(self.x)} y={format_cycles(self.y)} "
                f"z={format_cycles(self.z)} type={self.type}")
