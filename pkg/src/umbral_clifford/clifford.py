"""Basis blades of the Clifford algebra Cl(0, n).

Blades are stored as bitmasks (bit ``i - 1`` set means ``e_i`` is a factor);
the public :class:`Blade` wraps the mask and exposes the ascending index tuple.
The generators satisfy ``e_j e_k + e_k e_j = -2 delta_jk``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .errors import IndexOutOfRange


def _popcount(x: int) -> int:
    return bin(x).count("1")


@lru_cache(maxsize=None)
def mask_product(a: int, b: int) -> tuple[int, int]:
    """Product of two blade masks, returned as ``(sign, mask)``.

    The sign collects one factor -1 per transposition needed to sort the
    concatenated index list, and one factor -1 per contracted pair
    ``e_i e_i = -1``.
    """
    swaps = 0
    t = a >> 1
    while t:
        swaps += _popcount(t & b)
        t >>= 1
    swaps += _popcount(a & b)
    return (-1 if swaps & 1 else 1), a ^ b


def indices_to_mask(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << (i - 1)
    return mask


def mask_to_indices(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@dataclass(frozen=True, order=True)
class Blade:
    """Canonical basis blade ``e_{i1} e_{i2} ... e_{ik}`` with ``i1 < ... < ik``."""

    indices: tuple[int, ...] = ()

    def __post_init__(self):
        idx = tuple(int(i) for i in self.indices)
        if any(i < 1 for i in idx):
            raise IndexOutOfRange(f"blade indices must be >= 1, got {idx}")
        if any(a >= b for a, b in zip(idx, idx[1:])):
            raise ValueError(f"blade indices must be strictly increasing, got {idx}")
        object.__setattr__(self, "indices", idx)

    @classmethod
    def scalar(cls) -> "Blade":
        return cls(())

    @classmethod
    def from_mask(cls, mask: int) -> "Blade":
        return cls(mask_to_indices(mask))

    @classmethod
    def parse(cls, text: str) -> "Blade":
        """Accepts ``"1"``, ``"e1"``, ``"e1*e2"`` and the compact ``"e12"``."""
        text = text.strip()
        if text == "1":
            return cls.scalar()
        indices: list[int] = []
        for part in text.split("*"):
            part = part.strip()
            if not part.startswith("e") or not part[1:].isdigit():
                raise ValueError(f"not a blade: {text!r}")
            digits = part[1:]
            if "*" not in text and len(digits) > 1:
                indices.extend(int(d) for d in digits)
            else:
                indices.append(int(digits))
        return cls(tuple(indices))

    @property
    def mask(self) -> int:
        return indices_to_mask(self.indices)

    @property
    def grade(self) -> int:
        return len(self.indices)

    def check(self, n: int) -> "Blade":
        if self.indices and self.indices[-1] > n:
            raise IndexOutOfRange(f"blade {self} has an index outside 1..{n}")
        return self

    def __str__(self) -> str:
        if not self.indices:
            return "1"
        return "*".join(f"e{i}" for i in self.indices)


@dataclass(frozen=True)
class SignedBlade:
    sign: int
    blade: Blade

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")


def grade(b: Blade) -> int:
    return b.grade


def blade_product(a: Blade, b: Blade, n: int) -> SignedBlade:
    """Geometric product of two basis blades of Cl(0, n)."""
    a.check(n)
    b.check(n)
    sign, mask = mask_product(a.mask, b.mask)
    return SignedBlade(sign, Blade.from_mask(mask))


def multivector_product(a: Mapping[Blade, object], b: Mapping[Blade, object], n: int) -> dict[Blade, object]:
    """Product of two Clifford numbers given as ``{Blade: coefficient}`` maps."""
    out: dict[int, object] = {}
    for ba, ca in a.items():
        ma = ba.check(n).mask
        for bb, cb in b.items():
            sign, m = mask_product(ma, bb.check(n).mask)
            out[m] = out.get(m, 0) + sign * ca * cb
    return {Blade.from_mask(m): c for m, c in out.items() if c != 0}
