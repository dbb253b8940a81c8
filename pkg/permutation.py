#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Permutations of {0, ..., n-1} as immutable image tuples."""

from dataclasses import dataclass
from typing import List, Tuple


@dataclass(frozen=True)
class Perm:
    """Bijection of {0, ..., n-1}; images[i] is the image of i."""

    images: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(tuple(range(n)))

    def __len__(self) -> int:
        return len(self.images)

    def compose(self, other: "Perm") -> "Perm":
        """(self o other)(i) = self(other(i))."""
        if len(other) != len(self):
            raise ValueError("cannot compose permutations of different sizes")
        return Perm(tuple(self.images[j] for j in other.images))

    def inverse(self) -> "Perm":
        inv = [0] * len(self)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> List[Tuple[int, ...]]:
        seen = [False] * len(self)
        out = []
        for start in range(len(self)):
            if seen[start]:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i)
                i = self.images[i]
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())


def perm_sign(perm: Perm) -> int:
    return -1 if (len(perm) - len(perm.cycles())) % 2 else 1


def perm_fixed(perm: Perm) -> int:
    return sum(1 for i, j in enumerate(perm.images) if i == j)


def cycle_type(perm: Perm) -> Tuple[int, ...]:
    return tuple(sorted(len(c) for c in perm.cycles()))
