"""Dynkin diagram combinatorics, diagram automorphisms and partition arithmetic.

Nodes are numbered 1..rank following Bourbaki throughout the package.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

CLASSICAL = ("A", "B", "C", "D")
EXCEPTIONAL_RANKS = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2}
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}


class DomainError(ValueError):
    """Raised on inputs that make no sense for the requested Lie type."""


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family in EXCEPTIONAL_RANKS:
            if self.rank != EXCEPTIONAL_RANKS[self.family]:
                raise DomainError(f"{self.family} has fixed rank {EXCEPTIONAL_RANKS[self.family]}, got {self.rank}")
        elif self.family in _MIN_RANK:
            if self.rank < _MIN_RANK[self.family]:
                raise DomainError(
                    f"type {self.family} needs rank >= {_MIN_RANK[self.family]}, got {self.rank}"
                )
        else:
            raise DomainError(f"unknown family {self.family!r} (rank {self.rank})")

    @classmethod
    def parse(cls, text: str) -> "SimpleType":
        m = re.fullmatch(r"\s*([A-Ga-g])(\d+)\s*", text)
        if not m:
            raise DomainError(f"cannot parse Lie type {text!r}")
        letter, rank = m.group(1).upper(), int(m.group(2))
        if letter in "EFG":
            return cls(f"{letter}{rank}", rank)
        return cls(letter, rank)

    @property
    def is_classical(self) -> bool:
        return self.family in CLASSICAL

    @property
    def is_d3_alias(self) -> bool:
        """D3 is accepted but is really A3 in disguise."""
        return self.family == "D" and self.rank == 3

    @property
    def natural_dim(self) -> int:
        """Size of the defining matrices (n for sl_n, m for so_m, 2n for sp_2n)."""
        if self.family == "A":
            return self.rank + 1
        if self.family == "B":
            return 2 * self.rank + 1
        if self.family in ("C", "D"):
            return 2 * self.rank
        raise DomainError(f"{self} has no classical defining representation")

    def __str__(self) -> str:
        return self.family if self.family in EXCEPTIONAL_RANKS else f"{self.family}{self.rank}"


@dataclass(frozen=True)
class DynkinDiagram:
    """Edges are ``(i, j, m)``; for ``m > 1`` node ``i`` is the long-root end."""

    type: SimpleType
    nodes: tuple[int, ...]
    edges: frozenset[tuple[int, int, int]]

    def neighbours(self, node: int) -> set[int]:
        out = set()
        for i, j, _ in self.edges:
            if i == node:
                out.add(j)
            elif j == node:
                out.add(i)
        return out


def _path(n: int) -> list[tuple[int, int, int]]:
    return [(i, i + 1, 1) for i in range(1, n)]


def build_dynkin(t: SimpleType) -> DynkinDiagram:
    n, fam = t.rank, t.family
    if fam == "A":
        edges = _path(n)
    elif fam == "B":
        edges = _path(n - 1) + [(n - 1, n, 2)]
    elif fam == "C":
        edges = _path(n - 1) + [(n, n - 1, 2)]
    elif fam == "D":
        edges = _path(n - 1) + [(n - 2, n, 1)]
    elif fam in ("E6", "E7", "E8"):
        edges = [(1, 3, 1), (2, 4, 1)] + [(i, i + 1, 1) for i in range(3, n)]
    elif fam == "F4":
        edges = [(1, 2, 1), (2, 3, 2), (3, 4, 1)]
    else:  # G2: node 2 is the long root
        edges = [(2, 1, 3)]
    canon = frozenset((min(i, j), max(i, j), 1) if m == 1 else (i, j, m) for i, j, m in edges)
    return DynkinDiagram(t, tuple(range(1, n + 1)), canon)


@dataclass(frozen=True)
class DiagramAutomorphism:
    """A node permutation; ``perm[i - 1]`` is the image of node ``i``."""

    type: SimpleType
    perm: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(1, self.type.rank + 1)):
            raise DomainError(f"{self.perm} is not a permutation of the nodes of {self.type}")

    def __call__(self, node: int) -> int:
        return self.perm[node - 1]

    @property
    def is_identity(self) -> bool:
        return all(p == i for i, p in enumerate(self.perm, 1))

    @property
    def order(self) -> int:
        k, p = 1, self
        while not p.is_identity:
            p = p.compose(self)
            k += 1
        return k

    def compose(self, other: "DiagramAutomorphism") -> "DiagramAutomorphism":
        """``self`` after ``other``."""
        return DiagramAutomorphism(self.type, tuple(self(other(i)) for i in range(1, len(self.perm) + 1)))

    def inverse(self) -> "DiagramAutomorphism":
        inv = [0] * len(self.perm)
        for i, p in enumerate(self.perm, 1):
            inv[p - 1] = i
        return DiagramAutomorphism(self.type, tuple(inv))

    def cycles_text(self) -> str:
        if self.is_identity:
            return "id"
        seen, parts = set(), []
        for i in range(1, len(self.perm) + 1):
            if i in seen or self(i) == i:
                continue
            cyc, j = [], i
            while j not in seen:
                seen.add(j)
                cyc.append(j)
                j = self(j)
            parts.append("(" + " ".join(map(str, cyc)) + ")")
        return "".join(parts)

    @classmethod
    def identity(cls, t: SimpleType) -> "DiagramAutomorphism":
        return cls(t, tuple(range(1, t.rank + 1)))

    @classmethod
    def transposition(cls, t: SimpleType, i: int, j: int) -> "DiagramAutomorphism":
        perm = list(range(1, t.rank + 1))
        perm[i - 1], perm[j - 1] = j, i
        return cls(t, tuple(perm))


def preserves_diagram(d: DynkinDiagram, perm: Sequence[int]) -> bool:
    def img(e):
        i, j, m = e
        a, b = perm[i - 1], perm[j - 1]
        return (min(a, b), max(a, b), 1) if m == 1 else (a, b, m)

    return frozenset(map(img, d.edges)) == d.edges


def diagram_automorphisms(t: SimpleType) -> list[DiagramAutomorphism]:
    """Full automorphism group of the Dynkin diagram, identity first."""
    n = t.rank
    ident = DiagramAutomorphism.identity(t)
    out = [ident]
    if t.family == "A" and n >= 2:
        out.append(DiagramAutomorphism(t, tuple(range(n, 0, -1))))
    elif t.family == "D" and n == 4:
        for a, b, c in [(1, 4, 3), (3, 1, 4), (4, 3, 1), (3, 4, 1), (4, 1, 3)]:
            out.append(DiagramAutomorphism(t, (a, 2, b, c)))
    elif t.family == "D":
        out.append(DiagramAutomorphism.transposition(t, n - 1, n))
    elif t.family == "E6":
        out.append(DiagramAutomorphism(t, (6, 2, 5, 4, 3, 1)))
    return sorted(out, key=lambda a: (not a.is_identity, a.perm))


def named_automorphism(t: SimpleType, name: str) -> DiagramAutomorphism:
    """Resolve ``swapIJ`` (e.g. ``swap34``), ``reverse`` or ``id``."""
    if name == "id":
        return DiagramAutomorphism.identity(t)
    if name == "reverse":
        return DiagramAutomorphism(t, tuple(range(t.rank, 0, -1)))
    m = re.fullmatch(r"swap(\d)(\d)", name)
    if not m:
        raise DomainError(f"unknown automorphism name {name!r}")
    i, j = int(m.group(1)), int(m.group(2))
    if not (1 <= i <= t.rank and 1 <= j <= t.rank) or i == j:
        raise DomainError(f"{name} does not name two distinct nodes of {t}")
    return DiagramAutomorphism.transposition(t, i, j)


@dataclass(frozen=True)
class WeightedDiagram:
    type: SimpleType
    labels: tuple[int, ...]

    def __post_init__(self):
        if len(self.labels) != self.type.rank:
            raise DomainError(f"{self.type} needs {self.type.rank} labels, got {len(self.labels)}")

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.labels)) + ")"


def apply_automorphism(a: DiagramAutomorphism, w: WeightedDiagram) -> WeightedDiagram:
    if a.type != w.type:
        raise DomainError(f"automorphism of {a.type} applied to a diagram of {w.type}")
    out = [0] * len(w.labels)
    for j, lab in enumerate(w.labels, 1):
        out[a(j) - 1] = lab
    return WeightedDiagram(w.type, tuple(out))


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...]
    sum: int = field(init=False, compare=False)

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(not isinstance(p, int) or p <= 0 for p in parts):
            raise DomainError(f"partition parts must be positive integers: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise DomainError(f"partition parts must be non-increasing: {parts}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "sum", sum(parts))

    @classmethod
    def of(cls, parts) -> "Partition":
        return cls(tuple(sorted(parts, reverse=True)))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``[4,4]``; exponents such as ``[3^2,1^2]`` are also accepted."""
        m = re.fullmatch(r"\s*\[([0-9,\s^]*)\]\s*", text)
        if not m:
            raise DomainError(f"cannot parse partition {text!r}")
        parts: list[int] = []
        for tok in filter(None, (s.strip() for s in m.group(1).split(","))):
            base, _, exp = tok.partition("^")
            try:
                parts += [int(base)] * (int(exp) if exp else 1)
            except ValueError:
                raise DomainError(f"bad partition entry {tok!r} in {text!r}") from None
        if not parts:
            raise DomainError(f"empty partition {text!r}")
        return cls(tuple(parts))

    def multiplicity(self, k: int) -> int:
        return self.parts.count(k)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.parts)) + "]"


def transpose_partition(p: Partition) -> Partition:
    if not p.parts:
        return p
    return Partition(tuple(sum(1 for d in p.parts if d > i) for i in range(p.parts[0])))


def dominance_leq(p: Partition, q: Partition) -> bool:
    if p.sum != q.sum:
        raise DomainError(f"cannot compare partitions of {p.sum} and {q.sum}")
    sp = sq = 0
    for k in range(max(len(p), len(q))):
        sp += p.parts[k] if k < len(p) else 0
        sq += q.parts[k] if k < len(q) else 0
        if sp > sq:
            return False
    return True


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in descending lexicographic order."""

    def gen(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(Partition(p) for p in gen(n, n))
