"""Nilpotent orbits of the classical simple Lie algebras.

Orbits are labelled by partitions of the size of the defining representation,
plus a numeral ``I``/``II`` for very even partitions in type D.  Numeral
convention: ``I`` carries the weighted diagram with the larger label on node
``n`` (the "base" fork assignment), ``II`` the diagram with the two fork
labels exchanged.  Only the fact that the two numerals are swapped by the fork
automorphism matters downstream, so any consistent choice would do.
"""
from __future__ import annotations

import enum
import json
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .core import (
    DomainError,
    Partition,
    SimpleType,
    WeightedDiagram,
    dominance_leq,
    partitions,
    transpose_partition,
)

NUMERALS = ("I", "II")


@dataclass(frozen=True)
class OrbitLabel:
    partition: Partition
    numeral: Optional[str] = None

    def __post_init__(self):
        if self.numeral not in (None, *NUMERALS):
            raise DomainError(f"numeral must be I or II, got {self.numeral!r}")

    @classmethod
    def parse(cls, text: str) -> "OrbitLabel":
        m = re.fullmatch(r"\s*(\[[^\]]*\])\s*(?:\^\s*(I{1,2}))?\s*", text)
        if not m:
            raise DomainError(f"cannot parse orbit label {text!r}")
        return cls(Partition.parse(m.group(1)), m.group(2))

    @property
    def is_zero(self) -> bool:
        return all(d == 1 for d in self.partition)

    def __str__(self) -> str:
        return str(self.partition) + (f"^{self.numeral}" if self.numeral else "")


@dataclass(frozen=True)
class HalfSpectrum:
    values: tuple[int, ...]


class Normality(str, enum.Enum):
    NORMAL = "Normal"
    NON_NORMAL = "NonNormal"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class NormalityStatus:
    status: Normality
    source: str


class Relation(enum.Enum):
    """Outcomes of a closure comparison that are not a plain yes/no."""

    INCOMPARABLE = "incomparable"
    UNDETERMINED = "undetermined"


class UndeterminedComparison(DomainError):
    pass


def _require_classical(t: SimpleType) -> None:
    if not t.is_classical:
        raise DomainError(f"nilpotent orbit tables are only available for classical types, not {t}")


def is_very_even(t: SimpleType, p: Partition) -> bool:
    if t.family != "D":
        raise DomainError(f"very even partitions only make sense in type D, not {t}")
    return all(d % 2 == 0 and p.multiplicity(d) % 2 == 0 for d in set(p.parts))


def _partition_ok(t: SimpleType, p: Partition) -> bool:
    if p.sum != t.natural_dim:
        return False
    if t.family in ("B", "D"):
        bad_parity = 0
    elif t.family == "C":
        bad_parity = 1
    else:
        return True
    return all(p.multiplicity(d) % 2 == 0 for d in set(p.parts) if d % 2 == bad_parity)


def validate_label(t: SimpleType, o: OrbitLabel) -> bool:
    _require_classical(t)
    if not _partition_ok(t, o.partition):
        return False
    if t.family == "D" and is_very_even(t, o.partition):
        return o.numeral is not None
    return o.numeral is None


def _check(t: SimpleType, o: OrbitLabel) -> None:
    if not validate_label(t, o):
        raise DomainError(f"{o} is not a nilpotent orbit label for {t}")


@lru_cache(maxsize=None)
def _enumerate(t: SimpleType) -> tuple[OrbitLabel, ...]:
    out = []
    for p in partitions(t.natural_dim):
        if not _partition_ok(t, p):
            continue
        if t.family == "D" and is_very_even(t, p):
            out += [OrbitLabel(p, "I"), OrbitLabel(p, "II")]
        else:
            out.append(OrbitLabel(p))
    return tuple(out)


def enumerate_orbits(t: SimpleType) -> list[OrbitLabel]:
    """Orbit labels in descending lexicographic order of partitions, I before II.

    Lexicographic order refines dominance, so every orbit is listed before
    the orbits in its closure.
    """
    _require_classical(t)
    return list(_enumerate(t))


def half_spectrum(t: SimpleType, p: Partition) -> HalfSpectrum:
    """Sorted eigenvalues of the neutral element of a standard triple.

    Type A gets the full vector; B, C, D get the first ``rank`` (non-negative) entries.
    """
    _require_classical(t)
    if not _partition_ok(t, p):
        raise DomainError(f"{p} is not a valid partition for {t}")
    vals = sorted((v for d in p for v in range(d - 1, -d, -2)), reverse=True)
    if t.family == "A":
        return HalfSpectrum(tuple(vals))
    return HalfSpectrum(tuple(vals[: t.rank]))


def weighted_dynkin(t: SimpleType, o: OrbitLabel) -> WeightedDiagram:
    _check(t, o)
    h = half_spectrum(t, o.partition).values
    n = t.rank
    if t.family == "A":
        labels = [h[i] - h[i + 1] for i in range(n)]
    else:
        labels = [h[i] - h[i + 1] for i in range(n - 1)]
        if t.family == "B":
            labels.append(h[n - 1])
        elif t.family == "C":
            labels.append(2 * h[n - 1])
        else:
            labels[n - 2] = h[n - 2] - h[n - 1]
            labels.append(h[n - 2] + h[n - 1])
            if o.numeral == "II":
                labels[n - 2], labels[n - 1] = labels[n - 1], labels[n - 2]
    if any(lab not in (0, 1, 2) for lab in labels):
        raise AssertionError(f"label outside {{0,1,2}} for {o} in {t}: {labels}")
    return WeightedDiagram(t, tuple(labels))


@lru_cache(maxsize=None)
def _diagram_index(t: SimpleType) -> dict[tuple[int, ...], OrbitLabel]:
    index = {}
    for o in _enumerate(t):
        key = weighted_dynkin(t, o).labels
        if key in index:
            raise AssertionError(f"{o} and {index[key]} share the weighted diagram {key}")
        index[key] = o
    return index


def orbit_of_diagram(w: WeightedDiagram) -> OrbitLabel:
    """Inverse of :func:`weighted_dynkin`."""
    _require_classical(w.type)
    try:
        return _diagram_index(w.type)[w.labels]
    except KeyError:
        raise DomainError(f"{w} is not the weighted diagram of any nilpotent orbit of {w.type}") from None


def orbit_dimension(t: SimpleType, o: OrbitLabel) -> int:
    _check(t, o)
    p = o.partition
    sq = sum(s * s for s in transpose_partition(p))
    odd = sum(1 for d in p if d % 2)
    m = t.natural_dim
    if t.family == "A":
        dim = m * m - sq
    elif t.family in ("B", "D"):
        twice = m * (m - 1) - (sq - odd)
        dim = twice // 2
    else:
        n = t.rank
        twice = 2 * (2 * n * n + n) - (sq + odd)
        dim = twice // 2
    if dim % 2:
        raise AssertionError(f"odd orbit dimension {dim} for {o} in {t}")
    return dim


def _strictly_between_exists(t: SimpleType, low: Partition, high: Partition) -> bool:
    for p in partitions(t.natural_dim):
        if p in (low, high) or not _partition_ok(t, p) or is_very_even(t, p):
            continue
        if dominance_leq(low, p) and dominance_leq(p, high):
            return True
    return False


def closure_leq(t: SimpleType, a: OrbitLabel, b: OrbitLabel):
    """Is ``a`` contained in the closure of ``b``?

    Returns True, False (``b`` lies strictly below ``a``), ``Relation.INCOMPARABLE``
    or ``Relation.UNDETERMINED``.
    """
    _check(t, a)
    _check(t, b)
    if a == b:
        return True
    pa, pb = a.partition, b.partition
    if pa == pb:
        return Relation.INCOMPARABLE
    up, down = dominance_leq(pa, pb), dominance_leq(pb, pa)
    if not (up or down):
        return Relation.INCOMPARABLE
    if a.numeral and b.numeral:
        low, high = (pa, pb) if up else (pb, pa)
        if not _strictly_between_exists(t, low, high):
            return Relation.UNDETERMINED
    return up


def hasse_diagram(t: SimpleType) -> list[tuple[OrbitLabel, OrbitLabel]]:
    """Covering pairs ``(upper, lower)`` of the closure order."""
    orbits = enumerate_orbits(t)
    below = {o: set() for o in orbits}
    for a in orbits:
        for b in orbits:
            if a == b:
                continue
            r = closure_leq(t, a, b)
            if r is Relation.UNDETERMINED:
                raise UndeterminedComparison(f"closure order of {a} and {b} in {t} is undetermined")
            if r is True:
                below[b].add(a)
    edges = []
    for upper in orbits:
        for lower in orbits:
            if lower in below[upper] and not any(lower in below[mid] for mid in below[upper]):
                edges.append((upper, lower))
    return edges


_SRC_REGULAR = "regular, subregular and minimal orbits: Kostant 1963; Vinberg-Popov 1972; Broer 1994"
_SRC_TYPE_A = "all orbits in sl_n: Hesselink 1979; Kraft-Procesi 1979"
_SRC_OPEN = (
    "not covered by the general results; see Kraft-Procesi 1982 and Sommers 2005 for so_n and sp_2n"
)


@lru_cache(maxsize=None)
def _special_orbits(t: SimpleType) -> frozenset[OrbitLabel]:
    orbits = _enumerate(t)
    regular, zero = orbits[0], orbits[-1]
    edges = hasse_diagram(t)
    out = {regular}
    out |= {lo for hi, lo in edges if hi == regular}
    out |= {hi for hi, lo in edges if lo == zero}
    return frozenset(out)


def normality_status(t: SimpleType, o: OrbitLabel) -> NormalityStatus:
    _check(t, o)
    if t.family == "A":
        return NormalityStatus(Normality.NORMAL, _SRC_TYPE_A)
    if o in _special_orbits(t):
        return NormalityStatus(Normality.NORMAL, _SRC_REGULAR)
    return NormalityStatus(Normality.UNKNOWN, _SRC_OPEN)


# -- export ------------------------------------------------------------------

HASSE_JSON_SCHEMA = {
    "type": "array",
    "items": {
        "type": "object",
        "properties": {"from": {"type": "string"}, "to": {"type": "string"}},
        "required": ["from", "to"],
        "additionalProperties": False,
    },
}

ORBITS_JSON_SCHEMA = {
    "type": "array",
    "items": {
        "type": "object",
        "properties": {
            "orbit": {"type": "string"},
            "dimension": {"type": "integer", "minimum": 0},
            "weighted_diagram": {"type": "array", "items": {"enum": [0, 1, 2]}},
        },
        "required": ["orbit", "dimension", "weighted_diagram"],
        "additionalProperties": False,
    },
}


def orbit_table(t: SimpleType) -> list[dict]:
    return [
        {
            "orbit": str(o),
            "dimension": orbit_dimension(t, o),
            "weighted_diagram": list(weighted_dynkin(t, o).labels),
        }
        for o in enumerate_orbits(t)
    ]


def hasse_json(t: SimpleType) -> str:
    return json.dumps([{"from": str(a), "to": str(b)} for a, b in hasse_diagram(t)], indent=2)


def hasse_dot(t: SimpleType) -> str:
    orbits = enumerate_orbits(t)
    ids = {o: f"n{i}" for i, o in enumerate(orbits)}
    lines = [f'digraph "{t}" {{', "  rankdir=TB;"]
    for o in orbits:
        lines.append(f'  {ids[o]} [label="{o}\\n{weighted_dynkin(t, o)}"];')
    for a, b in hasse_diagram(t):
        lines.append(f"  {ids[a]} -> {ids[b]};")
    lines.append("}")
    return "\n".join(lines)
