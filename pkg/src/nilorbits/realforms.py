"""Catalog of real forms of simple groups and their induced diagram involutions."""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .core import (
    DiagramAutomorphism,
    DomainError,
    SimpleType,
    diagram_automorphisms,
    named_automorphism,
)


class TwistClass(str, enum.Enum):
    INNER_OF_SPLIT = "InnerOfSplit"
    OUTER_OF_SPLIT = "OuterOfSplit"


# (tag, usual name, inner twist of split?)  The E6 inner/outer split is the
# standard one from the literature, not checked against anything here; no
# decision depends on it because every E6 weighted diagram is symmetric.
_EXCEPTIONAL = {
    "E6": [("EI", "E6(6)", True), ("EII", "E6(2)", False), ("EIII", "E6(-14)", False),
           ("EIV", "E6(-26)", True), ("compact", "E6(-78)", False)],
    "E7": [("EV", "E7(7)", True), ("EVI", "E7(-5)", True), ("EVII", "E7(-25)", True),
           ("compact", "E7(-133)", True)],
    "E8": [("EVIII", "E8(8)", True), ("EIX", "E8(-24)", True), ("compact", "E8(-248)", True)],
    "F4": [("FI", "F4(4)", True), ("FII", "F4(-20)", True), ("compact", "F4(-52)", True)],
    "G2": [("G", "G2(2)", True), ("compact", "G2(-14)", True)],
}
_SPLIT_TAG = {"E6": "EI", "E7": "EV", "E8": "EVIII", "F4": "FI", "G2": "G"}


@dataclass(frozen=True)
class RealFormSpec:
    """A real form.  ``family`` is one of ``sl_R``, ``sl_H``, ``su``, ``so``,
    ``sp_R``, ``sp``, ``so_star`` or an exceptional tag; ``params`` holds the
    signature where there is one."""

    type: SimpleType
    family: str
    params: tuple[int, ...] = ()
    notes: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        t, fam, ps = self.type, self.family, self.params
        m = t.natural_dim if t.is_classical else 0
        ok = True
        if fam == "sl_R":
            ok = t.family == "A" and ps == (m,)
        elif fam == "sl_H":
            ok = t.family == "A" and len(ps) == 1 and 2 * ps[0] == m
        elif fam == "su":
            ok = t.family == "A" and len(ps) == 2 and ps[0] >= ps[1] >= 0 and sum(ps) == m
        elif fam == "so":
            ok = t.family in ("B", "D") and len(ps) == 2 and ps[0] >= ps[1] >= 0 and sum(ps) == m
        elif fam == "sp_R":
            ok = t.family == "C" and ps == (m,)
        elif fam == "sp":
            ok = t.family == "C" and len(ps) == 2 and ps[0] >= ps[1] >= 0 and 2 * sum(ps) == m
        elif fam == "so_star":
            ok = t.family == "D" and ps == (m,)
        elif t.family in _EXCEPTIONAL:
            ok = fam in {tag for tag, _, _ in _EXCEPTIONAL[t.family]} and not ps
        else:
            ok = False
        if not ok:
            raise DomainError(f"{fam}{ps} is not a real form of {t}")

    @property
    def is_split(self) -> bool:
        t, fam, ps = self.type, self.family, self.params
        if fam in ("sl_R", "sp_R"):
            return True
        if fam == "so":
            return ps[0] - ps[1] <= 1
        if fam == "su":
            return t.rank == 1 and ps == (1, 1)
        return fam == _SPLIT_TAG.get(t.family)

    @property
    def is_compact(self) -> bool:
        if self.family in ("su", "so", "sp"):
            return self.params[1] == 0
        return self.family == "compact" or (self.family == "sl_H" and self.params == (1,))

    def __str__(self) -> str:
        fam, ps = self.family, self.params
        if fam == "sl_R":
            return f"sl({ps[0]},R)"
        if fam == "sl_H":
            return f"sl({ps[0]},H)"
        if fam == "sp_R":
            return f"sp({ps[0]},R)"
        if fam == "so_star":
            return f"so*({ps[0]})"
        if fam in ("su", "so", "sp"):
            return f"{fam}({ps[0]},{ps[1]})" if ps[1] else f"{fam}({ps[0]})"
        return fam


def _compact(t: SimpleType) -> RealFormSpec:
    if t.family == "A":
        return RealFormSpec(t, "su", (t.natural_dim, 0))
    if t.family in ("B", "D"):
        return RealFormSpec(t, "so", (t.natural_dim, 0))
    if t.family == "C":
        return RealFormSpec(t, "sp", (t.rank, 0))
    return RealFormSpec(t, "compact")


def _split(t: SimpleType) -> RealFormSpec:
    m = t.natural_dim if t.is_classical else 0
    if t.family == "A":
        return RealFormSpec(t, "sl_R", (m,))
    if t.family in ("B", "D"):
        return RealFormSpec(t, "so", ((m + 1) // 2, m // 2))
    if t.family == "C":
        return RealFormSpec(t, "sp_R", (m,))
    return RealFormSpec(t, _SPLIT_TAG[t.family])


def catalog_forms(t: SimpleType) -> list[RealFormSpec]:
    """Every real form of ``t`` once, split first."""
    m = t.natural_dim if t.is_classical else 0
    if t.family == "A":
        forms = [_split(t)]
        if m == 2:
            forms.append(_compact(t))  # su(1,1) = sl(2,R), sl(1,H) = su(2)
        else:
            forms += [RealFormSpec(t, "su", (m - q, q)) for q in range(m // 2 + 1)]
            if m % 2 == 0:
                forms.append(RealFormSpec(t, "sl_H", (m // 2,)))
    elif t.family in ("B", "D"):
        forms = [RealFormSpec(t, "so", (m - q, q)) for q in range(m // 2, -1, -1)]
        if t.family == "D":
            forms.append(RealFormSpec(t, "so_star", (m,)))
    elif t.family == "C":
        forms = [_split(t)] + [RealFormSpec(t, "sp", (t.rank - q, q)) for q in range(t.rank // 2 + 1)]
    else:
        forms = [RealFormSpec(t, tag) for tag, _, _ in _EXCEPTIONAL[t.family]]
    notes = []
    for f in forms:
        extra = ()
        if t.family in ("B", "C") and f.is_compact:
            extra = ("redundant for decisions: the diagram has no symmetry",)
        elif t.family == "E6":
            extra = ("twist-class-unverified",)
        notes.append(RealFormSpec(f.type, f.family, f.params, extra) if extra else f)
    return notes


_FORM_RE = re.compile(r"(sl|su|so|sp|so\*)\((\d+)(?:,(\d+|R|H))?\)")


def parse_form(t: SimpleType, text: str) -> RealFormSpec:
    """Parse ``so(5,3)``, ``su(2,1)``, ``sl(4,R)``, ``sl(2,H)``, ``so*(8)``, ``split``, ``compact``, ``EII``..."""
    s = text.strip().replace(" ", "").replace("ℝ", "R").replace("ℍ", "H")
    if s == "split":
        return _split(t)
    if s == "compact":
        return _compact(t)
    m = _FORM_RE.fullmatch(s)
    if not m:
        return RealFormSpec(t, s)
    kind, a, b = m.group(1), int(m.group(2)), m.group(3)
    if kind == "sl" and b == "R":
        return RealFormSpec(t, "sl_R", (a,))
    if kind == "sl" and b == "H":
        return RealFormSpec(t, "sl_H", (a,))
    if kind == "sp" and b == "R":
        return RealFormSpec(t, "sp_R", (a,))
    if kind == "so*" and b is None:
        return RealFormSpec(t, "so_star", (a,))
    if kind in ("su", "so", "sp") and b is None:
        return RealFormSpec(t, kind, (a, 0))
    if kind in ("su", "so", "sp") and b.isdigit():
        p, q = sorted((a, int(b)), reverse=True)
        return RealFormSpec(t, kind, (p, q))
    raise DomainError(f"cannot parse real form {text!r}")


def twist_class(f: RealFormSpec) -> TwistClass:
    t = f.type
    if len(diagram_automorphisms(t)) == 1:
        return TwistClass.INNER_OF_SPLIT
    if t.family == "A":
        inner = f.family in ("sl_R", "sl_H")
    elif t.family == "D":
        # so(n,n) is split; so(p,q) is an inner twist of it iff p = n (mod 2).
        # so*(2n) lies in the inner class of so(2n,0).
        p = f.params[0] if f.family == "so" else 2 * t.rank
        inner = (p - t.rank) % 2 == 0
    else:
        inner = next(flag for tag, _, flag in _EXCEPTIONAL[t.family] if tag == f.family)
    return TwistClass.INNER_OF_SPLIT if inner else TwistClass.OUTER_OF_SPLIT


@dataclass(frozen=True)
class StarAction:
    sigma_D: DiagramAutomorphism

    @classmethod
    def trivial(cls, t: SimpleType) -> "StarAction":
        return cls(DiagramAutomorphism.identity(t))


def canonical_involution(t: SimpleType) -> DiagramAutomorphism:
    if t.family == "A":
        return named_automorphism(t, "reverse")
    if t.family == "D":
        return DiagramAutomorphism.transposition(t, t.rank - 1, t.rank)
    if t.family == "E6":
        return diagram_automorphisms(t)[1]
    raise DomainError(f"the Dynkin diagram of {t} has no non-trivial involution")


def sigma_D_of_form(f: RealFormSpec, choice: Optional[DiagramAutomorphism] = None) -> StarAction:
    """The diagram automorphism induced by the real form.

    In D4 any of the three fork transpositions can arise from an outer form,
    depending on the representative; ``choice`` selects one (default: 3<->4).
    """
    t = f.type
    inner = twist_class(f) is TwistClass.INNER_OF_SPLIT
    if choice is not None:
        if inner:
            raise DomainError(f"{f} is an inner twist of the split form; its diagram automorphism is trivial")
        if choice.type != t or choice.order != 2 or choice not in diagram_automorphisms(t):
            raise DomainError(f"{choice.cycles_text()} is not a non-trivial involution of the {t} diagram")
        return StarAction(choice)
    if inner:
        return StarAction.trivial(t)
    return StarAction(canonical_involution(t))


# -- semisimple groups ----------------------------------------------------------

@dataclass(frozen=True)
class SemisimpleSpec:
    """Simple factors permuted by an involution.

    Fixed slots carry their own form in ``fixed_forms``; each swapped pair
    ``(i, j)`` with ``i < j`` carries one shared form in ``pair_forms``.
    """

    factors: tuple[SimpleType, ...]
    pairing: tuple[int, ...]
    fixed_forms: dict = field(hash=False)
    pair_forms: dict = field(hash=False)

    def star_action(self, slot: int) -> StarAction:
        j = self.pairing[slot]
        form = self.fixed_forms[slot] if j == slot else self.pair_forms[(min(slot, j), max(slot, j))]
        return sigma_D_of_form(form)

    @property
    def pairs(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j in enumerate(self.pairing) if i < j]


def product_structure(
    factors: Sequence[SimpleType],
    pairing: Sequence[int],
    forms: dict,
) -> SemisimpleSpec:
    """Validate a semisimple real structure.

    ``forms`` maps a slot index to a :class:`RealFormSpec` or a form string;
    a swapped pair needs a form under one of its two slots (or the same
    form under both).
    """
    factors, pairing = tuple(factors), tuple(pairing)
    k = len(factors)
    if len(pairing) != k or sorted(pairing) != list(range(k)):
        raise DomainError(f"pairing {list(pairing)} is not a permutation of the {k} factor slots")
    if any(pairing[pairing[i]] != i for i in range(k)):
        raise DomainError(f"pairing {list(pairing)} is not an involution")

    def form_at(i):
        f = forms.get(i, forms.get(str(i)))
        if f is None:
            return None
        return f if isinstance(f, RealFormSpec) else parse_form(factors[i], f)

    fixed, paired = {}, {}
    for i in range(k):
        j = pairing[i]
        if j == i:
            f = form_at(i)
            if f is None:
                raise DomainError(f"fixed slot {i} ({factors[i]}) has no real form")
            fixed[i] = f
        elif i < j:
            if factors[i] != factors[j]:
                raise DomainError(f"slots {i} and {j} are swapped but have types {factors[i]} and {factors[j]}")
            fi, fj = form_at(i), form_at(j)
            if fi is not None and fj is not None and fi != fj:
                raise DomainError(f"swapped slots {i} and {j} must share one form, got {fi} and {fj}")
            f = fi or fj
            if f is None:
                raise DomainError(f"swapped pair ({i},{j}) has no real form")
            paired[(i, j)] = f
    return SemisimpleSpec(factors, pairing, fixed, paired)
