"""Existence of equivariant real structures on nilpotent orbits.

A nilpotent orbit O admits a (G, sigma)-equivariant real structure exactly
when the diagram automorphism induced by sigma fixes its weighted Dynkin
diagram.  If it does not, sigma carries O onto the orbit whose diagram is the
permuted one; that orbit is reported as the partner.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Optional, Union

from .core import DomainError, SimpleType, apply_automorphism, diagram_automorphisms
from .orbits import (
    Normality,
    OrbitLabel,
    enumerate_orbits,
    normality_status,
    orbit_of_diagram,
    validate_label,
    weighted_dynkin,
)
from .realforms import SemisimpleSpec, StarAction

UNIQUENESS = "All (G,σ)-equivariant real structures on O are equivalent."
NORMALIZATION = (
    "Every (G,σ)-equivariant real structure on O extends uniquely to the normalization of the "
    "closure of O, and all (G,σ)-equivariant real structures on that normalization are equivalent."
)
CLOSURE_CAVEAT = (
    "The closure of O is not known to be normal: it is open whether every (G,σ)-equivariant "
    "real structure on O extends to the closure itself."
)
REASON_FIXED = "σ_D(w(O)) = w(O): O is stable under dσ_e, and dσ_e restricted to O is a real structure."
REASON_SWAPPED = "σ_D(w(O)) ≠ w(O): dσ_e maps O onto the partner orbit, so O admits no equivariant real structure."
REASON_EXCEPTIONAL = (
    "Exceptional type: the only orbits moved by dσ_e lie in type D_2n, "
    "so every nilpotent orbit admits an equivariant real structure."
)
REASON_PRODUCT_FIXED = "Every component satisfies σ_D(w(O_i)) = w(O_i) and every swapped pair satisfies w(O_j) = σ'_D(w(O_i))."
REASON_PRODUCT_SWAPPED = "Some component violates the stability condition; dσ_e maps O onto the partner product orbit."


@dataclass(frozen=True)
class ProductOrbit:
    components: tuple[OrbitLabel, ...]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.components)) + ")"


Partner = Union[OrbitLabel, ProductOrbit]


@dataclass(frozen=True)
class DecisionReport:
    orbit: str
    exists: bool
    reason: str
    aut_shape_d: int
    partner: Optional[Partner] = None
    uniqueness: Optional[str] = None
    normalization_note: Optional[str] = None
    caveat: Optional[str] = None

    def to_dict(self) -> dict:
        d = asdict(self)
        d["partner"] = str(self.partner) if self.partner is not None else None
        return {k: v for k, v in d.items() if v is not None}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)


@dataclass(frozen=True)
class ClassificationReport:
    stable: tuple[OrbitLabel, ...]
    swapped_pairs: tuple[tuple[OrbitLabel, OrbitLabel], ...]

    def to_dict(self) -> dict:
        return {
            "stable": [str(o) for o in self.stable],
            "swapped_pairs": [[str(a), str(b)] for a, b in self.swapped_pairs],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


DECISION_JSON_SCHEMA = {
    "type": "object",
    "properties": {
        "orbit": {"type": "string"},
        "exists": {"type": "boolean"},
        "reason": {"type": "string"},
        "aut_shape_d": {"type": "integer", "minimum": 0},
        "partner": {"type": "string"},
        "uniqueness": {"type": "string"},
        "normalization_note": {"type": "string"},
        "caveat": {"type": "string"},
    },
    "required": ["orbit", "exists", "reason", "aut_shape_d"],
    "additionalProperties": False,
    "if": {"properties": {"exists": {"const": True}}},
    "then": {"required": ["uniqueness", "normalization_note"], "not": {"required": ["partner"]}},
    "else": {
        "required": ["partner"],
        "allOf": [{"not": {"required": ["uniqueness"]}}, {"not": {"required": ["normalization_note"]}}],
    },
}

CLASSIFICATION_JSON_SCHEMA = {
    "type": "object",
    "properties": {
        "stable": {"type": "array", "items": {"type": "string"}},
        "swapped_pairs": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "string"}, "minItems": 2, "maxItems": 2},
        },
    },
    "required": ["stable", "swapped_pairs"],
    "additionalProperties": False,
}


def _check_star(t: SimpleType, s: StarAction) -> None:
    a = s.sigma_D
    if a.type != t:
        raise DomainError(f"diagram automorphism of {a.type} used for {t}")
    if not a.is_identity and a not in diagram_automorphisms(t):
        raise DomainError(f"{a.cycles_text()} is not an automorphism of the {t} diagram")


def image_orbit(t: SimpleType, s: StarAction, o: OrbitLabel) -> OrbitLabel:
    """The orbit dσ_e(O), found through its weighted diagram."""
    return orbit_of_diagram(apply_automorphism(s.sigma_D, weighted_dynkin(t, o)))


def aut_shape(o: ProductOrbit) -> tuple[int, str]:
    """Dimension of the torus quotient of the equivariant automorphism group of O."""
    d = sum(1 for c in o.components if not c.is_zero)
    return d, f"Q ≅ U ⋊ T, dim T = {d}"


def _exists_report(orbit: str, reason: str, d: int, caveat: bool) -> DecisionReport:
    return DecisionReport(
        orbit=orbit,
        exists=True,
        reason=reason,
        aut_shape_d=d,
        uniqueness=UNIQUENESS,
        normalization_note=NORMALIZATION,
        caveat=CLOSURE_CAVEAT if caveat else None,
    )


def admits_real_structure_simple(
    t: SimpleType, s: StarAction, o: Union[OrbitLabel, str]
) -> DecisionReport:
    """Decide for a simple group.

    For exceptional types no orbit tables are kept; ``o`` is then an opaque
    name (string or label) and the answer is always yes.
    """
    _check_star(t, s)
    if not t.is_classical:
        if not s.sigma_D.is_identity and t.family != "E6":
            raise DomainError(f"{t} has no non-trivial diagram automorphism")
        zero = isinstance(o, OrbitLabel) and o.is_zero or str(o).strip() in ("0", "{0}")
        return _exists_report(str(o), REASON_EXCEPTIONAL, 0 if zero else 1, caveat=False)
    if not isinstance(o, OrbitLabel):
        o = OrbitLabel.parse(o)
    if not validate_label(t, o):
        raise DomainError(f"{o} is not a nilpotent orbit label for {t}")
    d = 0 if o.is_zero else 1
    image = image_orbit(t, s, o)
    if image == o:
        unclear = normality_status(t, o).status is not Normality.NORMAL
        return _exists_report(str(o), REASON_FIXED, d, caveat=unclear)
    return DecisionReport(orbit=str(o), exists=False, reason=REASON_SWAPPED, aut_shape_d=d, partner=image)


def classify_orbits(t: SimpleType, s: StarAction) -> ClassificationReport:
    _check_star(t, s)
    stable, pairs, seen = [], [], set()
    for o in enumerate_orbits(t):
        if o in seen:
            continue
        image = image_orbit(t, s, o)
        if image == o:
            stable.append(o)
        else:
            pairs.append((o, image))
            seen.add(image)
    return ClassificationReport(tuple(stable), tuple(pairs))


def admits_real_structure_product(spec: SemisimpleSpec, o: ProductOrbit) -> DecisionReport:
    k = len(spec.factors)
    if len(o.components) != k:
        raise DomainError(f"orbit has {len(o.components)} components, the group has {k} simple factors")
    for t, c in zip(spec.factors, o.components):
        if not t.is_classical:
            raise DomainError(f"product decisions need orbit tables; {t} is exceptional")
        if not validate_label(t, c):
            raise DomainError(f"{c} is not a nilpotent orbit label for {t}")
    image: list[OrbitLabel] = list(o.components)
    for i, t in enumerate(spec.factors):
        j = spec.pairing[i]
        # dσ_e sends the component in slot j to slot i
        image[i] = image_orbit(t, spec.star_action(i), o.components[j])
    d, _ = aut_shape(o)
    if tuple(image) == o.components:
        unclear = any(
            normality_status(t, c).status is not Normality.NORMAL for t, c in zip(spec.factors, o.components)
        )
        return _exists_report(str(o), REASON_PRODUCT_FIXED, d, caveat=unclear)
    return DecisionReport(
        orbit=str(o), exists=False, reason=REASON_PRODUCT_SWAPPED, aut_shape_d=d, partner=ProductOrbit(tuple(image))
    )
