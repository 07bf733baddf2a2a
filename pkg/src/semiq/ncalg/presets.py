"""Named presentations for the running examples, with their pinned conventions."""

from __future__ import annotations

import re

from ..exactnum import ADDITIVE, MULTIPLICATIVE
from .element import NcElement, casimir, specialize
from .presentation import AlgebraPresentation

PRESETS = ("torus2", "uqsl2", "qplane(n)")


def torus2() -> AlgebraPresentation:
    """Rank-2 quantum torus uv = q vu."""
    return AlgebraPresentation.quantum_torus([[0, 1], [-1, 0]], names=("u", "v"))


def qplane(n: int) -> AlgebraPresentation:
    """Quantum affine space on X_0, ..., X_{n-1} with X_i X_j = q X_j X_i for i < j."""
    return AlgebraPresentation.quantum_affine(n, names=tuple(f"X{i}" for i in range(n)))


def preset(name: str) -> AlgebraPresentation:
    if name == "torus2":
        return torus2()
    if name == "uqsl2":
        return AlgebraPresentation.uqsl2()
    m = re.fullmatch(r"qplane\((\d+)\)|qplane(\d+)", name)
    if m:
        return qplane(int(m.group(1) or m.group(2)))
    raise ValueError(f"unknown preset {name!r}; expected one of {', '.join(PRESETS)}")


def default_convention(presentation: AlgebraPresentation) -> str:
    """Multiplicative for tori (reproduces l^2 u^l v^l), additive otherwise."""
    return MULTIPLICATIVE if presentation.kind == "quantum_torus" else ADDITIVE


def uqsl2_central(l: int, field) -> dict[str, NcElement]:
    """x = E^l, y = F^l, z = K^l and the Casimir c, over ``field``."""
    pres = AlgebraPresentation.uqsl2()
    out = {
        "x": NcElement.monomial(pres, field, (0, 0, l)),
        "y": NcElement.monomial(pres, field, (l, 0, 0)),
        "z": NcElement.monomial(pres, field, (0, l, 0)),
    }
    cas = casimir(pres)
    out["c"] = cas if field.l is None else specialize(cas, field.l)
    return out


def aliases(presentation: AlgebraPresentation, field, l: int | None) -> dict[str, NcElement]:
    if presentation.is_uqsl2 and l is not None:
        return uqsl2_central(l, field)
    return {}
