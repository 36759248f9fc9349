"""Seeded random parameter arrays for every type.

Arrays are generated from random type data (so eigenvalue sequences are of
the right form by construction) and a random split sequence with zeta_0 = 1.
Draws that violate distinctness or nondegeneracy are retried.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple

from .errors import TDError
from .exactfield import QQ, Field
from .params import ParameterArray, TypeData, generate_parameter_array
from .tdtype import TDType

# small rationals away from 0 and +-1
Q_CHOICES = (Fraction(2), Fraction(3), Fraction(-2), Fraction(1, 2), Fraction(-1, 3),
             Fraction(3, 2), Fraction(2, 3), Fraction(-5, 2), Fraction(4, 3))


@dataclass
class CorpusConfig:
    seed: int = 20240101
    per_type: int = 50
    max_d: int = 8
    prime: int = 11
    height: int = 6
    include: Sequence[str] = ("I", "II", "II/Fp", "III+", "III-", "IV")


def random_zeta(rng: random.Random, field: Field, d: int, height: int = 6) -> tuple:
    return (field.one(),) + tuple(field.random_element(rng, height=height) for _ in range(d))


def random_type_data(rng: random.Random, tdtype: TDType, field: Field, height: int = 6, q=None) -> TypeData:
    el = lambda nz=False: field.random_element(rng, nonzero=nz, height=height)  # noqa: E731
    if tdtype is TDType.I:
        q = rng.choice(Q_CHOICES) if q is None else q
        return TypeData(tdtype, el(), el(), el(), el(), el(), el(), q=field(q))
    if tdtype is TDType.II:
        return TypeData(tdtype, el(), el(True), el(), el(), el(True), el())
    if tdtype.is_III:
        return TypeData(tdtype, el(), el(True), el(True), el(), el(True), el(True))
    return TypeData(tdtype, el(), el(), el(True), el(), el(), el(True))


def random_array(rng: random.Random, tdtype: TDType, field: Field, d: int,
                 height: int = 6, q=None, tries: int = 500) -> ParameterArray:
    last = None
    for _ in range(tries):
        td = random_type_data(rng, tdtype, field, height, q)
        try:
            return generate_parameter_array(td, d, random_zeta(rng, field, d, height), field)
        except TDError as exc:
            last = exc
    raise RuntimeError(f"could not draw a valid {tdtype} array with d={d} over {field}: {last}")


def _d_choices(tdtype: TDType, max_d: int) -> List[int]:
    if tdtype is TDType.IV:
        return [3]
    if tdtype is TDType.III_PLUS:
        return list(range(0, max_d + 1, 2))
    if tdtype is TDType.III_MINUS:
        return list(range(1, max_d + 1, 2))
    return list(range(0, max_d + 1))


def corpus(config: Optional[CorpusConfig] = None) -> Iterator[Tuple[str, ParameterArray]]:
    """(label, array) pairs, ``per_type`` of each configured family.

    Diameters cycle through the allowed range so small and large d are
    both covered regardless of the seed.
    """
    cfg = config or CorpusConfig()
    rng = random.Random(cfg.seed)
    families = {
        "I": (TDType.I, QQ),
        "II": (TDType.II, QQ),
        "II/Fp": (TDType.II, Field("Fp", cfg.prime)),
        "III+": (TDType.III_PLUS, QQ),
        "III-": (TDType.III_MINUS, QQ),
        "IV": (TDType.IV, Field("GF4")),
    }
    for label in cfg.include:
        tdtype, fld = families[label]
        max_d = cfg.max_d
        if fld.char:
            max_d = min(max_d, fld.char - 1)
        ds = _d_choices(tdtype, max_d)
        for k in range(cfg.per_type):
            d = ds[k % len(ds)]
            yield f"{label}#{k}(d={d})", random_array(rng, tdtype, fld, d, cfg.height)
