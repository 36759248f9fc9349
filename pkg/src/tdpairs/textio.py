"""Plain-text records: ``key: value`` lines, ``#`` comments.

Parameter-array record::

    field: Q
    d: 1
    type: II
    beta: 2
    theta: 1, -1
    theta_star: 1, -1
    zeta: 1, 2            # or phi: 2   (running products give zeta)
    q: 2                  # type I only
    a: 0                  # optional type-data block: a b c a_star b_star c_star
    ...

Matrix-pair record: ``field``, ``theta``, ``theta_star``, ``A`` and
``A_star``, with matrix rows separated by ``;`` and entries by ``,``.
"""

from __future__ import annotations

from typing import Optional, Tuple

from .errors import ParseError, ValidationError
from .exactfield import Field
from .leonard import MatrixPair, zeta_from_phi
from .params import ParameterArray, TypeData, classify_type
from .tdtype import TDType

ARRAY_KEYS = ("field", "d", "type", "beta", "q", "theta", "theta_star", "zeta", "phi",
              "a", "b", "c", "a_star", "b_star", "c_star")
TD_KEYS = ("a", "b", "c", "a_star", "b_star", "c_star")
MATRIX_KEYS = ("field", "theta", "theta_star", "A", "A_star")


class Record(dict):
    """key -> (line number, raw value)"""

    def value(self, key: str) -> str:
        return self[key][1]

    def line(self, key: str) -> int:
        return self[key][0]


def parse_record(text: str, allowed=None) -> Record:
    rec = Record()
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ParseError(f"line {no}: expected 'key: value', got {raw.strip()!r}")
        key, value = (s.strip() for s in line.split(":", 1))
        if allowed is not None and key not in allowed:
            raise ParseError(f"line {no}: unknown key {key!r}")
        if key in rec:
            raise ParseError(f"line {no}: duplicate key {key!r} (first on line {rec.line(key)})")
        rec[key] = (no, value)
    return rec


def _need(rec: Record, key: str) -> str:
    if key not in rec:
        raise ParseError(f"missing key {key!r}")
    return rec.value(key)


def _el(field: Field, rec: Record, key: str):
    try:
        return field.parse_element(rec.value(key))
    except ParseError as exc:
        raise ParseError(f"line {rec.line(key)} ({key}): {exc}") from None


def parse_list(field: Field, text: str) -> tuple:
    if not text.strip():
        return ()
    return tuple(field.parse_element(x) for x in text.split(","))


def _list(field: Field, rec: Record, key: str) -> tuple:
    try:
        return parse_list(field, rec.value(key))
    except ParseError as exc:
        raise ParseError(f"line {rec.line(key)} ({key}): {exc}") from None


def _int(rec: Record, key: str) -> int:
    try:
        return int(_need(rec, key))
    except ValueError:
        raise ParseError(f"line {rec.line(key)} ({key}): expected an integer") from None


def read_field(rec: Record, override: Optional[Field] = None) -> Field:
    if override is not None:
        return override
    text = _need(rec, "field")
    try:
        return Field.parse(text)
    except ParseError as exc:
        raise ParseError(f"line {rec.line('field')} (field): {exc}") from None


def _type_data(rec: Record, field: Field, tdtype: TDType, q) -> Optional[TypeData]:
    present = [k for k in TD_KEYS if k in rec]
    if not present:
        return None
    if len(present) != len(TD_KEYS):
        missing = ", ".join(k for k in TD_KEYS if k not in rec)
        raise ParseError(f"incomplete type-data block, missing {missing}")
    return TypeData(tdtype, *(_el(field, rec, k) for k in TD_KEYS), q=q)


def read_array(text: str, field: Optional[Field] = None) -> ParameterArray:
    rec = parse_record(text, ARRAY_KEYS)
    F = read_field(rec, field)
    d = _int(rec, "d")
    if "beta" not in rec:
        raise ParseError("missing key 'beta' (the base is always stored explicitly)")
    beta = _el(F, rec, "beta")
    for key in ("theta", "theta_star"):
        _need(rec, key)
    theta, theta_star = _list(F, rec, "theta"), _list(F, rec, "theta_star")
    if ("zeta" in rec) == ("phi" in rec):
        raise ParseError("exactly one of 'zeta' and 'phi' must be given")
    if "zeta" in rec:
        zeta = _list(F, rec, "zeta")
    else:
        phi = _list(F, rec, "phi")
        if len(phi) != d:
            raise ParseError(f"line {rec.line('phi')} (phi): {len(phi)} entries, expected d={d}")
        zeta = zeta_from_phi(phi, F)
    q = _el(F, rec, "q") if "q" in rec else None
    tdtype = classify_type(beta, F, d)
    if "type" in rec:
        try:
            claimed = TDType.parse(rec.value("type"))
        except ValueError as exc:
            raise ParseError(f"line {rec.line('type')} (type): {exc}") from None
        if claimed is not tdtype:
            raise ValidationError(f"line {rec.line('type')}: type {claimed} claimed, but beta gives {tdtype}")
    td = _type_data(rec, F, tdtype, q)
    return ParameterArray(F, d, theta, theta_star, zeta, beta, q=q, type_data=td)


def _join(field: Field, xs) -> str:
    return ", ".join(field.render(x) for x in xs)


def format_array(pa: ParameterArray, with_type_data: bool = True) -> str:
    F = pa.field
    lines = [f"field: {F}", f"d: {pa.d}", f"type: {pa.tdtype}", f"beta: {F.render(pa.beta)}"]
    if pa.q is not None:
        lines.append(f"q: {F.render(pa.q)}")
    lines += [f"theta: {_join(F, pa.theta)}", f"theta_star: {_join(F, pa.theta_star)}",
              f"zeta: {_join(F, pa.zeta)}"]
    if with_type_data and pa.type_data is not None:
        td = pa.type_data
        for k in TD_KEYS:
            lines.append(f"{k}: {F.render(getattr(td, k))}")
    return "\n".join(lines) + "\n"


def read_type_data(text: str, field: Optional[Field] = None) -> Tuple[TypeData, int, Field]:
    """Type-data record: field, d, type, optional q, and a b c a_star b_star c_star."""
    rec = parse_record(text, ("field", "d", "type", "q") + TD_KEYS)
    F = read_field(rec, field)
    d = _int(rec, "d")
    try:
        tdtype = TDType.parse(_need(rec, "type"))
    except ValueError as exc:
        raise ParseError(f"line {rec.line('type')} (type): {exc}") from None
    q = _el(F, rec, "q") if "q" in rec else None
    if tdtype is TDType.I and q is None:
        raise ParseError("type I data needs q")
    td = _type_data(rec, F, tdtype, q)
    if td is None:
        raise ParseError("missing type-data block (a, b, c, a_star, b_star, c_star)")
    return td, d, F


def _matrix(field: Field, rec: Record, key: str) -> list:
    try:
        rows = [parse_list(field, r) for r in _need(rec, key).split(";")]
    except ParseError as exc:
        raise ParseError(f"line {rec.line(key)} ({key}): {exc}") from None
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ParseError(f"line {rec.line(key)} ({key}): matrix is not square")
    return [list(r) for r in rows]


def read_matrix_pair(text: str, field: Optional[Field] = None):
    rec = parse_record(text, MATRIX_KEYS)
    F = read_field(rec, field)
    A, As = _matrix(F, rec, "A"), _matrix(F, rec, "A_star")
    theta, theta_star = _list(F, rec, "theta"), _list(F, rec, "theta_star")
    n = len(A)
    if len(As) != n or len(theta) != n or len(theta_star) != n:
        raise ParseError("A, A_star, theta and theta_star must all have size d+1")
    basis = "split" if _is_split_form(A, As, theta, theta_star) else "generic"
    return MatrixPair(A, As, F, basis), theta, theta_star


def _is_split_form(A, As, theta, theta_star) -> bool:
    n = len(A)
    for i in range(n):
        for j in range(n):
            want_a = theta[i] if i == j else (1 if i == j + 1 else 0)
            if A[i][j] != want_a:
                return False
            if (i == j and As[i][j] != theta_star[i]) or (j != i and j != i + 1 and As[i][j]):
                return False
    return True


def format_matrix(field: Field, M) -> str:
    return "; ".join(_join(field, row) for row in M)


def format_matrix_pair(mp: MatrixPair, theta, theta_star) -> str:
    F = mp.field
    return "\n".join([f"field: {F}", f"theta: {_join(F, theta)}", f"theta_star: {_join(F, theta_star)}",
                      f"A: {format_matrix(F, mp.A)}", f"A_star: {format_matrix(F, mp.A_star)}"]) + "\n"
