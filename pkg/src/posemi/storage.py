"""Structure files: JSON records with validation on load.

One record per structure.  Ordered and poe semigroups carry the order as a
list of [i, j] pairs meaning i <= j; reflexive pairs may be omitted and the
transitive closure is applied on load before re-validation.  Lattice-ordered
semigroups carry explicit join and meet tables plus the top index instead of
an order relation.  Loading refuses structures that violate their axioms.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .le import LeSemigroup, PoeSemigroup, validate_le, validate_poe
from .ordered import OrderedSemigroup, validate

KINDS = ("ordered_semigroup", "poe_semigroup", "le_semigroup")


class StructureFileError(Exception):
    """Malformed or invalid structure file."""


@dataclass(frozen=True)
class Loaded:
    kind: str
    structure: object
    names: tuple | None

    def label(self, i):
        return self.names[i] if self.names else str(i)

    def index_of(self, token):
        """Carrier index for an element name or a numeric index string."""
        if self.names and token in self.names:
            return self.names.index(token)
        try:
            idx = int(token)
        except ValueError:
            raise StructureFileError(f"unknown element: {token!r}") from None
        if not 0 <= idx < self.structure.n:
            raise StructureFileError(f"element index {idx} out of range")
        return idx


def _expect(obj, field, types, where):
    if field not in obj:
        raise StructureFileError(f"{where}: missing field {field!r}")
    val = obj[field]
    if not isinstance(val, types) or isinstance(val, bool):
        raise StructureFileError(f"{where}: field {field!r} has the wrong type")
    return val


def _int_matrix(val, n, field):
    if len(val) != n or any(not isinstance(row, list) or len(row) != n for row in val):
        raise StructureFileError(f"field {field!r} must be a {n}x{n} matrix")
    for row in val:
        for v in row:
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise StructureFileError(
                    f"field {field!r} entries must be integers in 0..{n - 1}"
                )
    return val


def _leq_matrix(obj, n):
    raw = _expect(obj, "leq", list, "order relation")
    mat = [[i == j for j in range(n)] for i in range(n)]
    for idx, pair in enumerate(raw):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or any(not isinstance(v, int) or isinstance(v, bool) for v in pair)
        ):
            raise StructureFileError(f"field 'leq'[{idx}] must be a pair [i, j]")
        i, j = pair
        if not (0 <= i < n and 0 <= j < n):
            raise StructureFileError(f"field 'leq'[{idx}] indices out of range")
        mat[i][j] = True
    # transitive closure; validation afterwards reports any induced cycle
    for k in range(n):
        for i in range(n):
            if mat[i][k]:
                row_i = mat[i]
                row_k = mat[k]
                for j in range(n):
                    if row_k[j]:
                        row_i[j] = True
    return mat


def _fail_violations(violations):
    head = "; ".join(violations[:8])
    tail = "; ..." if len(violations) > 8 else ""
    raise StructureFileError(f"invalid structure: {head}{tail}")


def from_payload(obj):
    """Build and validate a structure from a parsed JSON object."""
    if not isinstance(obj, dict):
        raise StructureFileError("top level must be a JSON object")
    kind = _expect(obj, "kind", str, "structure")
    if kind not in KINDS:
        raise StructureFileError(f"unknown kind {kind!r}")
    n = _expect(obj, "order", int, kind)
    if n < 1:
        raise StructureFileError("field 'order' must be a positive integer")
    table = _int_matrix(_expect(obj, "table", list, kind), n, "table")
    names = None
    if "names" in obj:
        raw = obj["names"]
        if (
            not isinstance(raw, list)
            or len(raw) != n
            or any(not isinstance(x, str) for x in raw)
        ):
            raise StructureFileError("field 'names' must list one string per element")
        if len(set(raw)) != n:
            raise StructureFileError("field 'names' must not repeat labels")
        names = tuple(raw)

    if kind == "le_semigroup":
        join = _int_matrix(_expect(obj, "join", list, kind), n, "join")
        meet = _int_matrix(_expect(obj, "meet", list, kind), n, "meet")
        top = _expect(obj, "top", int, kind)
        if not 0 <= top < n:
            raise StructureFileError("field 'top' must be a carrier index")
        structure = LeSemigroup(table, join, meet, top=top)
        violations = validate_le(structure)
    elif kind == "poe_semigroup":
        leq = _leq_matrix(obj, n)
        base = OrderedSemigroup(table, leq)
        violations = validate(base)
        if violations:
            _fail_violations(violations)
        try:
            structure = PoeSemigroup(table, leq)
        except ValueError as exc:
            raise StructureFileError(str(exc)) from None
        violations = validate_poe(structure)
    else:
        leq = _leq_matrix(obj, n)
        structure = OrderedSemigroup(table, leq)
        violations = validate(structure)
    if violations:
        _fail_violations(violations)
    return Loaded(kind=kind, structure=structure, names=names)


def to_payload(structure, names=None):
    """JSON-ready dict for a structure; the order is written as its strict
    pairs, sorted."""
    if isinstance(structure, LeSemigroup):
        payload = {
            "kind": "le_semigroup",
            "order": structure.n,
            "table": [list(row) for row in structure.table],
            "join": [list(row) for row in structure.join],
            "meet": [list(row) for row in structure.meet],
            "top": structure.top,
        }
    elif isinstance(structure, OrderedSemigroup):
        kind = (
            "poe_semigroup" if isinstance(structure, PoeSemigroup) else "ordered_semigroup"
        )
        pairs = [
            [i, j]
            for i in range(structure.n)
            for j in range(structure.n)
            if i != j and structure.leq[i][j]
        ]
        payload = {
            "kind": kind,
            "order": structure.n,
            "table": [list(row) for row in structure.table],
            "leq": pairs,
        }
    else:
        raise TypeError(f"cannot serialize {type(structure).__name__}")
    if names is not None:
        if len(names) != structure.n:
            raise ValueError("names must list one label per element")
        payload["names"] = list(names)
    return payload


def load(path):
    """Load and validate a structure file."""
    with open(path, encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise StructureFileError(
                f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}"
            ) from None
    try:
        return from_payload(obj)
    except StructureFileError as exc:
        raise StructureFileError(f"{path}: {exc}") from None
    except ValueError as exc:
        raise StructureFileError(f"{path}: {exc}") from None


def save(structure, path, names=None):
    """Write a structure file; load(save(s)) reproduces s exactly."""
    payload = to_payload(structure, names=names)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")
