"""Canonical forms under carrier relabeling, and relabeling-invariant ids.

A relabeling by a permutation p sends table[i][j] = k to table'[p(i)][p(j)] =
p(k) and i <= j to p(i) <= p(j).  The canonical form of a structure is the
lexicographically least encoding over all relabelings, so two structures are
isomorphic exactly when their canonical forms coincide.
"""

from __future__ import annotations

import hashlib
import itertools
import json
from functools import lru_cache

DEDUP_CAP = 6


@lru_cache(maxsize=None)
def perms_with_inverse(n):
    """All permutations of range(n), each paired with its inverse."""
    out = []
    for p in itertools.permutations(range(n)):
        inv = [0] * n
        for i, pi in enumerate(p):
            inv[pi] = i
        out.append((p, tuple(inv)))
    return tuple(out)


def _check_cap(n):
    if n > DEDUP_CAP:
        raise ValueError(
            f"carrier size {n} exceeds the canonicalization cap {DEDUP_CAP}"
        )


def relabel_table(table, perm):
    """Relabel an element-valued table: out[p(i)][p(j)] = p(table[i][j])."""
    n = len(table)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        pi = perm[i]
        row = table[i]
        for j in range(n):
            out[pi][perm[j]] = perm[row[j]]
    return tuple(tuple(r) for r in out)


def relabel_relation(rel, perm):
    """Relabel a boolean relation: out[p(i)][p(j)] = rel[i][j]."""
    n = len(rel)
    out = [[False] * n for _ in range(n)]
    for i in range(n):
        pi = perm[i]
        row = rel[i]
        for j in range(n):
            out[pi][perm[j]] = row[j]
    return tuple(tuple(r) for r in out)


def canonical_ordered(table, leq):
    """Least relabeling of (table, leq); the table part is compared first."""
    n = len(table)
    _check_cap(n)
    table = tuple(tuple(row) for row in table)
    leq = tuple(tuple(bool(v) for v in row) for row in leq)
    best = (table, leq)
    for perm, _ in perms_with_inverse(n)[1:]:
        cand = (relabel_table(table, perm), relabel_relation(leq, perm))
        if cand < best:
            best = cand
    return best


def canonical_le(table, join, meet):
    """Least relabeling of (table, join, meet), compared in that order."""
    n = len(table)
    _check_cap(n)
    t = tuple(tuple(row) for row in table)
    j = tuple(tuple(row) for row in join)
    m = tuple(tuple(row) for row in meet)
    best = (t, j, m)
    for perm, _ in perms_with_inverse(n)[1:]:
        cand = (
            relabel_table(t, perm),
            relabel_table(j, perm),
            relabel_table(m, perm),
        )
        if cand < best:
            best = cand
    return best


def _digest(payload):
    data = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(data.encode("utf-8")).hexdigest()[:16]


def ordered_structure_id(table, leq):
    """Relabeling-invariant id of an ordered semigroup."""
    t, o = canonical_ordered(table, leq)
    return _digest({"kind": "ordered_semigroup", "table": t, "leq": o})


def le_structure_id(table, join, meet):
    """Relabeling-invariant id of a lattice-ordered semigroup."""
    t, j, m = canonical_le(table, join, meet)
    return _digest({"kind": "le_semigroup", "table": t, "join": j, "meet": m})
