"""Exhaustive generation of small finite structures.

Associative tables are produced by backtracking over the cells in row-major
order with incremental associativity pruning; partial orders, lattices and
join-distributive multiplications are generated the same way and filtered
against their axioms.  All streams are deterministic: ascending by the
row-major encoding of the structure, independent of sharding.

Deduplication keeps exactly the structures that equal their own canonical
relabeling, so the up_to_iso stream is the set of canonical forms of the raw
stream, one representative per isomorphism class.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache

from . import canon
from .le import LeSemigroup
from .ordered import OrderedSemigroup

DEFAULT_MAX_ORDER = 5

DEDUP_MODES = ("none", "up_to_iso")


def max_enum_order():
    """Enumeration order cap; POSEMI_MAX_ORDER overrides the default of 5."""
    raw = os.environ.get("POSEMI_MAX_ORDER")
    return int(raw) if raw else DEFAULT_MAX_ORDER


@dataclass(frozen=True)
class EnumerationConfig:
    """Parameters for one enumeration run.

    shard=(i, t) keeps every t-th structure starting at position i of the
    deduplicated stream, so the t shards partition the unsharded output.
    limit truncates the stream after that many yielded structures.
    """

    order: int
    dedup: str = "none"
    limit: int | None = None
    shard: tuple[int, int] | None = None

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be at least 1")
        if self.dedup not in DEDUP_MODES:
            raise ValueError(f"dedup must be one of {DEDUP_MODES}")
        if self.limit is not None and self.limit < 0:
            raise ValueError("limit must be nonnegative")
        if self.shard is not None:
            i, t = self.shard
            if t < 1 or not 0 <= i < t:
                raise ValueError("shard must satisfy 0 <= index < total")


def _check_order(n):
    cap = max_enum_order()
    if n > cap:
        raise ValueError(
            f"order {n} exceeds the enumeration cap {cap}"
            " (set POSEMI_MAX_ORDER to raise it)"
        )


def _finalize(stream, cfg):
    kept = 0
    for idx, item in enumerate(stream):
        if cfg.shard is not None and idx % cfg.shard[1] != cfg.shard[0]:
            continue
        yield item
        kept += 1
        if cfg.limit is not None and kept >= cfg.limit:
            return


def _is_associative_full(table, n):
    for a in range(n):
        ta = table[a]
        for b in range(n):
            tab = table[ta[b]]
            tb = table[b]
            for c in range(n):
                if tab[c] != ta[tb[c]]:
                    return False
    return True


def associative_tables(n):
    """Yield every associative n x n table, ascending in row-major order."""
    rng = range(n)
    table = [[-1] * n for _ in range(n)]

    def consistent(i, j, v):
        # partial associativity for triples whose first or last product is
        # the fresh cell; unknown cells (-1) are skipped, a final full check
        # covers the triples that only complete later
        row_i = table[i]
        row_j = table[j]
        row_v = table[v]
        for c in rng:
            lhs = row_v[c]
            q = row_j[c]
            if lhs >= 0 and q >= 0:
                rhs = row_i[q]
                if rhs >= 0 and lhs != rhs:
                    return False
        for a in rng:
            row_a = table[a]
            p = row_a[i]
            if p >= 0:
                lhs = table[p][j]
                rhs = row_a[v]
                if lhs >= 0 and rhs >= 0 and lhs != rhs:
                    return False
        return True

    def fill(k):
        if k == n * n:
            if _is_associative_full(table, n):
                yield tuple(tuple(row) for row in table)
            return
        i, j = divmod(k, n)
        row = table[i]
        for v in rng:
            row[j] = v
            if consistent(i, j, v):
                yield from fill(k + 1)
        row[j] = -1

    yield from fill(0)


def _cmp_relabeled(mat, perm, pinv, n):
    """-1/0/1: relabeled copy of an element-valued table versus the original."""
    for r in range(n):
        src = mat[pinv[r]]
        ref = mat[r]
        for c in range(n):
            x = perm[src[pinv[c]]]
            y = ref[c]
            if x != y:
                return -1 if x < y else 1
    return 0


def _is_canonical_table(table, perms):
    n = len(table)
    for perm, pinv in perms[1:]:
        if _cmp_relabeled(table, perm, pinv, n) < 0:
            return False
    return True


def _is_min_relation(leq, auts, n):
    """True when no automorphism relabels leq to something smaller."""
    for perm, pinv in auts:
        for r in range(n):
            src = leq[pinv[r]]
            ref = leq[r]
            for c in range(n):
                x = src[pinv[c]]
                y = ref[c]
                if x != y:
                    if x < y:
                        return False
                    break
            else:
                continue
            break
    return True


def enumerate_semigroups(cfg):
    """Associative tables of the configured order.

    dedup="up_to_iso" keeps exactly the tables equal to their canonical
    relabeling: one representative per isomorphism class.
    """
    _check_order(cfg.order)

    def stream():
        if cfg.dedup == "up_to_iso":
            perms = canon.perms_with_inverse(cfg.order)
            for table in associative_tables(cfg.order):
                if _is_canonical_table(table, perms):
                    yield table
        else:
            yield from associative_tables(cfg.order)

    return _finalize(stream(), cfg)


@lru_cache(maxsize=None)
def all_posets(n):
    """Every partial order on n labeled points, ascending by encoding.

    Each unordered pair is incomparable or related one way, which already
    enforces antisymmetry; transitivity is checked on the complete relation.
    """
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    out = []
    leq = [[i == j for j in range(n)] for i in range(n)]

    def fill(k):
        if k == len(pairs):
            if _is_transitive(leq, n):
                out.append(tuple(tuple(row) for row in leq))
            return
        i, j = pairs[k]
        fill(k + 1)
        leq[i][j] = True
        fill(k + 1)
        leq[i][j] = False
        leq[j][i] = True
        fill(k + 1)
        leq[j][i] = False

    fill(0)
    out.sort()
    return tuple(out)


def _is_transitive(leq, n):
    for i in range(n):
        li = leq[i]
        for j in range(n):
            if li[j] and i != j:
                lj = leq[j]
                for k in range(n):
                    if lj[k] and not li[k]:
                        return False
    return True


def _compatible(table, leq, n):
    for i in range(n):
        li = leq[i]
        for j in range(n):
            if i != j and li[j]:
                for k in range(n):
                    tk = table[k]
                    if not leq[tk[i]][tk[j]]:
                        return False
                    if not leq[table[i][k]][table[j][k]]:
                        return False
    return True


def enumerate_compatible_orders(table):
    """Partial orders compatible with an associative table on both sides,
    ascending by encoding.  The discrete order is always among them."""
    n = len(table)
    for leq in all_posets(n):
        if _compatible(table, leq, n):
            yield leq


def enumerate_ordered_semigroups(cfg):
    """Ordered semigroups of the configured order: every associative table
    paired with every compatible partial order.

    dedup="up_to_iso" keeps canonical (table, order) pairs: the table part
    must itself be canonical, and only table automorphisms can then relabel
    the pair without disturbing it, so the order part is kept when it is
    minimal under those automorphisms.
    """
    _check_order(cfg.order)
    n = cfg.order
    base = EnumerationConfig(order=n, dedup=cfg.dedup)

    def stream():
        if cfg.dedup == "up_to_iso":
            perms = canon.perms_with_inverse(n)
            for table in enumerate_semigroups(base):
                auts = [
                    (p, pi) for p, pi in perms if _cmp_relabeled(table, p, pi, n) == 0
                ]
                for leq in enumerate_compatible_orders(table):
                    if len(auts) == 1 or _is_min_relation(leq, auts, n):
                        yield OrderedSemigroup(table, leq)
        else:
            for table in enumerate_semigroups(base):
                for leq in enumerate_compatible_orders(table):
                    yield OrderedSemigroup(table, leq)

    return _finalize(stream(), cfg)


@lru_cache(maxsize=None)
def all_lattices(n):
    """Labeled lattices on n points as (leq, join, meet, top), ascending by
    the order encoding."""
    out = []
    for leq in all_posets(n):
        tables = _lattice_tables(leq, n)
        if tables is not None:
            join, meet = tables
            top = 0
            for i in range(1, n):
                top = join[top][i]
            out.append((leq, join, meet, top))
    return tuple(out)


def _lattice_tables(leq, n):
    """Join and meet tables of a poset, or None when some bound is missing."""
    join = [[0] * n for _ in range(n)]
    meet = [[0] * n for _ in range(n)]
    rng = range(n)
    for i in rng:
        for j in rng:
            ups = [k for k in rng if leq[i][k] and leq[j][k]]
            lub = next((u for u in ups if all(leq[u][w] for w in ups)), None)
            downs = [k for k in rng if leq[k][i] and leq[k][j]]
            glb = next((g for g in downs if all(leq[w][g] for w in downs)), None)
            if lub is None or glb is None:
                return None
            join[i][j] = lub
            meet[i][j] = glb
    return tuple(tuple(r) for r in join), tuple(tuple(r) for r in meet)


def _le_multiplications(join, n):
    """Associative tables distributing over join on both sides, ascending.

    With row-major filling, a left-distributivity instance a(b v c) lives
    entirely in row a and is checkable once its largest column is set; a
    right-distributivity instance lives in one column and is checkable once
    its largest row is reached.  Both are therefore enforced incrementally
    and completely; associativity still needs the final full check.
    """
    by_max = [[] for _ in range(n)]
    for a in range(n):
        for b in range(a, n):
            u = join[a][b]
            by_max[max(a, b, u)].append((a, b, u))
    rng = range(n)
    table = [[-1] * n for _ in range(n)]

    def consistent(i, j, v):
        row_i = table[i]
        for b, c, u in by_max[j]:
            if join[row_i[b]][row_i[c]] != row_i[u]:
                return False
        for a, b, u in by_max[i]:
            if join[table[a][j]][table[b][j]] != table[u][j]:
                return False
        row_j = table[j]
        row_v = table[v]
        for c in rng:
            lhs = row_v[c]
            q = row_j[c]
            if lhs >= 0 and q >= 0:
                rhs = row_i[q]
                if rhs >= 0 and lhs != rhs:
                    return False
        for a in rng:
            row_a = table[a]
            p = row_a[i]
            if p >= 0:
                lhs = table[p][j]
                rhs = row_a[v]
                if lhs >= 0 and rhs >= 0 and lhs != rhs:
                    return False
        return True

    def fill(k):
        if k == n * n:
            if _is_associative_full(table, n):
                yield tuple(tuple(row) for row in table)
            return
        i, j = divmod(k, n)
        row = table[i]
        for v in rng:
            row[j] = v
            if consistent(i, j, v):
                yield from fill(k + 1)
        row[j] = -1

    yield from fill(0)


def _is_canonical_le(table, join, meet, n):
    perms = canon.perms_with_inverse(n)
    for perm, pinv in perms[1:]:
        cmp = _cmp_relabeled(table, perm, pinv, n)
        if cmp == 0:
            cmp = _cmp_relabeled(join, perm, pinv, n)
        if cmp == 0:
            cmp = _cmp_relabeled(meet, perm, pinv, n)
        if cmp < 0:
            return False
    return True


def enumerate_le_semigroups(cfg):
    """Lattice-ordered semigroups of the configured order, ascending by
    (lattice, multiplication); dedup keeps canonical representatives."""
    _check_order(cfg.order)
    n = cfg.order

    def stream():
        for leq, join, meet, top in all_lattices(n):
            for table in _le_multiplications(join, n):
                if cfg.dedup == "up_to_iso" and not _is_canonical_le(
                    table, join, meet, n
                ):
                    continue
                yield LeSemigroup(table, join, meet, top=top)

    return _finalize(stream(), cfg)


def canonicalize(table, leq):
    """Canonical (table, leq) pair under relabeling; idempotent."""
    return canon.canonical_ordered(table, leq)
