"""Exact set-level algebra on finite ordered semigroups.

Carrier elements are the indices 0..n-1.  Subsets of the carrier are plain
int bitmasks (bit i set means element i is in the subset), so products,
downward closures and inclusion tests reduce to a handful of integer
operations and exhaustive scans over all 2^n subsets stay cheap at the
carrier sizes this module targets.

An ideal of any kind here is a nonempty, downward-closed subset satisfying
the kind's multiplicative condition:

  left   SA <= A          right  AS <= A
  quasi  (AS] n (SA] <= A bi     ASA <= A

where (H] = {t : t <= h for some h in H} is the downward closure.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .canon import ordered_structure_id
from .report import VerificationReport

SUBSET_ENUM_CAP = 12

IDEAL_KINDS = ("left", "right", "quasi", "bi")
GENERATOR_KINDS = ("left", "right", "quasi")


class OrderedSemigroup:
    """Finite semigroup with a partial order compatible with multiplication.

    table[i][j] is the product i*j and leq[i][j] means i <= j.  Construction
    checks shapes and value ranges only; `validate` reports violations of the
    algebraic axioms (associativity, order axioms, two-sided compatibility).
    """

    __slots__ = ("n", "table", "leq", "below", "full", "_ideals")

    def __init__(self, table, leq):
        n = len(table)
        if n == 0:
            raise ValueError("carrier must be nonempty")
        if any(len(row) != n for row in table):
            raise ValueError("table must be square")
        self.table = tuple(tuple(int(v) for v in row) for row in table)
        if any(not 0 <= v < n for row in self.table for v in row):
            raise ValueError("table entries must be carrier indices")
        if len(leq) != n or any(len(row) != n for row in leq):
            raise ValueError("leq must be square and match the table size")
        self.leq = tuple(tuple(bool(v) for v in row) for row in leq)
        self.n = n
        self.full = (1 << n) - 1
        self.below = tuple(
            sum(1 << i for i in range(n) if self.leq[i][j]) for j in range(n)
        )
        self._ideals = {}

    def __eq__(self, other):
        return (
            type(other) is type(self)
            and self.table == other.table
            and self.leq == other.leq
        )

    def __hash__(self):
        return hash((type(self).__name__, self.table, self.leq))

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n})"


def subset_mask(indices, n):
    """Bitmask for an iterable of carrier indices."""
    mask = 0
    for i in indices:
        if not 0 <= i < n:
            raise ValueError(f"element {i} out of range for carrier of size {n}")
        mask |= 1 << i
    return mask


def subset_indices(mask):
    """Sorted list of carrier indices in a bitmask."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _check_mask(s, mask):
    if mask < 0 or mask >> s.n:
        raise ValueError(
            f"subset mask {mask:#x} out of range for carrier of size {s.n}"
        )


def validate(s):
    """Check the axioms; one message per violation, empty list when valid."""
    bad = []
    n, t, leq = s.n, s.table, s.leq
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if t[t[i][j]][k] != t[i][t[j][k]]:
                    bad.append(f"associativity: ({i}*{j})*{k} != {i}*({j}*{k})")
    for i in range(n):
        if not leq[i][i]:
            bad.append(f"reflexivity: not {i} <= {i}")
    for i in range(n):
        for j in range(i + 1, n):
            if leq[i][j] and leq[j][i]:
                bad.append(f"antisymmetry: {i} <= {j} and {j} <= {i}")
    for i in range(n):
        for j in range(n):
            if leq[i][j]:
                for k in range(n):
                    if leq[j][k] and not leq[i][k]:
                        bad.append(
                            f"transitivity: {i} <= {j} <= {k} but not {i} <= {k}"
                        )
    for i in range(n):
        for j in range(n):
            if i != j and leq[i][j]:
                for k in range(n):
                    if not leq[t[k][i]][t[k][j]]:
                        bad.append(
                            f"compatibility: {i} <= {j} but {k}*{i} !<= {k}*{j}"
                        )
                    if not leq[t[i][k]][t[j][k]]:
                        bad.append(
                            f"compatibility: {i} <= {j} but {i}*{k} !<= {j}*{k}"
                        )
    return bad


def downward_closure(s, mask):
    """All elements lying below some element of the subset."""
    _check_mask(s, mask)
    out = 0
    below = s.below
    m = mask
    while m:
        low = m & -m
        out |= below[low.bit_length() - 1]
        m ^= low
    return out


def set_product(s, a_mask, b_mask):
    """Elementwise product {a*b : a in A, b in B}; empty if either side is."""
    _check_mask(s, a_mask)
    _check_mask(s, b_mask)
    out = 0
    table = s.table
    for i in subset_indices(a_mask):
        row = table[i]
        for j in subset_indices(b_mask):
            out |= 1 << row[j]
    return out


@dataclass(frozen=True)
class IdealFlags:
    left: bool
    right: bool
    quasi: bool
    bi: bool
    downward_closed: bool
    nonempty: bool


def classify_subset(s, mask):
    """Ideal flags of a subset; every ideal kind requires nonempty and
    downward closed on top of its multiplicative condition."""
    _check_mask(s, mask)
    nonempty = mask != 0
    closed = downward_closure(s, mask) == mask
    if not (nonempty and closed):
        return IdealFlags(False, False, False, False, closed, nonempty)
    full = s.full
    xs = set_product(s, mask, full)
    sx = set_product(s, full, mask)
    left = not sx & ~mask
    right = not xs & ~mask
    quasi = not (downward_closure(s, xs) & downward_closure(s, sx)) & ~mask
    bi = not set_product(s, xs, mask) & ~mask
    return IdealFlags(left, right, quasi, bi, True, True)


def gen_ideal(s, x_mask, kind):
    """Ideal of the given kind generated by the nonempty subset X.

    Closed forms: right -> (X u XS]; left -> (X u SX];
    quasi -> (X u ((XS] n (SX])].
    """
    _check_mask(s, x_mask)
    if not x_mask:
        raise ValueError("generated ideals are defined for nonempty subsets only")
    if kind not in GENERATOR_KINDS:
        raise ValueError(f"unknown generator kind: {kind!r}")
    full = s.full
    if kind == "right":
        core = set_product(s, x_mask, full)
    elif kind == "left":
        core = set_product(s, full, x_mask)
    else:
        core = downward_closure(s, set_product(s, x_mask, full)) & downward_closure(
            s, set_product(s, full, x_mask)
        )
    return downward_closure(s, x_mask | core)


def ideal_masks(s, kind, cap=SUBSET_ENUM_CAP):
    """All ideals of one kind as bitmasks, ascending; cached per structure."""
    if kind not in IDEAL_KINDS:
        raise ValueError(f"unknown ideal kind: {kind!r}")
    if s.n > cap:
        raise ValueError(
            f"carrier size {s.n} exceeds the subset enumeration cap {cap}"
        )
    if not s._ideals:
        lists = {k: [] for k in IDEAL_KINDS}
        for m in range(1, s.full + 1):
            flags = classify_subset(s, m)
            for k in IDEAL_KINDS:
                if getattr(flags, k):
                    lists[k].append(m)
        s._ideals.update({k: tuple(v) for k, v in lists.items()})
    return s._ideals[kind]


def least_ideal_oracle(s, x_mask, kind, cap=SUBSET_ENUM_CAP):
    """Intersection of every kind-ideal containing X, by exhaustive scan.

    Independent of the closed-form generators: it relies only on
    classify_subset over all subsets.  The intersection is itself checked to
    be a kind-ideal before being returned.
    """
    _check_mask(s, x_mask)
    if not x_mask:
        raise ValueError("generated ideals are defined for nonempty subsets only")
    if kind not in IDEAL_KINDS:
        raise ValueError(f"unknown ideal kind: {kind!r}")
    acc = s.full
    for m in ideal_masks(s, kind, cap=cap):
        if m & x_mask == x_mask:
            acc &= m
    if not getattr(classify_subset(s, acc), kind):
        raise AssertionError(f"intersection of {kind} ideals is not a {kind} ideal")
    return acc


def is_intra_regular(s):
    """True iff every element a lies in (S a^2 S]."""
    full = s.full
    for a in range(s.n):
        sq = 1 << s.table[a][a]
        sa2s = set_product(s, set_product(s, full, sq), full)
        if not downward_closure(s, sa2s) >> a & 1:
            return False
    return True


def intra_regular_witness(s, a):
    """Some (x, y) with a <= x*a^2*y, or None; first such pair in index order.

    None for some element exactly when the structure is not intra-regular.
    """
    if not 0 <= a < s.n:
        raise ValueError(f"element {a} out of range")
    t = s.table
    sq = t[a][a]
    leq_a = s.leq[a]
    for x in range(s.n):
        row = t[t[x][sq]]
        for y in range(s.n):
            if leq_a[row[y]]:
                return (x, y)
    return None


@dataclass(frozen=True)
class ConditionWitness:
    """Failing ideal triple: violating_element is in x n m n y but not (y*m*x]."""

    x: int
    y: int
    m: int
    violating_element: int


def condition_holds(s, kind, cap=SUBSET_ENUM_CAP):
    """Check X n M n Y <= (Y M X] for all right ideals X, kind-ideals M and
    left ideals Y.

    Returns True, or the first ConditionWitness in ascending bitmask order of
    the triple (X, M, Y), with the least violating element.
    """
    if kind not in ("bi", "quasi"):
        raise ValueError(f"condition kind must be 'bi' or 'quasi', got {kind!r}")
    rights = ideal_masks(s, "right", cap=cap)
    mids = ideal_masks(s, kind, cap=cap)
    lefts = ideal_masks(s, "left", cap=cap)
    for x in rights:
        for m in mids:
            xm = x & m
            if not xm:
                continue
            for y in lefts:
                inter = xm & y
                if not inter:
                    continue
                ymx = downward_closure(s, set_product(s, set_product(s, y, m), x))
                bad = inter & ~ymx
                if bad:
                    elem = (bad & -bad).bit_length() - 1
                    return ConditionWitness(x=x, y=y, m=m, violating_element=elem)
    return True


def verify_theorem1(s, cap=SUBSET_ENUM_CAP):
    """Check that intra-regularity and both ideal-triple conditions agree on
    one structure; failing conditions carry witnesses in the report."""
    t0 = time.perf_counter()
    c1 = is_intra_regular(s)
    t1 = time.perf_counter()
    r2 = condition_holds(s, "bi", cap=cap)
    t2 = time.perf_counter()
    r3 = condition_holds(s, "quasi", cap=cap)
    t3 = time.perf_counter()
    witnesses = []
    if r2 is not True:
        witnesses.append(("c2", r2))
    if r3 is not True:
        witnesses.append(("c3", r3))
    c2 = r2 is True
    c3 = r3 is True
    return VerificationReport(
        structure_id=ordered_structure_id(s.table, s.leq),
        c1=c1,
        c2=c2,
        c3=c3,
        equivalence_ok=c1 == c2 == c3,
        witnesses=tuple(witnesses),
        timing_ms=(
            (t1 - t0) * 1000.0,
            (t2 - t1) * 1000.0,
            (t3 - t2) * 1000.0,
        ),
    )
