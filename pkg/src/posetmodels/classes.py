"""Morphism-class algebra: lifting, complements, closures, MLS/WFS checks.

A :class:`MorphClass` is a set of comparable pairs of one fixed lattice,
stored as a bitmask over the lattice's lex-sorted pair list.  All scans
iterate in pair order, so reported witnesses are lexicographically least.
"""

from __future__ import annotations

from .errors import NoFactorization, NotComparable, NotPushoutClosed
from .lattice import FiniteLattice, Pair, iter_bits
from .report import Check, Report


class MorphClass:
    """An immutable class of morphisms over a fixed finite lattice."""

    __slots__ = ("lattice", "mask", "_pushout_closed", "_rows", "_cols")

    def __init__(self, lattice: FiniteLattice, mask: int):
        self.lattice = lattice
        self.mask = mask
        self._pushout_closed: bool | None = None
        self._rows: list[int] | None = None
        self._cols: list[int] | None = None

    @classmethod
    def from_pairs(cls, lattice, pairs, add_identities: bool = False) -> "MorphClass":
        mask = 0
        index = lattice.pair_index
        for (src, dst) in pairs:
            a = src if isinstance(src, int) else lattice.index(src)
            b = dst if isinstance(dst, int) else lattice.index(dst)
            p = Pair(a, b)
            if p not in index:
                raise NotComparable(lattice.name(a), lattice.name(b))
            mask |= 1 << index[p]
        if add_identities:
            mask |= lattice.identity_mask
        return cls(lattice, mask)

    @classmethod
    def identities(cls, lattice) -> "MorphClass":
        return cls(lattice, lattice.identity_mask)

    @classmethod
    def all_morphisms(cls, lattice) -> "MorphClass":
        return cls(lattice, lattice.all_pairs_mask)

    def __contains__(self, pair) -> bool:
        i = self.lattice.pair_index.get(Pair(*pair))
        return i is not None and (self.mask >> i) & 1 == 1

    def __iter__(self):
        ps = self.lattice.pairs
        return (ps[i] for i in iter_bits(self.mask))

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __eq__(self, other):
        if not isinstance(other, MorphClass):
            return NotImplemented
        return self.lattice == other.lattice and self.mask == other.mask

    def __hash__(self):
        return hash((id(self.lattice), self.mask))

    def __or__(self, other: "MorphClass") -> "MorphClass":
        return MorphClass(self.lattice, self.mask | other.mask)

    def __and__(self, other: "MorphClass") -> "MorphClass":
        return MorphClass(self.lattice, self.mask & other.mask)

    def __sub__(self, other: "MorphClass") -> "MorphClass":
        return MorphClass(self.lattice, self.mask & ~other.mask)

    def __le__(self, other: "MorphClass") -> bool:
        return self.mask & ~other.mask == 0

    def __repr__(self):
        names = [f"{self.lattice.name(a)}->{self.lattice.name(b)}" for (a, b) in self.nonidentity_pairs()]
        return f"MorphClass(ids + {names})"

    def pairs(self) -> list[Pair]:
        return list(self)

    def name_pairs(self) -> list[tuple[str, str]]:
        return [self.lattice.pair_names(p) for p in self]

    def nonidentity_pairs(self) -> list[Pair]:
        return [p for p in self if p.src != p.dst]

    def with_identities(self) -> "MorphClass":
        return MorphClass(self.lattice, self.mask | self.lattice.identity_mask)

    def has_identities(self) -> bool:
        return self.lattice.identity_mask & ~self.mask == 0

    @property
    def rows(self) -> list[int]:
        """rows[a] = element mask of all b with (a, b) in the class."""
        if self._rows is None:
            rows = [0] * self.lattice.n
            cols = [0] * self.lattice.n
            ps = self.lattice.pairs
            for i in iter_bits(self.mask):
                a, b = ps[i]
                rows[a] |= 1 << b
                cols[b] |= 1 << a
            self._rows = rows
            self._cols = cols
        return self._rows

    @property
    def cols(self) -> list[int]:
        """cols[b] = element mask of all a with (a, b) in the class."""
        if self._cols is None:
            self.rows
        return self._cols


def lifts(lattice: FiniteLattice, f: Pair, g: Pair) -> bool:
    """True iff every commutative square with f on the left and g on the
    right has a diagonal.  In a poset there is at most one square, so this
    reduces to: (src f <= src g and dst f <= dst g) implies dst f <= src g."""
    if lattice.leq(f.src, g.src) and lattice.leq(f.dst, g.dst):
        return lattice.leq(f.dst, g.src)
    return True


def right_complement(s: MorphClass) -> MorphClass:
    """All g such that every f in s lifts on the left of g."""
    lat = s.lattice
    table = lat.nonlift_right
    mask = 0
    for j in range(len(lat.pairs)):
        if s.mask & table[j] == 0:
            mask |= 1 << j
    return MorphClass(lat, mask)


def left_complement(s: MorphClass) -> MorphClass:
    """All f such that f lifts on the left of every g in s."""
    lat = s.lattice
    table = lat.nonlift_left
    mask = 0
    for i in range(len(lat.pairs)):
        if s.mask & table[i] == 0:
            mask |= 1 << i
    return MorphClass(lat, mask)


def proper_factorizations(j: MorphClass, f: Pair, certified: bool = False) -> list[int]:
    """All c != src f with (src f, c) in j and c <= dst f.

    For a pushout-closed j this list is empty exactly when every member of
    j lifts on the left of f.  Certified mode checks pushout-closure once
    (cached on the class) and refuses to answer otherwise.
    """
    if certified:
        if j._pushout_closed is None:
            j._pushout_closed = bool(is_pushout_closed(j))
        if not j._pushout_closed:
            raise NotPushoutClosed(is_pushout_closed(j).witness)
    lat = j.lattice
    candidates = j.rows[f.src] & lat.down_mask(f.dst) & ~(1 << f.src)
    return list(iter_bits(candidates))


def is_pushout_closed(s: MorphClass) -> Check:
    lat = s.lattice
    ps = lat.pairs
    targets = lat.pushout_targets
    for i in iter_bits(s.mask):
        for t in targets[i]:
            if (s.mask >> t) & 1 == 0:
                return Check("pushout_closed", False, (ps[i], ps[t]))
    return Check("pushout_closed", True)


def is_pullback_closed(s: MorphClass) -> Check:
    lat = s.lattice
    ps = lat.pairs
    targets = lat.pullback_targets
    for i in iter_bits(s.mask):
        for t in targets[i]:
            if (s.mask >> t) & 1 == 0:
                return Check("pullback_closed", False, (ps[i], ps[t]))
    return Check("pullback_closed", True)


def is_composition_closed(s: MorphClass) -> Check:
    lat = s.lattice
    rows = s.rows
    for (a, b) in s:
        missing = rows[b] & ~rows[a]
        if missing:
            c = next(iter_bits(missing))
            return Check("composition_closed", False, (a, b, c))
    return Check("composition_closed", True)


def is_binary_coproduct_closed(s: MorphClass) -> Check:
    members = s.pairs()
    for f in members:
        for g in members:
            cop = Pair(s.lattice.join(f.src, g.src), s.lattice.join(f.dst, g.dst))
            if cop not in s:
                return Check("binary_coproduct_closed", False, (f, g, cop))
    return Check("binary_coproduct_closed", True)


def is_binary_product_closed(s: MorphClass) -> Check:
    members = s.pairs()
    for f in members:
        for g in members:
            prod = Pair(s.lattice.meet(f.src, g.src), s.lattice.meet(f.dst, g.dst))
            if prod not in s:
                return Check("binary_product_closed", False, (f, g, prod))
    return Check("binary_product_closed", True)


def _lifting_check(lc: MorphClass, rc: MorphClass) -> Check:
    lat = lc.lattice
    table = lat.nonlift_left
    ps = lat.pairs
    for i in iter_bits(lc.mask):
        bad = table[i] & rc.mask
        if bad:
            return Check("lifting", False, (ps[i], ps[next(iter_bits(bad))]))
    return Check("lifting", True)


def is_mls(lc: MorphClass, rc: MorphClass) -> Report:
    """Check the three maximal-lifting-system conditions for (lc, rc)."""
    lat = lc.lattice
    ps = lat.pairs
    checks = [_lifting_check(lc, rc)]
    extra = left_complement(rc).mask & ~lc.mask
    checks.append(
        Check("left_maximal", extra == 0, None if extra == 0 else (ps[next(iter_bits(extra))],))
    )
    extra = right_complement(lc).mask & ~rc.mask
    checks.append(
        Check("right_maximal", extra == 0, None if extra == 0 else (ps[next(iter_bits(extra))],))
    )
    return Report(tuple(checks))


def _factorization_check(lc: MorphClass, rc: MorphClass) -> Check:
    lat = lc.lattice
    lrows = lc.rows
    rcols = rc.cols
    for (a, b) in lat.pairs:
        middles = lrows[a] & rcols[b] & lat.up_mask(a) & lat.down_mask(b)
        if middles == 0:
            return Check("factorization", False, (Pair(a, b),))
    return Check("factorization", True)


def is_wfs(lc: MorphClass, rc: MorphClass) -> Report:
    """MLS conditions plus existence of a (lc, rc) factorization of every morphism."""
    mls = is_mls(lc, rc)
    return Report(mls.checks + (_factorization_check(lc, rc),))


def factorize(lc: MorphClass, rc: MorphClass, f: Pair, require: bool = False) -> list[int]:
    """All middles m with (src f, m) in lc and (m, dst f) in rc, ascending."""
    lat = lc.lattice
    middles = lc.rows[f.src] & rc.cols[f.dst] & lat.up_mask(f.src) & lat.down_mask(f.dst)
    if require and middles == 0:
        raise NoFactorization(f)
    return list(iter_bits(middles))
