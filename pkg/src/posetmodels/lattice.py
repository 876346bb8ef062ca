"""Finite bounded lattices and their categorical calculus.

Elements are integer indices into a name list.  The order convention is
``a -> b`` iff ``a <= b``, so coproducts and pushouts are joins, products
and pullbacks are meets, the initial object is the bottom and the terminal
object is the top.  Element subsets and morphism sets are represented as
integer bitmasks throughout, which keeps the exhaustive scans cheap.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple

from .errors import (
    CapExceeded,
    CycleDetected,
    InvalidInput,
    NotALattice,
    NotComparable,
    Unbounded,
)

DEFAULT_MAX_ELEMENTS = 512


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of `mask` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Pair(NamedTuple):
    """A morphism src -> dst; only valid when src <= dst."""

    src: int
    dst: int


class FiniteLattice:
    """A validated finite bounded lattice.

    Immutable after construction (caches are write-once), safe to share
    between threads for read-only use.  Build instances with
    :func:`build_lattice`, never directly.
    """

    def __init__(self, names, up, down, join_table, meet_table, bottom, top):
        self.names: tuple[str, ...] = tuple(names)
        self.n = len(self.names)
        self._up = up          # up[a] = bitmask of elements >= a (includes a)
        self._down = down      # down[a] = bitmask of elements <= a
        self._join = join_table
        self._meet = meet_table
        self.bottom = bottom
        self.top = top
        self._index = {name: i for i, name in enumerate(self.names)}
        # morphism bookkeeping, filled lazily
        self._pairs: tuple[Pair, ...] | None = None
        self._pair_index: dict[Pair, int] | None = None
        self._identity_mask: int | None = None
        self._nonlift_left: list[int] | None = None
        self._nonlift_right: list[int] | None = None
        self._pushout_targets: list[tuple[int, ...]] | None = None
        self._pullback_targets: list[tuple[int, ...]] | None = None

    # -- order ---------------------------------------------------------

    def leq(self, a: int, b: int) -> bool:
        return (self._up[a] >> b) & 1 == 1

    def join(self, a: int, b: int) -> int:
        return self._join[a][b]

    def meet(self, a: int, b: int) -> int:
        return self._meet[a][b]

    def up_mask(self, a: int) -> int:
        return self._up[a]

    def down_mask(self, a: int) -> int:
        return self._down[a]

    @property
    def elements(self) -> range:
        return range(self.n)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise InvalidInput(f"unknown element label {name!r}") from None

    def name(self, i: int) -> str:
        return self.names[i]

    def pair(self, src, dst) -> Pair:
        """Build a Pair from indices or labels, checking comparability."""
        a = src if isinstance(src, int) else self.index(src)
        b = dst if isinstance(dst, int) else self.index(dst)
        if not self.leq(a, b):
            raise NotComparable(self.names[a], self.names[b])
        return Pair(a, b)

    def pair_names(self, p: Pair) -> tuple[str, str]:
        return (self.names[p.src], self.names[p.dst])

    def __eq__(self, other):
        if not isinstance(other, FiniteLattice):
            return NotImplemented
        return self.names == other.names and self._up == other._up

    def __hash__(self):
        return hash((self.names, tuple(self._up)))

    def __repr__(self):
        return f"FiniteLattice({self.n} elements, bottom={self.names[self.bottom]!r}, top={self.names[self.top]!r})"

    def cover_pairs(self) -> list[Pair]:
        """Covering relations (the Hasse diagram edges), lex-sorted."""
        out = []
        for a in range(self.n):
            strict_up = self._up[a] & ~(1 << a)
            for b in iter_bits(strict_up):
                between = self._up[a] & self._down[b] & ~(1 << a) & ~(1 << b)
                if between == 0:
                    out.append(Pair(a, b))
        return out

    # -- morphism bookkeeping -------------------------------------------

    @property
    def pairs(self) -> tuple[Pair, ...]:
        """All comparable pairs (morphisms), sorted lexicographically."""
        if self._pairs is None:
            ps = []
            for a in range(self.n):
                for b in iter_bits(self._up[a]):
                    ps.append(Pair(a, b))
            ps.sort()
            self._pairs = tuple(ps)
            self._pair_index = {p: i for i, p in enumerate(ps)}
            ident = 0
            for i, p in enumerate(ps):
                if p.src == p.dst:
                    ident |= 1 << i
            self._identity_mask = ident
        return self._pairs

    @property
    def pair_index(self) -> dict[Pair, int]:
        self.pairs
        return self._pair_index

    @property
    def identity_mask(self) -> int:
        self.pairs
        return self._identity_mask

    @property
    def all_pairs_mask(self) -> int:
        return (1 << len(self.pairs)) - 1

    def _build_lift_tables(self) -> None:
        # nonlift_left[i]  = mask of j such that pairs[i] does NOT lift left of pairs[j]
        # nonlift_right[j] = mask of i such that pairs[i] does NOT lift left of pairs[j]
        ps = self.pairs
        p = len(ps)
        left = [0] * p
        right = [0] * p
        up = self._up
        for i, (a, b) in enumerate(ps):
            if a == b:
                continue  # identities lift against everything
            for j, (x, y) in enumerate(ps):
                # square exists iff a<=x and b<=y; the lift is b<=x
                if (up[a] >> x) & 1 and (up[b] >> y) & 1 and not (up[b] >> x) & 1:
                    left[i] |= 1 << j
                    right[j] |= 1 << i
        self._nonlift_left = left
        self._nonlift_right = right

    @property
    def nonlift_left(self) -> list[int]:
        if self._nonlift_left is None:
            self._build_lift_tables()
        return self._nonlift_left

    @property
    def nonlift_right(self) -> list[int]:
        if self._nonlift_right is None:
            self._build_lift_tables()
        return self._nonlift_right

    @property
    def pushout_targets(self) -> list[tuple[int, ...]]:
        """For each pair index i=(a,b): indices of (c, b v c) over all c >= a."""
        if self._pushout_targets is None:
            idx = self.pair_index
            out = []
            for (a, b) in self.pairs:
                targets = {idx[Pair(c, self._join[b][c])] for c in iter_bits(self._up[a])}
                out.append(tuple(sorted(targets)))
            self._pushout_targets = out
        return self._pushout_targets

    @property
    def pullback_targets(self) -> list[tuple[int, ...]]:
        """For each pair index i=(a,b): indices of (a ^ c, c) over all c <= b."""
        if self._pullback_targets is None:
            idx = self.pair_index
            out = []
            for (a, b) in self.pairs:
                targets = {idx[Pair(self._meet[a][c], c)] for c in iter_bits(self._down[b])}
                out.append(tuple(sorted(targets)))
            self._pullback_targets = out
        return self._pullback_targets


def _transitive_closure(n: int, up: list[int]) -> list[int]:
    changed = True
    while changed:
        changed = False
        for a in range(n):
            acc = up[a]
            for b in iter_bits(acc):
                acc |= up[b]
            if acc != up[a]:
                up[a] = acc
                changed = True
    return up


def build_lattice(
    names: Iterable[str],
    relations: Iterable[tuple[str, str]],
    max_elements: int = DEFAULT_MAX_ELEMENTS,
) -> FiniteLattice:
    """Validate and index a finite bounded lattice.

    `relations` may list covers or arbitrary order pairs; the
    reflexive-transitive closure is always taken.  Raises
    :class:`CycleDetected` when antisymmetry fails, :class:`NotALattice`
    when some pair has no unique join or meet, and :class:`Unbounded` when
    there is no global bottom or top (only possible for an empty element
    list once the lattice checks pass).
    """
    names = list(names)
    n = len(names)
    if n == 0:
        raise Unbounded("an empty element list has no bottom or top")
    if n > max_elements:
        raise CapExceeded("lattice elements", max_elements, n)
    seen = set()
    for name in names:
        if name in seen:
            raise InvalidInput(f"duplicate element label {name!r}")
        seen.add(name)
    index = {name: i for i, name in enumerate(names)}

    up = [1 << a for a in range(n)]
    for (x, y) in relations:
        if x not in index:
            raise InvalidInput(f"relation references unknown label {x!r}")
        if y not in index:
            raise InvalidInput(f"relation references unknown label {y!r}")
        up[index[x]] |= 1 << index[y]
    up = _transitive_closure(n, up)

    for a in range(n):
        for b in iter_bits(up[a]):
            if b != a and (up[b] >> a) & 1:
                raise CycleDetected(names[a], names[b])

    down = [0] * n
    for a in range(n):
        for b in iter_bits(up[a]):
            down[b] |= 1 << a

    join_table = [[0] * n for _ in range(n)]
    meet_table = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(a, n):
            uppers = up[a] & up[b]
            least = None
            for u in iter_bits(uppers):
                if uppers & ~up[u] == 0:
                    least = u
                    break
            if least is None:
                raise NotALattice(names[a], names[b], "join")
            join_table[a][b] = join_table[b][a] = least
            lowers = down[a] & down[b]
            greatest = None
            for v in iter_bits(lowers):
                if lowers & ~down[v] == 0:
                    greatest = v
                    break
            if greatest is None:
                raise NotALattice(names[a], names[b], "meet")
            meet_table[a][b] = meet_table[b][a] = greatest

    bottom = top = 0
    for a in range(1, n):
        bottom = meet_table[bottom][a]
        top = join_table[top][a]
    return FiniteLattice(names, up, down, join_table, meet_table, bottom, top)


def join_all(lattice: FiniteLattice, elems: Iterable[int]) -> int:
    """Least upper bound of a set; the empty join is the bottom."""
    acc = None
    for e in elems:
        acc = e if acc is None else lattice.join(acc, e)
    return lattice.bottom if acc is None else acc


def meet_all(lattice: FiniteLattice, elems: Iterable[int]) -> int:
    """Greatest lower bound of a set; the empty meet is the top."""
    acc = None
    for e in elems:
        acc = e if acc is None else lattice.meet(acc, e)
    return lattice.top if acc is None else acc


def pushout_of(lattice: FiniteLattice, f: Pair, c: int) -> Pair:
    """Cobase change of f=(a,b) along a <= c, namely (c, b v c)."""
    if not lattice.leq(f.src, c):
        raise NotComparable(lattice.name(f.src), lattice.name(c))
    return Pair(c, lattice.join(f.dst, c))


def pullback_of(lattice: FiniteLattice, f: Pair, c: int) -> Pair:
    """Base change of f=(a,b) along c <= b, namely (a ^ c, c)."""
    if not lattice.leq(c, f.dst):
        raise NotComparable(lattice.name(c), lattice.name(f.dst))
    return Pair(lattice.meet(f.src, c), c)
