"""Relative structures: a lattice with validated weak equivalences.

Implements the strong 2-of-3 check, the maximal pushout/pullback-stable
subclasses of W, and the finite recognition decision.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .classes import MorphClass, is_binary_coproduct_closed, is_composition_closed
from .errors import InternalCheckFailed, MissingIdentities, NotCompositionClosed
from .lattice import FiniteLattice, Pair, iter_bits
from .report import Check, Report


class RelStruct:
    """A finite bounded lattice plus a subcategory of weak equivalences.

    `components` are the equivalence classes of the symmetric-transitive
    closure of W (zigzag connectivity), each sorted, listed by least
    element.  W-derived classes are cached write-once.
    """

    def __init__(self, lattice: FiniteLattice, weq: MorphClass):
        self.lattice = lattice
        self.weq = weq
        comp_of = list(range(lattice.n))

        def find(x):
            while comp_of[x] != x:
                comp_of[x] = comp_of[comp_of[x]]
                x = comp_of[x]
            return x

        for (a, b) in weq:
            ra, rb = find(a), find(b)
            if ra != rb:
                comp_of[max(ra, rb)] = min(ra, rb)
        groups: dict[int, list[int]] = {}
        for x in range(lattice.n):
            groups.setdefault(find(x), []).append(x)
        self.components: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(g)) for _, g in sorted(groups.items())
        )
        self.component_of: tuple[int, ...] = tuple(
            next(i for i, comp in enumerate(self.components) if x in comp)
            for x in range(lattice.n)
        )
        self._wc: MorphClass | None = None
        self._wf: MorphClass | None = None
        self._s2of3: Report | None = None
        self._cw: Report | None = None

    def __eq__(self, other):
        if not isinstance(other, RelStruct):
            return NotImplemented
        return self.lattice == other.lattice and self.weq.mask == other.weq.mask

    def __hash__(self):
        return hash((self.lattice, self.weq.mask))

    def __repr__(self):
        return f"RelStruct({self.lattice!r}, |W|={len(self.weq)})"

    def component(self, x: int) -> tuple[int, ...]:
        return self.components[self.component_of[x]]


def validate_relative(lattice: FiniteLattice, pairs, add_identities: bool = False) -> RelStruct:
    """Check that `pairs` (plus identities) form a subcategory and wrap it.

    Identities are only added behind the explicit flag; otherwise a missing
    identity is an error.  Composition closure is verified, never repaired.
    """
    weq = MorphClass.from_pairs(lattice, pairs, add_identities=add_identities)
    if not weq.has_identities():
        missing = lattice.identity_mask & ~weq.mask
        i = next(iter_bits(missing))
        raise MissingIdentities(lattice.name(lattice.pairs[i].src))
    closed = is_composition_closed(weq)
    if not closed:
        a, b, c = closed.witness
        raise NotCompositionClosed((lattice.name(a), lattice.name(b), lattice.name(c)))
    return RelStruct(lattice, weq)


def check_s2of3(rel: RelStruct) -> Report:
    """Strong 2-of-3: both factors of any factored W-morphism are in W.

    The witness is the lexicographically least failing triple (a, b, c).
    """
    if rel._s2of3 is not None:
        return rel._s2of3
    lat = rel.lattice
    rows = rel.weq.rows
    witness = None
    for a in range(lat.n):
        if witness:
            break
        for b in iter_bits(lat.up_mask(a)):
            cs = lat.up_mask(b) & rows[a]  # c >= b with (a, c) in W
            if (rows[a] >> b) & 1:
                bad = cs & ~rows[b]  # the factor (b, c) is missing from W
            else:
                bad = cs  # the factor (a, b) is already missing
            if bad:
                witness = (a, b, next(iter_bits(bad)))
                break
    rel._s2of3 = Report((Check("s2of3", witness is None, witness),))
    return rel._s2of3


def compute_Wc(rel: RelStruct) -> MorphClass:
    """Largest subcategory of W all of whose pushouts stay in W."""
    if rel._wc is None:
        lat = rel.lattice
        mask = 0
        targets = lat.pushout_targets
        for i in iter_bits(rel.weq.mask):
            if all((rel.weq.mask >> t) & 1 for t in targets[i]):
                mask |= 1 << i
        wc = MorphClass(lat, mask)
        _require_subcategory(wc, "W_c")
        rel._wc = wc
    return rel._wc


def compute_Wf(rel: RelStruct) -> MorphClass:
    """Largest subcategory of W all of whose pullbacks stay in W."""
    if rel._wf is None:
        lat = rel.lattice
        mask = 0
        targets = lat.pullback_targets
        for i in iter_bits(rel.weq.mask):
            if all((rel.weq.mask >> t) & 1 for t in targets[i]):
                mask |= 1 << i
        wf = MorphClass(lat, mask)
        _require_subcategory(wf, "W_f")
        rel._wf = wf
    return rel._wf


def _require_subcategory(s: MorphClass, label: str) -> None:
    if not s.has_identities():
        raise InternalCheckFailed(f"{label} lost an identity")
    closed = is_composition_closed(s)
    if not closed:
        raise InternalCheckFailed(f"{label} is not composition-closed, witness {closed.witness}")


def check_cw_factorization(rel: RelStruct) -> Report:
    """Every W-morphism factors as a W_c morphism followed by a W_f morphism."""
    if rel._cw is not None:
        return rel._cw
    lat = rel.lattice
    wc_rows = compute_Wc(rel).rows
    wf_cols = compute_Wf(rel).cols
    witness = None
    for (a, b) in rel.weq:
        if wc_rows[a] & wf_cols[b] == 0:
            witness = (Pair(a, b),)
            break
    rel._cw = Report((Check("cw_factorization", witness is None, witness),))
    return rel._cw


def recognition_report(rel: RelStruct) -> Report:
    """The finite recognition conditions, as one report.

    Closure of W_c under binary coproducts (the finite shadow of the
    coproduct condition) always holds here; it is asserted as a sanity
    invariant rather than reported.
    """
    checks = check_s2of3(rel).checks + check_cw_factorization(rel).checks
    cop = is_binary_coproduct_closed(compute_Wc(rel))
    if not cop:
        raise InternalCheckFailed(f"W_c not closed under binary coproducts, witness {cop.witness}")
    return Report(checks)


@dataclass
class Decision:
    """Outcome of the finite recognition: YES with the terminal structure
    attached, or NO with the failing condition's witness."""

    yes: bool
    report: Report
    structure: object | None = field(default=None, repr=False)

    def __bool__(self) -> bool:
        return self.yes

    @property
    def witness(self):
        return self.report.witness


def recognize_finite(rel: RelStruct) -> Decision:
    """Decide existence of a model structure with weak equivalences W."""
    report = recognition_report(rel)
    if not report.ok:
        return Decision(False, report)
    from .models import construct_terminal  # cycle break: models builds on this module

    return Decision(True, report, construct_terminal(rel))
