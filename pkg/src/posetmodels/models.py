"""Model structures: exhaustive axiom verification and every construction.

A structure is a (weak equivalences, cofibrations, fibrations) triple over
one relative structure.  `verify_model` is always exhaustive; it is the
correctness anchor every construction is checked against.  Constructions
whose defining results guarantee success raise InternalCheckFailed if the
guarantee ever fails, so a miscomputation cannot go unnoticed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .centers import (
    CenterMap,
    compute_Jchi,
    compute_Qchi,
    compute_Wc_chi,
    compute_Wf_chi,
    validate_centers,
)
from .classes import (
    MorphClass,
    factorize,
    is_composition_closed,
    is_wfs,
    left_complement,
    lifts,
    right_complement,
)
from .errors import (
    HypothesisFailed,
    InternalCheckFailed,
    InvalidCenters,
    InvalidInput,
    JNotInW,
    NotWeakEquivalence,
    RecognitionFailed,
    S2OF3Failed,
)
from .lattice import Pair, iter_bits
from .relative import RelStruct, check_s2of3, compute_Wc, recognition_report
from .report import Check, Report


@dataclass(eq=False)
class ModelStruct:
    rel: RelStruct
    cof: MorphClass
    fib: MorphClass
    report: Report | None = field(default=None, repr=False)

    @property
    def lattice(self):
        return self.rel.lattice

    @property
    def we(self) -> MorphClass:
        return self.rel.weq

    @property
    def verified(self) -> bool:
        return self.report is not None and self.report.ok

    def acyclic_cofibrations(self) -> MorphClass:
        return self.cof & self.we

    def acyclic_fibrations(self) -> MorphClass:
        return self.fib & self.we

    def signature(self):
        """Non-identity (cof & we, fib & we) name pairs; what printed
        diagrams pin down about a structure."""
        lat = self.lattice
        return (
            frozenset(lat.pair_names(p) for p in self.acyclic_cofibrations().nonidentity_pairs()),
            frozenset(lat.pair_names(p) for p in self.acyclic_fibrations().nonidentity_pairs()),
        )

    def __eq__(self, other):
        if not isinstance(other, ModelStruct):
            return NotImplemented
        return (
            self.rel == other.rel
            and self.cof.mask == other.cof.mask
            and self.fib.mask == other.fib.mask
        )

    def __hash__(self):
        return hash((self.rel, self.cof.mask, self.fib.mask))

    def __repr__(self):
        return f"ModelStruct(acyclic cof={self.acyclic_cofibrations().name_pairs()}, acyclic fib={self.acyclic_fibrations().name_pairs()})"


def _subcategory_check(s: MorphClass, name: str) -> Check:
    if not s.has_identities():
        missing = s.lattice.identity_mask & ~s.mask
        i = next(iter_bits(missing))
        return Check(name, False, (s.lattice.pairs[i],))
    closed = is_composition_closed(s)
    return Check(name, closed.ok, closed.witness)


def _two_of_three_check(m: ModelStruct) -> Check:
    lat = m.lattice
    rows = m.we.rows
    for a in range(lat.n):
        for b in iter_bits(lat.up_mask(a)):
            cs = lat.up_mask(b)
            g = rows[b] & cs  # c with (b, c) in we
            h = rows[a] & cs  # c with (a, c) in we
            if (rows[a] >> b) & 1:
                bad = (g & ~h) | (h & ~g)
            else:
                bad = g & h
            if bad:
                return Check("two_of_three", False, (a, b, next(iter_bits(bad))))
    return Check("two_of_three", True)


def verify_model(m: ModelStruct) -> Report:
    """Exhaustively verify all model-structure axioms; attaches the report."""
    checks = [
        _subcategory_check(m.we, "we_subcategory"),
        _subcategory_check(m.cof, "cof_subcategory"),
        _subcategory_check(m.fib, "fib_subcategory"),
    ]
    for prefix, (lc, rc) in (
        ("cof_afib", (m.cof, m.acyclic_fibrations())),
        ("acof_fib", (m.acyclic_cofibrations(), m.fib)),
    ):
        for check in is_wfs(lc, rc).checks:
            checks.append(Check(f"{prefix}.{check.name}", check.ok, check.witness))
    checks.append(_two_of_three_check(m))
    m.report = Report(tuple(checks))
    return m.report


def _require_verified(m: ModelStruct) -> None:
    if m.report is None:
        verify_model(m)
    if not m.report.ok:
        bad = m.report.witness_check()
        raise InvalidInput(f"structure fails verification at {bad.name}, witness {bad.witness}")


def _verified(rel: RelStruct, cof: MorphClass, fib: MorphClass, context: str) -> ModelStruct:
    m = ModelStruct(rel, cof, fib)
    if not verify_model(m).ok:
        bad = m.report.witness_check()
        raise InternalCheckFailed(f"{context} failed {bad.name}, witness {bad.witness}")
    return m


def construct_terminal(rel: RelStruct) -> ModelStruct:
    """The terminal structure: fibrations are the right complement of W_c."""
    report = recognition_report(rel)
    if not report.ok:
        bad = report.witness_check()
        raise RecognitionFailed(bad.name, bad.witness)
    fib = right_complement(compute_Wc(rel))
    cof = left_complement(fib & rel.weq)
    return _verified(rel, cof, fib, "terminal construction")


def _require_valid_centers(rel: RelStruct, chi: CenterMap) -> None:
    report = validate_centers(rel, chi)
    if not report.ok:
        raise InvalidCenters(report)


def construct_from_centers(rel: RelStruct, chi: CenterMap) -> ModelStruct:
    """The center structure: fibrations are the right complement of W_c^chi."""
    _require_valid_centers(rel, chi)
    fib = right_complement(compute_Wc_chi(rel, chi))
    cof = left_complement(fib & rel.weq)
    return _verified(rel, cof, fib, "center construction")


def construct_from_centers_dual(rel: RelStruct, chi: CenterMap) -> ModelStruct:
    """The dual center structure: cofibrations are the left complement of Q_chi."""
    _require_valid_centers(rel, chi)
    cof = left_complement(compute_Qchi(rel, chi))
    fib = right_complement(cof & rel.weq)
    return _verified(rel, cof, fib, "dual center construction")


def construct_genMC(rel: RelStruct, j: MorphClass) -> ModelStruct:
    """Minimal structure whose acyclic cofibrations contain a given J <= W.

    Fibrations are J's right complement; the two lifting-closure hypotheses
    are checked exhaustively and reported with a witness on failure.  The
    smallness hypothesis holds automatically at finite scale and is not
    checked.
    """
    extra = j.mask & ~rel.weq.mask
    if extra:
        raise JNotInW(rel.lattice.pairs[next(iter_bits(extra))])
    s2 = check_s2of3(rel)
    if not s2.ok:
        raise S2OF3Failed(s2.witness)
    fib = right_complement(j)
    cof = left_complement(rel.weq & fib)
    bad = right_complement(cof).mask & ~rel.weq.mask
    if bad:
        raise HypothesisFailed(2, rel.lattice.pairs[next(iter_bits(bad))])
    bad = left_complement(fib).mask & ~rel.weq.mask
    if bad:
        raise HypothesisFailed(3, rel.lattice.pairs[next(iter_bits(bad))])
    return _verified(rel, cof, fib, "generated construction")


def construct_genMC_dual(rel: RelStruct, q: MorphClass) -> ModelStruct:
    """Dual generated structure: cofibrations are the left complement of Q <= W."""
    extra = q.mask & ~rel.weq.mask
    if extra:
        raise JNotInW(rel.lattice.pairs[next(iter_bits(extra))])
    s2 = check_s2of3(rel)
    if not s2.ok:
        raise S2OF3Failed(s2.witness)
    cof = left_complement(q)
    fib = right_complement(rel.weq & cof)
    bad = left_complement(fib).mask & ~rel.weq.mask
    if bad:
        raise HypothesisFailed(2, rel.lattice.pairs[next(iter_bits(bad))])
    bad = right_complement(cof).mask & ~rel.weq.mask
    if bad:
        raise HypothesisFailed(3, rel.lattice.pairs[next(iter_bits(bad))])
    return _verified(rel, cof, fib, "dual generated construction")


def construct_newcofib(m: ModelStruct, chi: CenterMap) -> ModelStruct:
    """Enlarge the acyclic cofibrations of a verified structure by J_chi.

    The identity functor is left Quillen from the input to the result;
    this containment is asserted.
    """
    _require_verified(m)
    _require_valid_centers(m.rel, chi)
    j = m.acyclic_cofibrations() | compute_Jchi(m.rel, chi)
    out = construct_genMC(m.rel, j)
    if not m.cof <= out.cof:
        raise InternalCheckFailed("enlarged structure does not contain the old cofibrations")
    return out


def construct_newfib_dual(m: ModelStruct, chi: CenterMap) -> ModelStruct:
    """Dually enlarge the acyclic fibrations of a verified structure by Q_chi."""
    _require_verified(m)
    _require_valid_centers(m.rel, chi)
    q = m.acyclic_fibrations() | compute_Qchi(m.rel, chi)
    out = construct_genMC_dual(m.rel, q)
    if not m.fib <= out.fib:
        raise InternalCheckFailed("enlarged structure does not contain the old fibrations")
    return out


def cofibrant_objects(m: ModelStruct) -> tuple[int, ...]:
    _require_verified(m)
    lat = m.lattice
    return tuple(a for a in range(lat.n) if (lat.bottom, a) in m.cof)


def fibrant_objects(m: ModelStruct) -> tuple[int, ...]:
    _require_verified(m)
    lat = m.lattice
    return tuple(a for a in range(lat.n) if (a, lat.top) in m.fib)


def extract_centers(m: ModelStruct) -> CenterMap:
    """The center map of a verified structure: each component's unique
    cofibrant-and-fibrant object."""
    _require_verified(m)
    cf = set(cofibrant_objects(m)) & set(fibrant_objects(m))
    chi = [0] * m.lattice.n
    for comp in m.rel.components:
        centers = [x for x in comp if x in cf]
        if len(centers) != 1:
            raise InternalCheckFailed(
                f"component {comp} has {len(centers)} cofibrant-fibrant objects"
            )
        for x in comp:
            chi[x] = centers[0]
    out = CenterMap(tuple(chi))
    report = validate_centers(m.rel, out)
    if not report.ok:
        bad = report.witness_check()
        raise InternalCheckFailed(f"extracted centers invalid at {bad.name}, witness {bad.witness}")
    return out


def replacement(m: ModelStruct, a: int, side: str) -> int:
    """Cofibrant or fibrant replacement of an object.

    The unique middle of factoring bottom -> a as a cofibration followed by
    an acyclic fibration (resp. a -> top as an acyclic cofibration followed
    by a fibration).  The replacement is one zigzag step from a and one
    from a's center; both memberships are asserted.
    """
    _require_verified(m)
    lat = m.lattice
    chi = extract_centers(m)
    if side == "cofibrant":
        middles = factorize(m.cof, m.acyclic_fibrations(), Pair(lat.bottom, a))
        if len(middles) != 1:
            raise InternalCheckFailed(f"cofibrant replacement of {lat.name(a)} not unique: {middles}")
        g = middles[0]
        if (g, a) not in m.acyclic_fibrations() or (g, chi.chi[a]) not in m.acyclic_cofibrations():
            raise InternalCheckFailed("cofibrant replacement zigzag broken")
        return g
    if side == "fibrant":
        middles = factorize(m.acyclic_cofibrations(), m.fib, Pair(a, lat.top))
        if len(middles) != 1:
            raise InternalCheckFailed(f"fibrant replacement of {lat.name(a)} not unique: {middles}")
        g = middles[0]
        if (a, g) not in m.acyclic_cofibrations() or (chi.chi[a], g) not in m.acyclic_fibrations():
            raise InternalCheckFailed("fibrant replacement zigzag broken")
        return g
    raise InvalidInput(f"side must be 'cofibrant' or 'fibrant', got {side!r}")


def factor_via_centers(rel: RelStruct, chi: CenterMap, f: Pair) -> int:
    """Middle of the canonical W_c^chi-then-W_f^chi factorization of a
    weak equivalence: dst ^ (src v chi(src))."""
    if f not in rel.weq:
        raise NotWeakEquivalence(f)
    _require_valid_centers(rel, chi)
    lat = rel.lattice
    m = lat.meet(f.dst, lat.join(f.src, chi.chi[f.src]))
    wc = compute_Wc_chi(rel, chi)
    wf = compute_Wf_chi(rel, chi)
    first, second = Pair(f.src, m), Pair(m, f.dst)
    if first not in wc or second not in wf:
        raise InternalCheckFailed(f"canonical factorization of {f} escaped its classes")
    if any(not lifts(lat, w, second) for w in wc):
        raise InternalCheckFailed(f"second factor of {f} not right-lifting against W_c^chi")
    return m


def generating_sets(m: ModelStruct) -> tuple[MorphClass, MorphClass]:
    """Generating (cofibrations, acyclic cofibrations): the classes verbatim.

    At finite scale a verified structure is generated by all of its
    cofibrations, with the right complements recovering the fibration data;
    both complement identities are asserted.
    """
    _require_verified(m)
    if right_complement(m.acyclic_cofibrations()).mask != m.fib.mask:
        raise InternalCheckFailed("fib is not the right complement of the acyclic cofibrations")
    if right_complement(m.cof).mask != m.acyclic_fibrations().mask:
        raise InternalCheckFailed("acyclic fibrations are not the right complement of cof")
    return (m.cof, m.acyclic_cofibrations())
