"""Choices of centers: validation, search, enumeration, derived classes.

A center map collapses each weak-equivalence component onto a single
element whose comparison square with every component member lies in W.
Existence of such a map (together with strong 2-of-3) is exactly what the
recognition decision detects, so the search here is the second, center-based
route to the same answer.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classes import MorphClass
from .errors import InternalCheckFailed, S2OF3Failed
from .lattice import Pair, iter_bits
from .relative import RelStruct, check_s2of3
from .report import Check, Report


@dataclass(frozen=True)
class CenterMap:
    """A total element-to-element map; chi[a] is the center of a."""

    chi: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.chi[a]


def center_square(rel: RelStruct, a: int, c: int) -> tuple[Pair, Pair, Pair, Pair]:
    """The four boundary morphisms of the comparison square of a with c."""
    lat = rel.lattice
    m = lat.meet(a, c)
    j = lat.join(a, c)
    return (Pair(m, c), Pair(m, a), Pair(a, j), Pair(c, j))


def _square_in_weq(rel: RelStruct, a: int, c: int) -> bool:
    return all(p in rel.weq for p in center_square(rel, a, c))


def validate_centers(rel: RelStruct, chi: CenterMap) -> Report:
    """Check every defining property of a choice of centers, least witness each."""
    lat = rel.lattice
    n = lat.n
    well_formed = len(chi.chi) == n and all(0 <= v < n for v in chi.chi)
    checks = [Check("well_formed", well_formed)]
    if not well_formed:
        return Report(tuple(checks))

    witness = None
    for a in range(n):
        for b in iter_bits(lat.up_mask(a)):
            if not lat.leq(chi.chi[a], chi.chi[b]):
                witness = (a, b)
                break
        if witness:
            break
    checks.append(Check("monotone", witness is None, witness))

    witness = None
    for comp in rel.components:
        vals = {chi.chi[x] for x in comp}
        if len(vals) > 1:
            witness = tuple(comp)
            break
    checks.append(Check("constant_on_components", witness is None, witness))

    witness = None
    for a in range(n):
        if rel.component_of[chi.chi[a]] != rel.component_of[a]:
            witness = (a, chi.chi[a])
            break
    checks.append(Check("center_in_component", witness is None, witness))

    witness = None
    for a in range(n):
        for p in center_square(rel, a, chi.chi[a]):
            if p not in rel.weq:
                witness = (a, p)
                break
        if witness:
            break
    checks.append(Check("squares_in_weq", witness is None, witness))

    witness = None
    for a in range(n):
        if chi.chi[chi.chi[a]] != chi.chi[a]:
            witness = (a,)
            break
    checks.append(Check("idempotent", witness is None, witness))
    return Report(tuple(checks))


def _component_candidates(rel: RelStruct) -> list[list[int]]:
    """Per component: the elements whose square with every member lies in W."""
    out = []
    for comp in rel.components:
        out.append([c for c in comp if all(_square_in_weq(rel, a, c) for a in comp)])
    return out


def _component_relation(rel: RelStruct) -> list[list[bool]]:
    """rel[i][j]: some element of component i is <= some element of component j."""
    lat = rel.lattice
    k = len(rel.components)
    masks = [0] * k
    for i, comp in enumerate(rel.components):
        for x in comp:
            masks[i] |= 1 << x
    up_of_comp = [0] * k
    for i, comp in enumerate(rel.components):
        for x in comp:
            up_of_comp[i] |= lat.up_mask(x)
    return [[up_of_comp[i] & masks[j] != 0 for j in range(k)] for i in range(k)]


def _search(rel: RelStruct):
    """Yield valid center maps in lexicographic order of the chi tuple.

    Components are processed in first-element order with candidates
    ascending, which makes depth-first emission order coincide with
    lexicographic order on chi (components are listed by least element and
    every prefix of element indices is covered by a prefix of components).
    """
    candidates = _component_candidates(rel)
    crel = _component_relation(rel)
    lat = rel.lattice
    k = len(rel.components)
    assigned: list[int | None] = [None] * k

    def consistent(i: int, c: int) -> bool:
        for j in range(k):
            d = assigned[j]
            if d is None:
                continue
            if crel[j][i] and not lat.leq(d, c):
                return False
            if crel[i][j] and not lat.leq(c, d):
                return False
        return True

    def extend(i: int):
        if i == k:
            chi = [0] * lat.n
            for ci, comp in enumerate(rel.components):
                for x in comp:
                    chi[x] = assigned[ci]
            yield CenterMap(tuple(chi))
            return
        for c in candidates[i]:
            if consistent(i, c):
                assigned[i] = c
                yield from extend(i + 1)
                assigned[i] = None

    yield from extend(0)


def _require_s2of3(rel: RelStruct) -> None:
    rep = check_s2of3(rel)
    if not rep.ok:
        raise S2OF3Failed(rep.witness)


def find_centers(rel: RelStruct) -> CenterMap | None:
    """The lexicographically least valid center map, or None."""
    _require_s2of3(rel)
    for chi in _search(rel):
        return chi
    return None


@dataclass(frozen=True)
class CenterEnumeration:
    maps: tuple[CenterMap, ...]
    truncated: bool


def enumerate_centers(rel: RelStruct, limit: int = 1024) -> CenterEnumeration:
    """Up to `limit` valid center maps, lexicographically ordered."""
    _require_s2of3(rel)
    maps = []
    truncated = False
    for chi in _search(rel):
        if len(maps) == limit:
            truncated = True
            break
        maps.append(chi)
    return CenterEnumeration(tuple(maps), truncated)


def compute_Jchi(rel: RelStruct, chi: CenterMap) -> MorphClass:
    """W-morphisms whose codomain sits below its center."""
    lat = rel.lattice
    mask = 0
    for i in iter_bits(rel.weq.mask):
        b = lat.pairs[i].dst
        if lat.leq(b, chi.chi[b]):
            mask |= 1 << i
    return MorphClass(lat, mask)


def compute_Qchi(rel: RelStruct, chi: CenterMap) -> MorphClass:
    """W-morphisms whose center sits below the domain."""
    lat = rel.lattice
    mask = 0
    for i in iter_bits(rel.weq.mask):
        a = lat.pairs[i].src
        if lat.leq(chi.chi[a], a):
            mask |= 1 << i
    return MorphClass(lat, mask)


def compute_Wc_chi(rel: RelStruct, chi: CenterMap) -> MorphClass:
    """W-morphisms all of whose nondegenerate pushouts stay in W and avoid Q_chi."""
    lat = rel.lattice
    qmask = compute_Qchi(rel, chi).mask
    idx = lat.pair_index
    mask = 0
    for i in iter_bits(rel.weq.mask):
        a, b = lat.pairs[i]
        good = True
        for c in iter_bits(lat.up_mask(a)):
            j = lat.join(b, c)
            if j == c:
                continue
            t = idx.get(Pair(c, j))
            if (rel.weq.mask >> t) & 1 == 0 or (qmask >> t) & 1:
                good = False
                break
        if good:
            mask |= 1 << i
    out = MorphClass(lat, mask)
    _require_subcat(out, "W_c^chi")
    return out


def compute_Wf_chi(rel: RelStruct, chi: CenterMap) -> MorphClass:
    """W-morphisms all of whose nondegenerate pullbacks stay in W and avoid J_chi."""
    lat = rel.lattice
    jmask = compute_Jchi(rel, chi).mask
    idx = lat.pair_index
    mask = 0
    for i in iter_bits(rel.weq.mask):
        x, y = lat.pairs[i]
        good = True
        for z in iter_bits(lat.down_mask(y)):
            m = lat.meet(x, z)
            if m == z:
                continue
            t = idx.get(Pair(m, z))
            if (rel.weq.mask >> t) & 1 == 0 or (jmask >> t) & 1:
                good = False
                break
        if good:
            mask |= 1 << i
    out = MorphClass(lat, mask)
    _require_subcat(out, "W_f^chi")
    return out


def _require_subcat(s: MorphClass, label: str) -> None:
    from .classes import is_composition_closed

    if not s.has_identities():
        raise InternalCheckFailed(f"{label} lost an identity")
    closed = is_composition_closed(s)
    if not closed:
        raise InternalCheckFailed(f"{label} not composition-closed, witness {closed.witness}")


def product_centers(rel: RelStruct, chi1: CenterMap, chi2: CenterMap) -> CenterMap:
    """Pointwise product (meet) of two center maps; always valid again."""
    lat = rel.lattice
    chi = CenterMap(tuple(lat.meet(chi1.chi[a], chi2.chi[a]) for a in range(lat.n)))
    rep = validate_centers(rel, chi)
    if not rep.ok:
        bad = rep.witness_check()
        raise InternalCheckFailed(f"product of centers invalid at {bad.name}, witness {bad.witness}")
    return chi
