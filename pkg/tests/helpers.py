"""Shared test utilities: independent oracles and invariant batteries.

The naive_* functions re-derive results from the order relation alone and
deliberately avoid the library's precomputed tables, so tests comparing
against them are genuine dual-route checks.
"""

from __future__ import annotations

from posetmodels import (
    MorphClass,
    ModelStruct,
    Pair,
    check_s2of3,
    cofibrant_objects,
    compute_Jchi,
    compute_Qchi,
    compute_Wc_chi,
    compute_Wf_chi,
    enumerate_centers,
    extract_centers,
    factor_via_centers,
    factorize,
    fibrant_objects,
    generating_sets,
    is_binary_coproduct_closed,
    is_binary_product_closed,
    is_pullback_closed,
    is_pushout_closed,
    lifts,
    pullback_of,
    replacement,
    verify_model,
)


def naive_upper_bounds(lattice, elems):
    return [u for u in range(lattice.n) if all(lattice.leq(e, u) for e in elems)]


def naive_lower_bounds(lattice, elems):
    return [v for v in range(lattice.n) if all(lattice.leq(v, e) for e in elems)]


def naive_join(lattice, a, b):
    """Unique least upper bound by exhaustive scan, or None."""
    uppers = naive_upper_bounds(lattice, [a, b])
    least = [u for u in uppers if all(lattice.leq(u, v) for v in uppers)]
    return least[0] if len(least) == 1 else None


def naive_meet(lattice, a, b):
    lowers = naive_lower_bounds(lattice, [a, b])
    greatest = [v for v in lowers if all(lattice.leq(u, v) for u in lowers)]
    return greatest[0] if len(greatest) == 1 else None


def naive_lifts(lattice, f, g):
    """Square condition straight from the order relation."""
    square = lattice.leq(f[0], g[0]) and lattice.leq(f[1], g[1])
    return (not square) or lattice.leq(f[1], g[0])


def naive_right_complement(s: MorphClass) -> set:
    lat = s.lattice
    members = s.pairs()
    return {g for g in lat.pairs if all(naive_lifts(lat, f, g) for f in members)}


def naive_left_complement(s: MorphClass) -> set:
    lat = s.lattice
    members = s.pairs()
    return {f for f in lat.pairs if all(naive_lifts(lat, f, g) for g in members)}


def compose_close(pairs) -> set:
    pairs = set(pairs)
    changed = True
    while changed:
        changed = False
        for (a, b) in list(pairs):
            for (c, d) in list(pairs):
                if b == c and (a, d) not in pairs:
                    pairs.add((a, d))
                    changed = True
    return pairs


def structure_from_acyclic_cofibs(rel, name_pairs) -> ModelStruct:
    """Rebuild a printed structure from its decorated acyclic cofibrations,
    using WFS maximality for the full classes."""
    from posetmodels import left_complement, right_complement

    a = MorphClass.from_pairs(rel.lattice, name_pairs, add_identities=True)
    fib = right_complement(a)
    cof = left_complement(fib & rel.weq)
    m = ModelStruct(rel, cof, fib)
    verify_model(m)
    return m


def check_model_invariants(m: ModelStruct) -> None:
    """Every per-structure law of the verified world; raises on violation."""
    assert m.verified
    rel, lat = m.rel, m.lattice
    assert check_s2of3(rel).ok

    cofib = set(cofibrant_objects(m))
    fibr = set(fibrant_objects(m))
    for (a, b) in lat.pairs:
        if b in cofib:
            assert (a, b) in m.cof, f"morphism into cofibrant {lat.name(b)} not a cofibration"
        if a in fibr:
            assert (a, b) in m.fib, f"morphism out of fibrant {lat.name(a)} not a fibration"

    chi = extract_centers(m)
    acof = m.acyclic_cofibrations()
    afib = m.acyclic_fibrations()
    for (u, c) in rel.weq:
        if chi.chi[c] == c:
            assert (u, c) in acof, "weak equivalence into a center not an acyclic cofibration"
        if chi.chi[u] == u:
            assert (u, c) in afib, "weak equivalence out of a center not an acyclic fibration"

    for f in lat.pairs:
        assert len(factorize(m.cof, afib, f)) == 1
        assert len(factorize(acof, m.fib, f)) == 1
    cofib_mask = 0
    for x in cofib:
        cofib_mask |= 1 << x
    for a in range(lat.n):
        # the canonical zigzag a <= gamma(a) -> chi(a) is the only one whose
        # middle is cofibrant (degenerate identity legs admit others)
        zigzags = [
            g
            for g in range(lat.n)
            if (cofib_mask >> g) & 1
            and (g, a) in afib
            and lat.leq(g, chi.chi[a])
            and (g, chi.chi[a]) in acof
        ]
        assert zigzags == [replacement(m, a, "cofibrant")], (
            f"zigzag to center of {lat.name(a)} not unique: {zigzags}"
        )
        replacement(m, a, "fibrant")

    assert is_pullback_closed(m.fib).ok and is_binary_product_closed(m.fib).ok
    assert is_pushout_closed(m.cof).ok and is_binary_coproduct_closed(m.cof).ok
    assert is_pullback_closed(afib).ok and is_pushout_closed(acof).ok
    generating_sets(m)


def check_center_invariants(rel, chi) -> None:
    """Every law of a validated center map; raises on violation."""
    lat = rel.lattice
    jchi = compute_Jchi(rel, chi)
    qchi = compute_Qchi(rel, chi)
    wc = compute_Wc_chi(rel, chi)
    wf = compute_Wf_chi(rel, chi)
    for j in jchi:
        for q in qchi:
            assert lifts(lat, j, q)
    assert is_binary_coproduct_closed(jchi).ok
    assert is_binary_product_closed(qchi).ok
    for (a, b) in lat.pairs:
        if chi.chi[a] == chi.chi[b]:
            assert (a, b) in rel.weq
    for w in wc:
        for q in qchi:
            assert lifts(lat, w, q)
    for j in jchi:
        for w in wf:
            assert lifts(lat, j, w)
    assert jchi <= wc and qchi <= wf
    for f in rel.weq:
        mid = factor_via_centers(rel, chi, f)
        u = lat.join(f.src, chi.chi[f.src])
        q = Pair(u, lat.join(f.dst, chi.chi[f.src]))
        assert q in qchi
        assert pullback_of(lat, q, f.dst) == Pair(mid, f.dst)


def check_all_centers(rel, limit: int = 64) -> int:
    n = 0
    for chi in enumerate_centers(rel, limit=limit).maps:
        check_center_invariants(rel, chi)
        n += 1
    return n
