"""Deterministic DOT export of decorated Hasse diagrams.

Drawn edges are the covering relations plus any non-identity weak
equivalences.  Weak equivalences carry a "~" label, cofibrations a hooked
tail, fibrations a doubled head; an edge in several classes combines the
attributes.  Node and edge order follow the element order bit-for-bit.
"""

from __future__ import annotations

from .models import ModelStruct
from .relative import RelStruct


def _edge_attrs(in_we: bool, in_cof: bool, in_fib: bool) -> str:
    attrs = []
    if in_cof:
        attrs.append(('arrowtail', 'hook'))
        attrs.append(('dir', 'both'))
    if in_fib:
        attrs.append(('arrowhead', 'normalnormal'))
    if in_we:
        attrs.append(('label', '~'))
    if not attrs:
        return ""
    inner = ", ".join(f'{k}="{v}"' for k, v in sorted(attrs))
    return f" [{inner}]"


def export_dot(target: RelStruct | ModelStruct) -> str:
    if isinstance(target, ModelStruct):
        rel = target.rel
        cof, fib = target.cof, target.fib
    else:
        rel = target
        cof = fib = None
    lat = rel.lattice
    edges = set(lat.cover_pairs())
    edges.update(rel.weq.nonidentity_pairs())
    lines = ["digraph hasse {", "  rankdir=BT;"]
    for name in lat.names:
        lines.append(f'  "{name}";')
    for p in sorted(edges):
        attrs = _edge_attrs(
            p in rel.weq,
            cof is not None and p in cof,
            fib is not None and p in fib,
        )
        a, b = lat.pair_names(p)
        lines.append(f'  "{a}" -> "{b}"{attrs};')
    lines.append("}")
    return "\n".join(lines) + "\n"
