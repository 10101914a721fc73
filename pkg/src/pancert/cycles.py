"""Constructive cycle synthesis: a cycle of every length 3..24k through every vertex.

The pipeline for lengths beyond 6 runs in three steps:

1. ``path_template(l)`` gives a properly colored path on l in 3..8 label
   vertices whose color sequence starts with 1, ends with a color other than
   2, and whose final label lies in class 2. Translating all labels by any x
   preserves colors, since colors depend only on label differences.
2. ``proper_cycle(x, r, q, k)`` splits q into template-sized parts, places one
   translated template per layer, and closes segments with color-2 edges,
   yielding a properly colored q-cycle in the auxiliary graph through (x, r).
3. ``lift(cycle, i, m)`` expands each auxiliary vertex into a 2- or 3-vertex
   path inside its small triangle, entering at the previous edge color and
   leaving at the next. Choosing m - 2q long paths gives any length in
   [2q, 3q]; when the anchor port i is neither color at the start vertex, the
   start vertex takes the long path (its middle port is then exactly i), which
   forces m >= 2q + 1.

``cycle_through`` dispatches: explicit constructions for m <= 6, otherwise
q = ceil(m/3), which satisfies 2q < m <= 3q and q <= 8k for every m in 7..24k.
"""

from __future__ import annotations

from dataclasses import dataclass

from pancert.construction import PORTS, AuxVertex, PortedVertex
from pancert.group import PARTITION, classify

_A, _B, _C = 0b100, 0b010, 0b001

# Label rows for the templates on 3..8 vertices, anchored at 000. The color
# sequences are not stored: they are recomputed from classify on demand.
_TEMPLATE_LABELS: dict[int, tuple[int, ...]] = {
    3: (0, _C, _B ^ _C),
    4: (0, _C, _B, _B ^ _C),
    5: (0, _C, _B, _B ^ _C, _A ^ _B ^ _C),
    6: (0, _C, _B, _A, _B ^ _C, _A ^ _B ^ _C),
    7: (0, _C, _B, _B ^ _C, _A, _A ^ _C, _A ^ _B ^ _C),
    8: (0, _C, _B, _B ^ _C, _A, _A ^ _C, _A ^ _B, _A ^ _B ^ _C),
}

# (a, b) choices for the 6-cycle construction, one row per port; a is in P_i so
# the closing edge stays at port i.
_SIX_CYCLE_AB: dict[int, tuple[int, int]] = {
    0: (0b010, 0b001),
    1: (0b001, 0b010),
    2: (0b011, 0b001),
}


@dataclass(frozen=True)
class PathTemplate:
    length: int
    labels: tuple[int, ...]
    colors: tuple[int, ...]


@dataclass(frozen=True)
class ColoredAuxCycle:
    """Auxiliary cycle X_1..X_q; colors[j] belongs to the edge X_{j+1} X_{j+2},
    cyclically, so colors[-1] is the color of the closing edge X_q X_1."""

    vertices: tuple[AuxVertex, ...]
    colors: tuple[int, ...]

    @property
    def q(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class CycleCertificate:
    """Evidence that ``target`` lies on an m-cycle: the cycle itself."""

    target: PortedVertex
    m: int
    vertices: tuple[PortedVertex, ...]


def path_template(length: int) -> PathTemplate:
    """The template on ``length`` vertices with colors derived from label sums."""
    if length not in _TEMPLATE_LABELS:
        raise ValueError(f"template length must be in 3..8, got {length!r}")
    labels = _TEMPLATE_LABELS[length]
    colors = tuple(classify(labels[i] ^ labels[i + 1]) for i in range(length - 1))
    return PathTemplate(length=length, labels=labels, colors=colors)


def decompose(q: int) -> tuple[int, ...]:
    """Split q into ceil(q/8) parts from {3..8}: greedy 8s with a repaired tail."""
    if not isinstance(q, int) or isinstance(q, bool) or q < 3:
        raise ValueError(f"q must be an integer >= 3, got {q!r}")
    s = -(-q // 8)
    parts = [8] * (s - 1)
    rem = q - 8 * (s - 1)
    if rem >= 3:
        parts.append(rem)
    else:
        # rem is 1 or 2: shrink the previous 8 to 6 or 7 and close with a 3
        parts[-1] = 5 + rem
        parts.append(3)
    return tuple(parts)


def proper_cycle(x: int, r: int, q: int, k: int) -> ColoredAuxCycle:
    """A properly colored q-cycle in the auxiliary graph through (x, r).

    Each part of decompose(q) contributes one translated template placed in its
    own layer: layer r first, then the smallest remaining layer indices. Segment
    boundaries get color 2, which clashes with neither the final template color
    (never 2) nor the initial one (always 1). The closing label difference is
    the final template label, which lies in class 2.
    """
    if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x <= 7:
        raise ValueError(f"label out of range 0..7: {x!r}")
    if not 1 <= r <= k:
        raise ValueError(f"layer out of range 1..{k}: {r}")
    if not isinstance(q, int) or isinstance(q, bool) or not 3 <= q <= 8 * k:
        raise ValueError(f"length out of range 3..{8 * k}: {q!r}")
    parts = decompose(q)
    others = [lay for lay in range(1, k + 1) if lay != r]
    layers = [r] + others[: len(parts) - 1]
    vertices: list[AuxVertex] = []
    colors: list[int] = []
    for part, layer in zip(parts, layers):
        template = path_template(part)
        vertices.extend(AuxVertex(x ^ lab, layer) for lab in template.labels)
        colors.extend(template.colors)
        colors.append(2)  # joining edge: label difference is in class 2
    return ColoredAuxCycle(vertices=tuple(vertices), colors=tuple(colors))


def lift(cycle: ColoredAuxCycle, i: int, m: int) -> CycleCertificate:
    """Expand a properly colored q-cycle into an m-cycle through port i of X_1.

    Vertex X_j is replaced by a path in its small triangle from port
    colors[j-2] (the incoming edge) to port colors[j-1] (the outgoing one),
    with the third port inserted in between for exactly m - 2q positions.
    Long positions are taken at the lowest indices, except that X_1 goes last
    unless its long path is what puts port i on the cycle.
    """
    q = cycle.q
    colors = cycle.colors
    if q < 3 or len(colors) != q:
        raise ValueError(f"not a colored q-cycle: q={q}, {len(colors)} colors")
    if any(colors[j] == colors[(j + 1) % q] for j in range(q)):
        raise ValueError("cycle is not properly colored")
    if i not in PORTS:
        raise ValueError(f"port out of range: {i!r}")
    if not isinstance(m, int) or isinstance(m, bool) or not 2 * q <= m <= 3 * q:
        raise ValueError(f"length out of range {2 * q}..{3 * q}: {m!r}")
    c_close, c_open = colors[-1], colors[0]
    forced = i not in (c_close, c_open)
    if forced and m == 2 * q:
        raise ValueError(f"length {m} needs a short start vertex, but port {i} forces a long one")

    t = m - 2 * q
    order = list(range(1, q + 1)) if forced else list(range(2, q + 1)) + [1]
    longs = set(order[:t])
    out: list[PortedVertex] = []
    for j in range(1, q + 1):
        aux = cycle.vertices[j - 1]
        c_in = colors[(j - 2) % q]
        c_out = colors[j - 1]
        out.append(PortedVertex(aux.label, c_in, aux.layer))
        if j in longs:
            out.append(PortedVertex(aux.label, 3 - c_in - c_out, aux.layer))
        out.append(PortedVertex(aux.label, c_out, aux.layer))
    start = cycle.vertices[0]
    return CycleCertificate(
        target=PortedVertex(start.label, i, start.layer), m=m, vertices=tuple(out)
    )


def short_cycle(v: PortedVertex, m: int) -> CycleCertificate:
    """A cycle of length m in 3..6 through v, inside v's own layer.

    m=3 is the small triangle. m=4 walks the external 4-cycle with label
    offsets a, b, a, b at v's port, where a, b are the first two elements of
    class i. m=5 detours through port classify(a + b) between the two offset
    labels. m=6 alternates two internal edges with external hops using the
    per-port (a, b) table.
    """
    x, i, r = v.label, v.port, v.layer
    if i not in PORTS:
        raise ValueError(f"port out of range: {i!r}")
    if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x <= 7:
        raise ValueError(f"label out of range 0..7: {x!r}")
    if m == 3:
        cyc = [PortedVertex(x, (i + d) % 3, r) for d in range(3)]
    elif m == 4:
        a, b = PARTITION[i][:2]
        cyc = [
            PortedVertex(x, i, r),
            PortedVertex(x ^ a, i, r),
            PortedVertex(x ^ a ^ b, i, r),
            PortedVertex(x ^ b, i, r),
        ]
    elif m == 5:
        a, b = PARTITION[i][:2]
        j = classify(a ^ b)  # never i: the class is sum-free
        cyc = [
            PortedVertex(x, i, r),
            PortedVertex(x ^ a, i, r),
            PortedVertex(x ^ a, j, r),
            PortedVertex(x ^ b, j, r),
            PortedVertex(x ^ b, i, r),
        ]
    elif m == 6:
        a, b = _SIX_CYCLE_AB[i]
        j, h = classify(b), classify(a ^ b)
        cyc = [
            PortedVertex(x, i, r),
            PortedVertex(x, j, r),
            PortedVertex(x ^ b, j, r),
            PortedVertex(x ^ b, h, r),
            PortedVertex(x ^ a, h, r),
            PortedVertex(x ^ a, i, r),
        ]
    else:
        raise ValueError(f"short cycle length must be in 3..6, got {m!r}")
    return CycleCertificate(target=v, m=m, vertices=tuple(cyc))


def cycle_through(v: PortedVertex, m: int, k: int) -> CycleCertificate:
    """A certificate that v lies on an m-cycle, for any m in 3..24k."""
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    if not 1 <= v.layer <= k:
        raise ValueError(f"layer out of range 1..{k}: {v}")
    if not isinstance(m, int) or isinstance(m, bool) or not 3 <= m <= 24 * k:
        raise ValueError(f"length out of range 3..{24 * k}: {m!r}")
    if m <= 6:
        return short_cycle(v, m)
    q = -(-m // 3)  # then 2q < m <= 3q and q <= 8k
    aux_cycle = proper_cycle(v.label, v.layer, q, k)
    return lift(aux_cycle, v.port, m)
