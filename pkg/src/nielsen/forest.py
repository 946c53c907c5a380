"""Rooted spanning subforests of the integer Nielsen graphs N_n(Z), n >= 2.

The forest is a disjoint union of trees, one per sign pattern: a component
is indexed by disjoint sets ``neg`` (coordinates forced negative) and
``zero`` (coordinates forced zero, at most n-2 of them), all remaining
coordinates positive. Its vertices are the gcd-1 tuples with that sign
pattern; the only excluded generating tuples are the 2n signed standard
basis vectors. Negating the ``neg`` coordinates maps a component onto the
all-positive component with the same zero set, so edge rules are stated on
that positive image and transported back through the bijection.

In the positive image the candidate edges at a vertex are the addition
moves x_i <- x_i + x_j with i, j outside the zero set (j in the zero set
gives a loop, i in the zero set leaves the component). An edge INTO a
vertex z exists for each ordered pair (i, j) with z_i > z_j; the deletion
rules keep exactly one of them:

* the distinguished pair (i1, j1) -- the lexicographically least ordered
  pair avoiding the zero set -- and its transpose (j1, i1) are always kept;
* any other edge into z is deleted when a (i1, j1)- or (j1, i1)-edge into z
  exists (reasons ``dup_of_12`` / ``dup_of_21``);
* otherwise the lexicographically largest (i, j) into z survives and the
  rest are deleted (reason ``lex_loser``). Two distinct edges into z never
  share (i, j), so the source never has to break ties.

Since every in-edge source of an in-window target is itself in-window, all
decisions here are exact, never approximations; in particular the forest
degree of every in-window vertex is exactly computable even when some kept
edges point outside the window.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, product as iproduct

from .errors import ResourceCapError, UsageError, VerificationError
from .moves import Move, R

Reason = str  # 'kept' | 'dup_of_12' | 'dup_of_21' | 'lex_loser' | 'none'


@dataclass(frozen=True)
class ForestSpec:
    """One component: sign pattern (1-based coordinate sets) plus a window."""

    n: int
    neg: frozenset[int]
    zero: frozenset[int]
    window: int

    def __post_init__(self):
        if self.n < 2:
            raise UsageError("forest components need n >= 2")
        coords = set(range(1, self.n + 1))
        if not (set(self.neg) <= coords and set(self.zero) <= coords):
            raise UsageError("neg/zero sets must contain coordinates in 1..n")
        if self.neg & self.zero:
            raise UsageError("neg and zero sets must be disjoint")
        if len(self.zero) > self.n - 2:
            raise UsageError(f"at most n-2 = {self.n - 2} zero coordinates allowed")
        if self.window < 1:
            raise UsageError("window must be >= 1")

    def pattern(self) -> str:
        return "".join("-" if k in self.neg else "0" if k in self.zero else "+" for k in range(1, self.n + 1))

    def root(self) -> tuple[int, ...]:
        return tuple(-1 if k in self.neg else 0 if k in self.zero else 1 for k in range(1, self.n + 1))

    def distinguished_pair(self) -> tuple[int, int]:
        free = [k for k in range(1, self.n + 1) if k not in self.zero]
        return free[0], free[1]

    def to_image(self, state: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(-x if k + 1 in self.neg else x for k, x in enumerate(state))

    from_image = to_image  # negation is an involution

    def contains(self, state: tuple[int, ...]) -> bool:
        if len(state) != self.n or math.gcd(*state) != 1:
            return False
        for k, x in enumerate(state, start=1):
            want = -1 if k in self.neg else 0 if k in self.zero else 1
            if (x > 0) - (x < 0) != want:
                return False
        return True

    def ambient_move(self, i: int, j: int) -> Move:
        """The N_n(Z) move realizing image edge (i, j) on real coordinates."""
        sign = 1 if ((i in self.neg) == (j in self.neg)) else -1
        return R(i, j, sign)


def pattern_spec(pattern: str, window: int) -> ForestSpec:
    """Parse a sign pattern like '+-0' into a ForestSpec."""
    if not pattern or any(c not in "+-0" for c in pattern):
        raise UsageError(f"pattern {pattern!r} must consist of '+', '-', '0'")
    neg = frozenset(k for k, c in enumerate(pattern, start=1) if c == "-")
    zero = frozenset(k for k, c in enumerate(pattern, start=1) if c == "0")
    return ForestSpec(n=len(pattern), neg=neg, zero=zero, window=window)


def component_of(state: tuple[int, ...]) -> tuple[frozenset[int], frozenset[int]] | None:
    """Sign pattern (neg, zero) of a gcd-1 tuple; None for the excluded
    signed standard basis vectors."""
    n = len(state)
    if n == 0:
        raise UsageError("component_of requires a nonempty tuple")
    for x in state:
        if not isinstance(x, int) or isinstance(x, bool):
            raise UsageError("component_of operates on integer tuples")
    if math.gcd(*state) != 1:
        raise UsageError(f"gcd of {state!r} is not 1: not a vertex of N_n(Z)")
    neg = frozenset(k for k, x in enumerate(state, start=1) if x < 0)
    zero = frozenset(k for k, x in enumerate(state, start=1) if x == 0)
    if len(zero) > n - 2:
        return None
    return neg, zero


@dataclass(frozen=True)
class ForestEdge:
    source: tuple[int, ...]  # real coordinates
    i: int
    j: int
    in_forest: bool
    reason: Reason


def _keeper(spec: ForestSpec, z_img: tuple[int, ...]) -> tuple[int, int] | None:
    """The one in-edge of an image vertex that the rules keep, or None at a root."""
    free = [k for k in range(1, spec.n + 1) if k not in spec.zero]
    ins = [(i, j) for i in free for j in free if i != j and z_img[i - 1] > z_img[j - 1]]
    if not ins:
        return None
    i1, j1 = spec.distinguished_pair()
    if (i1, j1) in ins:
        return (i1, j1)
    if (j1, i1) in ins:
        return (j1, i1)
    return max(ins)


def edge_status(spec: ForestSpec, source: tuple[int, ...], i: int, j: int) -> ForestEdge:
    """Kept/deleted status of the candidate image edge (i, j) at a real vertex.

    ``(i, j)`` is stated on the positive image; ``spec.ambient_move(i, j)``
    names the corresponding N_n(Z) move on real coordinates.
    """
    if not (1 <= i <= spec.n and 1 <= j <= spec.n) or i == j:
        raise UsageError(f"edge indices ({i},{j}) invalid for n={spec.n}")
    if not spec.contains(source):
        raise UsageError(f"{source!r} is not a vertex of component {spec.pattern()}")
    if j in spec.zero:
        # x_i <- x_i + 0 fixes the tuple: a loop, structurally excluded
        return ForestEdge(source, i, j, False, "none")
    if i in spec.zero:
        raise UsageError(
            f"edge ({i},{j}) leaves component {spec.pattern()}: endpoints lie in different components"
        )
    x = spec.to_image(source)
    z = x[: i - 1] + (x[i - 1] + x[j - 1],) + x[i:]
    keep = _keeper(spec, z)
    if keep == (i, j):
        return ForestEdge(source, i, j, True, "kept")
    i1, j1 = spec.distinguished_pair()
    if keep == (i1, j1):
        return ForestEdge(source, i, j, False, "dup_of_12")
    if keep == (j1, i1):
        return ForestEdge(source, i, j, False, "dup_of_21")
    return ForestEdge(source, i, j, False, "lex_loser")


def _image_parent(spec: ForestSpec, z_img: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, int]] | None:
    keep = _keeper(spec, z_img)
    if keep is None:
        return None
    i, j = keep
    src = z_img[: i - 1] + (z_img[i - 1] - z_img[j - 1],) + z_img[i:]
    return src, keep


def parent_edge(spec: ForestSpec, state: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, int]] | None:
    """Kept in-edge of a real vertex: (parent real tuple, image (i, j)); None at the root."""
    if not spec.contains(state):
        raise UsageError(f"{state!r} is not a vertex of component {spec.pattern()}")
    hit = _image_parent(spec, spec.to_image(state))
    if hit is None:
        return None
    src, pair = hit
    return spec.from_image(src), pair


def kept_out_edges(spec: ForestSpec, state: tuple[int, ...]) -> list[ForestEdge]:
    """All kept forest edges out of a real vertex (targets may exceed the window)."""
    out = []
    for i in range(1, spec.n + 1):
        if i in spec.zero:
            continue
        for j in range(1, spec.n + 1):
            if j == i or j in spec.zero:
                continue
            e = edge_status(spec, state, i, j)
            if e.in_forest:
                out.append(e)
    return out


def forest_degree(spec: ForestSpec, state: tuple[int, ...]) -> int:
    """Exact forest degree: one parent edge (off the root) plus kept out-edges."""
    parent = parent_edge(spec, state)
    return len(kept_out_edges(spec, state)) + (0 if parent is None else 1)


@dataclass
class ForestReport:
    n: int
    window: int
    acyclic: bool
    coverage_ok: bool
    descent_ok: bool
    min_interior_degree: int | None
    root_degrees: dict[str, int]
    components_checked: int
    vertices_checked: int

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "window": self.window,
            "acyclic": self.acyclic,
            "coverage_ok": self.coverage_ok,
            "descent_ok": self.descent_ok,
            "min_interior_degree": self.min_interior_degree,
            "root_degrees": dict(sorted(self.root_degrees.items())),
            "components_checked": self.components_checked,
            "vertices_checked": self.vertices_checked,
        }


def _zero_sets(n: int):
    coords = list(range(1, n + 1))
    for size in range(0, n - 1):
        yield from (frozenset(c) for c in combinations(coords, size))


def _image_vertices(n: int, zero: frozenset[int], window: int):
    free = [k for k in range(1, n + 1) if k not in zero]
    for vals in iproduct(range(1, window + 1), repeat=len(free)):
        if math.gcd(*vals) != 1:
            continue
        x = [0] * n
        for k, v in zip(free, vals):
            x[k - 1] = v
        yield tuple(x)


def verify_forest(n: int, window: int, state_cap: int = 2_000_000) -> ForestReport:
    """Exhaustive window verification of the forest construction.

    Over all vertices with max |coordinate| <= window this checks, per
    component: (a) the kept-edge graph is acyclic, (b) every non-root vertex
    has forest degree >= 3 and the root has none of its in-edges kept,
    (c) every gcd-1 tuple in the window belongs to a component or is a
    signed standard basis vector, (d) iterating the parent step strictly
    decreases the coordinate sum until the root is reached.

    Edge rules depend only on the zero set, and sign components are carried
    onto the all-positive image by construction, so (a), (b), (d) are
    verified once per zero set on image vertices.
    """
    if n not in (2, 3):
        raise UsageError("verify_forest supports n in {2, 3}")
    if window < 2:
        raise UsageError("window too small to contain any interior vertex; need window >= 2")
    if (2 * window + 1) ** n > state_cap:
        raise ResourceCapError(f"window scan of {(2 * window + 1) ** n} states exceeds cap {state_cap}")

    acyclic = True
    descent_ok = True
    min_interior: int | None = None
    vertices_checked = 0

    per_zero_root_degree: dict[frozenset[int], int] = {}
    for zero in _zero_sets(n):
        spec = ForestSpec(n=n, neg=frozenset(), zero=zero, window=window)
        root = spec.root()
        verts = list(_image_vertices(n, zero, window))
        vertices_checked += len(verts)
        pos = {v: k for k, v in enumerate(verts)}

        # exact degrees and unique parents
        parent_uf = list(range(len(verts)))

        def find(v):
            while parent_uf[v] != v:
                parent_uf[v] = parent_uf[parent_uf[v]]
                v = parent_uf[v]
            return v

        for v in verts:
            hit = _image_parent(spec, v)
            if v == root:
                if hit is not None:
                    raise VerificationError(f"root {root} of {spec.pattern()} has a kept in-edge")
            else:
                if hit is None:
                    raise VerificationError(f"non-root {v} in {spec.pattern()} has no kept in-edge")
                src, _ = hit
                if sum(src) >= sum(v):
                    descent_ok = False
                if src not in pos:
                    raise VerificationError("in-window vertex with out-of-window parent")
                a, b = find(pos[src]), find(pos[v])
                if a == b:
                    acyclic = False
                else:
                    parent_uf[b] = a
                kept_out = sum(
                    1
                    for i in range(1, n + 1)
                    if i not in zero
                    for j in range(1, n + 1)
                    if j != i and j not in zero
                    and _keeper(spec, v[: i - 1] + (v[i - 1] + v[j - 1],) + v[i:]) == (i, j)
                )
                deg = kept_out + 1
                if min_interior is None or deg < min_interior:
                    min_interior = deg
        root_out = sum(
            1
            for i in range(1, n + 1)
            if i not in zero
            for j in range(1, n + 1)
            if j != i and j not in zero
            and _keeper(spec, root[: i - 1] + (root[i - 1] + root[j - 1],) + root[i:]) == (i, j)
        )
        per_zero_root_degree[zero] = root_out

    # descent chains terminate at the root: walk them with memoization
    for zero in _zero_sets(n):
        spec = ForestSpec(n=n, neg=frozenset(), zero=zero, window=window)
        root = spec.root()
        settled: set[tuple[int, ...]] = {root}
        for v in _image_vertices(n, zero, window):
            chain = []
            cur = v
            while cur not in settled:
                chain.append(cur)
                hit = _image_parent(spec, cur)
                if hit is None or sum(hit[0]) >= sum(cur):
                    descent_ok = False
                    break
                cur = hit[0]
            settled.update(chain)

    # coverage over real tuples in the window
    coverage_ok = True
    components_seen: set[tuple[frozenset[int], frozenset[int]]] = set()
    basis = set()
    for k in range(n):
        for s in (1, -1):
            basis.add(tuple(s if p == k else 0 for p in range(n)))
    for x in iproduct(range(-window, window + 1), repeat=n):
        if all(v == 0 for v in x) or math.gcd(*x) != 1:
            continue
        comp = component_of(x)
        if comp is None:
            if x not in basis:
                coverage_ok = False
        else:
            components_seen.add(comp)
            if x in basis:
                coverage_ok = False

    root_degrees = {}
    for neg, zero in sorted(components_seen, key=lambda ab: (sorted(ab[1]), sorted(ab[0]))):
        spec = ForestSpec(n=n, neg=neg, zero=zero, window=window)
        root_degrees[spec.pattern()] = per_zero_root_degree[zero]

    return ForestReport(
        n=n,
        window=window,
        acyclic=acyclic,
        coverage_ok=coverage_ok,
        descent_ok=descent_ok,
        min_interior_degree=min_interior,
        root_degrees=root_degrees,
        components_checked=len(components_seen),
        vertices_checked=vertices_checked,
    )


def component_dot(spec: ForestSpec) -> str:
    """DOT rendering of one component restricted to the window, root doubled."""
    from . import __version__

    img_verts = list(_image_vertices(spec.n, spec.zero, spec.window))
    verts = sorted(spec.from_image(v) for v in img_verts)
    root = spec.root()
    lines = ["graph forest_component {"]
    lines.append(f"  // pattern: {spec.pattern()}, window: {spec.window}, n: {spec.n}")
    lines.append(f"  // tool: nielsen {__version__}")

    def node_id(v):
        return '"' + ",".join(str(x) for x in v) + '"'

    for v in verts:
        extra = ", peripheries=2" if v == root else ""
        lines.append(f'  {node_id(v)} [label="{tuple(v)}"{extra}];')
    vert_set = set(verts)
    for v in verts:
        for e in kept_out_edges(spec, v):
            img = spec.to_image(v)
            tgt_img = img[: e.i - 1] + (img[e.i - 1] + img[e.j - 1],) + img[e.i :]
            tgt = spec.from_image(tgt_img)
            if tgt in vert_set:
                lines.append(f'  {node_id(v)} -- {node_id(tgt)} [label="{spec.ambient_move(e.i, e.j).text()}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
