"""BFS enumeration of Nielsen graphs: balls, components, growth, export.

A GraphFragment is a finitely explored piece of N_n(G). Vertices are stored
in canonical order (BFS depth, then byte key); every expanded vertex carries
one dart per element of the fragment's move list, as the index of the target
vertex. Frontier vertices (at the radius, or outside the window) are retained
unexpanded so that boundary counts over interior sets are exact.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from itertools import product as iproduct

import numpy as np

from .errors import ResourceCapError, UsageError
from .groups import Group, State
from .moves import I, Move, R, apply_move, move_inverse, move_set

DEFAULT_VERTEX_CAP = 5_000_000


def state_key(group: Group, state: State) -> bytes:
    """Canonical byte key of a tuple: concatenated element encodings."""
    return b"".join(group.encode_element(g) for g in state)


def state_from_key(group: Group, n: int, key: bytes) -> State:
    out = []
    offset = 0
    for _ in range(n):
        g, offset = group.decode_element(key, offset)
        out.append(g)
    if offset != len(key):
        raise UsageError("trailing bytes in tuple key")
    return tuple(out)


@dataclass
class GraphFragment:
    group: Group
    n: int
    moves: tuple[Move, ...]
    root: State
    radius: int
    window: int | None
    keys: list[bytes] = field(default_factory=list)
    states: list[State] = field(default_factory=list)
    depths: list[int] = field(default_factory=list)
    expanded: list[bool] = field(default_factory=list)
    darts: list[list[int] | None] = field(default_factory=list)
    index: dict[bytes, int] = field(default_factory=dict)
    truncated_at: int | None = None  # least depth where the window blocked expansion

    @property
    def truncated(self) -> bool:
        return self.truncated_at is not None

    def __len__(self) -> int:
        return len(self.keys)

    def vertex_index(self, state: State) -> int:
        key = state_key(self.group, state)
        if key not in self.index:
            raise UsageError(f"tuple {state!r} is not a vertex of this fragment")
        return self.index[key]

    def ball_indices(self, r: int) -> list[int]:
        return [v for v in range(len(self)) if self.depths[v] <= r]

    def validate(self) -> None:
        """Assert dart symmetry and regular out-degree."""
        inv = [self._move_pos(move_inverse(m)) for m in self.moves]
        for v in range(len(self)):
            out = self.darts[v]
            if not self.expanded[v]:
                assert out is None
                continue
            assert out is not None and len(out) == len(self.moves), "irregular out-degree"
            for k, w in enumerate(out):
                assert 0 <= w < len(self), "dart target missing"
                back = self.darts[w]
                if back is not None:
                    assert back[inv[k]] == v, "dart symmetry violated"

    def _move_pos(self, move: Move) -> int:
        return self.moves.index(move)

    # -- serialization ----------------------------------------------------

    def to_dot(self) -> str:
        from . import __version__

        lines = ["graph nielsen {"]
        meta = {
            "group": self.group.spec_json(),
            "n": self.n,
            "root": [self.group.element_to_json(g) for g in self.root],
            "radius": self.radius,
            "window": self.window,
        }
        for k in ("group", "n", "root", "radius", "window"):
            lines.append(f"  // {k}: {json.dumps(meta[k], sort_keys=True)}")
        lines.append(f"  // tool: nielsen {__version__}")
        for v in range(len(self)):
            label = ",".join(str(self.group.element_to_json(g)) for g in self.states[v])
            lines.append(f'  "{self.keys[v].hex()}" [label="({label})"];')
        for v in range(len(self)):
            out = self.darts[v]
            if out is None:
                continue
            for k, w in enumerate(out):
                lines.append(f'  "{self.keys[v].hex()}" -- "{self.keys[w].hex()}" [label="{self.moves[k].text()}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_jsonl(self) -> str:
        lines = []
        for v in range(len(self)):
            out = self.darts[v]
            adj = None
            if out is not None:
                adj = [{"move": self.moves[k].text(), "to": self.keys[w].hex()} for k, w in enumerate(out)]
            lines.append(
                json.dumps(
                    {
                        "v": self.keys[v].hex(),
                        "tuple": [self.group.element_to_json(g) for g in self.states[v]],
                        "depth": self.depths[v],
                        "adj": adj,
                    },
                    sort_keys=True,
                )
            )
        return "\n".join(lines) + "\n"

    def content_equal(self, other: GraphFragment) -> bool:
        """Equality of vertex/dart/depth content (radius and window excluded)."""
        if (self.group != other.group or self.n != other.n or self.moves != other.moves):
            return False
        if self.keys != other.keys or self.depths != other.depths or self.expanded != other.expanded:
            return False
        return self.darts == other.darts


def fragment_from_jsonl(group: Group, n: int, text: str, moves: tuple[Move, ...] | None = None) -> GraphFragment:
    moves = move_set(n) if moves is None else moves
    frag = GraphFragment(group=group, n=n, moves=moves, root=(), radius=0, window=None)
    move_pos = {m.text(): k for k, m in enumerate(moves)}
    rows = [json.loads(line) for line in text.splitlines() if line.strip()]
    for row in rows:
        key = bytes.fromhex(row["v"])
        frag.index[key] = len(frag.keys)
        frag.keys.append(key)
        frag.states.append(tuple(group.element_from_json(e) for e in row["tuple"]))
        frag.depths.append(row["depth"])
        frag.expanded.append(row["adj"] is not None)
        frag.darts.append(None)
    for v, row in enumerate(rows):
        if row["adj"] is None:
            continue
        out = [-1] * len(moves)
        for dart in row["adj"]:
            out[move_pos[dart["move"]]] = frag.index[bytes.fromhex(dart["to"])]
        if any(w < 0 for w in out):
            raise UsageError("expanded vertex with incomplete dart list")
        frag.darts[v] = out
    roots = [v for v in range(len(frag)) if frag.depths[v] == 0]
    if len(roots) != 1:
        raise UsageError("fragment must contain exactly one depth-0 vertex")
    frag.root = frag.states[roots[0]]
    frag.radius = max(frag.depths, default=0)
    return frag


def ball(
    group: Group,
    root: State,
    radius: int,
    window: int | None = None,
    moves: tuple[Move, ...] | None = None,
    cap: int = DEFAULT_VERTEX_CAP,
) -> GraphFragment:
    """BFS ball of the Nielsen graph around a generating tuple.

    Vertices at BFS distance < radius and inside the window are expanded;
    vertices at the radius or outside the window are present but unexpanded.
    Deterministic: layers are processed in byte-key order, so identical
    inputs yield identical fragments.
    """
    if radius < 0:
        raise UsageError("radius must be >= 0")
    n = len(root)
    root = tuple(group.check_element(g) for g in root)
    if not group.is_generating(root):
        raise UsageError(f"root tuple {root!r} does not generate the group")
    if moves is None:
        moves = move_set(n)
    else:
        pool = set(moves)
        if any(move_inverse(m) not in pool for m in moves):
            raise UsageError("custom move list must be closed under inversion")
    in_window = (lambda s: True) if window is None else (
        lambda s: max(group.measure(g) for g in s) <= window
    )
    if window is not None and not in_window(root):
        raise UsageError(f"root lies outside the window {window}")

    frag = GraphFragment(group=group, n=n, moves=moves, root=root, radius=radius, window=window)

    def add_vertex(state: State, key: bytes, depth: int) -> int:
        idx = len(frag.keys)
        if idx >= cap:
            raise ResourceCapError(f"vertex cap {cap} exceeded while exploring")
        frag.index[key] = idx
        frag.keys.append(key)
        frag.states.append(state)
        frag.depths.append(depth)
        frag.expanded.append(False)
        frag.darts.append(None)
        return idx

    add_vertex(root, state_key(group, root), 0)
    layer = [0]
    for depth in range(radius):
        discovered: dict[bytes, State] = {}
        layer_targets: list[tuple[int, list[bytes]]] = []
        for v in layer:
            if not in_window(frag.states[v]):
                if frag.truncated_at is None or depth < frag.truncated_at:
                    frag.truncated_at = depth
                continue
            targets = []
            for move in moves:
                w = apply_move(group, frag.states[v], move, n)
                wk = state_key(group, w)
                if wk not in frag.index and wk not in discovered:
                    discovered[wk] = w
                targets.append(wk)
            layer_targets.append((v, targets))
        for wk in sorted(discovered):
            add_vertex(discovered[wk], wk, depth + 1)
        for v, targets in layer_targets:
            frag.darts[v] = [frag.index[wk] for wk in targets]
            frag.expanded[v] = True
        layer = [frag.index[wk] for wk in sorted(discovered)]
        if not layer:
            break
    frag.validate()
    return frag


def growth_profile(frag: GraphFragment) -> list[tuple[int, int]]:
    """Cumulative ball sizes (r, |B_r|) for r = 0..radius.

    When the graph is exhausted before the radius, the trailing balls
    repeat the final count (the whole graph has been found).
    """
    if frag.truncated:
        raise UsageError(
            f"growth profile is unreliable: window {frag.window} truncated expansion at depth {frag.truncated_at}"
        )
    counts = [0] * (max(frag.depths) + 1)
    for d in frag.depths:
        counts[d] += 1
    out = []
    total = 0
    for r, c in enumerate(counts):
        total += c
        out.append((r, total))
    if all(frag.expanded):  # graph exhausted before the radius
        out.extend((r, total) for r in range(len(counts), frag.radius + 1))
    return out


# ---------------------------------------------------------------------------
# components of N_n(G) for finite G


@dataclass
class ComponentsReport:
    group: Group
    n: int
    total_tuples: int
    generating_count: int
    sizes: list[int]                    # aligned with representatives
    representatives: list[State]
    assignments: dict[State, int] | None  # state -> component position; None for the array path

    @property
    def num_components(self) -> int:
        return len(self.sizes)

    def members(self, comp: int) -> list[State]:
        if self.assignments is None:
            raise UsageError("per-vertex assignments were not materialized for this instance")
        return [s for s, c in self.assignments.items() if c == comp]


_SMALL_STATE_LIMIT = 300_000


def components(group: Group, n: int, cap: int = DEFAULT_VERTEX_CAP) -> ComponentsReport:
    """Partition all generating n-tuples of a finite group into Nielsen classes."""
    if not group.is_finite:
        raise UsageError("components requires a finite group")
    if n < 1:
        raise UsageError("components requires n >= 1")
    total = group.order**n
    if total > cap:
        raise ResourceCapError(f"state count {total} exceeds cap {cap}")
    if total <= _SMALL_STATE_LIMIT:
        return _components_unionfind(group, n, total)
    return _components_labelprop(group, n, total)


def _components_unionfind(group: Group, n: int, total: int) -> ComponentsReport:
    elems = list(group.elements())
    states = [tuple(t) for t in iproduct(elems, repeat=n)]
    gen_cache: dict[tuple, bool] = {}

    def generating(state) -> bool:
        key = tuple(sorted(set(state), key=repr))
        hit = gen_cache.get(key)
        if hit is None:
            hit = gen_cache[key] = group.is_generating(state)
        return hit

    pos = {s: k for k, s in enumerate(states)}
    parent = list(range(total))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    moves = move_set(n)
    gen_mask = [generating(s) for s in states]
    for k, s in enumerate(states):
        if not gen_mask[k]:
            continue
        for move in moves:
            t = pos[apply_move(group, s, move, n)]
            a, b = find(k), find(t)
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    comp_root: dict[int, int] = {}
    assignments: dict[State, int] = {}
    sizes: list[int] = []
    reps: list[State] = []
    for k, s in enumerate(states):
        if not gen_mask[k]:
            continue
        r = find(k)
        if r not in comp_root:
            comp_root[r] = len(sizes)
            sizes.append(0)
            reps.append(states[r])
        c = comp_root[r]
        sizes[c] += 1
        assignments[s] = c
    return ComponentsReport(
        group=group,
        n=n,
        total_tuples=total,
        generating_count=sum(gen_mask),
        sizes=sizes,
        representatives=reps,
        assignments=assignments,
    )


def _components_labelprop(group: Group, n: int, total: int) -> ComponentsReport:
    """Vectorized minimum-label propagation over the full tuple space.

    Moves preserve the generated subgroup, so labels never leak between the
    generating set and its complement; the restriction afterwards is exact.
    """
    elems = list(group.elements())
    order = len(elems)
    eidx = {e: k for k, e in enumerate(elems)}
    table = np.zeros((order, order), dtype=np.int64)
    for a, ea in enumerate(elems):
        for b, eb in enumerate(elems):
            table[a, b] = eidx[group.mul(ea, eb)]
    inv = np.zeros(order, dtype=np.int64)
    for a, ea in enumerate(elems):
        inv[a] = eidx[group.inv(ea)]

    idx = np.arange(total, dtype=np.int64)
    # entry p is digit n-1-p, matching the itertools.product enumeration of
    # the union-find path so both report the same least representative
    place = [order ** (n - 1 - p) for p in range(n)]
    digits = [(idx // place[p]) % order for p in range(n)]

    def move_perm(move: Move) -> np.ndarray:
        if move.kind == "I":
            j = move.j - 1
            new = inv[digits[j]]
            return idx + (new - digits[j]) * place[j]
        i, j = move.i - 1, move.j - 1
        h = digits[j] if move.sign > 0 else inv[digits[j]]
        new = table[digits[i], h] if move.kind == "R" else table[h, digits[i]]
        return idx + (new - digits[i]) * place[i]

    # perms are recomputed each round to bound memory at O(total)
    labels = idx.copy()
    moves = move_set(n)
    while True:
        before = labels
        labels = labels.copy()
        for move in moves:
            perm = move_perm(move)
            np.minimum(labels, labels[perm], out=labels)
        labels = np.minimum(labels, labels[labels])
        if np.array_equal(labels, before):
            break

    gen_mask = _generating_mask(group, n, elems, digits, total)
    gen_labels = labels[gen_mask]
    uniq, counts = np.unique(gen_labels, return_counts=True)
    reps = []
    for u in uniq:
        entries = tuple(elems[int(d[u])] for d in digits)
        reps.append(entries)
    return ComponentsReport(
        group=group,
        n=n,
        total_tuples=total,
        generating_count=int(gen_mask.sum()),
        sizes=[int(c) for c in counts],
        representatives=reps,
        assignments=None,
    )


def _generating_mask(group: Group, n: int, elems, digits, total: int) -> np.ndarray:
    """Generating test vectorized by memoizing on the sorted entry multiset."""
    mat = np.stack(digits, axis=1)
    mat.sort(axis=1)
    uniq, inverse = np.unique(mat, axis=0, return_inverse=True)
    flags = np.zeros(len(uniq), dtype=bool)
    for k, row in enumerate(uniq):
        state = tuple(elems[int(v)] for v in row)
        flags[k] = group.is_generating(state)
    return flags[inverse]


# ---------------------------------------------------------------------------
# Euclid reduction over the integers


def euclid_reduce(state: State) -> tuple[Move, ...]:
    """A move word carrying a gcd-1 integer tuple to (1, 0, ..., 0).

    Classic division-based reduction; each division step with quotient q is
    emitted as |q| single moves, so the word length is the quotient sum plus
    O(n) bookkeeping. The certificate eval_word(state, word) == (1, 0, ..., 0)
    is exact.
    """
    n = len(state)
    if n == 0:
        raise UsageError("euclid_reduce requires a nonempty tuple")
    for x in state:
        if not isinstance(x, int) or isinstance(x, bool):
            raise UsageError("euclid_reduce operates on integer tuples")
    if math.gcd(*state) != 1:
        raise UsageError(f"gcd of {state!r} is not 1")
    xs = list(state)
    word: list[Move] = []

    def shift(i: int, j: int, times: int, sign: int):
        move = R(i + 1, j + 1, sign)
        for _ in range(times):
            xs[i] += sign * xs[j]
            word.append(move)

    while True:
        nonzero = [k for k in range(n) if xs[k] != 0]
        pivot = min(nonzero, key=lambda k: (abs(xs[k]), k))
        rest = [k for k in nonzero if k != pivot]
        if not rest:
            break
        for k in rest:
            q, r = divmod(xs[k], xs[pivot])
            # floor division leaves r with the pivot's sign; stepping q up by
            # one flips to the remainder of the opposite sign, so pick the
            # nearer of the two
            if abs(r) * 2 > abs(xs[pivot]):
                q += 1
            if q > 0:
                shift(k, pivot, q, -1)
            elif q < 0:
                shift(k, pivot, -q, +1)
    if pivot != 0:
        shift(0, pivot, 1, xs[pivot])     # x_0: 0 -> 1
        shift(pivot, 0, 1, -xs[pivot])    # clear the old pivot
    elif xs[0] == -1:
        xs[0] = 1
        word.append(I(1))
    assert xs == [1] + [0] * (n - 1)
    return tuple(word)
