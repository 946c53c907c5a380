"""Concrete groups with unique normal forms.

Every group kind represents its elements by a canonical immutable Python
value (int or tuple of ints), so that equality and hashing are structural.
Byte encodings are length-prefixed little-endian and injective per kind;
tuple keys elsewhere rely on each element encoding being self-delimiting.

Supported kinds and element normal forms:

* ``Integers``            -- a plain ``int``
* ``FreeAbelian(d)``      -- tuple of ``d`` ints
* ``InfiniteDihedral``    -- pair ``(t, eps)`` of translation part and
                             reflection bit, product
                             ``(t1,e1)(t2,e2) = (t1 + (-1)**e1 * t2, e1^e2)``
* ``FiniteCayley``        -- element index into a validated multiplication
                             table (Latin square, associative, with identity
                             and inverses)
* ``Heisenberg``          -- integer triple with product
                             ``(x1,y1,z1)(x2,y2,z2) =
                             (x1+x2, y1+y2, z1+z2+x1*y2)``
* ``FiniteAbelianExp(m,d)`` -- tuple of ``d`` residues mod ``m``
* ``BurnsideB23``         -- triple over Z/3 with the Heisenberg product
                             mod 3; the unique 2-generated exponent-3 group
                             of order 27, checked exhaustively at construction
* ``FreeGroup(d)``        -- freely reduced word as a tuple of nonzero
                             signed letters in ``+-1..+-d``

All operations are pure functions on immutable values.
"""

from __future__ import annotations

import math
from itertools import product as iproduct
from typing import Any, Iterator

import numpy as np

from .errors import UsageError

Element = Any
State = tuple  # ordered tuple of elements; the vertex type of a Nielsen graph


# ---------------------------------------------------------------------------
# integer byte encoding: u32 little-endian length prefix + minimal-length
# signed little-endian two's complement payload


def encode_int(v: int) -> bytes:
    if v >= 0:
        size = v.bit_length() // 8 + 1
    else:
        size = (-v - 1).bit_length() // 8 + 1
    return size.to_bytes(4, "little") + v.to_bytes(size, "little", signed=True)


def decode_int(buf: bytes, offset: int) -> tuple[int, int]:
    size = int.from_bytes(buf[offset : offset + 4], "little")
    start = offset + 4
    return int.from_bytes(buf[start : start + size], "little", signed=True), start + size


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) = a*x + b*y."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def lattice_is_full(rows: list[tuple[int, ...]], dim: int) -> bool:
    """True iff the integer row vectors span all of Z^dim as a lattice.

    Row-style Hermite reduction; the lattice is full iff there are ``dim``
    pivots whose product is +-1 (the product of pivot entries is the index
    of the lattice in Z^dim).
    """
    basis: list[list[int]] = []  # echelon rows, pivot column strictly increasing
    pivots: dict[int, int] = {}  # column -> basis position
    for row in rows:
        vec = list(row)
        for col in range(dim):
            if vec[col] == 0:
                continue
            p = pivots.get(col)
            if p is None:
                pivots[col] = len(basis)
                basis.append(vec)
                break
            piv = basis[p]
            a, b = piv[col], vec[col]
            if b % a == 0:
                q = b // a
                for k in range(col, dim):
                    vec[k] -= q * piv[k]
            else:
                g, x, y = _xgcd(a, b)
                aa, bb = a // g, b // g
                for k in range(col, dim):
                    piv[k], vec[k] = x * piv[k] + y * vec[k], -bb * piv[k] + aa * vec[k]
        # fully reduced rows are dropped
    if len(pivots) != dim:
        return False
    det = 1
    for col, p in pivots.items():
        det *= basis[p][col]
    return abs(det) == 1


class Group:
    """Base interface: a group with decidable equality and normal forms."""

    kind: str = ""
    is_finite: bool = False

    # -- group law -----------------------------------------------------
    def identity(self) -> Element:
        raise NotImplementedError

    def mul(self, a: Element, b: Element) -> Element:
        raise NotImplementedError

    def inv(self, a: Element) -> Element:
        raise NotImplementedError

    # -- element plumbing ----------------------------------------------
    def check_element(self, a: Element) -> Element:
        """Validate and return the normal form; raise UsageError otherwise."""
        raise NotImplementedError

    def encode_element(self, a: Element) -> bytes:
        raise NotImplementedError

    def decode_element(self, buf: bytes, offset: int) -> tuple[Element, int]:
        raise NotImplementedError

    def element_to_json(self, a: Element):
        return a if isinstance(a, int) else list(a)

    def element_from_json(self, obj) -> Element:
        raise NotImplementedError

    def measure(self, a: Element) -> int:
        """Size of an element for windowed exploration (0 for finite kinds)."""
        return 0

    def random_element(self, rng, size: int = 10) -> Element:
        raise NotImplementedError

    # -- generation ------------------------------------------------------
    def is_generating(self, entries: State) -> bool:
        if len(entries) == 0:
            raise UsageError("is_generating requires a tuple of length >= 1")
        return self._is_generating(entries)

    def _is_generating(self, entries: State) -> bool:
        raise NotImplementedError

    def standard_generators(self) -> State:
        """A designated generating tuple of minimal length."""
        raise NotImplementedError

    # -- finite-kind extras ----------------------------------------------
    @property
    def order(self) -> int:
        raise UsageError(f"{self.kind} is infinite")

    def elements(self) -> Iterator[Element]:
        raise UsageError(f"{self.kind} is infinite")

    def rank(self) -> int:
        """Minimal number of generators (finite kinds: brute force)."""
        if not self.is_finite:
            raise NotImplementedError
        all_elems = list(self.elements())
        for k in range(1, len(all_elems) + 1):
            for cand in iproduct(all_elems, repeat=k):
                if self.is_generating(cand):
                    return k
        raise AssertionError("unreachable: the full element list generates")

    # -- group-spec JSON plumbing -----------------------------------------------------
    def spec_json(self) -> dict:
        raise NotImplementedError

    def __eq__(self, other) -> bool:
        return isinstance(other, Group) and self.spec_json() == other.spec_json()

    def __hash__(self) -> int:
        return hash(repr(sorted(self.spec_json().items(), key=lambda kv: kv[0])))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.spec_json()})"


def _closure(group: Group, entries: State) -> set:
    """Subgroup generated by the entries of a finite group."""
    seen = set(entries) | {group.identity()}
    frontier = list(seen)
    while frontier:
        nxt = []
        for g in frontier:
            for h in entries:
                for w in (group.mul(g, h), group.mul(h, g)):
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
        frontier = nxt
    return seen


class Integers(Group):
    kind = "Integers"

    def identity(self):
        return 0

    def mul(self, a, b):
        return a + b

    def inv(self, a):
        return -a

    def check_element(self, a):
        if not isinstance(a, int) or isinstance(a, bool):
            raise UsageError(f"Integers element must be an int, got {a!r}")
        return a

    def encode_element(self, a):
        return encode_int(a)

    def decode_element(self, buf, offset):
        return decode_int(buf, offset)

    def element_from_json(self, obj):
        return self.check_element(obj)

    def measure(self, a):
        return abs(a)

    def random_element(self, rng, size=10):
        return rng.randint(-size, size)

    def _is_generating(self, entries):
        return math.gcd(*entries) == 1 if len(entries) > 1 else abs(entries[0]) == 1

    def standard_generators(self):
        return (1,)

    def spec_json(self):
        return {"kind": "Integers"}


class FreeAbelian(Group):
    kind = "FreeAbelian"

    def __init__(self, d: int):
        if not isinstance(d, int) or d < 1:
            raise UsageError("FreeAbelian rank d must be a positive int")
        self.d = d

    def identity(self):
        return (0,) * self.d

    def mul(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def inv(self, a):
        return tuple(-x for x in a)

    def check_element(self, a):
        if not (isinstance(a, tuple) and len(a) == self.d and all(isinstance(x, int) for x in a)):
            raise UsageError(f"FreeAbelian({self.d}) element must be a tuple of {self.d} ints")
        return a

    def encode_element(self, a):
        return b"".join(encode_int(x) for x in a)

    def decode_element(self, buf, offset):
        out = []
        for _ in range(self.d):
            v, offset = decode_int(buf, offset)
            out.append(v)
        return tuple(out), offset

    def element_from_json(self, obj):
        return self.check_element(tuple(obj))

    def measure(self, a):
        return max(abs(x) for x in a)

    def random_element(self, rng, size=10):
        return tuple(rng.randint(-size, size) for _ in range(self.d))

    def _is_generating(self, entries):
        return lattice_is_full(list(entries), self.d)

    def standard_generators(self):
        return tuple(tuple(1 if k == i else 0 for k in range(self.d)) for i in range(self.d))

    def spec_json(self):
        return {"kind": "FreeAbelian", "d": self.d}


class InfiniteDihedral(Group):
    """Z semidirect Z/2: (t, eps) with the reflection acting by negation."""

    kind = "InfiniteDihedral"

    def identity(self):
        return (0, 0)

    def mul(self, a, b):
        return (a[0] + b[0] if a[1] == 0 else a[0] - b[0], a[1] ^ b[1])

    def inv(self, a):
        return (-a[0], 0) if a[1] == 0 else a

    def check_element(self, a):
        if not (
            isinstance(a, tuple)
            and len(a) == 2
            and isinstance(a[0], int)
            and a[1] in (0, 1)
        ):
            raise UsageError("InfiniteDihedral element must be (t, eps) with eps in {0,1}")
        return (a[0], a[1])

    def encode_element(self, a):
        return encode_int(a[0]) + encode_int(a[1])

    def decode_element(self, buf, offset):
        t, offset = decode_int(buf, offset)
        e, offset = decode_int(buf, offset)
        return (t, e), offset

    def element_from_json(self, obj):
        return self.check_element(tuple(obj))

    def measure(self, a):
        return abs(a[0])

    def random_element(self, rng, size=10):
        return (rng.randint(-size, size), rng.randint(0, 1))

    def _is_generating(self, entries):
        # The subgroup meets the translation part in g*Z where g is the gcd of
        # translation entries and of pairwise differences of reflection
        # translation parts; it is everything iff g = 1 and a reflection occurs.
        refl = [t for t, e in entries if e == 1]
        if not refl:
            return False
        vals = [t for t, e in entries if e == 0]
        vals.extend(t - refl[0] for t in refl[1:])
        return math.gcd(*vals) == 1 if vals else False

    def standard_generators(self):
        return ((1, 0), (0, 1))

    def spec_json(self):
        return {"kind": "InfiniteDihedral"}


class FiniteCayley(Group):
    kind = "FiniteCayley"
    is_finite = True

    def __init__(self, table, identity: int):
        tab = np.asarray(table, dtype=np.int64)
        if tab.ndim != 2 or tab.shape[0] != tab.shape[1]:
            raise UsageError("FiniteCayley table must be square")
        k = tab.shape[0]
        if k == 0:
            raise UsageError("FiniteCayley table must be nonempty")
        if tab.min() < 0 or tab.max() >= k:
            raise UsageError("FiniteCayley table entries must be element indices")
        if not isinstance(identity, int) or not 0 <= identity < k:
            raise UsageError("FiniteCayley identity index out of range")
        ar = np.arange(k)
        if not all((np.sort(tab[i]) == ar).all() and (np.sort(tab[:, i]) == ar).all() for i in range(k)):
            raise UsageError("FiniteCayley table is not a Latin square")
        if not ((tab[identity] == ar).all() and (tab[:, identity] == ar).all()):
            raise UsageError("FiniteCayley identity index does not act as identity")
        left = tab[tab.reshape(-1), :].reshape(k, k, k)     # (a*b)*c
        right = tab[:, tab.reshape(-1)].reshape(k, k, k)    # a*(b*c)
        if not (left == right).all():
            raise UsageError("FiniteCayley table is not associative")
        inv = np.full(k, -1, dtype=np.int64)
        for a in range(k):
            hits = np.nonzero(tab[a] == identity)[0]
            if len(hits) != 1 or tab[hits[0], a] != identity:
                raise UsageError("FiniteCayley table lacks two-sided inverses")
            inv[a] = hits[0]
        self.table = tab
        self.id_index = identity
        self._inv = inv

    def identity(self):
        return self.id_index

    def mul(self, a, b):
        return int(self.table[a, b])

    def inv(self, a):
        return int(self._inv[a])

    def check_element(self, a):
        if not isinstance(a, int) or not 0 <= a < self.order:
            raise UsageError(f"FiniteCayley element must be an index in [0, {self.order})")
        return a

    def encode_element(self, a):
        return encode_int(a)

    def decode_element(self, buf, offset):
        return decode_int(buf, offset)

    def element_from_json(self, obj):
        return self.check_element(obj)

    def random_element(self, rng, size=10):
        return rng.randrange(self.order)

    def _is_generating(self, entries):
        return len(_closure(self, entries)) == self.order

    def standard_generators(self):
        all_elems = list(self.elements())
        for k in range(1, self.order + 1):
            for cand in iproduct(all_elems, repeat=k):
                if self.is_generating(cand):
                    return cand
        raise AssertionError("unreachable")

    @property
    def order(self):
        return int(self.table.shape[0])

    def elements(self):
        return iter(range(self.order))

    def spec_json(self):
        return {
            "kind": "FiniteCayley",
            "table": [[int(x) for x in row] for row in self.table],
            "identity": self.id_index,
        }


def _heis_mul(a, b):
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2] + a[0] * b[1])


class Heisenberg(Group):
    """Free nilpotent group of rank 2 and class 2, in Mal'cev coordinates."""

    kind = "Heisenberg"

    def identity(self):
        return (0, 0, 0)

    def mul(self, a, b):
        return _heis_mul(a, b)

    def inv(self, a):
        x, y, z = a
        return (-x, -y, x * y - z)

    def check_element(self, a):
        if not (isinstance(a, tuple) and len(a) == 3 and all(isinstance(x, int) for x in a)):
            raise UsageError("Heisenberg element must be a triple of ints")
        return a

    def encode_element(self, a):
        return b"".join(encode_int(x) for x in a)

    def decode_element(self, buf, offset):
        x, offset = decode_int(buf, offset)
        y, offset = decode_int(buf, offset)
        z, offset = decode_int(buf, offset)
        return (x, y, z), offset

    def element_from_json(self, obj):
        return self.check_element(tuple(obj))

    def measure(self, a):
        return max(abs(v) for v in a)

    def random_element(self, rng, size=10):
        return tuple(rng.randint(-size, size) for _ in range(3))

    def _is_generating(self, entries):
        # A tuple generates a nilpotent group iff its image generates the
        # abelianization; here that image is the (x, y) pairs in Z^2.
        return lattice_is_full([(x, y) for x, y, _ in entries], 2)

    def standard_generators(self):
        return ((1, 0, 0), (0, 1, 0))

    def spec_json(self):
        return {"kind": "Heisenberg"}


class FiniteAbelianExp(Group):
    """(Z/m)^d: the free object of rank d among abelian groups of exponent m."""

    kind = "FiniteAbelianExp"
    is_finite = True

    def __init__(self, m: int, d: int):
        if not isinstance(m, int) or m < 2:
            raise UsageError("FiniteAbelianExp modulus m must be an int >= 2")
        if not isinstance(d, int) or d < 1:
            raise UsageError("FiniteAbelianExp rank d must be a positive int")
        self.m = m
        self.d = d

    def identity(self):
        return (0,) * self.d

    def mul(self, a, b):
        return tuple((x + y) % self.m for x, y in zip(a, b))

    def inv(self, a):
        return tuple((-x) % self.m for x in a)

    def check_element(self, a):
        if not (
            isinstance(a, tuple)
            and len(a) == self.d
            and all(isinstance(x, int) and 0 <= x < self.m for x in a)
        ):
            raise UsageError(f"FiniteAbelianExp element must be {self.d} residues mod {self.m}")
        return a

    def encode_element(self, a):
        return b"".join(encode_int(x) for x in a)

    def decode_element(self, buf, offset):
        out = []
        for _ in range(self.d):
            v, offset = decode_int(buf, offset)
            out.append(v)
        return tuple(out), offset

    def element_from_json(self, obj):
        return self.check_element(tuple(obj))

    def random_element(self, rng, size=10):
        return tuple(rng.randrange(self.m) for _ in range(self.d))

    def _is_generating(self, entries):
        return len(_closure(self, entries)) == self.order

    def standard_generators(self):
        return tuple(tuple(1 if k == i else 0 for k in range(self.d)) for i in range(self.d))

    @property
    def order(self):
        return self.m**self.d

    def elements(self):
        return iproduct(range(self.m), repeat=self.d)

    def spec_json(self):
        return {"kind": "FiniteAbelianExp", "m": self.m, "d": self.d}


class BurnsideB23(Group):
    """The free 2-generated exponent-3 group, realized over Z/3.

    Construction self-checks: 27 elements, g*g*g = identity for every g, and
    the two designated generators generate.
    """

    kind = "BurnsideB23"
    is_finite = True

    def __init__(self):
        elems = list(iproduct(range(3), range(3), range(3)))
        assert len(elems) == 27
        for g in elems:
            if self.mul(self.mul(g, g), g) != (0, 0, 0):
                raise AssertionError(f"exponent-3 law fails at {g}")
        if len(_closure(self, self.standard_generators())) != 27:
            raise AssertionError("designated generators do not generate")

    def identity(self):
        return (0, 0, 0)

    def mul(self, a, b):
        return ((a[0] + b[0]) % 3, (a[1] + b[1]) % 3, (a[2] + b[2] + a[0] * b[1]) % 3)

    def inv(self, a):
        x, y, z = a
        return ((-x) % 3, (-y) % 3, (x * y - z) % 3)

    def check_element(self, a):
        if not (
            isinstance(a, tuple)
            and len(a) == 3
            and all(isinstance(x, int) and 0 <= x < 3 for x in a)
        ):
            raise UsageError("BurnsideB23 element must be a triple of residues mod 3")
        return a

    def encode_element(self, a):
        return b"".join(encode_int(x) for x in a)

    def decode_element(self, buf, offset):
        x, offset = decode_int(buf, offset)
        y, offset = decode_int(buf, offset)
        z, offset = decode_int(buf, offset)
        return (x, y, z), offset

    def element_from_json(self, obj):
        return self.check_element(tuple(obj))

    def random_element(self, rng, size=10):
        return tuple(rng.randrange(3) for _ in range(3))

    def _is_generating(self, entries):
        return len(_closure(self, entries)) == 27

    def standard_generators(self):
        return ((1, 0, 0), (0, 1, 0))

    @property
    def order(self):
        return 27

    def elements(self):
        return iproduct(range(3), range(3), range(3))

    def spec_json(self):
        return {"kind": "BurnsideB23"}


_LETTERS = "abcdefghijklmnopqrstuvwxyz"


class FreeGroup(Group):
    """Free group of rank d; words are tuples of signed letters, freely reduced."""

    kind = "FreeGroup"

    def __init__(self, d: int):
        if not isinstance(d, int) or not 1 <= d <= 26:
            raise UsageError("FreeGroup rank d must be an int in [1, 26]")
        self.d = d

    def identity(self):
        return ()

    def mul(self, a, b):
        i = len(a)
        j = 0
        while i > 0 and j < len(b) and a[i - 1] == -b[j]:
            i -= 1
            j += 1
        return a[:i] + b[j:]

    def inv(self, a):
        return tuple(-x for x in reversed(a))

    def check_element(self, a):
        if not isinstance(a, tuple):
            raise UsageError("FreeGroup element must be a tuple of signed letters")
        for x in a:
            if not isinstance(x, int) or x == 0 or abs(x) > self.d:
                raise UsageError(f"FreeGroup letter {x!r} out of range for rank {self.d}")
        for u, v in zip(a, a[1:]):
            if u == -v:
                raise UsageError(f"FreeGroup word {a!r} is not freely reduced")
        return a

    def encode_element(self, a):
        return encode_int(len(a)) + b"".join(encode_int(x) for x in a)

    def decode_element(self, buf, offset):
        k, offset = decode_int(buf, offset)
        out = []
        for _ in range(k):
            v, offset = decode_int(buf, offset)
            out.append(v)
        return tuple(out), offset

    def element_to_json(self, a):
        return self.word_to_str(a)

    def element_from_json(self, obj):
        if not isinstance(obj, str):
            raise UsageError("FreeGroup element JSON form is a word string like 'abA'")
        return self.word_from_str(obj)

    def word_from_str(self, s: str):
        """Parse 'a'..'z' as letters and 'A'..'Z' as their inverses; '' or '1' is the identity."""
        if s in ("", "1"):
            return ()
        word = []
        for ch in s:
            low = ch.lower()
            if low not in _LETTERS[: self.d]:
                raise UsageError(f"letter {ch!r} not valid for FreeGroup({self.d})")
            k = _LETTERS.index(low) + 1
            word.append(k if ch.islower() else -k)
        out = self.identity()
        for x in word:
            out = self.mul(out, (x,))
        return out

    def word_to_str(self, a) -> str:
        if not a:
            return "1"
        return "".join(_LETTERS[x - 1] if x > 0 else _LETTERS[-x - 1].upper() for x in a)

    def measure(self, a):
        return len(a)

    def random_element(self, rng, size=10):
        out = ()
        for _ in range(rng.randint(0, size)):
            x = rng.choice([k for k in range(-self.d, self.d + 1) if k != 0])
            out = self.mul(out, (x,))
        return out

    def _is_generating(self, entries):
        return self._folds_to_rose(entries)

    def _folds_to_rose(self, words) -> bool:
        """Stallings folding: fold the rose of word loops; the tuple generates
        iff the folded core at the basepoint is the one-vertex rose with d loops."""
        parent = [0]
        adj: list[dict[int, int]] = [{}]

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        pending: list[tuple[int, int]] = []

        def add_edge(u, letter, v):
            u, v = find(u), find(v)
            for a, l, b in ((u, letter, v), (v, -letter, u)):
                cur = adj[a].get(l)
                if cur is None:
                    adj[a][l] = b
                elif find(cur) != find(b):
                    pending.append((cur, b))

        for word in words:
            prev = 0
            for idx, letter in enumerate(word):
                if idx == len(word) - 1:
                    target = 0
                else:
                    parent.append(len(parent))
                    adj.append({})
                    target = len(parent) - 1
                add_edge(prev, letter, target)
                prev = target

        while pending:
            a, b = pending.pop()
            ra, rb = find(a), find(b)
            if ra == rb:
                continue
            if len(adj[ra]) < len(adj[rb]):
                ra, rb = rb, ra
            parent[rb] = ra
            moved = adj[rb]
            adj[rb] = {}
            for letter, tgt in moved.items():
                cur = adj[ra].get(letter)
                if cur is None:
                    adj[ra][letter] = tgt
                elif find(cur) != find(tgt):
                    pending.append((cur, tgt))

        live = {find(v) for v in range(len(parent))}
        degree = {v: sum(1 for _ in adj[v]) for v in live}
        # prune hanging trees: the core keeps the basepoint regardless of degree
        base = find(0)
        leaves = [v for v in live if v != base and degree[v] <= 1]
        while leaves:
            v = leaves.pop()
            live.discard(v)
            for letter, tgt in adj[v].items():
                t = find(tgt)
                if t in live and t != v:
                    del adj[t][-letter]
                    degree[t] -= 1
                    if t != base and degree[t] <= 1:
                        leaves.append(t)
            adj[v] = {}
        if live != {base}:
            return False
        return set(adj[base].keys()) == {s * k for k in range(1, self.d + 1) for s in (1, -1)}

    def standard_generators(self):
        return tuple((k,) for k in range(1, self.d + 1))

    def spec_json(self):
        return {"kind": "FreeGroup", "d": self.d}


_KINDS = {
    "Integers": (Integers, ()),
    "FreeAbelian": (FreeAbelian, ("d",)),
    "InfiniteDihedral": (InfiniteDihedral, ()),
    "FiniteCayley": (FiniteCayley, ("table", "identity")),
    "Heisenberg": (Heisenberg, ()),
    "FiniteAbelianExp": (FiniteAbelianExp, ("m", "d")),
    "BurnsideB23": (BurnsideB23, ()),
    "FreeGroup": (FreeGroup, ("d",)),
}


def group_from_json(obj: dict) -> Group:
    """Construct a group from a JSON object like {"kind": "FreeAbelian", "d": 2}."""
    if not isinstance(obj, dict) or "kind" not in obj:
        raise UsageError("group JSON must be an object with a 'kind' field")
    kind = obj["kind"]
    if kind not in _KINDS:
        raise UsageError(f"unknown group kind {kind!r}; known: {sorted(_KINDS)}")
    cls, params = _KINDS[kind]
    extra = set(obj) - {"kind", *params}
    if extra:
        raise UsageError(f"unknown fields for {kind}: {sorted(extra)}")
    missing = [p for p in params if p not in obj]
    if missing:
        raise UsageError(f"missing fields for {kind}: {missing}")
    return cls(**{p: obj[p] for p in params})


# -- small Cayley-table builders for finite test batteries ------------------


def cyclic_table(k: int) -> list[list[int]]:
    return [[(a + b) % k for b in range(k)] for a in range(k)]


def direct_product_table(t1: list[list[int]], t2: list[list[int]]) -> list[list[int]]:
    n1, n2 = len(t1), len(t2)
    out = [[0] * (n1 * n2) for _ in range(n1 * n2)]
    for a1 in range(n1):
        for a2 in range(n2):
            for b1 in range(n1):
                for b2 in range(n2):
                    out[a1 * n2 + a2][b1 * n2 + b2] = t1[a1][b1] * n2 + t2[a2][b2]
    return out


def dihedral_table(k: int) -> list[list[int]]:
    """Dihedral group of order 2k; element i*2+s encodes rotation^i * flip^s."""
    def mul(a, b):
        i, s = divmod(a, 2)
        j, t = divmod(b, 2)
        rot = (i + j) % k if s == 0 else (i - j) % k
        return rot * 2 + (s ^ t)

    return [[mul(a, b) for b in range(2 * k)] for a in range(2 * k)]


def quaternion_table() -> list[list[int]]:
    """Q8 via signed units {1,-1,i,-i,j,-j,k,-k} in index order."""
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    basic = {
        ("1", "1"): "1", ("i", "i"): "-1", ("j", "j"): "-1", ("k", "k"): "-1",
        ("i", "j"): "k", ("j", "k"): "i", ("k", "i"): "j",
        ("j", "i"): "-k", ("k", "j"): "-i", ("i", "k"): "-j",
    }

    def mul(a, b):
        sign = 1
        if a.startswith("-"):
            sign, a = -sign, a[1:]
        if b.startswith("-"):
            sign, b = -sign, b[1:]
        if a == "1":
            base = b
        elif b == "1":
            base = a
        else:
            base = basic[(a, b)]
        if base.startswith("-"):
            sign, base = -sign, base[1:]
        return base if sign > 0 else "-" + base

    return [[names.index(mul(x, y)) for y in names] for x in names]
