"""Epimorphisms between supported groups and covering-map verification.

The entrywise map on tuples induced by an epimorphism G -> H sends N_n(G)
into N_n(H), commutes with every move, and maps vertex stars bijectively.
This module carries a closed catalogue of epimorphism rules (so that the
homomorphism and surjectivity checks stay decidable), verifies the star
commutation on samples, and lifts codomain fragments back along the map.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import UsageError, VerificationError
from .explore import GraphFragment, state_key
from .groups import (
    FiniteAbelianExp,
    FiniteCayley,
    FreeAbelian,
    Group,
    Heisenberg,
    InfiniteDihedral,
    Integers,
    State,
    group_from_json,
)
from .moves import apply_move, move_set

_HOM_SAMPLE = 1000
_HOM_SEED = 0x5EED


class Epimorphism:
    """A surjective homomorphism from a fixed rule catalogue.

    Rules: ``identity``; ``project`` (Z^d onto the first e coordinates);
    ``mod`` (coordinatewise reduction of Z or Z^d mod m); ``reflection``
    (infinite dihedral onto Z/2 by the reflection bit); ``abelianize``
    (Heisenberg onto Z^2); ``finite_quotient`` (FiniteCayley by a listed
    normal subgroup).
    """

    def __init__(self, rule: str, domain: Group, codomain: Group, fn, params: dict):
        self.rule = rule
        self.domain = domain
        self.codomain = codomain
        self._fn = fn
        self.params = params
        self._validate()

    def apply(self, g):
        return self._fn(g)

    def to_json(self) -> dict:
        out = {"rule": self.rule, "domain": self.domain.spec_json()}
        out.update(self.params)
        return out

    def _validate(self):
        rng = random.Random(_HOM_SEED)
        if self.domain.is_finite:
            pairs = [(a, b) for a in self.domain.elements() for b in self.domain.elements()]
        else:
            pairs = [
                (self.domain.random_element(rng, 12), self.domain.random_element(rng, 12))
                for _ in range(_HOM_SAMPLE)
            ]
        for a, b in pairs:
            if self.apply(self.domain.mul(a, b)) != self.codomain.mul(self.apply(a), self.apply(b)):
                raise VerificationError(f"rule {self.rule} is not a homomorphism at {a!r}, {b!r}")
        gens = self.domain.standard_generators()
        images = tuple(self.apply(g) for g in gens)
        if not self.codomain.is_generating(images):
            raise VerificationError(f"rule {self.rule} is not surjective: generator images do not generate")


def identity_epi(group: Group) -> Epimorphism:
    return Epimorphism("identity", group, group, lambda g: g, {})


def projection(domain: Group, e: int) -> Epimorphism:
    if isinstance(domain, Integers):
        d = 1
    elif isinstance(domain, FreeAbelian):
        d = domain.d
    else:
        raise UsageError("project rule needs an Integers or FreeAbelian domain")
    if not 1 <= e <= d:
        raise UsageError(f"projection target rank e={e} must satisfy 1 <= e <= {d}")
    if e == 1:
        codomain = Integers()
        fn = (lambda g: g) if d == 1 else (lambda g: g[0])
    else:
        codomain = FreeAbelian(e)
        fn = lambda g: g[:e]
    return Epimorphism("project", domain, codomain, fn, {"e": e})


def mod_reduction(domain: Group, m: int) -> Epimorphism:
    if isinstance(domain, Integers):
        d = 1
        fn = lambda g: (g % m,)
    elif isinstance(domain, FreeAbelian):
        d = domain.d
        fn = lambda g: tuple(x % m for x in g)
    else:
        raise UsageError("mod rule needs an Integers or FreeAbelian domain")
    return Epimorphism("mod", domain, FiniteAbelianExp(m, d), fn, {"m": m})


def reflection_bit(domain: Group | None = None) -> Epimorphism:
    domain = domain or InfiniteDihedral()
    if not isinstance(domain, InfiniteDihedral):
        raise UsageError("reflection rule needs the InfiniteDihedral domain")
    return Epimorphism("reflection", domain, FiniteAbelianExp(2, 1), lambda g: (g[1],), {})


def abelianization(domain: Group | None = None) -> Epimorphism:
    domain = domain or Heisenberg()
    if not isinstance(domain, Heisenberg):
        raise UsageError("abelianize rule needs the Heisenberg domain")
    return Epimorphism("abelianize", domain, FreeAbelian(2), lambda g: (g[0], g[1]), {})


def finite_quotient(domain: Group, normal: list[int]) -> Epimorphism:
    if not isinstance(domain, FiniteCayley):
        raise UsageError("finite_quotient rule needs a FiniteCayley domain")
    sub = sorted(set(normal))
    for x in sub:
        domain.check_element(x)
    subset = set(sub)
    if domain.id_index not in subset:
        raise UsageError("normal subgroup must contain the identity")
    for a in sub:
        if domain.inv(a) not in subset:
            raise UsageError("listed subset is not closed under inverses")
        for b in sub:
            if domain.mul(a, b) not in subset:
                raise UsageError("listed subset is not closed under multiplication")
    for g in domain.elements():
        gi = domain.inv(g)
        for x in sub:
            if domain.mul(domain.mul(g, x), gi) not in subset:
                raise UsageError("listed subgroup is not normal")
    coset_of: dict[int, int] = {}
    reps: list[int] = []
    for g in domain.elements():
        if g in coset_of:
            continue
        members = sorted(domain.mul(g, x) for x in sub)
        rep_pos = len(reps)
        reps.append(members[0])
        for mbr in members:
            coset_of[mbr] = rep_pos
    k = len(reps)
    table = [[coset_of[domain.mul(reps[a], reps[b])] for b in range(k)] for a in range(k)]
    codomain = FiniteCayley(table, coset_of[domain.id_index])
    return Epimorphism(
        "finite_quotient", domain, codomain, lambda g: coset_of[g], {"normal": sub}
    )


def epimorphism_from_json(obj: dict) -> Epimorphism:
    if not isinstance(obj, dict) or "rule" not in obj or "domain" not in obj:
        raise UsageError("epimorphism JSON must carry 'rule' and 'domain'")
    domain = group_from_json(obj["domain"])
    rule = obj["rule"]
    extra = {k: v for k, v in obj.items() if k not in ("rule", "domain")}
    if rule == "identity":
        _expect_params(extra, set())
        return identity_epi(domain)
    if rule == "project":
        _expect_params(extra, {"e"})
        return projection(domain, extra["e"])
    if rule == "mod":
        _expect_params(extra, {"m"})
        return mod_reduction(domain, extra["m"])
    if rule == "reflection":
        _expect_params(extra, set())
        return reflection_bit(domain)
    if rule == "abelianize":
        _expect_params(extra, set())
        return abelianization(domain)
    if rule == "finite_quotient":
        _expect_params(extra, {"normal"})
        return finite_quotient(domain, extra["normal"])
    raise UsageError(f"unknown epimorphism rule {rule!r}")


def _expect_params(extra: dict, allowed: set):
    unknown = set(extra) - allowed
    if unknown:
        raise UsageError(f"unknown epimorphism fields: {sorted(unknown)}")
    missing = allowed - set(extra)
    if missing:
        raise UsageError(f"missing epimorphism fields: {sorted(missing)}")


def push(epi: Epimorphism, state: State) -> State:
    """Entrywise image of a generating tuple; generating in the codomain."""
    state = tuple(epi.domain.check_element(g) for g in state)
    if not epi.domain.is_generating(state):
        raise UsageError(f"{state!r} does not generate the domain group")
    image = tuple(epi.apply(g) for g in state)
    if not epi.codomain.is_generating(image):
        raise VerificationError("epimorphism image of a generating tuple fails to generate")
    return image


@dataclass
class StarReport:
    checked: int
    moves: int
    violations: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"checked": self.checked, "moves": self.moves, "violations": len(self.violations)}


def random_generating_tuple(group: Group, n: int, rng: random.Random, size: int = 12, tries: int = 10000) -> State:
    for _ in range(tries):
        cand = tuple(group.random_element(rng, size) for _ in range(n))
        if group.is_generating(cand):
            return cand
    raise UsageError(f"could not sample a generating {n}-tuple in {tries} tries")


def verify_star_bijection(
    epi: Epimorphism,
    n: int,
    samples: int = 1000,
    seed: int = 1,
    tuples: list[State] | None = None,
) -> StarReport:
    """Check push(apply(t, s)) == apply(push(t), s) for every move at each sample.

    With one dart per move label on both sides, commutation makes the star
    map a label-preserving bijection; any violation indicates a bug, since
    the property is a theorem.
    """
    moves = move_set(n)
    if tuples is None:
        rng = random.Random(seed)
        tuples = [random_generating_tuple(epi.domain, n, rng) for _ in range(samples)]
    report = StarReport(checked=len(tuples), moves=len(moves))
    for t in tuples:
        image = push(epi, t)
        for mv in moves:
            lhs = tuple(epi.apply(g) for g in apply_move(epi.domain, t, mv, n))
            rhs = apply_move(epi.codomain, image, mv, n)
            if lhs != rhs:
                report.violations.append({"tuple": repr(t), "move": mv.text()})
    return report


@dataclass
class LiftReport:
    total: int
    lifted: int
    unreached: list[str]

    @property
    def ok(self) -> bool:
        return self.lifted == self.total

    def to_json(self) -> dict:
        return {"total": self.total, "lifted": self.lifted, "unreached": len(self.unreached)}


def verify_surjectivity_on_fragment(epi: Epimorphism, frag: GraphFragment, seed_tuple: State) -> LiftReport:
    """Lift every fragment vertex along the covering by replaying move words.

    BFS from push(seed) inside the fragment (descending only darts of
    expanded vertices) lifts each reached vertex to a domain tuple pushing
    onto it; vertices the BFS cannot reach are reported as unreached, which
    cannot happen when the codomain graph is connected and the fragment is a
    ball around push(seed)'s component.
    """
    if frag.group != epi.codomain:
        raise UsageError("fragment group does not match the epimorphism codomain")
    seed_tuple = tuple(epi.domain.check_element(g) for g in seed_tuple)
    if len(seed_tuple) != frag.n:
        raise UsageError("seed tuple length does not match the fragment")
    start_state = push(epi, seed_tuple)
    start_key = state_key(frag.group, start_state)
    lifts: dict[int, State] = {}
    unreached = []
    if start_key in frag.index:
        start = frag.index[start_key]
        lifts[start] = seed_tuple
        queue = [start]
        qpos = 0
        while qpos < len(queue):
            v = queue[qpos]
            qpos += 1
            darts = frag.darts[v]
            if darts is None:
                continue
            for k, w in enumerate(darts):
                if w not in lifts:
                    lifts[w] = apply_move(epi.domain, lifts[v], frag.moves[k], frag.n)
                    queue.append(w)
    for v in range(len(frag)):
        if v in lifts:
            if tuple(epi.apply(g) for g in lifts[v]) != frag.states[v]:
                raise VerificationError("lifted tuple does not push onto its fragment vertex")
        else:
            unreached.append(frag.keys[v].hex())
    return LiftReport(total=len(frag), lifted=len(lifts), unreached=unreached)
