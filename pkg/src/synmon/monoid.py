"""Finite monoids as explicit multiplication tables.

Elements are dense indices 0..order-1 with the identity at 0 for every
monoid this package constructs; names are display-only.  Transformations
are plain tuples `t` with `t[k]` the image of point k; products compose
left to right: (x . y)(k) = y(x(k)).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import permutations, product

import numpy as np

from .dfa import Dfa
from .errors import (InvalidMonoid, MonoidTooLarge, NotAnAction,
                     NotAnIdeal, NotDistributive, TooLarge)

Transformation = tuple

ASSOC_CHECK_CAP = 512


def identity_transformation(degree: int) -> Transformation:
    return tuple(range(degree))


def compose(x: Transformation, y: Transformation) -> Transformation:
    """Apply x first, then y."""
    return tuple(y[k] for k in x)


def check_table(table, identity: int) -> None:
    """Raise InvalidMonoid unless `table` satisfies the monoid laws.

    Associativity is verified exhaustively (vectorized) up to order 512;
    larger tables are trusted (they are produced by closure).
    """
    n = len(table)
    if n == 0 or not 0 <= identity < n:
        raise InvalidMonoid("table is empty or the identity index is out of range")
    for row in table:
        if len(row) != n or any(not (0 <= v < n) for v in row):
            raise InvalidMonoid("table is not a square array of element indices")
    for i in range(n):
        if table[identity][i] != i or table[i][identity] != i:
            raise InvalidMonoid(f"identity law fails at element {i}")
    if n <= ASSOC_CHECK_CAP:
        t = np.asarray(table, dtype=np.int64)
        for i in range(n):
            if not np.array_equal(t[t[i], :], t[i, t]):
                raise InvalidMonoid(f"associativity fails with left factor {i}")


@dataclass(frozen=True, eq=False)
class FiniteMonoid:
    table: tuple
    identity: int = 0
    generators: dict = field(default_factory=dict)
    names: tuple | None = None

    def __post_init__(self):
        check_table(self.table, self.identity)
        if self.generators:
            reached = _closure_from(self.table, self.identity, self.generators.values())
            if len(reached) != self.order:
                raise InvalidMonoid("generators do not generate the monoid")

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def name_of(self, i: int) -> str:
        return self.names[i] if self.names else str(i)


def _closure_from(table, identity, generator_indices):
    seen = {identity}
    queue = deque([identity])
    gens = sorted(set(generator_indices))
    while queue:
        x = queue.popleft()
        for g in gens:
            y = table[x][g]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


@dataclass(frozen=True, eq=False)
class SyntacticMonoid:
    """Transition monoid of a minimal DFA, with the letter map and the
    image of the language."""
    monoid: FiniteMonoid
    eta: dict
    accepting_image: frozenset
    transformations: tuple  # element index -> transformation on dfa.states

    @property
    def alphabet(self) -> tuple:
        return tuple(sorted(self.eta))

    @property
    def order(self) -> int:
        return self.monoid.order

    def image_of_word(self, word: str) -> int:
        x = self.monoid.identity
        for a in word:
            x = self.monoid.table[x][self.eta[a]]
        return x


@dataclass(frozen=True)
class CayleyGraph:
    vertices: tuple
    edges: tuple  # (from, symbol, to), sorted by (from, symbol)


def transition_monoid(dfa: Dfa, cap: int = 5000) -> SyntacticMonoid:
    """Word-induced transformations on the states of `dfa`, closed under
    composition and numbered in BFS order from the identity (letters
    sorted).  The caller must pass a minimal DFA for the result to be the
    syntactic monoid.
    """
    position = {q: i for i, q in enumerate(dfa.states)}
    letters = sorted(dfa.alphabet)
    letter_trans = {
        a: tuple(position[dfa.delta[(q, a)]] for q in dfa.states) for a in letters
    }
    ident = identity_transformation(dfa.n_states)
    elements = [ident]
    index = {ident: 0}
    words = [""]
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for a in letters:
            t = compose(elements[i], letter_trans[a])
            if t not in index:
                if len(elements) >= cap:
                    raise MonoidTooLarge(f"transition monoid exceeds cap {cap}")
                index[t] = len(elements)
                elements.append(t)
                words.append(words[i] + a)
                queue.append(index[t])
    n = len(elements)
    table = tuple(
        tuple(index[compose(elements[i], elements[j])] for j in range(n))
        for i in range(n)
    )
    eta = {a: index[letter_trans[a]] for a in letters}
    names = tuple("e" if w == "" else w for w in words)
    initial_pos = position[dfa.initial]
    accepting_pos = {position[q] for q in dfa.accepting}
    accepting_image = frozenset(
        i for i, t in enumerate(elements) if t[initial_pos] in accepting_pos
    )
    monoid = FiniteMonoid(table, 0, dict(eta), names)
    return SyntacticMonoid(monoid, eta, accepting_image, tuple(elements))


def cayley_graph(m: SyntacticMonoid | FiniteMonoid) -> CayleyGraph:
    """Right Cayley graph over the letter generators."""
    monoid = m.monoid if isinstance(m, SyntacticMonoid) else m
    generators = m.eta if isinstance(m, SyntacticMonoid) else monoid.generators
    if not generators:
        raise InvalidMonoid("Cayley graph needs letter-labeled generators")
    edges = tuple(
        (i, a, monoid.table[i][generators[a]])
        for i in range(monoid.order)
        for a in sorted(generators)
    )
    return CayleyGraph(tuple(range(monoid.order)), edges)


def cayley_to_dot(graph: CayleyGraph, names=None) -> str:
    def label(v):
        return names[v] if names else str(v)

    lines = ["digraph cayley {"]
    for v in graph.vertices:
        lines.append(f'  {v} [label="{label(v)}"];')
    for src, sym, dst in graph.edges:
        lines.append(f'  {src} -> {dst} [label="{sym}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def find_zero(m: FiniteMonoid):
    """The unique absorbing element, or None."""
    for i in range(m.order):
        if all(m.table[i][s] == i and m.table[s][i] == i for s in range(m.order)):
            return i
    return None


def principal_ideal(m: FiniteMonoid, x: int) -> frozenset:
    """Two-sided principal ideal {s.x.t : s, t in M}."""
    left = {m.table[s][x] for s in range(m.order)}
    return frozenset(m.table[a][t] for a in left for t in range(m.order))


def is_ideal(m: FiniteMonoid, candidate) -> bool:
    """True iff non-empty and closed under multiplication by M on both sides."""
    ideal = set(candidate)
    if not ideal or not ideal <= set(range(m.order)):
        return False
    return all(
        m.table[i][s] in ideal and m.table[s][i] in ideal
        for i in ideal for s in range(m.order)
    )


def rees_factor(m: FiniteMonoid, ideal) -> FiniteMonoid:
    """Collapse a two-sided ideal to a single zero element."""
    if not is_ideal(m, ideal):
        raise NotAnIdeal(f"{sorted(ideal)} is not an ideal")
    ideal = set(ideal)
    survivors = [i for i in range(m.order) if i not in ideal]
    new = {old: k for k, old in enumerate(survivors)}
    sink = len(survivors)

    def image(i, j):
        p = m.table[i][j]
        return new[p] if p not in ideal else sink

    table = [[image(i, j) for j in survivors] + [sink] for i in survivors]
    table.append([sink] * (sink + 1))
    names = None
    if m.names:
        names = tuple(m.names[i] for i in survivors) + ("ι",)
    # when ideal == M the sink itself is the identity
    identity = new.get(m.identity, sink)
    return FiniteMonoid(tuple(tuple(r) for r in table), identity, {}, names)


def _check_action(m: FiniteMonoid, n: FiniteMonoid, action) -> None:
    if len(action) != n.order or any(len(row) != m.order for row in action):
        raise NotAnAction("action table must be |N| x |M|")
    for x in range(m.order):
        if action[n.identity][x] != x:
            raise NotAnAction(f"identity of N moves element {x}")
    for j1 in range(n.order):
        for j2 in range(n.order):
            for x in range(m.order):
                if action[j1][action[j2][x]] != action[n.table[j1][j2]][x]:
                    raise NotAnAction(f"action law fails at ({j1}, {j2}, {x})")
    for j in range(n.order):
        # non-unitary actions break the right identity law of the product
        if action[j][m.identity] != m.identity:
            raise NotAnAction(f"element {j} of N does not fix the identity of M")
        for x in range(m.order):
            for y in range(m.order):
                if action[j][m.table[x][y]] != m.table[action[j][x]][action[j][y]]:
                    raise NotDistributive(f"distributivity fails at ({j}, {x}, {y})")


def semidirect_product(m: FiniteMonoid, n: FiniteMonoid, action) -> FiniteMonoid:
    """Semidirect product on M x N:
    (m1, n1).(m2, n2) = (m1 . (n1 * m2), n1 . n2),
    where action[n][m] tabulates n * m.  Pair (i, j) gets index i*|N| + j,
    so the identity lands at 0."""
    _check_action(m, n, action)

    def idx(i, j):
        return i * n.order + j

    table = [[0] * (m.order * n.order) for _ in range(m.order * n.order)]
    for i1, j1 in product(range(m.order), range(n.order)):
        for i2, j2 in product(range(m.order), range(n.order)):
            table[idx(i1, j1)][idx(i2, j2)] = idx(
                m.table[i1][action[j1][i2]], n.table[j1][j2]
            )
    names = tuple(
        f"({m.name_of(i)},{n.name_of(j)})"
        for i in range(m.order) for j in range(n.order)
    )
    return FiniteMonoid(tuple(tuple(r) for r in table), 0, {}, names)


def trivial_action(m: FiniteMonoid, n: FiniteMonoid):
    return [list(range(m.order)) for _ in range(n.order)]


def direct_product(m: FiniteMonoid, n: FiniteMonoid) -> FiniteMonoid:
    return semidirect_product(m, n, trivial_action(m, n))


def function_monoid(m: FiniteMonoid, copies: int, cap: int = 4096) -> FiniteMonoid:
    """Pointwise power M^copies; elements are value tuples in lexicographic
    order, so the constant identity lands at index 0."""
    order = m.order ** copies
    if order > cap:
        raise TooLarge(f"|M|^{copies} = {order} exceeds cap {cap}")
    elements = list(product(range(m.order), repeat=copies))
    index = {f: i for i, f in enumerate(elements)}
    table = tuple(
        tuple(index[tuple(m.table[f[y]][g[y]] for y in range(copies))] for g in elements)
        for f in elements
    )
    names = tuple("[" + ",".join(m.name_of(v) for v in f) + "]" for f in elements)
    return FiniteMonoid(table, 0, {}, names)


def make_named(kind: str, k: int) -> FiniteMonoid:
    """Standard families: cyclic C_K, right/left zero adjunctions U_K and
    Ū_K, symmetric S_K, full transformation T_K."""
    if k < 1:
        raise TooLarge("K must be at least 1")
    if kind == "cyclic":
        table = tuple(tuple((i + j) % k for j in range(k)) for i in range(k))
        return FiniteMonoid(table, 0, {}, tuple(str(i) for i in range(k)))
    if kind == "right_zero":
        table = tuple(
            tuple(j if j != 0 else i for j in range(k + 1)) for i in range(k + 1)
        )
        return FiniteMonoid(table, 0, {}, ("e",) + tuple(f"ι{i}" for i in range(1, k + 1)))
    if kind == "left_zero":
        table = tuple(
            tuple(i if i != 0 else j for j in range(k + 1)) for i in range(k + 1)
        )
        return FiniteMonoid(table, 0, {}, ("e",) + tuple(f"ι{i}" for i in range(1, k + 1)))
    if kind in ("symmetric", "full_transformation"):
        if k > 6:
            raise TooLarge(f"{kind} monoid of degree {k} exceeds the order cap")
        if kind == "symmetric":
            rest = sorted(p for p in permutations(range(k)) if p != identity_transformation(k))
        else:
            rest = sorted(
                t for t in product(range(k), repeat=k) if t != identity_transformation(k)
            )
        elements = [identity_transformation(k)] + rest
        index = {t: i for i, t in enumerate(elements)}
        table = tuple(
            tuple(index[compose(x, y)] for y in elements) for x in elements
        )
        names = tuple("".join(map(str, t)) for t in elements)
        return FiniteMonoid(table, 0, {}, names)
    raise ValueError(f"unknown monoid kind {kind!r}")


def hom_image_check(src: FiniteMonoid, dst: FiniteMonoid, mapping) -> bool:
    """True iff `mapping` (element index -> element index) is a monoid
    homomorphism from src to dst."""
    if mapping[src.identity] != dst.identity:
        return False
    return all(
        mapping[src.table[x][y]] == dst.table[mapping[x]][mapping[y]]
        for x in range(src.order) for y in range(src.order)
    )


def syntactic_to_json(sm: SyntacticMonoid) -> dict:
    return {
        "order": sm.order,
        "identity": sm.monoid.identity,
        "table": [list(row) for row in sm.monoid.table],
        "generators": {a: sm.eta[a] for a in sorted(sm.eta)},
        "accepting_image": sorted(sm.accepting_image),
    }
