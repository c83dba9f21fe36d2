"""Periods of regular languages with respect to letter subsets.

A residual is a plain tuple (r_1, ..., r_n) with 0 <= r_i < P_i.  The
maximum period for a subset gamma is the gcd of the gamma-letter counts
over all closed walks of the Cayley graph; any divisor of it is a valid
period.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from itertools import product

from .dfa import Dfa
from .errors import (InternalNoPositiveCycle, InvalidPeriod,
                     PeriodTrivialWarning, UnknownSymbol)
from .monoid import CayleyGraph, SyntacticMonoid, cayley_graph


def residual_of_word(word: str, gammas, periods, alphabet=None):
    """(|word|_gamma_i mod P_i) for each i."""
    if alphabet is not None:
        known = set(alphabet)
        for a in word:
            if a not in known:
                raise UnknownSymbol(f"letter {a!r} not in alphabet {sorted(known)}")
    counts = []
    for gamma, p in zip(gammas, periods):
        members = set(gamma)
        counts.append(sum(1 for a in word if a in members) % p)
    return tuple(counts)


def strongly_connected_components(n: int, successors) -> list:
    """Tarjan's algorithm, iterative.  `successors[v]` lists out-neighbours.
    Components are returned as sorted vertex lists, in a deterministic order.
    """
    index = [None] * n
    low = [0] * n
    on_stack = [False] * n
    stack = []
    components = []
    counter = 0
    for root in range(n):
        if index[root] is not None:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            for i in range(pi, len(successors[v])):
                w = successors[v][i]
                if index[w] is None:
                    work[-1] = (v, i + 1)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                component = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    component.append(w)
                    if w == v:
                        break
                components.append(sorted(component))
    components.sort(key=lambda c: c[0])
    return components


def _component_gcd(component, weighted_edges) -> int:
    """gcd of cycle weights inside one SCC via spanning-tree potentials.

    Returns 0 when every cycle in the component has weight 0.
    """
    members = set(component)
    adjacency = {}
    for u, w, v in weighted_edges:
        if u in members and v in members:
            adjacency.setdefault(u, []).append((w, v))
    if not adjacency:
        return 0
    root = component[0]
    potential = {root: 0}
    queue = [root]
    while queue:
        u = queue.pop()
        for w, v in adjacency.get(u, ()):
            if v not in potential:
                potential[v] = potential[u] + w
                queue.append(v)
    g = 0
    for u, neighbours in adjacency.items():
        for w, v in neighbours:
            g = math.gcd(g, abs(potential[u] + w - potential[v]))
    return g


def max_period(m: SyntacticMonoid, gamma) -> int:
    """Greatest P such that |w|_gamma is a multiple of P for every word w
    labeling a closed walk of the Cayley graph."""
    gamma = set(gamma)
    if not gamma or not gamma <= set(m.alphabet):
        raise UnknownSymbol(f"gamma {sorted(gamma)} is not a non-empty subset of the alphabet")
    graph = cayley_graph(m)
    weighted = [(u, 1 if a in gamma else 0, v) for u, a, v in graph.edges]
    successors = [[] for _ in graph.vertices]
    for u, _, v in weighted:
        successors[u].append(v)
    g = 0
    for component in strongly_connected_components(len(graph.vertices), successors):
        g = math.gcd(g, _component_gcd(component, weighted))
    if g == 0:
        raise InternalNoPositiveCycle(
            "no closed walk with positive gamma-weight; impossible for a Cayley graph"
        )
    return g


@dataclass(frozen=True)
class PeriodSignature:
    alphabet: tuple
    gammas: tuple       # tuple of sorted letter tuples
    periods: tuple
    rho_bar: tuple      # element index -> residual tuple
    classes: dict       # residual tuple -> sorted tuple of element indices

    @property
    def n(self) -> int:
        return len(self.gammas)

    def residuals(self):
        """All residual vectors in lexicographic order."""
        return list(product(*(range(p) for p in self.periods)))

    def letter_residual(self, a: str):
        return tuple(
            (1 if a in set(g) else 0) % p for g, p in zip(self.gammas, self.periods)
        )

    def add(self, r1, r2):
        return tuple((x + y) % p for x, y, p in zip(r1, r2, self.periods))


def build_signature(m: SyntacticMonoid, gammas, periods=None) -> PeriodSignature:
    """Compute the residual map rho_bar and the classes N_r.

    Omitted periods default to the maximum period of each gamma; supplied
    periods must divide it (otherwise the classes would clash).
    """
    alphabet = m.alphabet
    gammas = tuple(tuple(sorted(set(g))) for g in gammas)
    for g in gammas:
        if not g or not set(g) <= set(alphabet):
            raise UnknownSymbol(f"gamma {list(g)} is not a non-empty subset of the alphabet")
    maxima = [max_period(m, g) for g in gammas]
    if periods is None:
        periods = tuple(maxima)
    else:
        periods = tuple(int(p) for p in periods)
        if len(periods) != len(gammas):
            raise InvalidPeriod("need one period per gamma")
        for p, pmax, g in zip(periods, maxima, gammas):
            if p < 1 or pmax % p != 0:
                raise InvalidPeriod(
                    f"period {p} for gamma {list(g)} does not divide the maximum period {pmax}"
                )
    if all(p == 1 for p in periods):
        warnings.warn("all periods are 1; the decomposition is degenerate",
                      PeriodTrivialWarning, stacklevel=2)
    sig = PeriodSignature(alphabet, gammas, periods, (), {})
    rho_bar = [None] * m.order
    rho_bar[m.monoid.identity] = tuple(0 for _ in periods)
    queue = [m.monoid.identity]
    while queue:
        x = queue.pop()
        for a in alphabet:
            y = m.monoid.table[x][m.eta[a]]
            r = sig.add(rho_bar[x], sig.letter_residual(a))
            if rho_bar[y] is None:
                rho_bar[y] = r
                queue.append(y)
            elif rho_bar[y] != r:
                # cannot happen once divisibility holds
                raise InvalidPeriod(f"residual clash at element {y}")
    classes = {r: [] for r in sig.residuals()}
    for i, r in enumerate(rho_bar):
        classes[r].append(i)
    classes = {r: tuple(v) for r, v in classes.items()}
    return PeriodSignature(alphabet, gammas, tuple(periods), tuple(rho_bar), classes)


def _as_plain_graph(graph):
    """(vertices, unlabeled edge list) from a CayleyGraph or a Dfa."""
    if isinstance(graph, CayleyGraph):
        return list(graph.vertices), [(u, v) for u, _, v in graph.edges]
    if isinstance(graph, Dfa):
        vertices = list(graph.states)
        edges = [(q, graph.delta[(q, a)]) for q in vertices for a in sorted(graph.alphabet)]
        return vertices, edges
    raise TypeError(f"expected CayleyGraph or Dfa, got {type(graph).__name__}")


def sink_periods(graph) -> list:
    """Sinks (SCCs without outgoing edges) with their periods, the gcd of
    their cycle lengths.  Vertices keep their original ids."""
    vertices, edges = _as_plain_graph(graph)
    position = {q: i for i, q in enumerate(vertices)}
    successors = [[] for _ in vertices]
    for u, v in edges:
        successors[position[u]].append(position[v])
    components = strongly_connected_components(len(vertices), successors)
    component_of = {}
    for k, comp in enumerate(components):
        for v in comp:
            component_of[v] = k
    results = []
    for k, comp in enumerate(components):
        members = set(comp)
        if any(component_of[w] != k for v in comp for w in successors[v]):
            continue
        if not any(w in members for v in comp for w in successors[v]):
            continue  # no internal edge, no closed walk
        weighted = [(v, 1, w) for v in comp for w in successors[v] if w in members]
        period = _component_gcd(comp, weighted)
        results.append((tuple(vertices[v] for v in comp), period))
    return results
