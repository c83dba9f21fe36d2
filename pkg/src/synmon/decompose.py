"""Canonical semidirect-product decomposition of a syntactic monoid.

Every element t is mapped to Can(t) = (f_t, rho_bar(t)) where f_t assigns
to each residual r a transformation of degree K = max_r |N_r|:

    f_t(r)(k) = theta_{r+rho_bar(t)}^{-1}( theta_r(k) . t )   for k < |N_r|
    f_t(r)(k) = k                                             otherwise

with theta_r the ascending enumeration of the class N_r.  Products follow
(f, r).(g, r') = (f . (r (*) g), r + r') with (r (*) g)(c) = g(c + r) and
pointwise left-to-right composition in the first component.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .dfa import Dfa, block_dfa, minimize
from .errors import (BlockLengthError, ScopeError, UnknownSymbol,
                     VerificationFailure)
from .monoid import (FiniteMonoid, SyntacticMonoid, Transformation, compose,
                     hom_image_check, identity_transformation,
                     transition_monoid)
from .periods import PeriodSignature


@dataclass(frozen=True)
class CanonicalDecomposition:
    m: SyntacticMonoid
    signature: PeriodSignature
    K: int
    theta: dict    # residual -> ascending tuple of element indices (N_r)
    can_f: tuple   # element t -> {residual: Transformation of degree K}

    @property
    def residuals(self):
        return self.signature.residuals()

    def rho(self, t: int):
        return self.signature.rho_bar[t]

    def target_order(self) -> int:
        g = 1
        for p in self.signature.periods:
            g *= p
        return (self.K ** self.K) ** g * g


@dataclass(frozen=True)
class VerificationReport:
    homomorphism: bool
    injective: bool
    residual_condition: bool

    @property
    def ok(self) -> bool:
        return self.homomorphism and self.injective and self.residual_condition


@dataclass(frozen=True)
class ResidualMonoid:
    r: int
    transformations: tuple
    monoid: FiniteMonoid
    index: dict  # Transformation -> element index

    @property
    def order(self) -> int:
        return self.monoid.order


@dataclass(frozen=True)
class LwRecognizer:
    w: str
    r: int
    monoid: ResidualMonoid
    block_images: dict       # block string -> Transformation
    accepting: frozenset     # indices into `monoid`

    @property
    def accepting_transformations(self) -> frozenset:
        return frozenset(self.monoid.transformations[i] for i in self.accepting)


@dataclass(frozen=True)
class WreathEmbedding:
    K: int
    G: tuple                 # cyclic group orders
    phi: dict                # (f_t(0), rho_bar(t)) -> t
    psi: dict                # Can(t) key -> t
    equivariant: bool
    rho_bar_surjective: bool


def canonical_decomposition(m: SyntacticMonoid,
                            sig: PeriodSignature) -> CanonicalDecomposition:
    """Build Can and verify it is an injective homomorphism before returning."""
    residuals = sig.residuals()
    theta = {r: sig.classes[r] for r in residuals}
    theta_inv = {r: {t: k for k, t in enumerate(theta[r])} for r in residuals}
    big_k = max(len(theta[r]) for r in residuals)
    table = m.monoid.table
    can_f = []
    for t in range(m.order):
        shift = sig.rho_bar[t]
        f_t = {}
        for r in residuals:
            target = theta_inv[sig.add(r, shift)]
            members = theta[r]
            f_t[r] = tuple(
                target[table[members[k]][t]] if k < len(members) else k
                for k in range(big_k)
            )
        can_f.append(f_t)
    dec = CanonicalDecomposition(m, sig, big_k, theta, tuple(can_f))
    report = verify_canonical(dec)
    if not report.ok:
        raise VerificationFailure(f"canonical homomorphism check failed: {report}")
    return dec


def can_product(dec: CanonicalDecomposition, s: int, s2: int):
    """Semidirect product Can(s).Can(s2) computed in the target monoid:
    first component (r, k) -> f_{s2}(r + rho(s))(f_s(r)(k))."""
    sig = dec.signature
    rho_s = sig.rho_bar[s]
    f = {
        r: compose(dec.can_f[s][r], dec.can_f[s2][sig.add(r, rho_s)])
        for r in dec.residuals
    }
    return f, sig.add(rho_s, sig.rho_bar[s2])


def _can_key(dec: CanonicalDecomposition, t: int):
    return (tuple(dec.can_f[t][r] for r in dec.residuals), dec.rho(t))


def verify_canonical(dec: CanonicalDecomposition) -> VerificationReport:
    """Exhaustive check: homomorphism over all pairs, injectivity, and the
    letter residual condition.

    The homomorphism identity is checked on every class-carrying slot
    k < |N_r| of every residual r; those slots determine the embedding (the
    identity pins the image of each class, and injectivity reads slot 0 of
    the zero residual).  The inert k -> k padding above |N_r| is a fixed
    convention, not part of the class action, and is excluded: composing
    across residuals whose classes differ in size drags padding slots of
    one class through class-carrying slots of another, so raw equality of
    the padded transformations is unattainable in general.
    """
    sig = dec.signature
    table = dec.m.monoid.table
    homomorphism = True
    for s in range(dec.m.order):
        rho_s = sig.rho_bar[s]
        for s2 in range(dec.m.order):
            t = table[s][s2]
            if sig.add(rho_s, sig.rho_bar[s2]) != sig.rho_bar[t]:
                homomorphism = False
                break
            for r in dec.residuals:
                shifted = dec.can_f[s2][sig.add(r, rho_s)]
                left = dec.can_f[s][r]
                expected = dec.can_f[t][r]
                if any(shifted[left[k]] != expected[k] for k in range(len(dec.theta[r]))):
                    homomorphism = False
                    break
            if not homomorphism:
                break
        if not homomorphism:
            break
    injective = len({_can_key(dec, t) for t in range(dec.m.order)}) == dec.m.order
    residual_condition = all(
        sig.rho_bar[dec.m.eta[a]] == sig.letter_residual(a) for a in dec.m.alphabet
    )
    return VerificationReport(homomorphism, injective, residual_condition)


def _require_full_alphabet(dec: CanonicalDecomposition) -> int:
    sig = dec.signature
    if sig.n != 1 or tuple(sig.gammas[0]) != tuple(sig.alphabet):
        raise ScopeError("residual monoids need a single period over the full alphabet")
    return sig.periods[0]


def residual_monoid(dec: CanonicalDecomposition, r: int) -> ResidualMonoid:
    """T_r = {f_t(r) : rho_bar(t) = 0}, a monoid under left-to-right
    composition.  Element 0 is the identity transformation."""
    period = _require_full_alphabet(dec)
    if not 0 <= r < period:
        raise ScopeError(f"residual {r} out of range for period {period}")
    zero = tuple(0 for _ in dec.signature.periods)
    transformations = []
    index = {}
    for t in dec.signature.classes[zero]:
        tau = dec.can_f[t][(r,)]
        if tau not in index:
            index[tau] = len(transformations)
            transformations.append(tau)
    n = len(transformations)
    table = tuple(
        tuple(index[compose(x, y)] for y in transformations) for x in transformations
    )
    names = tuple(
        "e" if tau == identity_transformation(dec.K) else "(" + ",".join(map(str, tau)) + ")"
        for tau in transformations
    )
    monoid = FiniteMonoid(table, 0, {}, names)
    return ResidualMonoid(r, tuple(transformations), monoid, index)


def _blocks(alphabet, period: int) -> list:
    blocks = [""]
    for _ in range(period):
        blocks = [b + a for b in blocks for a in sorted(alphabet)]
    return blocks


def lw_recognizer(dec: CanonicalDecomposition, w: str) -> LwRecognizer:
    """Recognizer for the block language L_w = {u in (Sigma^P)* : wu in L}."""
    period = _require_full_alphabet(dec)
    if len(w) >= period:
        raise ScopeError(f"prefix length {len(w)} must be below the period {period}")
    for a in w:
        if a not in dec.m.eta:
            raise UnknownSymbol(f"letter {a!r} not in alphabet")
    r = len(w)
    monoid = residual_monoid(dec, r)
    block_images = {
        b: dec.can_f[dec.m.image_of_word(b)][(r,)]
        for b in _blocks(dec.signature.alphabet, period)
    }
    prefix_pos = dec.theta[(r,)].index(dec.m.image_of_word(w))
    accepting = frozenset(
        monoid.index[tau]
        for tau in monoid.transformations
        if dec.theta[(r,)][tau[prefix_pos]] in dec.m.accepting_image
    )
    return LwRecognizer(w, r, monoid, block_images, accepting)


def lw_member(rec: LwRecognizer, blocks) -> bool:
    """Membership of a block word; equals DFA membership of w + blocks."""
    tau = identity_transformation(len(next(iter(rec.block_images.values()))))
    length = len(next(iter(rec.block_images)))
    for b in blocks:
        if len(b) != length:
            raise BlockLengthError(f"block {b!r} does not have length {length}")
        if b not in rec.block_images:
            raise UnknownSymbol(f"{b!r} is not a block over the alphabet")
        tau = compose(tau, rec.block_images[b])
    return rec.monoid.index[tau] in rec.accepting


def syntactic_monoid_of_lw(dfa: Dfa, w: str, period: int,
                           cap: int = 5000) -> SyntacticMonoid:
    """Syntactic monoid of L_w over the alphabet of length-`period` blocks,
    via the minimized block DFA."""
    if len(w) >= period:
        raise ScopeError(f"prefix length {len(w)} must be below the period {period}")
    return transition_monoid(minimize(block_dfa(dfa, w, period)), cap=cap)


@dataclass(frozen=True)
class LwQuotientReport:
    well_defined: bool
    surjective: bool
    homomorphism: bool
    mapping: tuple | None  # T_r element index -> M_{L_w} element index

    @property
    def ok(self) -> bool:
        return self.well_defined and self.surjective and self.homomorphism


def lw_quotient(dec: CanonicalDecomposition, dfa: Dfa, w: str) -> LwQuotientReport:
    """Check that eta_w(u) -> eta_{L_w}(u) is a well-defined surjection from
    T_{rho(w)} onto the independently computed syntactic monoid of L_w."""
    period = _require_full_alphabet(dec)
    rec = lw_recognizer(dec, w)
    lw_m = syntactic_monoid_of_lw(dfa, w, period)
    t_m = rec.monoid
    mapping = {0: 0}
    queue = [0]
    well_defined = True
    while queue and well_defined:
        x = queue.pop()
        y = mapping[x]
        for b in sorted(rec.block_images):
            x2 = t_m.monoid.table[x][t_m.index[rec.block_images[b]]]
            y2 = lw_m.monoid.table[y][lw_m.eta[b]]
            if x2 not in mapping:
                mapping[x2] = y2
                queue.append(x2)
            elif mapping[x2] != y2:
                well_defined = False
                break
    if not well_defined or len(mapping) != t_m.order:
        return LwQuotientReport(False, False, False, None)
    as_list = tuple(mapping[i] for i in range(t_m.order))
    surjective = set(as_list) == set(range(lw_m.order))
    homomorphism = hom_image_check(t_m.monoid, lw_m.monoid, as_list)
    return LwQuotientReport(well_defined, surjective, homomorphism, as_list)


def wreath_divisor(dec: CanonicalDecomposition) -> WreathEmbedding:
    """Equivariant pair (phi, psi) witnessing that the syntactic monoid,
    acting on itself, divides the wreath product of T_K with the residual
    group; verified exhaustively.

    phi reads a point of T_K x G back into the monoid:
    phi(tau, c) = theta_c(tau(position of the identity in N_0)), and the
    wreath action (tau, c) * (g, r) = (tau then g(c), c + r) must agree
    with right multiplication: phi(x * m) = phi(x) . psi(m).
    """
    sig = dec.signature
    zero = tuple(0 for _ in sig.periods)
    e_pos = dec.theta[zero].index(dec.m.monoid.identity)
    phi = {}
    for t in range(dec.m.order):
        key = (dec.can_f[t][zero], dec.rho(t))
        if key in phi:
            raise VerificationFailure("first-coordinate map is not injective")
        phi[key] = t

    def phi_formula(tau, c):
        return dec.theta[c][tau[e_pos]]

    psi = {_can_key(dec, t): t for t in range(dec.m.order)}
    table = dec.m.monoid.table
    for (x1, c), t in phi.items():
        if phi_formula(x1, c) != t:
            raise VerificationFailure(f"phi formula disagrees at element {t}")
        for s in range(dec.m.order):
            g_c = dec.can_f[s][c]
            moved = compose(x1, g_c)
            if phi_formula(moved, sig.add(c, dec.rho(s))) != table[t][s]:
                raise VerificationFailure(
                    f"wreath action disagrees with multiplication at ({t}, {s})"
                )
    surjective = set(sig.rho_bar) == set(sig.residuals())
    return WreathEmbedding(dec.K, sig.periods, phi, psi, True, surjective)


def decomposition_to_json(dec: CanonicalDecomposition,
                          report: VerificationReport) -> dict:
    def rkey(r):
        return ",".join(map(str, r))

    return {
        "K": dec.K,
        "G": list(dec.signature.periods),
        "theta": {rkey(r): list(dec.theta[r]) for r in dec.residuals},
        "can": {
            str(t): {
                "f": {rkey(r): list(dec.can_f[t][r]) for r in dec.residuals},
                "r": list(dec.rho(t)),
            }
            for t in range(dec.m.order)
        },
        "verified": report.ok,
    }
