"""Groebner-basis engine over exact rationals, with the ideal operations built on it.

The public layer works with :class:`~uppercluster.poly.Polynomial` values
(rational coefficients).  Internally, Buchberger's algorithm runs on
content-stripped integer term dicts with pseudo-reduction, which only ever
rescales by positive integers and therefore computes the same ideal; reduced
bases are converted back to monic rational polynomials at the end.

S-pair bookkeeping uses the Gebauer-Moeller installation of the product and
chain criteria; pair selection follows the normal strategy (smallest lcm in
the active order, ties broken by index), so output is deterministic for
deterministic input.

Saturation by an element uses the Rabinowitsch trick: adjoin a fresh variable
t, add 1 - t*f, and eliminate t through a block order.  Monomial factors of f
are split off and handled one variable at a time, which keeps the adjoined
relation at the lowest possible degree.
"""

from __future__ import annotations

import heapq
import os
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

from .orders import DEGREVLEX, BlockOrder, MonomialOrder
from .poly import (
    Exponent,
    LaurentPolynomial,
    Polynomial,
    VariableContext,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
)

STEP_BUDGET_ENV = "UPPERCLUSTER_GB_STEP_BUDGET"


class GBBudgetExceededError(RuntimeError):
    """The configured S-pair reduction budget was exhausted."""


def _env_step_limit() -> int | None:
    raw = os.environ.get(STEP_BUDGET_ENV)
    if not raw:
        return None
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{STEP_BUDGET_ENV} must be an integer, got {raw!r}") from None


# ---------------------------------------------------------------------------
# integer kernel


def _support_mask(m: Exponent) -> int:
    mask = 0
    bit = 1
    for e in m:
        if e:
            mask |= bit
        bit <<= 1
    return mask


class _Gb:
    """A basis element: primitive integer poly with cached leading data."""

    __slots__ = ("lm", "key", "lc", "tail", "full", "mask")

    def __init__(self, full: dict[Exponent, int], keyf):
        lm = max(full, key=keyf)
        self.lm = lm
        self.key = keyf(lm)
        self.lc = full[lm]
        self.tail = {m: c for m, c in full.items() if m != lm}
        self.full = full
        self.mask = _support_mask(lm)


def _int_terms(p: Polynomial) -> dict[Exponent, int]:
    """Clear denominators and strip content; sign is not normalized here."""
    if not p.terms:
        return {}
    den = 1
    for c in p.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    out = {m: c.numerator * (den // c.denominator) for m, c in p.terms.items()}
    g = 0
    for v in out.values():
        g = gcd(g, v)
    if g > 1:
        out = {m: v // g for m, v in out.items()}
    return out


def _primitive(d: dict[Exponent, int], keyf) -> dict[Exponent, int]:
    """Divide by the content and make the leading coefficient positive."""
    g = 0
    for v in d.values():
        g = gcd(g, v)
    if d[max(d, key=keyf)] < 0:
        g = -g
    if g != 1:
        d = {m: v // g for m, v in d.items()}
    return d


def _nf_int(f: dict[Exponent, int], basis: Sequence[_Gb], keyf,
            negkeys: dict[Exponent, tuple[int, ...]] | None = None) -> dict[Exponent, int]:
    """Full pseudo normal form of f against basis; result is primitive.

    Only rescales by positive integers, so the zero test and the leading
    structure agree with the true normal form over the rationals.
    """
    if not f:
        return {}
    if negkeys is None:
        negkeys = {}
    work = dict(f)
    done: dict[Exponent, int] = {}
    heap: list[tuple[tuple[int, ...], Exponent]] = []
    for m in work:
        nk = negkeys.get(m)
        if nk is None:
            nk = tuple(-v for v in keyf(m))
            negkeys[m] = nk
        heap.append((nk, m))
    heapq.heapify(heap)
    pop, push = heapq.heappop, heapq.heappush
    scalings = 0
    while heap:
        _, m = pop(heap)
        c = work.pop(m, 0)
        if not c:
            continue
        mmask = _support_mask(m)
        red = None
        for g in basis:
            if g.mask & ~mmask:
                continue
            ok = True
            for a, b in zip(g.lm, m):
                if a > b:
                    ok = False
                    break
            if ok:
                red = g
                break
        if red is None:
            done[m] = c
            continue
        d = gcd(c, red.lc)
        a = red.lc // d
        if a < 0:
            a, d = -a, -d
        b = c // d
        if a != 1:
            for k in done:
                done[k] *= a
            for k in work:
                work[k] *= a
            scalings += 1
            if scalings >= 16:
                scalings = 0
                g0 = 0
                for v in done.values():
                    g0 = gcd(g0, v)
                    if g0 == 1:
                        break
                if g0 != 1:
                    for v in work.values():
                        g0 = gcd(g0, v)
                        if g0 == 1:
                            break
                if g0 > 1:
                    for k in done:
                        done[k] //= g0
                    for k in work:
                        work[k] //= g0
        shift = monomial_div(m, red.lm)
        for gm, gc in red.tail.items():
            nm = monomial_mul(gm, shift)
            prev = work.get(nm)
            if prev is None:
                work[nm] = -b * gc
                nk = negkeys.get(nm)
                if nk is None:
                    nk = tuple(-v for v in keyf(nm))
                    negkeys[nm] = nk
                push(heap, (nk, nm))
            else:
                v = prev - b * gc
                if v:
                    work[nm] = v
                else:
                    del work[nm]
    if not done:
        return {}
    return _primitive(done, keyf)


def _spoly(f: _Gb, g: _Gb, lcm: Exponent) -> dict[Exponent, int]:
    d = gcd(f.lc, g.lc)
    cf = g.lc // d
    cg = f.lc // d
    shift_f = monomial_div(lcm, f.lm)
    shift_g = monomial_div(lcm, g.lm)
    out: dict[Exponent, int] = {}
    for m, c in f.full.items():
        out[monomial_mul(m, shift_f)] = c * cf
    for m, c in g.full.items():
        nm = monomial_mul(m, shift_g)
        v = out.get(nm, 0) - c * cg
        if v:
            out[nm] = v
        else:
            out.pop(nm, None)
    return out


def _update_pairs(G: list[_Gb], P: dict[tuple[int, int], tuple[tuple[int, ...], Exponent]],
                  h: _Gb, keyf) -> dict[tuple[int, int], tuple[tuple[int, ...], Exponent]]:
    """Gebauer-Moeller pair update: add h, pruning by product and chain criteria."""
    t = len(G)
    lmh = h.lm
    newP: dict[tuple[int, int], tuple[tuple[int, ...], Exponent]] = {}
    for (i, j), (key, L) in P.items():
        if (not monomial_divides(lmh, L)
                or monomial_lcm(G[i].lm, lmh) == L
                or monomial_lcm(G[j].lm, lmh) == L):
            newP[(i, j)] = (key, L)
    groups: dict[Exponent, list[int]] = {}
    for i in range(t):
        groups.setdefault(monomial_lcm(G[i].lm, lmh), []).append(i)
    kept: list[Exponent] = []
    for L in sorted(groups, key=keyf):
        if all(not monomial_divides(K, L) for K in kept):
            kept.append(L)
    for L in kept:
        if not any(L == monomial_mul(G[i].lm, lmh) for i in groups[L]):
            newP[(min(groups[L]), t)] = (keyf(L), L)
    G.append(h)
    return newP


def _buchberger_int(gens: Iterable[dict[Exponent, int]], keyf,
                    step_limit: int | None) -> list[_Gb]:
    """Reduced-basis core; returns interreduced primitive elements sorted by lm."""
    seeds = []
    for d in gens:
        if d:
            d = _primitive(dict(d), keyf)
            seeds.append(d)
    seeds.sort(key=lambda d: (keyf(max(d, key=keyf)), len(d), sorted(d.items())))
    negkeys: dict[Exponent, tuple[int, ...]] = {}
    G: list[_Gb] = []
    P: dict[tuple[int, int], tuple[tuple[int, ...], Exponent]] = {}
    for d in seeds:
        r = _nf_int(d, G, keyf, negkeys)
        if r:
            P = _update_pairs(G, P, _Gb(r, keyf), keyf)
    steps = 0
    while P:
        ij = min(P, key=lambda p: (P[p][0], p))
        _, L = P.pop(ij)
        steps += 1
        if step_limit is not None and steps > step_limit:
            raise GBBudgetExceededError(
                f"Groebner step budget of {step_limit} exceeded")
        i, j = ij
        r = _nf_int(_spoly(G[i], G[j], L), G, keyf, negkeys)
        if r:
            P = _update_pairs(G, P, _Gb(r, keyf), keyf)

    # minimalize: drop elements whose lead is divisible by another lead
    minimal: list[_Gb] = []
    for g in sorted(G, key=lambda g: g.key):
        if not any(monomial_divides(h.lm, g.lm) for h in minimal):
            minimal.append(g)
    # interreduce tails
    reduced: list[_Gb] = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        r = _nf_int(g.full, others, keyf, negkeys)
        reduced.append(_Gb(r, keyf))
    reduced.sort(key=lambda g: g.key)
    return reduced


def _to_polynomial(d: Mapping[Exponent, int], ctx: VariableContext,
                   monic_lc: int | None = None) -> Polynomial:
    if monic_lc:
        return Polynomial(ctx, {m: Fraction(c, monic_lc) for m, c in d.items()})
    return Polynomial(ctx, {m: Fraction(c) for m, c in d.items()})


# ---------------------------------------------------------------------------
# public layer


def groebner_basis(gens: Sequence[Polynomial], order: MonomialOrder = DEGREVLEX,
                   step_limit: int | None = None) -> tuple[Polynomial, ...]:
    """Reduced, monic, auto-reduced Groebner basis of the given generators."""
    if not gens:
        return ()
    ctx = gens[0].context
    if step_limit is None:
        step_limit = _env_step_limit()
    keyf = order.key
    reduced = _buchberger_int((_int_terms(g) for g in gens), keyf, step_limit)
    return tuple(_to_polynomial(g.full, ctx, monic_lc=g.lc) for g in reduced)


class GroebnerIdeal:
    """An ideal with cached reduced Groebner bases, one per monomial order."""

    __slots__ = ("context", "generators", "_cache")

    def __init__(self, generators: Sequence[Polynomial],
                 context: VariableContext | None = None):
        gens = tuple(generators)
        if context is None:
            if not gens:
                raise ValueError("an empty generator list needs an explicit context")
            context = gens[0].context
        for g in gens:
            if g.context != context:
                raise ValueError("generators live in different contexts")
        self.context = context
        self.generators = gens
        self._cache: dict[MonomialOrder, tuple[Polynomial, ...]] = {}

    def basis(self, order: MonomialOrder = DEGREVLEX,
              step_limit: int | None = None) -> tuple[Polynomial, ...]:
        cached = self._cache.get(order)
        if cached is None:
            cached = groebner_basis(self.generators, order, step_limit)
            self._cache[order] = cached
        return cached

    def with_cached_basis(self, order: MonomialOrder,
                          basis: tuple[Polynomial, ...]) -> "GroebnerIdeal":
        ideal = GroebnerIdeal(basis if basis else (), context=self.context)
        ideal._cache[order] = basis
        return ideal

    def is_zero(self, order: MonomialOrder = DEGREVLEX) -> bool:
        return not self.basis(order)

    def verify_cache(self, order: MonomialOrder = DEGREVLEX) -> bool:
        """Mutual-membership check between generators and the cached basis."""
        keyf = order.key
        basis = self.basis(order)
        gb_elems = [_Gb(_int_terms(b), keyf) for b in basis if b]
        for g in self.generators:
            if g and _nf_int(_int_terms(g), gb_elems, keyf):
                return False
        gen_basis = _buchberger_int((_int_terms(g) for g in self.generators), keyf, None)
        for b in basis:
            if b and _nf_int(_int_terms(b), gen_basis, keyf):
                return False
        return True

    def __repr__(self) -> str:
        return f"<ideal with {len(self.generators)} generators over {self.context.names}>"


def normal_form(f: Polynomial, basis: Sequence[Polynomial],
                order: MonomialOrder = DEGREVLEX) -> Polynomial:
    """True normal form over the rationals: f minus the result lies in (basis),
    and no term of the result is divisible by a basis leading term."""
    keyf = order.key
    ctx = f.context
    reducers = []
    for g in basis:
        if not g:
            continue
        lm = max(g.terms, key=keyf)
        reducers.append((lm, g.terms[lm], {m: c for m, c in g.terms.items() if m != lm}))
    work = dict(f.terms)
    done: dict[Exponent, Fraction] = {}
    heap = [(tuple(-v for v in keyf(m)), m) for m in work]
    heapq.heapify(heap)
    while heap:
        _, m = heapq.heappop(heap)
        c = work.pop(m, None)
        if not c:
            continue
        hit = None
        for lm, lc, tail in reducers:
            if monomial_divides(lm, m):
                hit = (lm, lc, tail)
                break
        if hit is None:
            done[m] = c
            continue
        lm, lc, tail = hit
        factor = c / lc
        shift = monomial_div(m, lm)
        for gm, gc in tail.items():
            nm = monomial_mul(gm, shift)
            prev = work.get(nm)
            if prev is None:
                work[nm] = -factor * gc
                heapq.heappush(heap, (tuple(-v for v in keyf(nm)), nm))
            else:
                v = prev - factor * gc
                if v:
                    work[nm] = v
                else:
                    del work[nm]
    return Polynomial(ctx, done)


def ideal_membership(f: Polynomial, ideal: GroebnerIdeal,
                     order: MonomialOrder = DEGREVLEX) -> bool:
    if not f:
        return True
    basis = ideal.basis(order)
    elems = [_Gb(_int_terms(b), order.key) for b in basis if b]
    return not _nf_int(_int_terms(f), elems, order.key)


def ideal_equality(a: GroebnerIdeal, b: GroebnerIdeal,
                   order: MonomialOrder = DEGREVLEX) -> bool:
    """Reduced Groebner bases are canonical, so equality is basis equality."""
    if a.context != b.context:
        raise ValueError("ideal equality requires a shared context")
    return a.basis(order) == b.basis(order)


def contains_one(ideal: GroebnerIdeal, order: MonomialOrder = DEGREVLEX) -> bool:
    basis = ideal.basis(order)
    return len(basis) == 1 and basis[0].is_constant() and bool(basis[0])


def _fresh_name(ctx: VariableContext, stem: str) -> str:
    if stem not in ctx._index:
        return stem
    k = 0
    while f"{stem}{k}" in ctx._index:
        k += 1
    return f"{stem}{k}"


def _eliminate_front(gens: Sequence[Polynomial], ctx: VariableContext,
                     front: Sequence[str], inner: MonomialOrder,
                     step_limit: int | None) -> list[Polynomial]:
    """GB under a block order with `front` leading, then keep front-free rows.

    Returns polynomials back in the context `ctx` with front variables absent;
    the result is a reduced basis of the elimination ideal under `inner`.
    """
    k = len(front)
    rest = [n for n in ctx.names if n not in front]
    perm_ctx = VariableContext(tuple(front) + tuple(rest))
    order = BlockOrder(k, inner=inner)
    moved = [g.map_context(perm_ctx) for g in gens]
    keyf = order.key
    reduced = _buchberger_int((_int_terms(g) for g in moved), keyf, step_limit)
    out = []
    for g in reduced:
        if all(not any(m[:k]) for m in g.full):
            out.append(_to_polynomial(g.full, perm_ctx, monic_lc=g.lc).map_context(ctx))
    return out


def eliminate(ideal: GroebnerIdeal, elim_names: Sequence[str],
              inner: MonomialOrder = DEGREVLEX,
              step_limit: int | None = None) -> GroebnerIdeal:
    """Generators (a reduced basis) of the elimination ideal without elim_names."""
    ctx = ideal.context
    for n in elim_names:
        ctx.index(n)
    kept_names = tuple(n for n in ctx.names if n not in set(elim_names))
    cluster = [n for n in kept_names if n in ctx.names[:ctx.cluster_size]]
    mut = sum(1 for n in kept_names if n in ctx.mutable_names)
    froz = sum(1 for n in kept_names if n in ctx.frozen_names)
    # counts survive only if the eliminated variables were auxiliary
    if [n for n in kept_names[:mut + froz]] != cluster:
        mut = froz = 0
    small_ctx = VariableContext(kept_names, mut, froz)
    basis = _eliminate_front(ideal.generators, ctx, list(elim_names), inner, step_limit)
    projected = tuple(b.map_context(small_ctx) for b in basis)
    out = GroebnerIdeal(projected, context=small_ctx)
    out._cache[inner] = projected
    return out


def _rabinowitsch(gens: Sequence[Polynomial], ctx: VariableContext, f: Polynomial,
                  inner: MonomialOrder, step_limit: int | None) -> list[Polynomial]:
    t = _fresh_name(ctx, "_t")
    big = ctx.with_tags([t])
    tvar = Polynomial.variable(big, t)
    lifted = [g.map_context(big) for g in gens]
    lifted.append(Polynomial.constant(big, 1) - tvar * f.map_context(big))
    basis = _eliminate_front(lifted, big, [t], inner, step_limit)
    return [b.map_context(ctx) for b in basis]


def saturate_element(ideal: GroebnerIdeal, f: Polynomial,
                     order: MonomialOrder = DEGREVLEX,
                     step_limit: int | None = None) -> GroebnerIdeal:
    """The saturation (I : f^infinity), via Rabinowitsch adjunction.

    A monomial factor of f is split off and saturated one variable at a time
    before the non-monomial part is handled, which is equivalent because
    saturating by a product is saturating by each factor in turn.
    """
    if not f:
        raise ValueError("cannot saturate by the zero polynomial")
    ctx = ideal.context
    if f.context != ctx:
        raise ValueError("saturating element lives in a different context")
    gens: Sequence[Polynomial] = ideal.basis(order, step_limit)
    mono = f.min_exponents()
    _, core = f.shift(tuple(-e for e in mono)).content_and_primitive() if any(mono) \
        else f.content_and_primitive()
    for i, e in enumerate(mono):
        if e:
            gens = _rabinowitsch(gens, ctx, Polynomial.variable(ctx, i), order, step_limit)
    if not core.is_constant():
        gens = _rabinowitsch(gens, ctx, core, order, step_limit)
    out = GroebnerIdeal(tuple(gens), context=ctx)
    out._cache[order] = tuple(gens)
    return out


def intersect(a: GroebnerIdeal, b: GroebnerIdeal,
              order: MonomialOrder = DEGREVLEX,
              step_limit: int | None = None) -> GroebnerIdeal:
    """Generators of the intersection, via t*I + (1-t)*J and elimination of t."""
    if a.context != b.context:
        raise ValueError("intersection requires a shared context")
    ctx = a.context
    t = _fresh_name(ctx, "_t")
    big = ctx.with_tags([t])
    tvar = Polynomial.variable(big, t)
    one_minus_t = Polynomial.constant(big, 1) - tvar
    gens = [tvar * g.map_context(big) for g in a.generators if g]
    gens += [one_minus_t * g.map_context(big) for g in b.generators if g]
    if not gens:
        return GroebnerIdeal((), context=ctx)
    basis = _eliminate_front(gens, big, [t], order, step_limit)
    out = GroebnerIdeal(tuple(p.map_context(ctx) for p in basis), context=ctx)
    out._cache[order] = out.generators
    return out


def saturate_ideal(i: GroebnerIdeal, j: GroebnerIdeal,
                   order: MonomialOrder = DEGREVLEX,
                   step_limit: int | None = None) -> GroebnerIdeal:
    """The saturation (I : J^infinity) = intersection over generators g of J
    of (I : g^infinity)."""
    gens = [g for g in j.generators if g]
    if not gens:
        raise ValueError("cannot saturate by the zero ideal")
    sats = [saturate_element(i, g, order, step_limit) for g in gens]
    acc = sats[0]
    base = i.basis(order, step_limit)
    for s in sats[1:]:
        if acc.basis(order) == base:
            break
        acc = intersect(acc, s, order, step_limit)
    return acc


# ---------------------------------------------------------------------------
# subalgebra membership over a Laurent coefficient ring


class SubalgebraTester:
    """Decides membership in the algebra generated by Laurent polynomials.

    The coefficient ring is the Laurent ring of the frozen variables of the
    cluster context.  Inverse variables are adjoined with v*vbar - 1 relations
    and one tag per generator with tag - generator; a block order eliminates
    the mutable cluster variables and their inverses, so a query's normal form
    lies in the tag/coefficient subring exactly when it is a member.  The
    normal form, rewritten in the tag names, is the membership witness.

    Building the tester computes one Groebner basis; individual queries are
    then single normal-form computations.
    """

    def __init__(self, generators: Sequence[LaurentPolynomial],
                 ctx: VariableContext, tag_names: Sequence[str],
                 order: MonomialOrder = DEGREVLEX,
                 step_limit: int | None = None,
                 hints: Sequence[Polynomial] = ()):
        if len(tag_names) != len(generators):
            raise ValueError("one tag name per generator is required")
        self.cluster_ctx = ctx
        m = ctx.mutable_count
        self.generators = tuple(generators)
        self.tag_names = tuple(tag_names)
        mut = list(ctx.mutable_names)
        frozen = list(ctx.frozen_names)
        self._xinv = [f"_inv_{n}" for n in mut]
        self._finv = [f"{n}_inv" for n in frozen]
        self._tags = [f"_tag{i}" for i in range(len(generators))]
        names = tuple(mut + self._xinv + frozen + self._finv + self._tags)
        self.big = VariableContext(names)
        self.witness_ctx = VariableContext(
            tuple(frozen) + tuple(self._finv) + tuple(tag_names),
            0, len(frozen))

        inv_of = {}
        for n, v in zip(mut, self._xinv):
            inv_of[n] = v
        for n, v in zip(frozen, self._finv):
            inv_of[n] = v
        self._inv_of = inv_of

        big = self.big
        rels = []
        for n, v in list(zip(mut, self._xinv)) + list(zip(frozen, self._finv)):
            rels.append(Polynomial.variable(big, n) * Polynomial.variable(big, v)
                        - Polynomial.constant(big, 1))
        for tag, gen in zip(self._tags, generators):
            rels.append(Polynomial.variable(big, tag) - self._embed(gen))
        # hints are known graph-ideal members; each is re-certified by exact
        # substitution before use, so they can only speed the basis up
        for h in hints:
            if not self._graph_image(h):
                rels.append(h.map_context(big))
        self._elim_count = 2 * m
        self._order = BlockOrder(2 * m, inner=order)
        keyf = self._order.key
        self._basis = _buchberger_int((_int_terms(r) for r in rels), keyf,
                                      step_limit if step_limit is not None
                                      else _env_step_limit())
        self._basis_polys = tuple(
            _to_polynomial(g.full, big, monic_lc=g.lc) for g in self._basis)

    def _graph_image(self, p: Polynomial) -> LaurentPolynomial:
        """Substitute tags by generators and inverses by inverses, exactly."""
        from .poly import PolyFraction, fraction_is_laurent, substitute

        ctx = self.cluster_ctx
        one = Polynomial.constant(ctx, 1)
        assignments = {}
        for name, inv in self._inv_of.items():
            assignments[inv] = PolyFraction(one, Polynomial.variable(ctx, name))
        for tag, gen in zip(self._tags, self.generators):
            assignments[tag] = gen.as_fraction()
        frac = substitute(LaurentPolynomial.from_polynomial(p), assignments, ctx)
        img = fraction_is_laurent(frac, ctx.names[: ctx.cluster_size])
        if img is None:
            raise ValueError("hint does not map into the Laurent ring")
        return img

    def _embed(self, g: LaurentPolynomial) -> Polynomial:
        """Rewrite a Laurent polynomial with explicit inverse variables."""
        num = g.numerator.map_context(self.big)
        inv = [0] * len(self.big)
        for i, e in enumerate(g.denominator):
            if e:
                inv[self.big.index(self._inv_of[g.context.names[i]])] = e
        return num.shift(tuple(inv))

    def witness(self, g: LaurentPolynomial) -> Polynomial | None:
        """The witness polynomial in the tag variables, or None for non-members."""
        nf = normal_form(self._embed(g), self._basis_polys, self._order)
        bound = 2 * self.cluster_ctx.mutable_count
        if any(any(m[:bound]) for m in nf.terms):
            return None
        rename = dict(zip(self._tags, self.tag_names))
        return nf.map_context(self.witness_ctx, rename)


def subalgebra_membership(g: LaurentPolynomial,
                          generators: Sequence[LaurentPolynomial],
                          ctx: VariableContext,
                          tag_names: Sequence[str] | None = None,
                          order: MonomialOrder = DEGREVLEX,
                          step_limit: int | None = None) -> Polynomial | None:
    """One-shot membership test; see :class:`SubalgebraTester`."""
    if tag_names is None:
        tag_names = [f"g{i}" for i in range(len(generators))]
    tester = SubalgebraTester(generators, ctx, tag_names, order, step_limit)
    return tester.witness(g)
