"""Exact sparse multivariate polynomial and Laurent-polynomial arithmetic.

Representation conventions used throughout the package:

* A monomial is an exponent tuple ``(e_0, ..., e_{k-1})``, one entry per
  variable of the active :class:`VariableContext`.  Exponents are nonnegative
  in polynomial positions; negative exponents never appear inside a
  :class:`Polynomial` and are expressed through the denominator monomial of a
  :class:`LaurentPolynomial` instead.
* A polynomial is a ``dict`` from exponent tuples to ``Fraction``
  coefficients.  The zero polynomial is the empty dict; stored coefficients
  are never zero.
* All values are immutable after construction and all operations are pure,
  so they are safe to share freely.

No floating point is used anywhere; coefficients are exact rationals over
arbitrary-precision integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, Mapping

Exponent = tuple[int, ...]


class ContextMismatchError(ValueError):
    """Raised when operands belong to different variable contexts."""


@dataclass(frozen=True)
class VariableContext:
    """An ordered set of variable names with a mutable/frozen/tag split.

    The first ``mutable_count`` names are mutable cluster variables, the next
    ``frozen_count`` are frozen cluster variables, and anything after that is
    auxiliary (formal inverses, tag generators, elimination variables).  The
    ordering is fixed for the lifetime of the context.
    """

    names: tuple[str, ...]
    mutable_count: int = 0
    frozen_count: int = 0
    _index: dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")
        if not (0 <= self.mutable_count
                and self.mutable_count + self.frozen_count <= len(self.names)):
            raise ValueError("inconsistent mutable/frozen counts")
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(self.names)})

    def __len__(self) -> int:
        return len(self.names)

    @property
    def tag_count(self) -> int:
        return len(self.names) - self.mutable_count - self.frozen_count

    @property
    def cluster_size(self) -> int:
        """Number of genuine cluster variables (mutable plus frozen)."""
        return self.mutable_count + self.frozen_count

    @property
    def mutable_names(self) -> tuple[str, ...]:
        return self.names[: self.mutable_count]

    @property
    def frozen_names(self) -> tuple[str, ...]:
        return self.names[self.mutable_count : self.cluster_size]

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r} in context {self.names}") from None

    def with_tags(self, extra: Iterable[str]) -> "VariableContext":
        """Return a context with additional auxiliary names appended."""
        return VariableContext(self.names + tuple(extra),
                               self.mutable_count, self.frozen_count)

    def zero_exps(self) -> Exponent:
        return (0,) * len(self.names)


def _check_context(a: "Polynomial", b: "Polynomial") -> None:
    if a.context is not b.context and a.context != b.context:
        raise ContextMismatchError(
            f"operands live in different contexts: {a.context.names} vs {b.context.names}")


def monomial_mul(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Exponent, b: Exponent) -> bool:
    """True iff the monomial a divides b (componentwise <=)."""
    return all(x <= y for x, y in zip(a, b))


def monomial_div(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x - y for x, y in zip(a, b))


def monomial_lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x if x >= y else y for x, y in zip(a, b))


class Polynomial:
    """An exact multivariate polynomial with rational coefficients."""

    __slots__ = ("context", "terms")

    def __init__(self, context: VariableContext,
                 terms: Mapping[Exponent, Fraction | int] | None = None):
        self.context = context
        clean: dict[Exponent, Fraction] = {}
        if terms:
            width = len(context)
            for exps, c in terms.items():
                if len(exps) != width:
                    raise ValueError(f"exponent tuple {exps} has wrong length for context")
                if any(e < 0 for e in exps):
                    raise ValueError(f"negative exponent in polynomial term {exps}")
                c = Fraction(c)
                if c:
                    clean[exps] = clean.get(exps, Fraction(0)) + c
                    if not clean[exps]:
                        del clean[exps]
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(context: VariableContext) -> "Polynomial":
        return Polynomial(context)

    @staticmethod
    def constant(context: VariableContext, value: Fraction | int) -> "Polynomial":
        return Polynomial(context, {context.zero_exps(): Fraction(value)})

    @staticmethod
    def variable(context: VariableContext, name_or_index: str | int) -> "Polynomial":
        i = name_or_index if isinstance(name_or_index, int) else context.index(name_or_index)
        exps = [0] * len(context)
        exps[i] = 1
        return Polynomial(context, {tuple(exps): Fraction(1)})

    @staticmethod
    def monomial(context: VariableContext, exps: Exponent,
                 coeff: Fraction | int = 1) -> "Polynomial":
        return Polynomial(context, {tuple(exps): Fraction(coeff)})

    # -- queries -----------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.context == other.context and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.context.names, frozenset(self.terms.items())))

    def __iter__(self) -> Iterator[tuple[Exponent, Fraction]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def total_degree(self) -> int:
        """Maximum term degree; the zero polynomial has degree -1."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_value(self) -> Fraction:
        return self.terms.get(self.context.zero_exps(), Fraction(0))

    def coefficient(self, exps: Exponent) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def max_exponents(self) -> Exponent:
        """Componentwise maximum exponent over all terms (zeros if empty)."""
        out = [0] * len(self.context)
        for exps in self.terms:
            for i, e in enumerate(exps):
                if e > out[i]:
                    out[i] = e
        return tuple(out)

    def min_exponents(self) -> Exponent:
        """Componentwise minimum exponent over all terms (zeros if empty)."""
        if not self.terms:
            return self.context.zero_exps()
        it = iter(self.terms)
        out = list(next(it))
        for exps in it:
            for i, e in enumerate(exps):
                if e < out[i]:
                    out[i] = e
        return tuple(out)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        _check_context(self, other)
        out = dict(self.terms)
        for exps, c in other.terms.items():
            v = out.get(exps)
            if v is None:
                out[exps] = c
            else:
                v = v + c
                if v:
                    out[exps] = v
                else:
                    del out[exps]
        return _raw(self.context, out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        _check_context(self, other)
        out = dict(self.terms)
        for exps, c in other.terms.items():
            v = out.get(exps)
            if v is None:
                out[exps] = -c
            else:
                v = v - c
                if v:
                    out[exps] = v
                else:
                    del out[exps]
        return _raw(self.context, out)

    def __neg__(self) -> "Polynomial":
        return _raw(self.context, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other: "Polynomial | Fraction | int") -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return Polynomial.zero(self.context)
            return _raw(self.context, {e: v * c for e, v in self.terms.items()})
        _check_context(self, other)
        if not self.terms or not other.terms:
            return Polynomial.zero(self.context)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict[Exponent, Fraction] = {}
        for eb, cb in b.items():
            for ea, ca in a.items():
                exps = tuple(x + y for x, y in zip(ea, eb))
                v = out.get(exps)
                if v is None:
                    out[exps] = ca * cb
                else:
                    v = v + ca * cb
                    if v:
                        out[exps] = v
                    else:
                        del out[exps]
        return _raw(self.context, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.constant(self.context, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, exps: Exponent) -> "Polynomial":
        """Multiply by the monomial with the given exponents."""
        return _raw(self.context,
                    {tuple(x + y for x, y in zip(e, exps)): c
                     for e, c in self.terms.items()})

    # -- normal forms ------------------------------------------------------

    def content_and_primitive(self) -> tuple[Fraction, "Polynomial"]:
        """Split off the rational content, leaving integer coefficients with gcd 1.

        The sign convention puts a positive coefficient on the degrevlex-leading
        term of the primitive part.  Zero splits as (0, 0).
        """
        if not self.terms:
            return Fraction(0), self
        den_lcm = 1
        for c in self.terms.values():
            den_lcm = den_lcm * c.denominator // gcd(den_lcm, c.denominator)
        num_gcd = 0
        for c in self.terms.values():
            num_gcd = gcd(num_gcd, c.numerator * (den_lcm // c.denominator))
        lead = max(self.terms, key=_degrevlex_key)
        sign = 1 if self.terms[lead] > 0 else -1
        content = Fraction(sign * num_gcd, den_lcm)
        return content, _raw(self.context,
                             {e: c / content for e, c in self.terms.items()})

    def map_context(self, target: VariableContext,
                    rename: Mapping[str, str] | None = None) -> "Polynomial":
        """Reinterpret the polynomial in another context, matching variables by name.

        Variables actually occurring must all resolve (after optional
        renaming) to names of the target context.
        """
        rename = rename or {}
        positions: list[int | None] = []
        for name in self.context.names:
            name = rename.get(name, name)
            positions.append(target._index.get(name))
        width = len(target)
        out: dict[Exponent, Fraction] = {}
        for exps, c in self.terms.items():
            new = [0] * width
            for i, e in enumerate(exps):
                if not e:
                    continue
                j = positions[i]
                if j is None:
                    raise KeyError(f"variable {self.context.names[i]!r} has no image "
                                   f"in context {target.names}")
                new[j] = e
            key = tuple(new)
            v = out.get(key)
            out[key] = c if v is None else v + c
        return Polynomial(target, out)

    def __repr__(self) -> str:
        if not self.terms:
            return "<poly 0>"
        bits = []
        for exps in sorted(self.terms, key=_degrevlex_key, reverse=True):
            mono = "*".join(f"{self.context.names[i]}^{e}" if e != 1 else self.context.names[i]
                            for i, e in enumerate(exps) if e)
            c = self.terms[exps]
            bits.append(f"{c}*{mono}" if mono else str(c))
        return "<poly " + " + ".join(bits) + ">"


def _raw(context: VariableContext, terms: dict[Exponent, Fraction]) -> Polynomial:
    """Build a polynomial from an already-clean term dict without re-validation."""
    p = Polynomial.__new__(Polynomial)
    p.context = context
    p.terms = terms
    return p


def _degrevlex_key(exps: Exponent) -> tuple[int, ...]:
    out = [sum(exps)]
    out.extend(-e for e in reversed(exps))
    return tuple(out)


class LaurentPolynomial:
    """A Laurent polynomial: a numerator polynomial over a monomial denominator.

    Always normalized: no variable divides both the numerator and the
    denominator monomial, and zero carries the trivial denominator.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: Polynomial, denominator: Exponent):
        self.numerator = numerator
        self.denominator = denominator

    @property
    def context(self) -> VariableContext:
        return self.numerator.context

    @staticmethod
    def from_polynomial(p: Polynomial) -> "LaurentPolynomial":
        return LaurentPolynomial(p, p.context.zero_exps())

    @staticmethod
    def variable(context: VariableContext, name: str) -> "LaurentPolynomial":
        return LaurentPolynomial.from_polynomial(Polynomial.variable(context, name))

    @staticmethod
    def inverse_variable(context: VariableContext, name: str) -> "LaurentPolynomial":
        exps = [0] * len(context)
        exps[context.index(name)] = 1
        return laurent_normalize(Polynomial.constant(context, 1), tuple(exps))

    def __bool__(self) -> bool:
        return bool(self.numerator)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.denominator == other.denominator and self.numerator == other.numerator

    def __hash__(self) -> int:
        return hash((self.numerator, self.denominator))

    def is_polynomial(self) -> bool:
        return not any(self.denominator)

    def laurent_degree(self) -> int:
        """Maximum total degree of a Laurent term (numerator degree minus
        denominator degree); -1 for zero."""
        if not self.numerator:
            return -1
        return self.numerator.total_degree() - sum(self.denominator)

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        _check_context(self.numerator, other.numerator)
        da, db = self.denominator, other.denominator
        common = monomial_lcm(da, db)
        na = self.numerator.shift(monomial_div(common, da))
        nb = other.numerator.shift(monomial_div(common, db))
        return laurent_normalize(na + nb, common)

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self + (-other)

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial(-self.numerator, self.denominator)

    def __mul__(self, other: "LaurentPolynomial | Fraction | int") -> "LaurentPolynomial":
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentPolynomial.from_polynomial(Polynomial.zero(self.context))
            return LaurentPolynomial(self.numerator * other, self.denominator)
        _check_context(self.numerator, other.numerator)
        return laurent_normalize(self.numerator * other.numerator,
                                 monomial_mul(self.denominator, other.denominator))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPolynomial":
        if n >= 0:
            return laurent_normalize(self.numerator ** n,
                                     tuple(e * n for e in self.denominator))
        if not self.numerator.is_monomial():
            raise ValueError("negative power requires a single-term Laurent polynomial")
        ((exps, coeff),) = self.numerator.terms.items()
        signed = [(a - b) * n for a, b in zip(exps, self.denominator)]
        num = tuple(max(e, 0) for e in signed)
        den = tuple(-min(e, 0) for e in signed)
        return LaurentPolynomial(
            Polynomial.monomial(self.context, num, Fraction(coeff) ** n), den)

    def primitive(self) -> "LaurentPolynomial":
        """Scale to content 1 with positive leading coefficient."""
        if not self.numerator:
            return self
        _, prim = self.numerator.content_and_primitive()
        return LaurentPolynomial(prim, self.denominator)

    def as_fraction(self) -> "PolyFraction":
        return PolyFraction(self.numerator,
                            Polynomial.monomial(self.context, self.denominator))

    def map_context(self, target: VariableContext,
                    rename: Mapping[str, str] | None = None) -> "LaurentPolynomial":
        rename = rename or {}
        num = self.numerator.map_context(target, rename)
        den = [0] * len(target)
        for i, e in enumerate(self.denominator):
            if e:
                name = rename.get(self.context.names[i], self.context.names[i])
                den[target.index(name)] = e
        return laurent_normalize(num, tuple(den))

    def __repr__(self) -> str:
        if not any(self.denominator):
            return repr(self.numerator).replace("<poly", "<laurent")
        mono = "*".join(f"{self.context.names[i]}^{e}" if e != 1 else self.context.names[i]
                        for i, e in enumerate(self.denominator) if e)
        return f"<laurent ({self.numerator!r}) / {mono}>"


def laurent_normalize(numerator: Polynomial, denominator: Exponent) -> LaurentPolynomial:
    """Cancel common variable powers so the denominator is minimal.

    Idempotent; zero normalizes to the trivial denominator.
    """
    if any(e < 0 for e in denominator):
        raise ValueError("denominator monomial must have nonnegative exponents")
    if not numerator:
        return LaurentPolynomial(numerator, numerator.context.zero_exps())
    mins = numerator.min_exponents()
    cancel = tuple(min(d, m) for d, m in zip(denominator, mins))
    if any(cancel):
        numerator = _raw(numerator.context,
                         {monomial_div(e, cancel): c for e, c in numerator.terms.items()})
        denominator = monomial_div(denominator, cancel)
    return LaurentPolynomial(numerator, tuple(denominator))


class PolyFraction:
    """A quotient of polynomials, never auto-reduced.

    This is a transient carrier for substitution results before Laurent-ness
    testing; there is no canonical form and no multivariate gcd.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: Polynomial, denominator: Polynomial):
        if not denominator:
            raise ZeroDivisionError("zero denominator in polynomial fraction")
        _check_context(numerator, denominator)
        self.numerator = numerator
        self.denominator = denominator

    @property
    def context(self) -> VariableContext:
        return self.numerator.context

    @staticmethod
    def from_polynomial(p: Polynomial) -> "PolyFraction":
        return PolyFraction(p, Polynomial.constant(p.context, 1))

    def __add__(self, other: "PolyFraction") -> "PolyFraction":
        return PolyFraction(self.numerator * other.denominator
                            + other.numerator * self.denominator,
                            self.denominator * other.denominator)

    def __sub__(self, other: "PolyFraction") -> "PolyFraction":
        return PolyFraction(self.numerator * other.denominator
                            - other.numerator * self.denominator,
                            self.denominator * other.denominator)

    def __mul__(self, other: "PolyFraction") -> "PolyFraction":
        return PolyFraction(self.numerator * other.numerator,
                            self.denominator * other.denominator)

    def __repr__(self) -> str:
        return f"<fraction ({self.numerator!r}) / ({self.denominator!r})>"


def exact_divide(p: Polynomial, q: Polynomial) -> Polynomial | None:
    """Return h with p = q*h, or None when q does not divide p exactly.

    Single-divisor multivariate division; the remainder vanishes iff q | p,
    independently of the monomial order used internally.
    """
    _check_context(p, q)
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    ctx = p.context
    if not p:
        return Polynomial.zero(ctx)
    q_lead = max(q.terms, key=_degrevlex_key)
    q_lc = q.terms[q_lead]
    rest = dict(p.terms)
    quotient: dict[Exponent, Fraction] = {}
    while rest:
        lead = max(rest, key=_degrevlex_key)
        if not monomial_divides(q_lead, lead):
            return None
        shift = monomial_div(lead, q_lead)
        coeff = rest[lead] / q_lc
        quotient[shift] = coeff
        for exps, c in q.terms.items():
            key = monomial_mul(exps, shift)
            v = rest.get(key, Fraction(0)) - c * coeff
            if v:
                rest[key] = v
            else:
                rest.pop(key, None)
    return _raw(ctx, quotient)


def substitute(p: LaurentPolynomial,
               assignments: Mapping[str, PolyFraction],
               target: VariableContext | None = None) -> PolyFraction:
    """Substitute fractions for variables of a Laurent polynomial, exactly.

    Unassigned variables map to the variable of the same name in the target
    context.  Denominators are multiplied out; no cancellation is attempted.
    """
    ctx = p.context
    if target is None:
        target = next(iter(assignments.values())).context if assignments else ctx
    one = Polynomial.constant(target, 1)
    nums: list[Polynomial] = []
    dens: list[Polynomial] = []
    for name in ctx.names:
        fr = assignments.get(name)
        if fr is None:
            nums.append(Polynomial.variable(target, name))
            dens.append(one)
        else:
            if not fr.denominator:
                raise ZeroDivisionError(f"assignment for {name!r} has zero denominator")
            nums.append(fr.numerator)
            dens.append(fr.denominator)

    maxes = p.numerator.max_exponents()
    num_pows = [_power_table(nums[i], maxes[i]) for i in range(len(ctx))]
    den_pows = [_power_table(dens[i], maxes[i]) for i in range(len(ctx))]

    total = Polynomial.zero(target)
    for exps, c in p.numerator.terms.items():
        term = Polynomial.constant(target, c)
        for i, e in enumerate(exps):
            term = term * num_pows[i][e]
            gap = maxes[i] - e
            if gap:
                term = term * den_pows[i][gap]
        total = total + term
    common_den = one
    for i, e in enumerate(maxes):
        if e:
            common_den = common_den * den_pows[i][e]

    # fold in the Laurent denominator monomial: dividing by (n_i/d_i)^k
    for i, e in enumerate(p.denominator):
        if e:
            total = total * _power_table(dens[i], e)[e]
            common_den = common_den * _power_table(nums[i], e)[e]
    return PolyFraction(total, common_den)


def _power_table(p: Polynomial, upto: int) -> list[Polynomial]:
    out = [Polynomial.constant(p.context, 1)]
    for _ in range(upto):
        out.append(out[-1] * p)
    return out


def fraction_is_laurent(f: PolyFraction,
                        laurent_names: Iterable[str]) -> LaurentPolynomial | None:
    """Convert a fraction to a Laurent polynomial in the given variables, if possible.

    Strips the maximal monomial factor (in the Laurent variables) from the
    denominator, then divides the numerator exactly by the residual factor.
    Correct because the Laurent ring is the localization at monomials only.
    """
    ctx = f.context
    laurent_idx = {ctx.index(n) for n in laurent_names}
    if not f.numerator:
        return LaurentPolynomial.from_polynomial(Polynomial.zero(ctx))
    mins = f.denominator.min_exponents()
    mono = tuple(e if i in laurent_idx else 0 for i, e in enumerate(mins))
    residual = _raw(ctx, {monomial_div(e, mono): c for e, c in f.denominator.terms.items()})
    if residual.is_constant():
        c = residual.constant_value()
        return laurent_normalize(f.numerator * (1 / c), mono)
    h = exact_divide(f.numerator, residual)
    if h is None:
        return None
    return laurent_normalize(h, mono)
