"""The presentation pipeline for upper cluster algebras.

Given a seed and a finite set of conjectural Laurent-polynomial generators,
this module builds the presented ring (ambient polynomial ring with the
saturated kernel ideal), checks the lower and upper containments, runs the
saturation criterion, extracts new generators when the criterion fails, and
iterates until the candidate ring equals the upper bound.

The ambient ring of a presented ring has one variable per mutable cluster
variable, per frozen variable, per formal frozen inverse, and per extra
generator (its tag).  The kernel is the full ideal of relations: the ideal
generated by the tag relations and the inverse relations, saturated by the
product of the mutable variables.  The quotient then embeds into the initial
Laurent ring, which is what makes every ideal-level computation here a
faithful statement about the candidate subalgebra.

Without a total-coprimality certificate the criterion only identifies the
candidate with the upper *bound*; results are then flagged as conditional and
never silently promoted to statements about the upper cluster algebra.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from .cluster import Seed, lower_deep_ideal_generators, totally_coprime_certificate
from .expressions import format_laurent, format_polynomial
from .groebner import (
    GroebnerIdeal,
    SubalgebraTester,
    contains_one,
    ideal_equality,
    intersect,
    normal_form,
    saturate_element,
)
from .orders import DEGREVLEX, MonomialOrder
from .poly import (
    LaurentPolynomial,
    Polynomial,
    PolyFraction,
    VariableContext,
    fraction_is_laurent,
    laurent_normalize,
    monomial_mul,
    substitute,
)


class GuessOutsideBoundsError(ValueError):
    """The supplied generators do not sit between the lower and upper bounds."""


class InternalInconsistencyError(RuntimeError):
    """An invariant the mathematics guarantees was violated; indicates a bug."""


@dataclass(frozen=True)
class GeneratorSet:
    """Extra generators beyond the cluster, each a named Laurent polynomial.

    The mutable cluster variables are always implicitly part of the
    generating set; the frozen variables and their inverses form the
    coefficient ring.
    """

    context: VariableContext
    extras: tuple[tuple[str, LaurentPolynomial], ...]

    def __post_init__(self) -> None:
        names = [n for n, _ in self.extras]
        if len(set(names)) != len(names):
            raise ValueError("duplicate generator names")
        clash = set(names) & set(self.context.names)
        if clash:
            raise ValueError(f"generator names collide with cluster variables: {clash}")

    @staticmethod
    def empty(seed: Seed) -> "GeneratorSet":
        return GeneratorSet(seed.context, ())

    @staticmethod
    def lower_bound(seed: Seed) -> "GeneratorSet":
        """The one-step mutations x_i', named after their variables."""
        extras = []
        for i, entry in enumerate(seed.one_step_mutations()):
            extras.append((f"{seed.context.names[i]}p", entry))
        return GeneratorSet(seed.context, tuple(extras))

    def names(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self.extras)

    def with_extra(self, name: str, value: LaurentPolynomial) -> "GeneratorSet":
        return GeneratorSet(self.context, self.extras + ((name, value),))

    def without(self, name: str) -> "GeneratorSet":
        return GeneratorSet(self.context,
                            tuple((n, v) for n, v in self.extras if n != name))


@dataclass(frozen=True)
class PresentedRing:
    """Ambient polynomial ring with its saturated kernel ideal.

    The ambient ring carries the formal frozen inverses and its kernel the
    inverse relations.  All heavy ideal work happens in the localized model
    (``ambient0``/``kernel0``), which drops the formal inverses and instead
    saturates by the frozen variables; the two present the same ring because
    ideals of the localization correspond to frozen-saturated ideals of the
    inverse-free ring.
    """

    seed: Seed
    generators: GeneratorSet
    ambient: VariableContext
    kernel: GroebnerIdeal
    ambient0: VariableContext
    kernel0: GroebnerIdeal
    certificate: str
    order: MonomialOrder

    @property
    def conditional(self) -> bool:
        return self.certificate == "unknown"

    @property
    def tag_names(self) -> tuple[str, ...]:
        return self.generators.names()

    def mutable_product(self, ctx: VariableContext | None = None) -> Polynomial:
        ctx = ctx or self.ambient
        exps = [0] * len(ctx)
        for i in range(ctx.mutable_count):
            exps[i] = 1
        return Polynomial.monomial(ctx, tuple(exps))

    def laurent_image(self, p: Polynomial) -> LaurentPolynomial:
        """The image of an ambient polynomial in the initial Laurent ring."""
        return quotient_laurent_image(self.seed, self.generators, p)

    def clear_inverses(self, p: Polynomial) -> Polynomial:
        """Rewrite an ambient polynomial without formal inverses.

        Each frozen inverse exponent is traded against the matching frozen
        variable after scaling by a frozen monomial, so the result equals the
        input times a unit of the presented ring.  Saturation-style uses are
        unaffected by the unit.
        """
        ctx = p.context
        frozen = self.seed.context.frozen_names
        pairs = [(ctx.index(n), ctx.index(n + "_inv")) for n in frozen
                 if n + "_inv" in ctx._index]
        if not pairs or not p:
            return p.map_context(self.ambient0)
        shifts = [max((e[fi_inv] - e[fi] for e in p.terms), default=0)
                  for fi, fi_inv in pairs]
        out = {}
        width = len(self.ambient0)
        for exps, c in p.terms.items():
            new = [0] * width
            for i, e in enumerate(exps):
                if e and self.ambient0._index.get(ctx.names[i]) is not None:
                    new[self.ambient0.index(ctx.names[i])] = e
            for (fi, fi_inv), beta in zip(pairs, shifts):
                j = self.ambient0.index(ctx.names[fi])
                new[j] = exps[fi] - exps[fi_inv] + max(beta, 0)
            out[tuple(new)] = c
        return Polynomial(self.ambient0, out)


def quotient_laurent_image(seed: Seed, gens: GeneratorSet,
                           p: Polynomial) -> LaurentPolynomial:
    """Substitute generators for tags and 1/f for formal inverses, exactly.

    This is the quotient embedding of the presented ring into the initial
    Laurent ring; it does not depend on the kernel.
    """
    seed_ctx = seed.context
    assignments: dict[str, PolyFraction] = {}
    for name in seed_ctx.frozen_names:
        assignments[name + "_inv"] = PolyFraction(
            Polynomial.constant(seed_ctx, 1),
            Polynomial.variable(seed_ctx, name))
    for tag, value in gens.extras:
        assignments[tag] = value.as_fraction()
    frac = substitute(LaurentPolynomial.from_polynomial(p), assignments, seed_ctx)
    img = fraction_is_laurent(frac, seed_ctx.names[: seed_ctx.cluster_size])
    if img is None:
        raise InternalInconsistencyError(
            "ambient element did not map to a Laurent polynomial")
    return img


def presentation_context(seed: Seed, gens: GeneratorSet) -> VariableContext:
    """The ambient context a presented ring over these generators will use."""
    ctx = seed.context
    names = list(ctx.mutable_names) + list(ctx.frozen_names)
    names += [n + "_inv" for n in ctx.frozen_names]
    names += list(gens.names())
    return VariableContext(tuple(names), ctx.mutable_count, ctx.frozen_count)


def build_presentation(seed: Seed, gens: GeneratorSet,
                       order: MonomialOrder = DEGREVLEX,
                       certificate: str | None = None,
                       step_limit: int | None = None,
                       kernel_hints: tuple[Polynomial, ...] = ()) -> PresentedRing:
    """Construct the presented ring: tag and inverse relations, saturated.

    The kernel is the saturation of the relation ideal by the product of the
    mutable variables, which is exactly the kernel of the quotient map into
    the initial Laurent ring.  Ambient polynomials already known to lie in
    the kernel may be passed as hints to speed the saturation up; each hint
    is re-certified here by exact substitution (a vanishing image is
    equivalent to membership, so verified hints cannot change the ideal).
    """
    for name, value in gens.extras:
        if not value:
            raise ValueError(f"degenerate generator {name!r} has zero numerator")
    ambient = presentation_context(seed, gens)
    seed_ctx = seed.context
    relations = []
    for tag, value in gens.extras:
        den = [0] * len(ambient)
        for i, e in enumerate(value.denominator):
            if e:
                den[ambient.index(seed_ctx.names[i])] = e
        tag_poly = Polynomial.variable(ambient, tag)
        relations.append(tag_poly.shift(tuple(den))
                         - value.numerator.map_context(ambient))
    one = Polynomial.constant(ambient, 1)
    for name in seed_ctx.frozen_names:
        relations.append(Polynomial.variable(ambient, name)
                         * Polynomial.variable(ambient, name + "_inv") - one)
    for hint in kernel_hints:
        mapped = hint.map_context(ambient)
        if not quotient_laurent_image(seed, gens, mapped):
            relations.append(mapped)
    raw = GroebnerIdeal(tuple(relations), context=ambient)
    pr_cert = certificate if certificate is not None \
        else totally_coprime_certificate(seed.matrix)
    f = Polynomial.monomial(
        ambient, tuple(1 if i < ambient.mutable_count else 0
                       for i in range(len(ambient))))
    kernel = saturate_element(raw, f, order, step_limit)
    return PresentedRing(seed, gens, ambient, kernel, pr_cert, order)


# ---------------------------------------------------------------------------
# containment checks


@dataclass
class LowerContainment:
    ok: bool
    witnesses: dict[int, Polynomial]
    failures: tuple[int, ...]


@dataclass
class UpperContainment:
    ok: bool
    failures: tuple[tuple[str, int], ...]


def _membership_tester(pr: PresentedRing,
                       step_limit: int | None = None,
                       hints: tuple[Polynomial, ...] = ()) -> SubalgebraTester:
    seed = pr.seed
    m = seed.mutable_count
    generators = [seed.cluster[i] for i in range(m)]
    tag_names = list(pr.ambient.mutable_names)
    for name, value in pr.generators.extras:
        generators.append(value)
        tag_names.append(name)
    rename = {name: f"_tag{i}" for i, name in enumerate(tag_names)}
    return SubalgebraTester(generators, seed.context, tag_names, pr.order,
                            step_limit,
                            hints=tuple(_ambient_to_graph(h, rename)
                                        for h in hints))


def _ambient_to_graph(hint: Polynomial, rename: dict[str, str]) -> Polynomial:
    """Rewrite an ambient kernel element in graph-ideal tag coordinates.

    Cluster and frozen variables keep their names; frozen inverses already
    share names; generator tags become the tester's internal tag variables.
    The rewritten polynomial vanishes on the graph whenever the original
    vanishes in the quotient, which the tester re-certifies anyway.
    """
    ctx = hint.context
    names = tuple(rename.get(n, n) for n in ctx.names)
    return hint.map_context(VariableContext(names), rename)


def check_lower_containment(pr: PresentedRing,
                            tester: SubalgebraTester | None = None,
                            step_limit: int | None = None,
                            hints: tuple[Polynomial, ...] = ()) -> LowerContainment:
    """Membership of each one-step mutation x_i' in the candidate algebra.

    Witnesses are polynomial expressions in the ambient variables whose
    Laurent images equal the corresponding x_i'.
    """
    if tester is None:
        tester = _membership_tester(pr, step_limit, hints)
    witnesses: dict[int, Polynomial] = {}
    failures = []
    for i, mutated in enumerate(pr.seed.one_step_mutations()):
        w = tester.witness(mutated)
        if w is None:
            failures.append(i)
        else:
            witnesses[i] = w.map_context(pr.ambient)
    return LowerContainment(not failures, witnesses, tuple(failures))


def check_upper_containment(pr: PresentedRing) -> UpperContainment:
    """Each extra generator must be Laurent in every adjacent cluster.

    Substitutes the exchange binomial x_i = (M+ + M-)/x_i' into the
    generator and tests Laurent-ness in the mutated cluster variables.
    """
    seed = pr.seed
    ctx = seed.context
    failures = []
    for i in range(seed.mutable_count):
        pos, neg = seed.exchange_binomial(i)
        binomial = pos + neg
        if not binomial.is_polynomial():
            raise InternalInconsistencyError("exchange binomial with denominator")
        old = ctx.names[i]
        new = old + "_adj"
        renamed = VariableContext(
            tuple(new if n == old else n for n in ctx.names),
            ctx.mutable_count, ctx.frozen_count)
        assignment = {old: PolyFraction(binomial.numerator.map_context(renamed),
                                        Polynomial.variable(renamed, new))}
        for gen_name, value in pr.generators.extras:
            image = substitute(value, assignment, renamed)
            if fraction_is_laurent(image,
                                   renamed.names[: ctx.cluster_size]) is None:
                failures.append((gen_name, i))
    return UpperContainment(not failures, tuple(failures))


# ---------------------------------------------------------------------------
# the saturation criterion


@dataclass
class Criterion5Result:
    equal: bool
    new_elements: tuple[LaurentPolynomial, ...]
    localized: GroebnerIdeal          # (kernel + F), i.e. S*f in ambient terms
    saturated: GroebnerIdeal          # (kernel + F : lifted D_x ^ infinity)
    sat_sizes: tuple[int, ...]


def _lifted_deep_generators(pr: PresentedRing,
                            witnesses: dict[int, Polynomial]) -> list[Polynomial]:
    """Images of the lower-deep-ideal generators in the ambient ring.

    The product of the mutable variables lifts to itself; in each remaining
    generator the mutated variable is replaced by its membership witness.
    """
    m = pr.ambient.mutable_count
    out = [pr.mutable_product()]
    for i in range(m):
        exps = [0] * len(pr.ambient)
        for j in range(m):
            if j != i:
                exps[j] = 1
        out.append(witnesses[i].shift(tuple(exps)))
    return out


def criterion5(pr: PresentedRing, lower: LowerContainment,
               step_limit: int | None = None) -> Criterion5Result:
    """Decide S*f = (S*f : (S*D_x)^infinity), producing new elements on failure.

    The saturation is the intersection of the element saturations over the
    lifted deep-ideal generators; the saturation by f itself is the unit
    ideal and is skipped.  When some single saturation already equals S*f the
    intersection collapses and equality holds without further work.
    """
    if not lower.ok:
        raise ValueError("lower containment must hold before running the criterion")
    order = pr.order
    f = pr.mutable_product()
    j_ideal = GroebnerIdeal(pr.kernel.basis(order) + (f,), context=pr.ambient)
    j_basis = j_ideal.basis(order, step_limit)
    deep = _lifted_deep_generators(pr, lower.witnesses)
    sats: list[GroebnerIdeal] = []
    sizes: list[int] = []
    for gen in deep[1:]:
        sat = saturate_element(j_ideal, gen, order, step_limit)
        sats.append(sat)
        sizes.append(len(sat.basis(order)))
        if sat.basis(order) == j_basis:
            return Criterion5Result(True, (), j_ideal, j_ideal, tuple(sizes))
    acc = sats[0]
    for sat in sats[1:]:
        acc = intersect(acc, sat, order, step_limit)
        if acc.basis(order) == j_basis:
            return Criterion5Result(True, (), j_ideal, acc, tuple(sizes))
    if acc.basis(order) == j_basis:
        return Criterion5Result(True, (), j_ideal, acc, tuple(sizes))

    found: dict[str, LaurentPolynomial] = {}
    f_exps = tuple(1 if i < pr.ambient.mutable_count else 0
                   for i in range(len(pr.ambient)))
    for h in acc.basis(order):
        r = normal_form(h, j_basis, order)
        if not r:
            continue
        image = pr.laurent_image(r)
        element = laurent_normalize(
            image.numerator, monomial_mul(image.denominator, f_exps)).primitive()
        if element:
            found.setdefault(format_laurent(element), element)
    ordered = sorted(found.values(),
                     key=lambda e: (e.laurent_degree(), len(e.numerator.terms),
                                    format_laurent(e)))
    if not ordered:
        raise InternalInconsistencyError(
            "saturation grew but produced no new elements")
    return Criterion5Result(False, tuple(ordered), j_ideal, acc, tuple(sizes))


# ---------------------------------------------------------------------------
# iteration


@dataclass
class IterationStep:
    generator_count: int
    adopted: tuple[str, ...]
    kernel_size: int
    sat_sizes: tuple[int, ...]
    equal: bool
    seconds: float


@dataclass
class IterationReport:
    steps: list[IterationStep] = field(default_factory=list)
    pruned: tuple[str, ...] = ()

    def to_dict(self, include_timings: bool = False) -> dict:
        steps = []
        for s in self.steps:
            d = {"generator_count": s.generator_count,
                 "adopted": list(s.adopted),
                 "kernel_size": s.kernel_size,
                 "sat_sizes": list(s.sat_sizes),
                 "equal": s.equal}
            if include_timings:
                d["seconds"] = s.seconds
            steps.append(d)
        return {"steps": steps, "pruned": list(self.pruned)}


@dataclass
class Presentation:
    """The emitted artifact: named generators, relations, and a status."""

    seed: Seed
    generator_names: tuple[str, ...]        # ambient variable names, in order
    extras: tuple[tuple[str, LaurentPolynomial], ...]
    relations: tuple[Polynomial, ...]       # integer-cleared, deterministically sorted
    status: str                             # verified_equal_U | candidate | max_iterations_reached
    certificate: str

    @property
    def conditional(self) -> bool:
        return self.certificate == "unknown"

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "certificate": self.certificate,
            "generators": [{"name": n, "expr": format_laurent(v)}
                           for n, v in self.extras],
            "cluster_variables": list(self.seed.context.mutable_names),
            "frozen_variables": list(self.seed.context.frozen_names),
            "relations": [format_polynomial(r) for r in self.relations],
        }


def presentation_relations(pr: PresentedRing) -> tuple[Polynomial, ...]:
    """Kernel basis with cleared denominators, sorted by degree then leading term."""
    cleaned = []
    for b in pr.kernel.basis(pr.order):
        _, primitive = b.content_and_primitive()
        cleaned.append(primitive)
    cleaned.sort(key=lambda p: (p.total_degree(),
                                max(p.terms, key=pr.order.key) if p.terms else ()))
    return tuple(cleaned)


def make_presentation(pr: PresentedRing, status: str) -> Presentation:
    return Presentation(pr.seed, pr.ambient.names, pr.generators.extras,
                        presentation_relations(pr), status, pr.certificate)


def _prune_generators(pr: PresentedRing,
                      step_limit: int | None = None) -> tuple[GeneratorSet, tuple[str, ...]]:
    """Drop extra generators expressible in the remaining ones, newest first."""
    gens = pr.generators
    seed = pr.seed
    dropped = []
    for name, value in reversed(gens.extras):
        candidate = gens.without(name)
        others = [seed.cluster[i] for i in range(seed.mutable_count)]
        tag_names = list(seed.context.mutable_names)
        for other_name, other_value in candidate.extras:
            others.append(other_value)
            tag_names.append(other_name)
        tester = SubalgebraTester(others, seed.context, tag_names,
                                  pr.order, step_limit)
        if tester.witness(value) is not None:
            gens = candidate
            dropped.append(name)
    return gens, tuple(dropped)


def iterate(seed: Seed, initial: GeneratorSet | None = None,
            max_iters: int = 8, adopt_cap: int = 3,
            order: MonomialOrder = DEGREVLEX,
            assume_totally_coprime: bool = False,
            prune: bool = True,
            step_limit: int | None = None) -> tuple[Presentation, IterationReport]:
    """Iteratively grow the generator set until the criterion certifies equality.

    Every non-terminal step strictly grows the generator set; adopted
    elements are guaranteed members of the upper bound, so containment
    failures after the first step are internal errors.
    """
    if max_iters < 1:
        raise ValueError("max_iters must be at least 1")
    certificate = "assumed" if assume_totally_coprime \
        else totally_coprime_certificate(seed.matrix)
    gens = initial if initial is not None else GeneratorSet.lower_bound(seed)
    report = IterationReport()
    fresh = 1
    pr = None
    verified = False
    for step in range(max_iters):
        started = time.monotonic()
        pr = build_presentation(seed, gens, order, certificate, step_limit)
        lower = check_lower_containment(pr, step_limit=step_limit)
        if not lower.ok:
            if step == 0:
                raise GuessOutsideBoundsError(
                    f"one-step mutations at indices {lower.failures} are not in "
                    "the candidate algebra; the guess does not contain the lower bound")
            raise InternalInconsistencyError(
                "adopted generators lost the lower containment")
        upper = check_upper_containment(pr)
        if not upper.ok:
            if step == 0:
                raise GuessOutsideBoundsError(
                    f"generators {sorted(set(n for n, _ in upper.failures))} are not "
                    "Laurent in every adjacent cluster; the guess exceeds the upper bound")
            raise InternalInconsistencyError(
                "adopted generators lost the upper containment")
        result = criterion5(pr, lower, step_limit)
        adopted: list[str] = []
        if not result.equal:
            best = result.new_elements[0].laurent_degree()
            chosen = [e for e in result.new_elements
                      if e.laurent_degree() == best][:adopt_cap]
            for element in chosen:
                name = f"g{fresh}"
                while name in pr.ambient._index or name in gens.names():
                    fresh += 1
                    name = f"g{fresh}"
                gens = gens.with_extra(name, element)
                adopted.append(name)
                fresh += 1
        report.steps.append(IterationStep(
            len(pr.generators.extras) + seed.mutable_count, tuple(adopted),
            len(pr.kernel.basis(order)), result.sat_sizes, result.equal,
            time.monotonic() - started))
        if result.equal:
            verified = True
            break
    if not verified:
        return make_presentation(pr, "max_iterations_reached"), report
    if prune:
        pruned_gens, dropped = _prune_generators(pr, step_limit)
        if dropped:
            report.pruned = dropped
            pr = build_presentation(seed, pruned_gens, order, certificate, step_limit)
            lower = check_lower_containment(pr, step_limit=step_limit)
            if not lower.ok or not check_upper_containment(pr).ok:
                raise InternalInconsistencyError("pruning broke a containment")
            if not criterion5(pr, lower, step_limit).equal:
                raise InternalInconsistencyError("pruning broke the criterion")
    return make_presentation(pr, "verified_equal_U"), report


# ---------------------------------------------------------------------------
# verification of written-out presentations


@dataclass
class VerificationReport:
    substitution_ok: bool
    failed_relations: tuple[int, ...]
    ideal_equal: bool
    lower_ok: bool
    upper_ok: bool
    criterion_ok: bool
    certificate: str

    @property
    def all_passed(self) -> bool:
        return (self.substitution_ok and self.ideal_equal
                and self.lower_ok and self.upper_ok and self.criterion_ok)

    def to_dict(self) -> dict:
        return {
            "substitution_vanishes": self.substitution_ok,
            "failed_relations": list(self.failed_relations),
            "ideal_equality": self.ideal_equal,
            "lower_containment": self.lower_ok,
            "upper_containment": self.upper_ok,
            "criterion5_equality": self.criterion_ok,
            "certificate": self.certificate,
            "all_passed": self.all_passed,
        }


def verify_paper_presentation(seed: Seed, gens: GeneratorSet,
                              claimed_relations: list[Polynomial],
                              order: MonomialOrder = DEGREVLEX,
                              assume_totally_coprime: bool = False,
                              step_limit: int | None = None) -> VerificationReport:
    """Run the four checks: substitution vanishing, ideal equality of the
    claimed relations with the computed kernel, both containments, and the
    saturation criterion.

    The substitution check runs first; relations certified to vanish are
    kernel members and seed every later Groebner computation.
    """
    certificate = "assumed" if assume_totally_coprime \
        else totally_coprime_certificate(seed.matrix)
    ambient = presentation_context(seed, gens)
    failed = []
    vanishing: list[Polynomial] = []
    for idx, rel in enumerate(claimed_relations):
        mapped = rel.map_context(ambient)
        if quotient_laurent_image(seed, gens, mapped):
            failed.append(idx)
        else:
            vanishing.append(mapped)

    pr = build_presentation(seed, gens, order, certificate, step_limit,
                            kernel_hints=tuple(vanishing))

    one = Polynomial.constant(pr.ambient, 1)
    inverse_rels = [Polynomial.variable(pr.ambient, n)
                    * Polynomial.variable(pr.ambient, n + "_inv") - one
                    for n in seed.context.frozen_names]
    claimed_ideal = GroebnerIdeal(
        tuple(r.map_context(pr.ambient) for r in claimed_relations)
        + tuple(inverse_rels), context=pr.ambient)
    ideal_ok = ideal_equality(claimed_ideal, pr.kernel, order)

    lower = check_lower_containment(pr, step_limit=step_limit,
                                    hints=tuple(vanishing))
    upper = check_upper_containment(pr)
    criterion_ok = False
    if lower.ok:
        criterion_ok = criterion5(pr, lower, step_limit).equal
    return VerificationReport(not failed, tuple(failed), ideal_ok,
                              lower.ok, upper.ok, criterion_ok, certificate)


# ---------------------------------------------------------------------------
# deep ideal triviality


@dataclass
class DeepIdealResult:
    verdict: str                 # trivial | nontrivial_for_D_x | inconclusive
    widened_words: tuple[tuple[int, ...], ...]


def deep_ideal_triviality(pr: PresentedRing, lower: LowerContainment,
                          widen: int = 1,
                          step_limit: int | None = None) -> DeepIdealResult:
    """Test whether the candidate ring's deep ideal is the unit ideal.

    Starts from the lifted lower-deep-ideal generators; on failure, widens by
    the cluster products of all mutation words of length 2, ..., widen+1 and
    retests.  A positive answer is conclusive for the full deep ideal; a
    negative one is only a statement about the widened stand-in.
    """
    if pr.conditional:
        return DeepIdealResult("inconclusive", ())
    order = pr.order
    seed = pr.seed
    m = seed.mutable_count
    deep = _lifted_deep_generators(pr, lower.witnesses)
    ideal = GroebnerIdeal(pr.kernel.basis(order) + tuple(deep), context=pr.ambient)
    if contains_one(ideal, order):
        return DeepIdealResult("trivial", ())

    tester = _membership_tester(pr, step_limit)
    tried: list[tuple[int, ...]] = []
    extra: list[Polynomial] = []
    words: list[tuple[int, ...]] = [(i,) for i in range(m)]
    for _ in range(widen):
        words = [w + (k,) for w in words for k in range(m) if k != w[-1]]
        for word in words:
            mutated = seed.apply_word(word)
            product = mutated.cluster[0] if m else None
            prod = None
            for i in range(m):
                prod = mutated.cluster[i] if prod is None else prod * mutated.cluster[i]
            witness = tester.witness(prod)
            if witness is None:
                raise InternalInconsistencyError(
                    "a cluster product is not in the verified ring")
            extra.append(witness.map_context(pr.ambient))
            tried.append(word)
        ideal = GroebnerIdeal(ideal.generators + tuple(extra), context=pr.ambient)
        extra = []
        if contains_one(ideal, order):
            return DeepIdealResult("trivial", tuple(tried))
    return DeepIdealResult("nontrivial_for_D_x", tuple(tried))
