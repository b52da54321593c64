"""Seeds, exchange matrices, mutation, and seed-level diagnostics.

An exchange matrix is an n x m integer matrix whose principal (top m x m)
part is skew-symmetrizable; a seed couples such a matrix with a cluster of n
Laurent polynomials written in the initial variables.  Mutation returns new
values; nothing is modified in place, so seeds can be shared and word
exploration parallelized freely.

Every cluster entry produced by mutation is certified to be a Laurent
polynomial in the initial cluster.  A certification failure cannot come from
valid inputs (the Laurent phenomenon guarantees success) and is therefore
raised as an internal error rather than returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .poly import (
    LaurentPolynomial,
    Polynomial,
    PolyFraction,
    VariableContext,
    fraction_is_laurent,
)

MutationWord = tuple[int, ...]


class LaurentViolationError(RuntimeError):
    """A mutated cluster entry failed Laurent certification.

    This signals an arithmetic bug, not a property of the seed: the Laurent
    phenomenon guarantees certification succeeds for every valid seed.
    """


def skew_symmetrizer(principal: list[list[int]] | tuple[tuple[int, ...], ...]) -> tuple[int, ...] | None:
    """A positive integer diagonal D with (D*B)^T = -(D*B), or None.

    Builds the ratio graph d_i/d_j = -B_ji/B_ij on nonzero entries, propagates
    by breadth-first search, and verifies consistency, producing a witness.
    """
    m = len(principal)
    for i in range(m):
        if principal[i][i] != 0:
            return None
        for j in range(m):
            bij, bji = principal[i][j], principal[j][i]
            if (bij == 0) != (bji == 0):
                return None
            if bij and bij * bji > 0:
                return None
    ratios: list[Fraction | None] = [None] * m
    for start in range(m):
        if ratios[start] is not None:
            continue
        ratios[start] = Fraction(1)
        queue = [start]
        while queue:
            i = queue.pop()
            for j in range(m):
                if principal[i][j] == 0 or j == i:
                    continue
                # d_i * B_ij = -d_j * B_ji  =>  d_j = -d_i * B_ij / B_ji
                dj = -ratios[i] * Fraction(principal[i][j], principal[j][i])
                if dj <= 0:
                    return None
                if ratios[j] is None:
                    ratios[j] = dj
                    queue.append(j)
                elif ratios[j] != dj:
                    return None
    den = 1
    for r in ratios:
        den = den * r.denominator // gcd(den, r.denominator)
    ds = [int(r * den) for r in ratios]
    g = 0
    for d in ds:
        g = gcd(g, d)
    return tuple(d // g for d in ds)


@dataclass(frozen=True)
class ExchangeMatrix:
    """An n x m integer exchange matrix with skew-symmetrizable principal part."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        m = self.mutable_count
        if any(len(r) != m for r in self.rows):
            raise ValueError("ragged exchange matrix")
        if len(self.rows) < m:
            raise ValueError("exchange matrix needs at least m rows")
        if self.skew_symmetrizer() is None:
            raise ValueError("principal part is not skew-symmetrizable")

    @staticmethod
    def from_rows(rows) -> "ExchangeMatrix":
        return ExchangeMatrix(tuple(tuple(int(v) for v in r) for r in rows))

    @property
    def mutable_count(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def size(self) -> int:
        return len(self.rows)

    @property
    def principal(self) -> tuple[tuple[int, ...], ...]:
        return self.rows[: self.mutable_count]

    def skew_symmetrizer(self) -> tuple[int, ...] | None:
        return skew_symmetrizer(self.principal)

    def column(self, k: int) -> tuple[int, ...]:
        return tuple(r[k] for r in self.rows)

    def mutate(self, k: int) -> "ExchangeMatrix":
        """Matrix mutation at mutable index k (0-based)."""
        m = self.mutable_count
        if not 0 <= k < m:
            raise IndexError(f"mutation index {k} out of range for {m} mutable variables")
        rows = self.rows
        out = []
        for i, row in enumerate(rows):
            bik = row[k]
            new = []
            for j in range(m):
                if i == k or j == k:
                    new.append(-row[j])
                else:
                    bkj = rows[k][j]
                    new.append(row[j] + (abs(bik) * bkj + bik * abs(bkj)) // 2)
            out.append(tuple(new))
        return ExchangeMatrix(tuple(out))

    def is_acyclic(self) -> bool:
        """No directed cycle among mutable vertices (edge i -> j iff B_ji > 0)."""
        m = self.mutable_count
        adjacency = [[j for j in range(m) if self.rows[j][i] > 0] for i in range(m)]
        state = [0] * m  # 0 unvisited, 1 on the stack, 2 finished
        for root in range(m):
            if state[root]:
                continue
            state[root] = 1
            stack = [(root, iter(adjacency[root]))]
            while stack:
                v, succ = stack[-1]
                for j in succ:
                    if state[j] == 1:
                        return False
                    if state[j] == 0:
                        state[j] = 1
                        stack.append((j, iter(adjacency[j])))
                        break
                else:
                    state[v] = 2
                    stack.pop()
        return True

    def is_coprime(self) -> bool:
        """Every pair of columns linearly independent over the rationals."""
        m = self.mutable_count
        cols = [self.column(k) for k in range(m)]
        for a in range(m):
            for b in range(a + 1, m):
                u, v = cols[a], cols[b]
                if not any(u) or not any(v):
                    return False
                if all(u[i] * v[j] == u[j] * v[i]
                       for i in range(len(u)) for j in range(i + 1, len(u))):
                    return False
        return True

    def rank(self) -> int:
        """Exact rank over the rationals."""
        mat = [[Fraction(v) for v in row] for row in self.rows]
        rank = 0
        rows, cols = len(mat), self.mutable_count
        for c in range(cols):
            pivot = next((r for r in range(rank, rows) if mat[r][c]), None)
            if pivot is None:
                continue
            mat[rank], mat[pivot] = mat[pivot], mat[rank]
            inv = 1 / mat[rank][c]
            mat[rank] = [v * inv for v in mat[rank]]
            for r in range(rows):
                if r != rank and mat[r][c]:
                    f = mat[r][c]
                    mat[r] = [a - f * b for a, b in zip(mat[r], mat[rank])]
            rank += 1
        return rank

    def is_full_rank(self) -> bool:
        return self.rank() == self.mutable_count


def rank3_classification(a: int, b: int, c: int) -> str:
    """Mutation-acyclicity of the cyclic rank-3 seed with multiplicities (a, b, c).

    Returns "acyclic" when some multiplicity is below 2 or
    a*b*c - a^2 - b^2 - c^2 + 4 < 0, and "non-acyclic" otherwise.
    """
    if min(a, b, c) < 0:
        raise ValueError("multiplicities must be nonnegative")
    if a < 2 or b < 2 or c < 2:
        return "acyclic"
    if a * b * c - a * a - b * b - c * c + 4 < 0:
        return "acyclic"
    return "non-acyclic"


def totally_coprime_certificate(matrix: ExchangeMatrix) -> str:
    """One of "full_rank", "rank3_nonacyclic", "unknown".

    "unknown" never claims anything; in particular a coprime-looking seed is
    not certified, since coprimality is not mutation-invariant.
    """
    if matrix.is_full_rank():
        return "full_rank"
    if matrix.mutable_count == 3:
        p = matrix.principal
        skew = all(p[i][j] == -p[j][i] for i in range(3) for j in range(3))
        a, b, c = p[1][0], p[2][1], p[0][2]
        cyclic = (a > 0 and b > 0 and c > 0) or (a < 0 and b < 0 and c < 0)
        if skew and cyclic \
                and rank3_classification(abs(a), abs(b), abs(c)) == "non-acyclic":
            return "rank3_nonacyclic"
    return "unknown"


@dataclass(frozen=True)
class Seed:
    """An ordered seed: exchange matrix plus the cluster written in initial variables.

    ``cluster[i]`` is the i-th current cluster variable as a Laurent
    polynomial in the initial cluster; frozen entries never change.  Labels
    track primes for display only and are excluded from equality.
    """

    matrix: ExchangeMatrix
    context: VariableContext
    cluster: tuple[LaurentPolynomial, ...]
    labels: tuple[str, ...]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Seed):
            return NotImplemented
        return (self.matrix == other.matrix and self.context == other.context
                and self.cluster == other.cluster)

    def __hash__(self) -> int:
        return hash((self.matrix, self.context, self.cluster))

    @staticmethod
    def initial(matrix: ExchangeMatrix, names: list[str] | tuple[str, ...]) -> "Seed":
        n, m = matrix.size, matrix.mutable_count
        if len(names) != n:
            raise ValueError(f"expected {n} variable names, got {len(names)}")
        ctx = VariableContext(tuple(names), m, n - m)
        cluster = tuple(LaurentPolynomial.variable(ctx, name) for name in names)
        return Seed(matrix, ctx, cluster, tuple(names))

    @property
    def mutable_count(self) -> int:
        return self.matrix.mutable_count

    @property
    def size(self) -> int:
        return self.matrix.size

    def exchange_binomial(self, k: int) -> tuple[LaurentPolynomial, LaurentPolynomial]:
        """The two exchange monomials M+ and M- at index k, in current cluster terms."""
        col = self.matrix.column(k)
        pos = LaurentPolynomial.from_polynomial(Polynomial.constant(self.context, 1))
        neg = pos
        for j, b in enumerate(col):
            if b > 0:
                pos = pos * self.cluster[j] ** b
            elif b < 0:
                neg = neg * self.cluster[j] ** (-b)
        return pos, neg

    def mutate(self, k: int) -> "Seed":
        """Seed mutation at mutable index k (0-based), Laurent-certified."""
        m = self.mutable_count
        if not 0 <= k < m:
            raise IndexError(f"mutation index {k} out of range for {m} mutable variables")
        pos, neg = self.exchange_binomial(k)
        total = pos + neg
        old = self.cluster[k]
        frac = PolyFraction(
            total.numerator * Polynomial.monomial(self.context, old.denominator),
            old.numerator * Polynomial.monomial(self.context, total.denominator))
        new_entry = fraction_is_laurent(frac, self.context.names[: self.context.cluster_size])
        if new_entry is None:
            raise LaurentViolationError(
                f"mutation at index {k} produced a non-Laurent cluster entry; "
                "this indicates an arithmetic bug")
        cluster = list(self.cluster)
        cluster[k] = new_entry
        label = self.labels[k][:-1] if self.labels[k].endswith("'") else self.labels[k] + "'"
        labels = list(self.labels)
        labels[k] = label
        return Seed(self.matrix.mutate(k), self.context, tuple(cluster), tuple(labels))

    def apply_word(self, word: MutationWord) -> "Seed":
        seed = self
        for k in word:
            seed = seed.mutate(k)
        return seed

    def one_step_mutations(self) -> list[LaurentPolynomial]:
        """The mutated variables x_i' for each mutable index, in initial terms."""
        return [self.mutate(i).cluster[i] for i in range(self.mutable_count)]


def lower_bound_generators(seed: Seed) -> list[tuple[str, LaurentPolynomial]]:
    """Named generators of the lower bound: the cluster, its one-step
    mutations, and the inverses of the frozen variables."""
    out = [(label, entry) for label, entry in zip(seed.labels, seed.cluster)]
    for i, mutated in enumerate(seed.one_step_mutations()):
        base = seed.labels[i]
        label = base[:-1] if base.endswith("'") else base + "'"
        out.append((label, mutated))
    ctx = seed.context
    for name in ctx.frozen_names:
        out.append((name + "^-1", LaurentPolynomial.inverse_variable(ctx, name)))
    return out


def lower_deep_ideal_generators(seed: Seed) -> list[LaurentPolynomial]:
    """The m+1 generators of the lower deep ideal: the product of the mutable
    cluster variables, and the same product with each factor mutated."""
    m = seed.mutable_count
    one = LaurentPolynomial.from_polynomial(Polynomial.constant(seed.context, 1))
    full = one
    for i in range(m):
        full = full * seed.cluster[i]
    out = [full]
    mutations = seed.one_step_mutations()
    for i in range(m):
        prod = mutations[i]
        for j in range(m):
            if j != i:
                prod = prod * seed.cluster[j]
        out.append(prod)
    return out
