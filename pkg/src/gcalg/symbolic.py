"""Canonical normal forms and exact products for generator words.

The algebra on generators c_1 .. c_{2n} satisfies c_i c_j = q c_j c_i for
i < j and c_i^N = 1, so every word equals a phase times the ascending power
product c_1^{e_1} ... c_{2n}^{e_{2n}} with all exponents in [0, N).
``normal_order`` performs the reduction literally, one adjacent swap at a
time; ``NormalMonomial.__mul__`` uses the equivalent closed-form inversion
count and is cross-checked against the swap algorithm in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclo import AlgebraContext, ContextMismatchError, CycloScalar

__all__ = [
    "AlgebraElement",
    "NormalMonomial",
    "Word",
    "normal_order",
    "projector_element",
]


@dataclass(frozen=True)
class Word:
    """A product of generators, stored as the sequence of their indices."""

    ctx: AlgebraContext
    letters: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        top = self.ctx.num_generators
        for ell in self.letters:
            if not isinstance(ell, int) or not 1 <= ell <= top:
                raise ValueError(f"generator index {ell} out of range 1..{top}")

    def __len__(self) -> int:
        return len(self.letters)


def normal_order(word: Word) -> NormalMonomial:
    """Reduce a word to its unique phase * ordered-power normal form.

    Bubble passes swap adjacent letters until the word ascends; every swap
    that moves the smaller index left contributes a factor q^{-1}.  Exponents
    then reduce mod N, since c_i^N = 1 carries no phase.
    """
    ctx = word.ctx
    letters = list(word.letters)
    swaps = 0
    for p_end in range(len(letters) - 1, 0, -1):
        changed = False
        for p in range(p_end):
            if letters[p] > letters[p + 1]:
                letters[p], letters[p + 1] = letters[p + 1], letters[p]
                swaps += 1
                changed = True
        if not changed:
            break
    exps = [0] * ctx.num_generators
    for ell in letters:
        exps[ell - 1] += 1
    return NormalMonomial(ctx, ctx.q(-swaps), tuple(e % ctx.N for e in exps))


def _cross_inversions(left: tuple[int, ...], right: tuple[int, ...]) -> int:
    # Adjacent swaps needed to merge two ordered power products: one per
    # pair of letters (i from left, j from right) with i > j.
    total = 0
    tail = sum(left)
    for j in range(len(right)):
        tail -= left[j]
        if right[j]:
            total += right[j] * tail
    return total


@dataclass(frozen=True)
class NormalMonomial:
    """phase * c_1^{e_1} ... c_{2n}^{e_{2n}} with every exponent in [0, N)."""

    ctx: AlgebraContext
    phase: CycloScalar
    exps: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "exps", tuple(self.exps))
        if len(self.exps) != self.ctx.num_generators:
            raise ValueError(
                f"expected {self.ctx.num_generators} exponents, got {len(self.exps)}"
            )
        if any(not 0 <= e < self.ctx.N for e in self.exps):
            raise ValueError(f"exponents must lie in [0, {self.ctx.N}): {self.exps}")
        if self.phase.order != self.ctx.order:
            raise ContextMismatchError("phase ring does not match the context")
        if self.phase.is_zero():
            raise ValueError("monomial phase must be nonzero")

    @classmethod
    def identity(cls, ctx: AlgebraContext) -> NormalMonomial:
        return cls(ctx, ctx.one(), (0,) * ctx.num_generators)

    @classmethod
    def generator(cls, ctx: AlgebraContext, i: int) -> NormalMonomial:
        if not 1 <= i <= ctx.num_generators:
            raise ValueError(f"generator index {i} out of range 1..{ctx.num_generators}")
        exps = [0] * ctx.num_generators
        exps[i - 1] = 1
        return cls(ctx, ctx.one(), tuple(exps))

    def __mul__(self, other):
        if not isinstance(other, NormalMonomial):
            return NotImplemented
        if other.ctx != self.ctx:
            raise ContextMismatchError("monomials from different contexts")
        cross = _cross_inversions(self.exps, other.exps)
        phase = self.phase * other.phase * self.ctx.q(-cross)
        exps = tuple((a + b) % self.ctx.N for a, b in zip(self.exps, other.exps))
        return NormalMonomial(self.ctx, phase, exps)

    def to_element(self) -> AlgebraElement:
        return AlgebraElement(self.ctx, {self.exps: self.phase})

    def __repr__(self) -> str:
        return f"NormalMonomial(N={self.ctx.N}, n={self.ctx.n}, {self.phase} * c^{self.exps})"


class AlgebraElement:
    """A finite sum of ordered power products with exact coefficients.

    ``terms`` maps exponent vectors to nonzero scalars; the empty map is the
    zero element.  Every constructor and operation prunes coefficients that
    reduce to zero, so equality of elements is termwise scalar equality.
    """

    __slots__ = ("ctx", "terms")

    __hash__ = None

    def __init__(self, ctx: AlgebraContext, terms=None):
        clean: dict[tuple[int, ...], CycloScalar] = {}
        if terms:
            width = ctx.num_generators
            for exps, coeff in terms.items():
                exps = tuple(int(e) for e in exps)
                if len(exps) != width or any(not 0 <= e < ctx.N for e in exps):
                    raise ValueError(f"bad exponent vector {exps} for N={ctx.N}, n={ctx.n}")
                if coeff.order != ctx.order:
                    raise ContextMismatchError("coefficient ring does not match the context")
                if not coeff.is_zero():
                    acc = clean.get(exps)
                    coeff = coeff if acc is None else acc + coeff
                    if coeff.is_zero():
                        del clean[exps]
                    else:
                        clean[exps] = coeff
        self.ctx = ctx
        self.terms = clean

    @classmethod
    def _raw(cls, ctx: AlgebraContext, terms: dict) -> AlgebraElement:
        x = cls.__new__(cls)
        x.ctx = ctx
        x.terms = terms
        return x

    @classmethod
    def zero(cls, ctx: AlgebraContext) -> AlgebraElement:
        return cls._raw(ctx, {})

    @classmethod
    def one(cls, ctx: AlgebraContext) -> AlgebraElement:
        return cls._raw(ctx, {(0,) * ctx.num_generators: ctx.one()})

    @classmethod
    def from_scalar(cls, ctx: AlgebraContext, value) -> AlgebraElement:
        s = value if isinstance(value, CycloScalar) else ctx.scalar(value)
        if s.order != ctx.order:
            raise ContextMismatchError("scalar ring does not match the context")
        if s.is_zero():
            return cls.zero(ctx)
        return cls._raw(ctx, {(0,) * ctx.num_generators: s})

    @classmethod
    def from_monomial(cls, mono: NormalMonomial) -> AlgebraElement:
        return mono.to_element()

    @classmethod
    def generator(cls, ctx: AlgebraContext, i: int) -> AlgebraElement:
        return NormalMonomial.generator(ctx, i).to_element()

    def _check_ctx(self, other: AlgebraElement):
        if self.ctx != other.ctx:
            raise ContextMismatchError("elements from different contexts")

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check_ctx(other)
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            acc = out.get(exps)
            total = coeff if acc is None else acc + coeff
            if total.is_zero():
                out.pop(exps, None)
            else:
                out[exps] = total
        return AlgebraElement._raw(self.ctx, out)

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement._raw(self.ctx, {e: -c for e, c in self.terms.items()})

    def _scaled(self, value) -> AlgebraElement:
        s = value if isinstance(value, CycloScalar) else self.ctx.scalar(value)
        if s.order != self.ctx.order:
            raise ContextMismatchError("scalar ring does not match the context")
        if s.is_zero():
            return AlgebraElement.zero(self.ctx)
        # A nonzero scalar times a nonzero coefficient stays nonzero: the
        # value ring is a field, so no pruning is needed here.
        return AlgebraElement._raw(self.ctx, {e: c * s for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            self._check_ctx(other)
            ctx = self.ctx
            N = ctx.N
            out: dict[tuple[int, ...], CycloScalar] = {}
            for ea, ca in self.terms.items():
                for eb, cb in other.terms.items():
                    cross = _cross_inversions(ea, eb)
                    key = tuple((a + b) % N for a, b in zip(ea, eb))
                    contrib = ca * cb * ctx.q(-cross)
                    acc = out.get(key)
                    out[key] = contrib if acc is None else acc + contrib
            return AlgebraElement._raw(
                self.ctx, {e: c for e, c in out.items() if not c.is_zero()}
            )
        if isinstance(other, (CycloScalar, int, Fraction)):
            return self._scaled(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (CycloScalar, int, Fraction)):
            return self._scaled(other)
        return NotImplemented

    def __pow__(self, k: int) -> AlgebraElement:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return (self ** (-k)).adjoint()
        out = AlgebraElement.one(self.ctx)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def adjoint(self) -> AlgebraElement:
        """Conjugate-linear antihomomorphism: reverses products, c_i -> c_i^{N-1}."""
        ctx = self.ctx
        N = ctx.N
        out: dict[tuple[int, ...], CycloScalar] = {}
        for exps, coeff in self.terms.items():
            letters: list[int] = []
            for i in range(ctx.num_generators, 0, -1):
                letters.extend([i] * ((N - exps[i - 1]) % N))
            nm = normal_order(Word(ctx, tuple(letters)))
            contrib = coeff.conj() * nm.phase
            acc = out.get(nm.exps)
            out[nm.exps] = contrib if acc is None else acc + contrib
        return AlgebraElement._raw(
            ctx, {e: c for e, c in out.items() if not c.is_zero()}
        )

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, CycloScalar)):
            try:
                other = AlgebraElement.from_scalar(self.ctx, other)
            except ContextMismatchError:
                return False
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __repr__(self) -> str:
        body = ", ".join(f"{e}: {c}" for e, c in sorted(self.terms.items()))
        return f"AlgebraElement(N={self.ctx.N}, n={self.ctx.n}, {{{body}}})"


def projector_element(ctx: AlgebraContext, k: int) -> AlgebraElement:
    """The ground-state projector of qudit k as an exact algebra element.

    The unitary u = conj(zeta) q c_{2k-1} c_{2k}^{N-1} acts diagonally with
    eigenvalue q^{a_k} in the standard representation, so averaging its N
    powers kills every component with a_k != 0.
    """
    if not 1 <= k <= ctx.n:
        raise ValueError(f"qudit index {k} out of range 1..{ctx.n}")
    exps = [0] * ctx.num_generators
    exps[2 * k - 2] = 1
    exps[2 * k - 1] = ctx.N - 1
    u = NormalMonomial(ctx, ctx.zeta(-1) * ctx.q(1), tuple(exps))
    power = NormalMonomial.identity(ctx)
    total = AlgebraElement.zero(ctx)
    for _ in range(ctx.N):
        total = total + power.to_element()
        power = power * u
    return total._scaled(Fraction(1, ctx.N))
