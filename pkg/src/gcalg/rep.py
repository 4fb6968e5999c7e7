"""States of n qudits with exact amplitudes, and the generator action.

Basis states carry labels (a_1, ..., a_n) with digits in [0, N).  Every
generator is a generalized permutation: on a basis label the even generator
c_{2k} increments a_k mod N and multiplies by q^{-(a_1+...+a_{k-1})}, while
the odd generator c_{2k-1} contributes an extra zeta q^{a_k}.  The projector
E_k keeps exactly the components with a_k = 0.  Operators act term by term
on the sparse amplitude map, so applying a generator never materializes a
matrix; ``dense_matrix`` exists for exports and cross-checks only.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .cyclo import AlgebraContext, ContextMismatchError, CycloScalar
from .symbolic import AlgebraElement, Word

__all__ = [
    "BasisIndex",
    "DENSE_CAP_DEFAULT",
    "DenseCapError",
    "QuditState",
    "apply_element",
    "apply_even",
    "apply_generator",
    "apply_odd",
    "apply_projector",
    "apply_word",
    "basis_indices",
    "basis_state",
    "dense_matrix",
    "ground_state",
    "ordered_basis_vector",
    "scalar_product",
    "state_from_json",
    "state_to_json",
]

BasisIndex = tuple[int, ...]

DENSE_CAP_DEFAULT = 4096


class DenseCapError(ValueError):
    """A dense output would exceed the configured dimension cap."""


def _check_digits(ctx: AlgebraContext, digits: BasisIndex):
    if len(digits) != ctx.n:
        raise ValueError(f"expected {ctx.n} digits, got {len(digits)}")
    if any(not isinstance(d, int) or not 0 <= d < ctx.N for d in digits):
        raise ValueError(f"digits must lie in [0, {ctx.N}): {digits}")


class QuditState:
    """Sparse map from basis labels to exact amplitudes (zero terms absent)."""

    __slots__ = ("ctx", "amps")

    __hash__ = None

    def __init__(self, ctx: AlgebraContext, amps=None):
        clean: dict[BasisIndex, CycloScalar] = {}
        if amps:
            for digits, amp in amps.items():
                digits = tuple(digits)
                _check_digits(ctx, digits)
                if amp.order != ctx.order:
                    raise ContextMismatchError("amplitude ring does not match the context")
                if not amp.is_zero():
                    acc = clean.get(digits)
                    amp = amp if acc is None else acc + amp
                    if amp.is_zero():
                        del clean[digits]
                    else:
                        clean[digits] = amp
        self.ctx = ctx
        self.amps = clean

    @classmethod
    def _raw(cls, ctx: AlgebraContext, amps: dict) -> QuditState:
        s = cls.__new__(cls)
        s.ctx = ctx
        s.amps = amps
        return s

    def _check_ctx(self, other: QuditState):
        if self.ctx != other.ctx:
            raise ContextMismatchError("states from different contexts")

    def __add__(self, other):
        if not isinstance(other, QuditState):
            return NotImplemented
        self._check_ctx(other)
        out = dict(self.amps)
        for digits, amp in other.amps.items():
            acc = out.get(digits)
            total = amp if acc is None else acc + amp
            if total.is_zero():
                out.pop(digits, None)
            else:
                out[digits] = total
        return QuditState._raw(self.ctx, out)

    def __sub__(self, other):
        if not isinstance(other, QuditState):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> QuditState:
        return QuditState._raw(self.ctx, {d: -a for d, a in self.amps.items()})

    def _scaled(self, value) -> QuditState:
        s = value if isinstance(value, CycloScalar) else self.ctx.scalar(value)
        if s.order != self.ctx.order:
            raise ContextMismatchError("scalar ring does not match the context")
        if s.is_zero():
            return QuditState._raw(self.ctx, {})
        return QuditState._raw(self.ctx, {d: a * s for d, a in self.amps.items()})

    def __mul__(self, other):
        if isinstance(other, (CycloScalar, int, Fraction)):
            return self._scaled(other)
        return NotImplemented

    __rmul__ = __mul__

    def amplitude(self, digits) -> CycloScalar:
        """Amplitude at a basis label, zero when absent."""
        return self.amps.get(tuple(digits), CycloScalar.zero(self.ctx.order))

    def __eq__(self, other):
        if not isinstance(other, QuditState):
            return NotImplemented
        return self.ctx == other.ctx and self.amps == other.amps

    def __repr__(self) -> str:
        body = ", ".join(f"{d}: {a}" for d, a in sorted(self.amps.items()))
        return f"QuditState(N={self.ctx.N}, n={self.ctx.n}, {{{body}}})"


def ground_state(ctx: AlgebraContext) -> QuditState:
    """The all-zero basis state with amplitude one."""
    return QuditState._raw(ctx, {(0,) * ctx.n: ctx.one()})


def basis_state(ctx: AlgebraContext, digits) -> QuditState:
    digits = tuple(digits)
    _check_digits(ctx, digits)
    return QuditState._raw(ctx, {digits: ctx.one()})


def basis_indices(ctx: AlgebraContext):
    """All basis labels in row-major order, first digit slowest."""
    return itertools.product(range(ctx.N), repeat=ctx.n)


def apply_even(k: int, state: QuditState) -> QuditState:
    """Action of c_{2k}: raise digit k, phase q^{-(sum of digits left of k)}."""
    ctx = state.ctx
    if not 1 <= k <= ctx.n:
        raise ValueError(f"qudit index {k} out of range 1..{ctx.n}")
    N = ctx.N
    out = {}
    for digits, amp in state.amps.items():
        head = sum(digits[: k - 1])
        nd = digits[: k - 1] + ((digits[k - 1] + 1) % N,) + digits[k:]
        # Unit phases cannot cancel a nonzero amplitude, so no re-pruning.
        out[nd] = amp * ctx.q(-head)
    return QuditState._raw(ctx, out)


def apply_odd(k: int, state: QuditState) -> QuditState:
    """Action of c_{2k-1}: like c_{2k} with an extra factor zeta q^{a_k}."""
    ctx = state.ctx
    if not 1 <= k <= ctx.n:
        raise ValueError(f"qudit index {k} out of range 1..{ctx.n}")
    N = ctx.N
    out = {}
    for digits, amp in state.amps.items():
        head = sum(digits[: k - 1])
        nd = digits[: k - 1] + ((digits[k - 1] + 1) % N,) + digits[k:]
        out[nd] = amp * ctx.omega(ctx.zeta_exp + 2 * (digits[k - 1] - head))
    return QuditState._raw(ctx, out)


def apply_projector(k: int, state: QuditState) -> QuditState:
    """Action of E_k: keep exactly the components with a_k = 0."""
    ctx = state.ctx
    if not 1 <= k <= ctx.n:
        raise ValueError(f"qudit index {k} out of range 1..{ctx.n}")
    out = {d: a for d, a in state.amps.items() if d[k - 1] == 0}
    return QuditState._raw(ctx, out)


def apply_generator(i: int, state: QuditState) -> QuditState:
    """Action of c_i, dispatching on the parity of the generator index."""
    if not 1 <= i <= state.ctx.num_generators:
        raise ValueError(f"generator index {i} out of range 1..{state.ctx.num_generators}")
    if i % 2:
        return apply_odd((i + 1) // 2, state)
    return apply_even(i // 2, state)


def apply_word(word: Word, state: QuditState) -> QuditState:
    """Apply a word letter by letter, rightmost letter acting first."""
    if word.ctx != state.ctx:
        raise ContextMismatchError("word and state from different contexts")
    for letter in reversed(word.letters):
        state = apply_generator(letter, state)
    return state


def apply_element(element: AlgebraElement, state: QuditState) -> QuditState:
    """Linear action of an element; each power product acts rightmost-first."""
    if element.ctx != state.ctx:
        raise ContextMismatchError("element and state from different contexts")
    ctx = state.ctx
    acc: dict[BasisIndex, CycloScalar] = {}
    for exps, coeff in element.terms.items():
        cur = state
        for i in range(ctx.num_generators, 0, -1):
            for _ in range(exps[i - 1]):
                cur = apply_generator(i, cur)
        for digits, amp in cur.amps.items():
            contrib = coeff * amp
            prev = acc.get(digits)
            acc[digits] = contrib if prev is None else prev + contrib
    return QuditState._raw(
        ctx, {d: a for d, a in acc.items() if not a.is_zero()}
    )


def scalar_product(a: QuditState, b: QuditState) -> CycloScalar:
    """Hermitian product, conjugate-linear in the first argument."""
    a._check_ctx(b)
    total = a.ctx.zero()
    if len(b.amps) < len(a.amps):
        for digits, amp_b in b.amps.items():
            amp_a = a.amps.get(digits)
            if amp_a is not None:
                total = total + amp_a.conj() * amp_b
    else:
        for digits, amp_a in a.amps.items():
            amp_b = b.amps.get(digits)
            if amp_b is not None:
                total = total + amp_a.conj() * amp_b
    return total


def ordered_basis_vector(ctx: AlgebraContext, digits) -> QuditState:
    """Apply c_2^{a_1} c_4^{a_2} ... c_{2n}^{a_n} to the ground state.

    The rightmost factor acts first, so the n-th qudit's digit fills first.
    """
    digits = tuple(digits)
    _check_digits(ctx, digits)
    state = ground_state(ctx)
    for pos in range(ctx.n, 0, -1):
        for _ in range(digits[pos - 1]):
            state = apply_even(pos, state)
    return state


def dense_matrix(element: AlgebraElement, cap: int = DENSE_CAP_DEFAULT) -> list[list[CycloScalar]]:
    """Matrix of an element; column j is its action on the j-th basis state.

    Rows and columns follow ``basis_indices`` order (first digit slowest).
    """
    ctx = element.ctx
    dim = ctx.dim
    if dim > cap:
        raise DenseCapError(f"dimension {dim} exceeds the dense cap {cap}")
    labels = list(basis_indices(ctx))
    row_of = {label: r for r, label in enumerate(labels)}
    zero = ctx.zero()
    mat = [[zero] * dim for _ in range(dim)]
    for j, label in enumerate(labels):
        column = apply_element(element, basis_state(ctx, label))
        for digits, amp in column.amps.items():
            mat[row_of[digits]][j] = amp
    return mat


def state_to_json(state: QuditState) -> dict:
    ctx = state.ctx
    return {
        "N": ctx.N,
        "n": ctx.n,
        "terms": [
            {"index": list(digits), "amp": amp.to_json()}
            for digits, amp in sorted(state.amps.items())
        ],
    }


def state_from_json(data: dict, zeta_exp: int | None = None) -> QuditState:
    ctx = AlgebraContext(data["N"], data["n"], zeta_exp)
    amps = {
        tuple(term["index"]): CycloScalar.from_json(term["amp"])
        for term in data["terms"]
    }
    return QuditState(ctx, amps)
