"""Executable verification of the algebra's defining identities.

Each check exercises one identity exhaustively over the basis states of a
context and returns a :class:`CheckReport`; comparisons are exact (scalar
zero tests), never floating point.  Operator identities are verified by
applying operators to every basis state rather than by building dense
matrices, which keeps the cost linear in the dimension per operator.

Checked, for every context:

* the square root of q: zeta^2 = q and zeta^(N^2) = 1, and for odd N the
  rejection of the opposite root;
* unitarity of every generator (the conjugate transpose both inverts the
  generator and equals its (N-1)-th power);
* generator order c^N = 1;
* all commutation pairs c_i c_j = q c_j c_i for i < j;
* the ground-state identity c_{2k-1}|0..0> = zeta c_{2k}|0..0> and its
  projector form c_{2k-1} E_k = zeta c_{2k} E_k;
* orthonormality of the vectors c_2^{a_1} ... c_{2n}^{a_n}|0..0>;
* the closed form for powers of odd generators;
* agreement of normal-form application with letter-by-letter application
  on random seeded words.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import rep
from .cyclo import AlgebraContext, CycloScalar
from .symbolic import Word, normal_order

__all__ = [
    "ALL_CHECKS",
    "CheckReport",
    "check_commutation",
    "check_ground_identity",
    "check_homomorphism",
    "check_order",
    "check_orthonormal_basis",
    "check_power_formula",
    "check_projector_identity",
    "check_unitarity",
    "check_zeta_root",
    "run_suite",
    "suite_report",
]

HOMOMORPHISM_TRIALS_DEFAULT = 25
HOMOMORPHISM_MAX_LEN_DEFAULT = 10


@dataclass
class CheckReport:
    """Outcome of one check; a failure always carries a counterexample."""

    ctx: AlgebraContext
    name: str
    passed: bool
    counterexample: str | None = None
    seed: int | None = None

    def to_dict(self) -> dict:
        out = {"name": self.name, "passed": self.passed, "counterexample": self.counterexample}
        if self.seed is not None:
            out["seed"] = self.seed
        return out


def _state_text(state: rep.QuditState) -> str:
    if not state.amps:
        return "0"
    return " + ".join(
        f"({amp})|{','.join(map(str, digits))}>" for digits, amp in sorted(state.amps.items())
    )


def _passed(ctx: AlgebraContext, name: str, seed: int | None = None) -> CheckReport:
    return CheckReport(ctx, name, True, None, seed)


def _failed(ctx: AlgebraContext, name: str, detail: str, seed: int | None = None) -> CheckReport:
    return CheckReport(ctx, name, False, detail, seed)


def check_zeta_root(N: int, zeta_exp: int | None = None) -> CheckReport:
    """zeta^2 = q and zeta^(N^2) = 1; for odd N the plus root must fail."""
    ctx = AlgebraContext(N, 1, zeta_exp)
    name = "zeta_root"
    zeta = ctx.zeta()
    if not zeta * zeta == ctx.q():
        return _failed(ctx, name, f"zeta^2 = {zeta * zeta} differs from q = {ctx.q()}")
    power = zeta ** (N * N)
    if not power == 1:
        return _failed(ctx, name, f"zeta^(N^2) = {power} differs from 1")
    if N % 2:
        rejected = ctx.omega(1) ** (N * N)
        if not rejected == -1:
            return _failed(
                ctx, name,
                f"rejected root (+exp(i*pi/N)) has N^2-th power {rejected}, expected -1",
            )
    return _passed(ctx, name)


def _generator_columns(ctx: AlgebraContext, i: int):
    """Monomial-matrix data of c_i: basis label -> (target label, amplitude).

    Returns None together with a failure description if any column is not a
    single term (the generalized-permutation property).
    """
    columns: dict[rep.BasisIndex, tuple[rep.BasisIndex, CycloScalar]] = {}
    for digits in rep.basis_indices(ctx):
        out = rep.apply_generator(i, rep.basis_state(ctx, digits))
        if len(out.amps) != 1:
            return None, f"c_{i}|{digits}> has {len(out.amps)} terms, expected 1"
        (target, amp), = out.amps.items()
        columns[digits] = (target, amp)
    return columns, None


def check_unitarity(ctx: AlgebraContext) -> CheckReport:
    """Every generator c satisfies c c^dagger = c^dagger c = 1.

    The conjugate transpose is read off the generator's monomial-matrix
    structure; the check also asserts that it coincides with the (N-1)-fold
    application of c, i.e. that the dagger inverts the generator.
    """
    name = "unitarity"
    for i in range(1, ctx.num_generators + 1):
        columns, problem = _generator_columns(ctx, i)
        if columns is None:
            return _failed(ctx, name, problem)
        targets = set(t for t, _ in columns.values())
        if len(targets) != ctx.dim:
            return _failed(ctx, name, f"c_{i} does not permute the basis labels")
        for digits, (_, amp) in columns.items():
            sq = amp.conj() * amp
            if not sq == 1:
                return _failed(
                    ctx, name,
                    f"|amplitude|^2 of c_{i} on |{digits}> is {sq}, expected 1",
                )
        # dagger = inverse: the conjugate transpose must equal c^{N-1}.
        for source, (target, amp) in columns.items():
            inv = rep.basis_state(ctx, target)
            for _ in range(ctx.N - 1):
                inv = rep.apply_generator(i, inv)
            if not inv == amp.conj() * rep.basis_state(ctx, source):
                return _failed(
                    ctx, name,
                    f"c_{i}^(N-1)|{target}> = {_state_text(inv)} differs from the "
                    f"conjugate transpose column ({amp.conj()})|{','.join(map(str, source))}>",
                )
    return _passed(ctx, name)


def check_order(ctx: AlgebraContext) -> CheckReport:
    """Every generator satisfies c^N = 1 on every basis state."""
    name = "order"
    for i in range(1, ctx.num_generators + 1):
        for digits in rep.basis_indices(ctx):
            state = rep.basis_state(ctx, digits)
            for _ in range(ctx.N):
                state = rep.apply_generator(i, state)
            if not state == rep.basis_state(ctx, digits):
                return _failed(
                    ctx, name,
                    f"c_{i}^N|{digits}> = {_state_text(state)} differs from |{digits}>",
                )
    return _passed(ctx, name)


def check_commutation(ctx: AlgebraContext) -> CheckReport:
    """c_i c_j = q c_j c_i for every pair i < j, on every basis state."""
    name = "commutation"
    q = ctx.q()
    for i in range(1, ctx.num_generators + 1):
        for j in range(i + 1, ctx.num_generators + 1):
            for digits in rep.basis_indices(ctx):
                start = rep.basis_state(ctx, digits)
                lhs = rep.apply_word(Word(ctx, (i, j)), start)
                rhs = q * rep.apply_word(Word(ctx, (j, i)), start)
                if not lhs == rhs:
                    return _failed(
                        ctx, name,
                        f"pair ({i},{j}) on |{digits}>: c_{i}c_{j} gives "
                        f"{_state_text(lhs)} but q c_{j}c_{i} gives {_state_text(rhs)}",
                    )
    return _passed(ctx, name)


def check_ground_identity(ctx: AlgebraContext) -> CheckReport:
    """c_{2k-1}|0..0> = zeta c_{2k}|0..0> for every k."""
    name = "ground_identity"
    zeta = ctx.zeta()
    ground = rep.ground_state(ctx)
    for k in range(1, ctx.n + 1):
        lhs = rep.apply_odd(k, ground)
        rhs = zeta * rep.apply_even(k, ground)
        if not lhs == rhs:
            return _failed(
                ctx, name,
                f"k={k}: c_{2 * k - 1}|0..0> = {_state_text(lhs)} differs from "
                f"zeta c_{2 * k}|0..0> = {_state_text(rhs)}",
            )
    return _passed(ctx, name)


def check_projector_identity(ctx: AlgebraContext) -> CheckReport:
    """c_{2k-1} E_k = zeta c_{2k} E_k as operators, on every basis state."""
    name = "projector_identity"
    zeta = ctx.zeta()
    for k in range(1, ctx.n + 1):
        for digits in rep.basis_indices(ctx):
            projected = rep.apply_projector(k, rep.basis_state(ctx, digits))
            lhs = rep.apply_odd(k, projected)
            rhs = zeta * rep.apply_even(k, projected)
            if not lhs == rhs:
                return _failed(
                    ctx, name,
                    f"k={k} on |{digits}>: {_state_text(lhs)} differs from {_state_text(rhs)}",
                )
    return _passed(ctx, name)


def check_orthonormal_basis(ctx: AlgebraContext) -> CheckReport:
    """The vectors c_2^{a_1} ... c_{2n}^{a_n}|0..0> form an orthonormal basis.

    Builds all of them, asserts each is a single unit-modulus term, and
    checks that the Gram matrix is exactly the identity.
    """
    name = "orthonormal_basis"
    labels = list(rep.basis_indices(ctx))
    vectors = []
    for digits in labels:
        v = rep.ordered_basis_vector(ctx, digits)
        if len(v.amps) != 1:
            return _failed(ctx, name, f"basis vector {digits} has {len(v.amps)} terms")
        (_, amp), = v.amps.items()
        if not amp.conj() * amp == 1:
            return _failed(ctx, name, f"basis vector {digits} has non-unit amplitude {amp}")
        vectors.append(v)
    for r, vr in enumerate(vectors):
        for c, vc in enumerate(vectors):
            got = rep.scalar_product(vr, vc)
            want = 1 if r == c else 0
            if not got == want:
                return _failed(
                    ctx, name,
                    f"Gram[{labels[r]}][{labels[c]}] = {got}, expected {want}",
                )
    return _passed(ctx, name)


def check_power_formula(ctx: AlgebraContext) -> CheckReport:
    """m-fold application of c_{2k-1} matches its closed form for m in [0, 2N].

    The closed form on |a_1..a_n> is
    zeta^m q^{m a_k + m(m-1)/2} q^{-m (a_1+..+a_{k-1})} |.., a_k + m, ..>.
    """
    name = "power_formula"
    N = ctx.N
    for k in range(1, ctx.n + 1):
        for digits in rep.basis_indices(ctx):
            state = rep.basis_state(ctx, digits)
            head = sum(digits[: k - 1])
            ak = digits[k - 1]
            for m in range(0, 2 * N + 1):
                phase = ctx.zeta(m) * ctx.q(m * ak + m * (m - 1) // 2 - m * head)
                shifted = digits[: k - 1] + ((ak + m) % N,) + digits[k:]
                expected = phase * rep.basis_state(ctx, shifted)
                if not state == expected:
                    return _failed(
                        ctx, name,
                        f"k={k}, m={m} on |{digits}>: {_state_text(state)} differs "
                        f"from {_state_text(expected)}",
                    )
                state = rep.apply_odd(k, state)
    return _passed(ctx, name)


def check_homomorphism(
    ctx: AlgebraContext,
    trials: int = HOMOMORPHISM_TRIALS_DEFAULT,
    max_len: int = HOMOMORPHISM_MAX_LEN_DEFAULT,
    seed: int = 0,
) -> CheckReport:
    """Seeded random words act identically letter-by-letter and in normal form."""
    name = "homomorphism"
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    top = ctx.num_generators
    for _ in range(trials):
        length = rng.randint(0, max_len)
        word = Word(ctx, tuple(rng.randint(1, top) for _ in range(length)))
        element = normal_order(word).to_element()
        for digits in rep.basis_indices(ctx):
            start = rep.basis_state(ctx, digits)
            direct = rep.apply_word(word, start)
            via_normal = rep.apply_element(element, start)
            if not direct == via_normal:
                return _failed(
                    ctx, name,
                    f"word {list(word.letters)} on |{digits}>: letterwise "
                    f"{_state_text(direct)} differs from normal form {_state_text(via_normal)}",
                    seed,
                )
    return _passed(ctx, name, seed)


ALL_CHECKS = (
    "zeta_root",
    "unitarity",
    "order",
    "commutation",
    "ground_identity",
    "projector_identity",
    "orthonormal_basis",
    "power_formula",
    "homomorphism",
)


def run_suite(
    ctx: AlgebraContext,
    selection=None,
    seed: int = 0,
    trials: int = HOMOMORPHISM_TRIALS_DEFAULT,
    max_len: int = HOMOMORPHISM_MAX_LEN_DEFAULT,
) -> list[CheckReport]:
    """Run the selected checks (default: all) in a fixed deterministic order."""
    if selection is None:
        selection = ALL_CHECKS
    else:
        selection = tuple(selection)
        unknown = [name for name in selection if name not in ALL_CHECKS]
        if unknown:
            raise ValueError(f"unknown check name(s): {', '.join(unknown)}")
    runners = {
        "zeta_root": lambda: check_zeta_root(ctx.N, ctx.zeta_exp),
        "unitarity": lambda: check_unitarity(ctx),
        "order": lambda: check_order(ctx),
        "commutation": lambda: check_commutation(ctx),
        "ground_identity": lambda: check_ground_identity(ctx),
        "projector_identity": lambda: check_projector_identity(ctx),
        "orthonormal_basis": lambda: check_orthonormal_basis(ctx),
        "power_formula": lambda: check_power_formula(ctx),
        "homomorphism": lambda: check_homomorphism(ctx, trials, max_len, seed),
    }
    return [runners[name]() for name in ALL_CHECKS if name in selection]


def suite_report(ctx: AlgebraContext, reports: list[CheckReport]) -> dict:
    """JSON-ready report for a suite run."""
    return {
        "N": ctx.N,
        "n": ctx.n,
        "zeta_exp": ctx.zeta_exp,
        "checks": [r.to_dict() for r in reports],
    }
