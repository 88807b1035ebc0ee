"""Phase-inequality regions of stability conditions and exact feasibility.

A region is cut out of phase space by strict linear inequalities
phi_i < phi_j + alpha_{i,j}, where the offsets alpha come from chain
minima over the matrix of minimal nonzero Hom degrees.  Masses are
decoupled (they only need to be positive), so systems quantify over the
phases alone.  Feasibility is decided by Fourier-Motzkin elimination
over exact rationals; the answer is always certified, either by a
witness point re-checked against every constraint or by a nonnegative
combination of constraints summing to an impossible strict inequality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import inf
from typing import Sequence, Union

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class DegreeMatrix:
    """Minimal nonzero Hom degrees k_{i,j} for i < j; inf means none."""

    n: int
    entries: tuple[tuple[float, ...], ...]  # ints, with math.inf sentinels

    def __post_init__(self):
        if len(self.entries) != self.n + 1 or any(
            len(row) != self.n + 1 for row in self.entries
        ):
            raise ValueError("degree matrix has wrong shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[float]]) -> "DegreeMatrix":
        frozen = tuple(tuple(row) for row in rows)
        return cls(len(frozen) - 1, frozen)

    @classmethod
    def all_zero(cls, n: int) -> "DegreeMatrix":
        """Degrees of a strong collection with no orthogonal pairs."""
        return cls(n, tuple(tuple(0 for _ in range(n + 1)) for _ in range(n + 1)))

    @classmethod
    def for_strong_collection(cls, c) -> "DegreeMatrix":
        """Degrees read off a strong candidate: every pair in degree zero.

        Positive chi entries certify nonzero degree-zero Homs; for
        non-strong collections the chi level does not determine the
        degrees, so this refuses rather than guesses.
        """
        if any(x <= 0 for x in c.upper_entries()):
            raise ValueError(
                "Hom degrees are only determined by chi for strong candidates"
            )
        return cls.all_zero(c.n)

    def k(self, i: int, j: int) -> float:
        if not 0 <= i < j <= self.n:
            raise IndexError(f"need 0 <= i < j <= {self.n}, got ({i}, {j})")
        return self.entries[i][j]


@dataclass(frozen=True)
class PhasePoint:
    """Masses and phases of the objects; masses must be positive."""

    m: tuple[Fraction, ...]
    phi: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.m) != len(self.phi):
            raise ValueError("mass and phase vectors must have equal length")
        if any(x <= 0 for x in self.m):
            raise ValueError("masses must be positive")


Constraint = tuple[tuple[Fraction, ...], Fraction]  # <coeffs, phi> < bound


@dataclass(frozen=True)
class InequalitySystem:
    """Finite conjunction of strict linear inequalities over the rationals."""

    dimension: int
    constraints: tuple[Constraint, ...]

    def __post_init__(self):
        for coeffs, _ in self.constraints:
            if len(coeffs) != self.dimension:
                raise ValueError("constraint arity does not match dimension")

    @classmethod
    def build(
        cls, dimension: int, rows: Sequence[tuple[Sequence[Rational], Rational]]
    ) -> "InequalitySystem":
        frozen = tuple(
            (tuple(Fraction(x) for x in coeffs), Fraction(bound))
            for coeffs, bound in rows
        )
        return cls(dimension, frozen)

    def rows_text(self) -> list[str]:
        """Constraint rows as ``[c_0,...,c_n | b]`` in exact p/q notation."""
        return [
            "[" + ",".join(str(x) for x in coeffs) + " | " + str(bound) + "]"
            for coeffs, bound in self.constraints
        ]


def alpha(d: DegreeMatrix, i: int, j: int) -> float:
    """Chain minimum of degree sums minus chain length, for i < j.

    Computed as one plus the shortest path from i to j in the DAG on
    0..n with edge weights k_{a,b} - 1; infinities propagate.
    """
    d.k(i, j)  # validates the index pair
    best: dict[int, float] = {i: 0}
    for node in range(i + 1, j + 1):
        best[node] = min(
            (best[a] + d.k(a, node) - 1 for a in range(i, node) if a in best),
            default=inf,
        )
    value = best[j] + 1
    if value == inf:
        return inf
    return int(value)


def region_system(d: DegreeMatrix) -> InequalitySystem:
    """Inequalities phi_i - phi_j < alpha_{i,j}; infinite offsets drop out."""
    rows = []
    for i in range(d.n + 1):
        for j in range(i + 1, d.n + 1):
            a = alpha(d, i, j)
            if a != inf:
                coeffs = [0] * (d.n + 1)
                coeffs[i] = 1
                coeffs[j] = -1
                rows.append((coeffs, a))
    return InequalitySystem.build(d.n + 1, rows)


def _pair_row(dim: int, i: int, j: int, bound: Rational):
    """Row for phi_i - phi_j < bound."""
    coeffs = [0] * dim
    coeffs[i] = 1
    coeffs[j] = -1
    return (coeffs, bound)


def lemma41_system(kidx: int, n: int = 3) -> InequalitySystem:
    """Phases common to a strong collection and its k-th right mutation.

    Conditions: (i) the strong-collection system, (ii') the mutated
    object stays one shift away, phi_{k+1} < phi_k + 1, and (iii)
    phi_{k+1} < phi_{k+i} - (i-1) for i >= 2.
    """
    if not 0 <= kidx <= n - 1:
        raise IndexError(f"mutation index {kidx} out of range for n={n}")
    rows = [
        _pair_row(n + 1, i, j, -(j - i - 1))
        for i in range(n + 1)
        for j in range(i + 1, n + 1)
    ]
    rows.append(_pair_row(n + 1, kidx + 1, kidx, 1))
    for i in range(2, n - kidx + 1):
        rows.append(_pair_row(n + 1, kidx + 1, kidx + i, -(i - 1)))
    return InequalitySystem.build(n + 1, rows)


def thm51_systems() -> tuple[InequalitySystem, InequalitySystem, InequalitySystem]:
    """The three condition systems used for the loop contractions on P^3.

    First: phases common to a collection, its left mutation at 2 and the
    further left mutation at 0.  Second: the mirrored right-mutation
    version.  Third: phases common to a collection and its mutation at 0
    and 2 together; the phase of the mutated first object enters as a
    fifth variable pinned between its neighbours by the defining
    triangle, phi_1 - 1 < psi < phi_0 + 1.
    """
    strong4 = [
        _pair_row(4, i, j, -(j - i - 1)) for i in range(4) for j in range(i + 1, 4)
    ]
    left = InequalitySystem.build(
        4,
        strong4
        + [
            _pair_row(4, 0, 2, -2),
            _pair_row(4, 1, 2, -1),
            _pair_row(4, 1, 0, 1),
            _pair_row(4, 3, 2, 1),
        ],
    )
    right = InequalitySystem.build(
        4,
        strong4
        + [
            _pair_row(4, 1, 3, -2),
            _pair_row(4, 1, 2, -1),
            _pair_row(4, 1, 0, 1),
            _pair_row(4, 3, 2, 1),
        ],
    )
    strong5 = [
        _pair_row(5, i, j, -(j - i - 1)) for i in range(4) for j in range(i + 1, 4)
    ]
    overlap = InequalitySystem.build(
        5,
        strong5
        + [
            _pair_row(5, 1, 0, 1),
            _pair_row(5, 3, 2, 1),
            _pair_row(5, 4, 2, -2),
            _pair_row(5, 1, 4, 1),
            _pair_row(5, 4, 0, 1),
        ],
    )
    return left, right, overlap


# ---------------------------------------------------------------------------
# exact feasibility

@dataclass(frozen=True)
class FeasibilityResult:
    """Either a strict witness point or a contradiction certificate.

    The certificate is a vector of nonnegative multipliers, one per
    original constraint, whose combination has zero coefficients and a
    nonpositive bound: an unsatisfiable strict inequality 0 < b <= 0.
    """

    feasible: bool
    witness: tuple[Fraction, ...] | None = None
    certificate: tuple[Fraction, ...] | None = None


def contains(s: InequalitySystem, p) -> bool:
    """Exact strict membership; accepts a PhasePoint or a bare vector."""
    values = p.phi if isinstance(p, PhasePoint) else tuple(Fraction(x) for x in p)
    if len(values) != s.dimension:
        raise ValueError(
            f"point dimension {len(values)} does not match system dimension {s.dimension}"
        )
    return all(
        sum(c * v for c, v in zip(coeffs, values)) < bound
        for coeffs, bound in s.constraints
    )


def _certificate_valid(s: InequalitySystem, mult: Sequence[Fraction]) -> bool:
    if len(mult) != len(s.constraints) or any(m < 0 for m in mult) or not any(mult):
        return False
    combo = [Fraction(0)] * s.dimension
    bound = Fraction(0)
    for m, (coeffs, b) in zip(mult, s.constraints):
        for k, c in enumerate(coeffs):
            combo[k] += m * c
        bound += m * b
    return all(x == 0 for x in combo) and bound <= 0


def is_feasible(s: InequalitySystem) -> FeasibilityResult:
    """Decide a strict system by Fourier-Motzkin elimination.

    Both outcomes are re-verified before returning: witnesses through
    ``contains``, certificates through re-summation.
    """
    m = len(s.constraints)
    # working rows: (coeffs, bound, multipliers over the original rows)
    rows: list[tuple[list[Fraction], Fraction, list[Fraction]]] = [
        (list(coeffs), bound, [Fraction(int(i == k)) for i in range(m)])
        for k, (coeffs, bound) in enumerate(s.constraints)
    ]
    eliminated: list[tuple[int, list[tuple[list[Fraction], Fraction]]]] = []

    for var in range(s.dimension - 1, -1, -1):
        uppers = [r for r in rows if r[0][var] > 0]
        lowers = [r for r in rows if r[0][var] < 0]
        keep = [r for r in rows if r[0][var] == 0]
        bounds_for_var = [(r[0], r[1]) for r in rows if r[0][var] != 0]
        new_rows = keep
        for lc, lb, lm in lowers:
            for uc, ub, um in uppers:
                lw, uw = uc[var], -lc[var]
                coeffs = [lw * a + uw * b for a, b in zip(lc, uc)]
                bound = lw * lb + uw * ub
                mult = [lw * a + uw * b for a, b in zip(lm, um)]
                new_rows = new_rows + [(coeffs, bound, mult)]
        eliminated.append((var, bounds_for_var))
        rows = new_rows

    for coeffs, bound, mult in rows:
        # all variables eliminated: the row reads 0 < bound
        if bound <= 0:
            total = sum(mult)
            certificate = tuple(x / total for x in mult)
            if not _certificate_valid(s, certificate):
                raise AssertionError("internal error: invalid infeasibility certificate")
            return FeasibilityResult(False, certificate=certificate)

    # feasible: back-substitute through the recorded elimination stages
    point: list[Fraction] = [Fraction(0)] * s.dimension
    for var, bounds in reversed(eliminated):
        lo, hi = None, None
        for coeffs, bound in bounds:
            rest = bound - sum(
                c * point[k] for k, c in enumerate(coeffs) if k != var
            )
            limit = rest / coeffs[var]
            if coeffs[var] > 0:
                hi = limit if hi is None else min(hi, limit)
            else:
                lo = limit if lo is None else max(lo, limit)
        if lo is None and hi is None:
            point[var] = Fraction(0)
        elif lo is None:
            point[var] = hi - 1
        elif hi is None:
            point[var] = lo + 1
        else:
            point[var] = (lo + hi) / 2
    witness = tuple(point)
    if not contains(s, witness):
        raise AssertionError("internal error: witness fails re-substitution")
    return FeasibilityResult(True, witness=witness)
