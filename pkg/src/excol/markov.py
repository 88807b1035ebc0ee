"""Integer six-tuple invariants of collections on P^3 and the group acting on them.

A collection of four objects maps to the six strictly upper entries of
its Gram matrix.  Tuples coming from collections satisfy a Markov-type
Diophantine equation, carry an action of a finitely presented group
generated by letters v, w2, w3, and the map intertwines mutations with
that action after passing to the dual collection.  This module also
provides bounded orbit enumeration and a stabilizer scan used as finite
evidence for the freeness of the mutation action.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Union

from . import _matrix
from .braid import BraidWord, Letter, delta_word
from .collection import NumericalCollection, apply_word, _mutate


class CapExceededError(RuntimeError):
    """An enumeration hit its element cap; partial results are attached."""

    def __init__(self, message: str, partial):
        super().__init__(message)
        self.partial = partial


class SixTuple(NamedTuple):
    """Strictly upper Gram entries (a01, a02, a03, a12, a13, a23)."""

    a01: int
    a02: int
    a03: int
    a12: int
    a13: int
    a23: int


SEED_DUAL = SixTuple(4, 6, 4, 4, 6, 4)
SEED_BEILINSON = SixTuple(4, 10, 20, 4, 10, 4)

V, W2, W2_INV, W3 = "v", "w2", "w2^-1", "w3"
G_LETTERS = (V, W2, W2_INV, W3)


def t_map(c: NumericalCollection) -> SixTuple:
    """Read off the six-tuple of a collection of four objects."""
    if c.n != 3:
        raise ValueError(f"t_map needs a collection of 4 objects, got {c.n + 1}")
    return SixTuple(*c.upper_entries())


def tuple_gram(t: SixTuple) -> _matrix.IntMatrix:
    """The unitriangular Gram matrix determined by a six-tuple."""
    a01, a02, a03, a12, a13, a23 = t
    return (
        (1, a01, a02, a03),
        (0, 1, a12, a13),
        (0, 0, 1, a23),
        (0, 0, 0, 1),
    )


def eval_eq1(t: SixTuple) -> int:
    """Left side of the first unipotency equation; zero on valid tuples."""
    a01, a02, a03, a12, a13, a23 = t
    return (
        a01 * a01 + a02 * a02 + a03 * a03 + a12 * a12 + a13 * a13 + a23 * a23
        - a01 * a12 * a02 - a01 * a13 * a03 - a02 * a23 * a03 - a12 * a23 * a13
        + a01 * a12 * a23 * a03 - 8
    )


def eval_eq2(t: SixTuple, variant: str = "corrected") -> int:
    """Left side of the second unipotency equation.

    ``printed`` evaluates the equation exactly as typeset (second term
    a02^2 a12^2); ``corrected`` uses a02^2 a13^2 instead, which vanishes
    on the seed tuples and agrees with the unipotency oracle.
    """
    a01, a02, a03, a12, a13, a23 = t
    if variant == "printed":
        second = a02 * a02 * a12 * a12
    elif variant == "corrected":
        second = a02 * a02 * a13 * a13
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return (
        a01 * a01 * a23 * a23 + second + a03 * a03 * a12 * a12
        - 2 * a01 * a13 * a02 * a23 - 2 * a02 * a12 * a03 * a13
        + 2 * a01 * a12 * a23 * a03 - 16
    )


def unipotency_oracle(t: SixTuple) -> bool:
    """Ground truth: rebuild the Gram matrix and test (kappa+1)^4 = 0."""
    gram = tuple_gram(t)
    inv = _matrix.unitriangular_inverse(gram)
    kappa = _matrix.mat_mul(inv, _matrix.transpose(gram))
    plus_one = _matrix.mat_add(kappa, _matrix.identity(4))
    return _matrix.is_zero(_matrix.mat_pow(plus_one, 4))


def on_gamma(t: SixTuple) -> bool:
    """Membership in the invariant variety: eq1 vanishes and the oracle passes."""
    return eval_eq1(t) == 0 and unipotency_oracle(t)


# ---------------------------------------------------------------------------
# the group action on six-tuples

def apply_g(t: SixTuple, letter: str) -> SixTuple:
    """Apply one generator of the tuple group."""
    a01, a02, a03, a12, a13, a23 = t
    if letter == V:
        return SixTuple(a01, a03, a02, a01 * a03 - a13, a01 * a02 - a12, a23)
    if letter == W2:
        return SixTuple(a03, a13, a23, a01, a02, a12)
    if letter == W2_INV:
        return SixTuple(a12, a13, a01, a23, a02, a03)
    if letter == W3:
        return SixTuple(a23, a13, a03, a12, a02, a01)
    raise ValueError(f"unknown group letter {letter!r}")


@dataclass(frozen=True)
class GWord:
    """Word over the alphabet {v, w2, w2^-1, w3}, textual order."""

    letters: tuple[str, ...] = ()

    def __post_init__(self):
        for let in self.letters:
            if let not in G_LETTERS:
                raise ValueError(f"unknown group letter {let!r}")

    def __mul__(self, other: "GWord") -> "GWord":
        return GWord(self.letters + other.letters)

    def inverse(self) -> "GWord":
        inv = {V: (V,), W3: (W3,), W2: (W2_INV,), W2_INV: (W2,)}
        out: list[str] = []
        for let in reversed(self.letters):
            out.extend(inv[let])
        return GWord(tuple(out))

    def reduced(self) -> "GWord":
        """Free reduction with respect to v^2 = w3^2 = w2^4 = 1."""
        stack: list[tuple[str, int]] = []  # (base, exponent)
        order = {V: 2, W3: 2, W2: 4}
        for let in self.letters:
            base, exp = (W2, -1) if let == W2_INV else (let, 1)
            if stack and stack[-1][0] == base:
                stack[-1] = (base, (stack[-1][1] + exp) % order[base])
                if stack[-1][1] == 0:
                    stack.pop()
            else:
                stack.append((base, exp % order[base]))
        out: list[str] = []
        for base, exp in stack:
            if base == W2 and exp == 3:
                out.append(W2_INV)
            else:
                out.extend([base] * exp)
        return GWord(tuple(out))

    def apply(self, t: SixTuple) -> SixTuple:
        """Act on a tuple, rightmost letter first."""
        for let in reversed(self.letters):
            t = apply_g(t, let)
        return t

    def __str__(self) -> str:
        return " ".join(self.letters) or "<empty>"


_R_IMAGES = {
    0: (W2, W2, V, W3),
    1: (W2, V, W3, W2),
    2: (V, W3, W2, W2),
}
_L_IMAGES = {i: GWord(img).inverse().letters for i, img in _R_IMAGES.items()}


def f_image(w: BraidWord) -> GWord:
    """Image of a braid word under the homomorphism to the tuple group.

    sigma_i^-1 maps by the displayed rule for a right mutation;
    sigma_i^+1 maps to the formal inverse of that rule.  Letter order is
    preserved, so the image acts rightmost first exactly like the word.
    """
    if w.strands != 4:
        raise ValueError("the homomorphism is defined on the 4-strand group")
    letters: list[str] = []
    for i, e in w.letters:
        letters.extend(_R_IMAGES[i] if e == -1 else _L_IMAGES[i])
    return GWord(tuple(letters))


def check_equivariance(c: NumericalCollection, w: BraidWord) -> bool:
    """Check T(delta(w(c))) == f(w) . T(delta(c)) exactly."""
    if c.n != 3:
        raise ValueError("equivariance is a statement about collections of 4 objects")
    delta = delta_word()
    lhs = t_map(apply_word(apply_word(c, w), delta))
    rhs = f_image(w).apply(t_map(apply_word(c, delta)))
    return lhs == rhs


# ---------------------------------------------------------------------------
# orbits and stabilizers

MUTATION_LETTERS: tuple[Letter, ...] = ((0, 1), (1, 1), (2, 1), (0, -1), (1, -1), (2, -1))

OrbitSeed = Union[SixTuple, NumericalCollection]


def _letters_for(c: NumericalCollection) -> tuple[Letter, ...]:
    """The mutation alphabet L_0..L_{n-1}, R_0..R_{n-1} of a collection."""
    return tuple((i, 1) for i in range(c.n)) + tuple((i, -1) for i in range(c.n))


def orbit(seed: OrbitSeed, depth: int, cap: int = 100_000) -> dict:
    """Breadth-first closure of a seed under its generating letters.

    Collections expand under their mutation letters, tuples under the
    four group letters.  Returns an insertion-ordered mapping from each
    distinct element to the depth at which it first appeared; raises
    CapExceededError (with the partial mapping attached) past ``cap``.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    if isinstance(seed, SixTuple):
        def expand(t):
            return (apply_g(t, let) for let in G_LETTERS)
    elif isinstance(seed, NumericalCollection):
        def expand(c):
            return (
                _mutate(c, i, e) for i, e in _letters_for(c)
            )
    else:
        raise TypeError(f"cannot enumerate an orbit of {type(seed).__name__}")

    seen: dict = {seed: 0}
    frontier = [seed]
    for level in range(1, depth + 1):
        new: list = []
        for elem in frontier:
            for img in expand(elem):
                if img not in seen:
                    if len(seen) >= cap:
                        raise CapExceededError(
                            f"orbit exceeded cap of {cap} elements", seen
                        )
                    seen[img] = level
                    new.append(img)
        if not new:
            break
        frontier = new
    return seen


def stabilizer_scan(
    c: NumericalCollection, max_len: int, cap: int = 1_000_000
) -> list[BraidWord]:
    """All freely reduced words up to ``max_len`` fixing (gram, classes).

    Enumerates by depth-first search over the mutation letters, applying
    one mutation per node; the empty word is omitted.  Results come back
    sorted by length then letters.  Raises CapExceededError (partial
    list attached) if more than ``cap`` words are visited.
    """
    letters = _letters_for(c)
    found: list[BraidWord] = []
    visited = 0

    def rec(state: NumericalCollection, path: list[Letter]) -> None:
        nonlocal visited
        if len(path) == max_len:
            return
        for let in letters:
            if path and path[-1] == (let[0], -let[1]):
                continue  # not freely reduced
            visited += 1
            if visited > cap:
                raise CapExceededError(
                    f"stabilizer scan exceeded cap of {cap} words", found
                )
            nxt = _mutate(state, let[0], let[1])
            path.append(let)
            if nxt == c:
                # letters were applied first-to-last, so the word reads reversed
                found.append(BraidWord(c.strands, tuple(reversed(path))))
            rec(nxt, path)
            path.pop()

    rec(c, [])
    found.sort(key=lambda w: (len(w.letters), w.letters))
    return found
