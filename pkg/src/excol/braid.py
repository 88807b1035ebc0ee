"""Words in the Artin braid group and their left Garside normal form.

The braid group on ``strands`` strands is generated by sigma_0, ...,
sigma_{strands-2} subject to sigma_i sigma_{i+1} sigma_i =
sigma_{i+1} sigma_i sigma_{i+1} and far commutation.  A word is a
sequence of letters (generator index, exponent +-1) kept in textual
order; whenever a word acts on something the rightmost letter acts
first.

The word problem is decided through the classical Garside structure:
every braid is uniquely  D^k . p_1 . ... . p_m  where D is the positive
half twist, every factor p_i is a permutation braid other than the
identity and D, and each adjacent pair is left weighted.  Permutation
braids are stored as their underlying permutations in one-line notation;
permutations compose left to right (p then q), matching word order.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

Perm = tuple[int, ...]
Letter = tuple[int, int]

_TOKEN_ALIASES = {"L": 1, "R": -1}


class WordSyntaxError(ValueError):
    """Malformed braid word text or generator index out of range."""


# ---------------------------------------------------------------------------
# permutation plumbing, word-order composition: (p * q)(x) = q(p(x))

def _identity_perm(n: int) -> Perm:
    return tuple(range(n))


@functools.lru_cache(maxsize=None)
def _w0(n: int) -> Perm:
    return tuple(range(n - 1, -1, -1))


@functools.lru_cache(maxsize=None)
def _gen(n: int, i: int) -> Perm:
    img = list(range(n))
    img[i], img[i + 1] = img[i + 1], img[i]
    return tuple(img)


def _mul(p: Perm, q: Perm) -> Perm:
    return tuple(q[i] for i in p)


@functools.lru_cache(maxsize=None)
def _inv(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


@functools.lru_cache(maxsize=None)
def _starting(p: Perm) -> frozenset[int]:
    """Generators sigma_i left-dividing the permutation braid of p."""
    return frozenset(i for i in range(len(p) - 1) if p[i] > p[i + 1])


@functools.lru_cache(maxsize=None)
def _finishing(p: Perm) -> frozenset[int]:
    """Generators sigma_i right-dividing the permutation braid of p."""
    return _starting(_inv(p))


@functools.lru_cache(maxsize=None)
def _tau(p: Perm) -> Perm:
    """Conjugation by the half twist: D^-1 p D at the permutation level."""
    n = len(p)
    return tuple(n - 1 - p[n - 1 - j] for j in range(n))


@functools.lru_cache(maxsize=None)
def _left_weighted_pair(x: Perm, y: Perm) -> tuple[Perm, Perm]:
    """Shift weight leftward until the pair (x, y) is left weighted."""
    while True:
        movable = _starting(y) - _finishing(x)
        if not movable:
            return x, y
        s = _gen(len(x), min(movable))
        x = _mul(x, s)
        y = _mul(s, y)


def _normalize_factors(strands: int, factors: list[Perm]) -> tuple[int, tuple[Perm, ...]]:
    """Left-weight a factor list; return (absorbed D power, clean factors)."""
    fs = list(factors)
    changed = True
    while changed:
        changed = False
        for i in range(len(fs) - 1):
            nx, ny = _left_weighted_pair(fs[i], fs[i + 1])
            if nx != fs[i]:
                fs[i], fs[i + 1] = nx, ny
                changed = True
    shift = 0
    w0 = _w0(strands)
    e = _identity_perm(strands)
    while fs and fs[0] == w0:
        fs.pop(0)
        shift += 1
    while fs and fs[-1] == e:
        fs.pop()
    return shift, tuple(fs)


# ---------------------------------------------------------------------------
# words

@dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators, letters in textual order."""

    strands: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError(f"strand count must be positive, got {self.strands}")
        for i, e in self.letters:
            if not 0 <= i < self.strands - 1:
                raise WordSyntaxError(
                    f"generator index {i} out of range for {self.strands} strands"
                )
            if e not in (1, -1):
                raise ValueError(f"letter exponent must be +-1, got {e}")

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.strands != other.strands:
            raise ValueError("cannot multiply words on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(
            self.strands, tuple((i, -e) for i, e in reversed(self.letters))
        )

    def __pow__(self, k: int) -> "BraidWord":
        base = self if k >= 0 else self.inverse()
        return BraidWord(self.strands, base.letters * abs(k))

    def __len__(self) -> int:
        return len(self.letters)

    def free_reduce(self) -> "BraidWord":
        """Cancel adjacent sigma_i sigma_i^-1 pairs until none remain."""
        stack: list[Letter] = []
        for let in self.letters:
            if stack and stack[-1][0] == let[0] and stack[-1][1] == -let[1]:
                stack.pop()
            else:
                stack.append(let)
        return BraidWord(self.strands, tuple(stack))

    def to_text(self) -> str:
        return " ".join(("L" if e == 1 else "R") + str(i) for i, e in self.letters)

    def __str__(self) -> str:
        return self.to_text() or "<empty>"


def parse_word(text: str, strands: int) -> BraidWord:
    """Parse whitespace-separated tokens ``L<i>`` / ``R<i>`` / ``s<i>`` / ``s<i>^-1``.

    ``L<i>`` and ``s<i>`` mean sigma_i, ``R<i>`` and ``s<i>^-1`` mean its
    inverse.  Letters are kept in textual order; the rightmost acts first.
    """
    letters: list[Letter] = []
    for token in text.split():
        kind = token[0]
        if kind in _TOKEN_ALIASES:
            body, exp = token[1:], _TOKEN_ALIASES[kind]
        elif kind == "s":
            if token.endswith("^-1"):
                body, exp = token[1:-3], -1
            else:
                body, exp = token[1:], 1
        else:
            raise WordSyntaxError(f"malformed token {token!r}")
        if not body.isdigit():
            raise WordSyntaxError(f"malformed token {token!r}")
        i = int(body)
        if not 0 <= i < strands - 1:
            raise WordSyntaxError(
                f"generator index {i} out of range for {strands} strands"
            )
        letters.append((i, exp))
    return BraidWord(strands, tuple(letters))


def delta_word(strands: int = 4) -> BraidWord:
    """The half twist written as (s0 s1 s2)(s0 s1) s0; only 4 strands."""
    if strands != 4:
        raise ValueError("delta_word is defined for 4 strands only")
    return parse_word("L0 L1 L2 L0 L1 L0", 4)


def center_word(strands: int = 4) -> BraidWord:
    """Generator (s0 s1 s2)^4 of the center; only 4 strands."""
    if strands != 4:
        raise ValueError("center_word is defined for 4 strands only")
    return parse_word("L0 L1 L2", 4) ** 4


# ---------------------------------------------------------------------------
# normal forms

@dataclass(frozen=True)
class GarsideForm:
    """Left Garside normal form D^infimum . factors, factors left weighted."""

    strands: int
    infimum: int
    factors: tuple[Perm, ...] = ()

    def __post_init__(self):
        w0 = _w0(self.strands)
        e = _identity_perm(self.strands)
        for f in self.factors:
            if f == e or f == w0:
                raise ValueError("factors may not be trivial or the half twist")
        for a, b in zip(self.factors, self.factors[1:]):
            if not _starting(b) <= _finishing(a):
                raise ValueError("factors are not left weighted")

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def is_trivial(self) -> bool:
        return self.infimum == 0 and not self.factors

    def word(self) -> BraidWord:
        """Some braid word representing the same group element."""
        letters: list[Letter] = []
        half = [(i, 1) for i in _factor_letters(_w0(self.strands))]
        if self.infimum >= 0:
            letters.extend(half * self.infimum)
        else:
            inv_half = [(i, -1) for i, _ in reversed(half)]
            letters.extend(inv_half * (-self.infimum))
        for f in self.factors:
            letters.extend((i, 1) for i in _factor_letters(f))
        return BraidWord(self.strands, tuple(letters))

    def __str__(self) -> str:
        parts = [f"D^{self.infimum}"]
        parts.extend(_one_line(f) for f in self.factors)
        return " . ".join(parts)


@functools.lru_cache(maxsize=None)
def _factor_letters(p: Perm) -> tuple[int, ...]:
    """A reduced positive word for a permutation braid (generator indices)."""
    word = []
    e = _identity_perm(len(p))
    while p != e:
        i = min(_starting(p))
        word.append(i)
        p = _mul(_gen(len(p), i), p)
    return tuple(word)


def _one_line(p: Perm) -> str:
    return "(" + " ".join(str(v + 1) for v in p) + ")"


def normal_form(w: BraidWord) -> GarsideForm:
    """The unique left Garside normal form of the word."""
    n = w.strands
    if n == 1:
        return GarsideForm(1, 0, ())
    factors: list[Perm] = []
    dpows: list[int] = []
    w0 = _w0(n)
    for i, e in w.letters:
        g = _gen(n, i)
        if e == 1:
            factors.append(g)
            dpows.append(0)
        else:
            # sigma_i^-1 = D^-1 (D sigma_i^-1), the parenthesis is positive
            factors.append(_mul(w0, g))
            dpows.append(-1)
    # slide the D powers to the front through tau conjugation
    d = 0
    for k in range(len(factors) - 1, -1, -1):
        if d % 2:
            factors[k] = _tau(factors[k])
        d += dpows[k]
    shift, fs = _normalize_factors(n, factors)
    return GarsideForm(n, d + shift, fs)


def is_trivial(w: BraidWord) -> bool:
    """Decide the word problem: true iff w is the identity braid."""
    return normal_form(w).is_trivial()
