"""Exceptional collections reduced to exact integer data.

A collection of n+1 objects is stored through the Gram matrix of the
Euler form chi in the collection basis together with the unimodular
integer matrix whose column j expresses the class of the j-th object in
a fixed ambient basis of the K group.  Left and right mutations are
unimodular column operations; the Gram matrix transforms by congruence.
All arithmetic is arbitrary-precision integer.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import _matrix
from ._matrix import IntMatrix
from .braid import BraidWord, Letter


@dataclass(frozen=True, eq=False)
class NumericalCollection:
    """Euler-form Gram matrix, K-theory classes and provenance word.

    Equality and hashing use (gram, classes) only; the history word is
    provenance metadata and the ambient form is determined by the pair.
    """

    gram: IntMatrix
    classes: IntMatrix
    ambient: IntMatrix
    history: BraidWord

    @property
    def n(self) -> int:
        return len(self.gram) - 1

    @property
    def strands(self) -> int:
        return len(self.gram)

    def __eq__(self, other) -> bool:
        if not isinstance(other, NumericalCollection):
            return NotImplemented
        return self.gram == other.gram and self.classes == other.classes

    def __hash__(self) -> int:
        return hash((self.gram, self.classes))

    def upper_entries(self) -> tuple[int, ...]:
        """The strictly upper Gram entries, row by row."""
        n1 = len(self.gram)
        return tuple(
            self.gram[i][j] for i in range(n1) for j in range(i + 1, n1)
        )

    def conserves_pairing(self) -> bool:
        """Check classes^T . ambient . classes == gram."""
        ct = _matrix.transpose(self.classes)
        return _matrix.mat_mul(_matrix.mat_mul(ct, self.ambient), self.classes) == self.gram


@dataclass(frozen=True)
class SerreMatrix:
    """Integer matrix of the Serre functor's action on the K group."""

    kappa: IntMatrix


def from_gram(gram) -> NumericalCollection:
    """Build a collection with identity classes from its Gram matrix."""
    g = _matrix.freeze(gram)
    if not _matrix.is_upper_unitriangular(g):
        raise ValueError("gram matrix must be upper triangular with unit diagonal")
    n1 = len(g)
    return NumericalCollection(
        gram=g,
        classes=_matrix.identity(n1),
        ambient=g,
        history=BraidWord(n1),
    )


def _mutation_matrix(c: NumericalCollection, i: int, side: int) -> IntMatrix:
    """Column operation for a mutation of the pair (i, i+1); side=+1 left."""
    n1 = len(c.gram)
    a = c.gram[i][i + 1]
    m = [[1 if r == s else 0 for s in range(n1)] for r in range(n1)]
    m[i][i] = m[i + 1][i + 1] = 0
    if side == 1:
        # new object a*E_i - E_{i+1} goes to slot i, E_i moves to slot i+1
        m[i][i] = a
        m[i + 1][i] = -1
        m[i][i + 1] = 1
    else:
        # E_{i+1} moves to slot i, new object a*E_{i+1} - E_i goes to slot i+1
        m[i + 1][i] = 1
        m[i + 1][i + 1] = a
        m[i][i + 1] = -1
    return _matrix.freeze(m)


def _mutate(c: NumericalCollection, i: int, side: int) -> NumericalCollection:
    if not 0 <= i <= c.n - 1:
        raise IndexError(f"mutation index {i} out of range for n={c.n}")
    m = _mutation_matrix(c, i, side)
    gram = _matrix.mat_mul(_matrix.mat_mul(_matrix.transpose(m), c.gram), m)
    classes = _matrix.mat_mul(c.classes, m)
    letter: Letter = (i, side)
    return NumericalCollection(
        gram=gram,
        classes=classes,
        ambient=c.ambient,
        history=BraidWord(c.strands, (letter,) + c.history.letters),
    )


def left_mutation(c: NumericalCollection, i: int) -> NumericalCollection:
    """Replace (E_i, E_{i+1}) by (L E_{i+1}, E_i) at the class level."""
    return _mutate(c, i, 1)


def right_mutation(c: NumericalCollection, i: int) -> NumericalCollection:
    """Replace (E_i, E_{i+1}) by (E_{i+1}, R E_i) at the class level."""
    return _mutate(c, i, -1)


def apply_word(c: NumericalCollection, w: BraidWord) -> NumericalCollection:
    """Act by a braid word, rightmost letter first; sigma_i is a left mutation."""
    if w.strands != c.strands:
        raise ValueError(
            f"word on {w.strands} strands cannot act on a collection of {c.strands} objects"
        )
    out = c
    for i, e in reversed(w.letters):
        out = _mutate(out, i, e)
    return out


def serre_matrix(c: NumericalCollection) -> SerreMatrix:
    """kappa = gram^-1 . gram^T, exact integer entries."""
    inv = _matrix.unitriangular_inverse(c.gram)
    return SerreMatrix(_matrix.mat_mul(inv, _matrix.transpose(c.gram)))


def is_minus_kappa_unipotent(c: NumericalCollection) -> bool:
    """True iff (kappa + 1)^(n+1) vanishes."""
    kappa = serre_matrix(c).kappa
    n1 = len(kappa)
    return _matrix.is_zero(_matrix.mat_pow(_matrix.mat_add(kappa, _matrix.identity(n1)), n1))


def is_strong_candidate(c: NumericalCollection) -> bool:
    """True iff every strictly upper Gram entry is positive.

    Positivity means the chi values can be honest Hom dimensions and no
    pair is orthogonal; this is the numerical shadow of strongness.
    """
    return all(x > 0 for x in c.upper_entries())


# ---------------------------------------------------------------------------
# file format

def to_json_text(c: NumericalCollection) -> str:
    """Serialize as the collection file format (one JSON object)."""
    n1 = len(c.gram)
    classes = (
        "identity" if c.classes == _matrix.identity(n1)
        else [list(row) for row in c.classes]
    )
    payload = {"n": c.n, "gram": [list(row) for row in c.gram], "classes": classes}
    return json.dumps(payload, separators=(",", ":")) + "\n"


def from_json_text(text: str) -> NumericalCollection:
    """Parse the collection file format.

    The ambient Euler form is reconstructed from the conservation
    identity classes^T . ambient . classes == gram; the history word is
    not serialized and comes back empty.
    """
    payload = json.loads(text)
    try:
        n = payload["n"]
        gram = _matrix.freeze(payload["gram"])
        raw_classes = payload["classes"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed collection file: {exc}") from exc
    if len(gram) != n + 1:
        raise ValueError(f"gram matrix size {len(gram)} does not match n={n}")
    if not _matrix.is_upper_unitriangular(gram):
        raise ValueError("gram matrix must be upper triangular with unit diagonal")
    if raw_classes == "identity":
        classes = _matrix.identity(n + 1)
        ambient = gram
    else:
        classes = _matrix.freeze(raw_classes)
        if abs(_matrix.determinant(classes)) != 1:
            raise ValueError("classes matrix must be unimodular")
        inv = _matrix.inverse_unimodular(classes)
        ambient = _matrix.mat_mul(_matrix.mat_mul(_matrix.transpose(inv), gram), inv)
    return NumericalCollection(
        gram=gram, classes=classes, ambient=ambient, history=BraidWord(n + 1)
    )


def load(path) -> NumericalCollection:
    with open(path, "r", encoding="utf-8") as fh:
        return from_json_text(fh.read())


def save(c: NumericalCollection, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(to_json_text(c))
