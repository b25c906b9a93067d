"""Freely reduced words over two generators, and endomorphisms of the free group.

A letter is a nonzero integer: +1 and +2 are the generators, -1 and -2 their
inverses.  Words reduce eagerly on construction, so every ``Word`` in the wild
is freely reduced.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ParameterError

GENERATORS = (1, 2)


def _reduced(letters) -> tuple:
    out = []
    for s in letters:
        s = int(s)
        if s == 0 or abs(s) > 2:
            raise ParameterError(f"letter {s!r} outside the alphabet {{+-1, +-2}}")
        if out and out[-1] == -s:
            out.pop()
        else:
            out.append(s)
    return tuple(out)


class Word:
    """A freely reduced word; accepts any letter iterable and reduces it."""

    __slots__ = ("letters",)

    def __init__(self, letters=()):
        self.letters = _reduced(letters)

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Parse compact notation: ``21'22`` means 2 1^-1 2 2; '' or 'e' is empty."""
        letters = []
        for ch in text.replace(" ", ""):
            if ch in "eε":
                continue
            if ch == "'":
                if not letters:
                    raise ParameterError("dangling inverse mark in word string")
                letters[-1] = -letters[-1]
            elif ch in "12":
                letters.append(int(ch))
            else:
                raise ParameterError(f"bad character {ch!r} in word string")
        return cls(letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, idx):
        picked = self.letters[idx]
        return Word(picked) if isinstance(idx, slice) else picked

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return self.inverse() ** (-n)
        out = Word()
        for _ in range(n):
            out = out * self
        return out

    def inverse(self) -> "Word":
        return Word(tuple(-s for s in reversed(self.letters)))

    def abelianized(self) -> tuple:
        """Signed letter counts (count of 1s, count of 2s)."""
        n1 = n2 = 0
        for s in self.letters:
            if abs(s) == 1:
                n1 += 1 if s > 0 else -1
            else:
                n2 += 1 if s > 0 else -1
        return (n1, n2)

    def __str__(self):
        if not self.letters:
            return "e"
        return "".join(str(abs(s)) + ("'" if s < 0 else "") for s in self.letters)

    def __repr__(self):
        return f'Word("{self}")'


EMPTY = Word()


def reduce(raw) -> Word:
    """Freely reduce a raw letter sequence."""
    return Word(raw)


def concat(w1: Word, w2: Word) -> Word:
    return w1 * w2


def invert(w: Word) -> Word:
    return w.inverse()


def abelianize(w: Word) -> tuple:
    return w.abelianized()


@dataclass(frozen=True)
class Mat2:
    """2x2 integer matrix."""

    a11: int
    a12: int
    a21: int
    a22: int

    @classmethod
    def from_columns(cls, c1, c2) -> "Mat2":
        return cls(c1[0], c2[0], c1[1], c2[1])

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(1, 0, 0, 1)

    def det(self) -> int:
        return self.a11 * self.a22 - self.a12 * self.a21

    def trace(self) -> int:
        return self.a11 + self.a22

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
        )

    def apply(self, v):
        """Matrix times column vector; preserves the entry type."""
        return (self.a11 * v[0] + self.a12 * v[1], self.a21 * v[0] + self.a22 * v[1])

    def inverse_unimodular(self) -> "Mat2":
        d = self.det()
        if abs(d) != 1:
            raise ParameterError(f"matrix with det {d} has no integer inverse")
        return Mat2(d * self.a22, -d * self.a12, -d * self.a21, d * self.a11)

    def __pow__(self, n: int) -> "Mat2":
        if n < 0:
            return self.inverse_unimodular() ** (-n)
        out = Mat2.identity()
        base = self
        while n:
            if n & 1:
                out = out @ base
            base = base @ base
            n >>= 1
        return out

    def entries(self):
        return (self.a11, self.a12, self.a21, self.a22)

    def __str__(self):
        return f"[[{self.a11}, {self.a12}], [{self.a21}, {self.a22}]]"


@dataclass(frozen=True)
class Endomorphism:
    """Endomorphism of the free group, given by the images of the generators."""

    image1: Word
    image2: Word

    def image(self, generator: int) -> Word:
        if generator == 1:
            return self.image1
        if generator == 2:
            return self.image2
        raise ParameterError(f"generator must be 1 or 2, got {generator!r}")

    def __call__(self, w: Word) -> Word:
        raw = []
        for s in w:
            img = self.image(abs(s))
            raw.extend(img.letters if s > 0 else (-t for t in reversed(img.letters)))
        return Word(raw)

    def __str__(self):
        return f"1->{self.image1}, 2->{self.image2}"


IDENTITY = Endomorphism(Word([1]), Word([2]))


def apply_endo(e: Endomorphism, w: Word) -> Word:
    return e(w)


def compose(outer: Endomorphism, inner: Endomorphism) -> Endomorphism:
    """(outer o inner)(w) = outer(inner(w))."""
    return Endomorphism(outer(inner.image1), outer(inner.image2))


def endo_power(e: Endomorphism, n: int) -> Endomorphism:
    if n < 0:
        raise ParameterError("endomorphism powers must be non-negative")
    out = IDENTITY
    for _ in range(n):
        out = compose(out, e)
    return out


def incidence_matrix(e: Endomorphism) -> Mat2:
    """Columns are the abelianizations of the generator images."""
    return Mat2.from_columns(e.image1.abelianized(), e.image2.abelianized())


def prefix_suffix(e: Endomorphism, j: int, k: int):
    """Split e(j) = P * w_k * S at 1-based position k."""
    img = e.image(j)
    if not 1 <= k <= len(img):
        raise ParameterError(f"position {k} out of range 1..{len(img)} for image of {j}")
    return img[: k - 1], img.letters[k - 1], img[k:]


SUBSTITUTION = "substitution"
ALTERNATIVE = "alternative_substitution"
GENERAL = "general"


def classify(e: Endomorphism) -> str:
    letters = e.image1.letters + e.image2.letters
    if all(s > 0 for s in letters):
        return SUBSTITUTION
    if letters and all(s < 0 for s in letters):
        return ALTERNATIVE
    return GENERAL


def _is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def _primitive(m: Mat2) -> bool:
    if any(x < 0 for x in m.entries()):
        return False
    p = m
    for _ in range(4):
        if all(x > 0 for x in p.entries()):
            return True
        p = p @ m
    return False


@dataclass(frozen=True)
class SpectralReport:
    pisot: bool
    irreducible: bool
    unimodular: bool
    hyperbolic: bool
    primitive_or_neg_primitive: bool


def spectral_predicates(e: Endomorphism) -> SpectralReport:
    """Exact integer tests on the incidence matrix.

    With char. poly chi(x) = x^2 - t x + d:  hyperbolic (one root of modulus > 1,
    the other < 1) iff disc > 0 and chi(1) * chi(-1) < 0;  Pisot additionally
    needs the dominant root positive, i.e. chi(1) < 0 < chi(-1).
    """
    m = incidence_matrix(e)
    t, d = m.trace(), m.det()
    disc = t * t - 4 * d
    chi_one = 1 - t + d
    chi_neg_one = 1 + t + d
    hyperbolic = disc > 0 and chi_one * chi_neg_one < 0
    pisot = chi_one < 0 and chi_neg_one > 0
    neg = Mat2(-m.a11, -m.a12, -m.a21, -m.a22)
    return SpectralReport(
        pisot=pisot,
        irreducible=not _is_perfect_square(disc),
        unimodular=abs(d) == 1,
        hyperbolic=hyperbolic,
        primitive_or_neg_primitive=_primitive(m) or _primitive(neg),
    )


def _elementary(target: int, side: str, eps: int) -> Endomorphism:
    other = 2 if target == 1 else 1
    new = [target, eps * other] if side == "right" else [eps * other, target]
    images = {target: Word(new), other: Word([other])}
    return Endomorphism(images[1], images[2])


def _signed_permutation_inverse(imgs):
    if any(len(w) != 1 for w in imgs):
        return None
    g1, g2 = imgs[0].letters[0], imgs[1].letters[0]
    if abs(g1) == abs(g2):
        return None
    out = {}
    for src, letter in ((1, g1), (2, g2)):
        out[abs(letter)] = Word([src if letter > 0 else -src])
    return Endomorphism(out[1], out[2])


_NIELSEN_MOVES = [(i, side, eps) for i in (0, 1) for side in ("right", "left") for eps in (1, -1)]


def nielsen_invert(e: Endomorphism, max_steps: int = None):
    """Invert an automorphism by greedy length-reducing Nielsen moves.

    Returns the inverse endomorphism, or None when no strictly shortening move
    exists before the images become signed generators (which does not prove
    non-invertibility).
    """
    if abs(incidence_matrix(e).det()) != 1:
        raise ParameterError("Nielsen inversion requires a unimodular incidence matrix")
    imgs = [e.image1, e.image2]
    chain = IDENTITY
    budget = max_steps if max_steps is not None else len(imgs[0]) + len(imgs[1]) + 8
    for _ in range(budget + 1):
        perm_inv = _signed_permutation_inverse(imgs)
        if perm_inv is not None:
            psi = compose(chain, perm_inv)
            if compose(e, psi) == IDENTITY and compose(psi, e) == IDENTITY:
                return psi
            return None
        total = len(imgs[0]) + len(imgs[1])
        move = None
        for i, side, eps in _NIELSEN_MOVES:
            j = 1 - i
            h = imgs[j] if eps == 1 else imgs[j].inverse()
            cand = imgs[i] * h if side == "right" else h * imgs[i]
            if len(cand) + len(imgs[j]) < total:
                move = (i, side, eps, cand)
                break
        if move is None:
            return None
        i, side, eps, cand = move
        imgs[i] = cand
        chain = compose(chain, _elementary(i + 1, side, eps))
    return None
