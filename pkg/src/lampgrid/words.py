"""Words over the presentation and metric alphabets.

Two alphabets are supported.  The presentation alphabet is ``{a, s, t}``.
The metric alphabet is the nine-element generating set

    A = {a, s, t, at, ta, ata, as, sa, asa}

whose point is that a button press at a vertex the lamplighter is leaving
or arriving at costs nothing extra.  Words are read right to left: the
rightmost letter acts first.  A compound base acts through its written
characters, again rightmost first, so the single letter ``at`` means
"step in t, then press".

Inverses are free: moves are drawn from A together with the inverses of
its letters.  Since ``a`` is an involution this gives 17 distinct moves,
which is what :func:`move_elements` returns.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import NamedTuple

from .core import (
    COORD_LIMIT,
    Element,
    Pos,
    apply_letter,
    identity,
)

PRESENTATION = "presentation"
METRIC = "metric"

PRESENTATION_BASES = ("a", "s", "t")
METRIC_BASES = ("a", "s", "t", "at", "ta", "ata", "as", "sa", "asa")

_COMPACT_RE = re.compile(r"[astAST]+")


class WordError(ValueError):
    """Malformed word text: unknown base, bad exponent, or bad character."""


class Letter(NamedTuple):
    base: str
    sign: int


@dataclass(frozen=True)
class Word:
    letters: tuple[Letter, ...]
    alphabet: str

    def __post_init__(self):
        bases = PRESENTATION_BASES if self.alphabet == PRESENTATION else METRIC_BASES
        if self.alphabet not in (PRESENTATION, METRIC):
            raise ValueError(f"unknown alphabet tag {self.alphabet!r}")
        for letter in self.letters:
            if letter.base not in bases or letter.sign not in (1, -1):
                raise ValueError(f"letter {letter} not valid for {self.alphabet} words")


EMPTY_METRIC = Word((), METRIC)
EMPTY_PRESENTATION = Word((), PRESENTATION)


def parse(text: str, alphabet: str = METRIC) -> Word:
    """Parse word text.

    Tokens are whitespace separated, each a base with an optional ``^k``
    exponent (negative for inverse letters, zero to omit).  Presentation
    text made only of the characters ``astAST`` with no separators is read
    compactly, uppercase meaning inverse.
    """
    if alphabet not in (PRESENTATION, METRIC):
        raise ValueError(f"unknown alphabet tag {alphabet!r}")
    bases = PRESENTATION_BASES if alphabet == PRESENTATION else METRIC_BASES
    text = text.strip()
    if alphabet == PRESENTATION and text and _COMPACT_RE.fullmatch(text):
        letters = tuple(
            Letter(ch.lower(), 1 if ch.islower() else -1) for ch in text
        )
        return Word(letters, alphabet)
    letters: list[Letter] = []
    for token in text.split():
        base, caret, exponent_text = token.partition("^")
        if base not in bases:
            raise WordError(f"unknown base token {base!r}")
        if caret:
            try:
                exponent = int(exponent_text)
            except ValueError:
                raise WordError(f"malformed exponent in token {token!r}") from None
            if abs(exponent) > COORD_LIMIT:
                raise WordError(f"exponent in token {token!r} exceeds +/-2^31")
        else:
            exponent = 1
        sign = 1 if exponent >= 0 else -1
        letters.extend(Letter(base, sign) for _ in range(abs(exponent)))
    return Word(tuple(letters), alphabet)


def format_word(word: Word) -> str:
    """Token text with run-length ``^k`` compression; inverse of :func:`parse`."""
    tokens: list[str] = []
    run: Letter | None = None
    count = 0

    def flush():
        if run is None:
            return
        exponent = count * run.sign
        tokens.append(run.base if exponent == 1 else f"{run.base}^{exponent}")

    for letter in word.letters:
        if letter == run:
            count += 1
        else:
            flush()
            run, count = letter, 1
    flush()
    return " ".join(tokens)


def concat(u: Word, v: Word) -> Word:
    if u.alphabet != v.alphabet:
        raise ValueError("cannot concatenate words over different alphabets")
    return Word(u.letters + v.letters, u.alphabet)


def inverse_word(word: Word) -> Word:
    return Word(
        tuple(Letter(l.base, -l.sign) for l in reversed(word.letters)),
        word.alphabet,
    )


def expand(word: Word) -> tuple[tuple[str, int], ...]:
    """Presentation-letter sequence equivalent to ``word``, as written.

    A compound base contributes its characters in written order; an
    inverse letter contributes them reversed with flipped signs.
    """
    out: list[tuple[str, int]] = []
    for base, sign in word.letters:
        if sign == 1:
            out.extend((ch, 1) for ch in base)
        else:
            out.extend((ch, -1) for ch in reversed(base))
    return tuple(out)


def evaluate(word: Word) -> Element:
    """Element represented by ``word``: fold letters rightmost-first."""
    state = identity()
    for base, sign in reversed(expand(word)):
        state = apply_letter(base, sign, state)
    return state


def a_length(word: Word) -> int:
    """Number of metric letters; each letter of either sign costs one."""
    if word.alphabet != METRIC:
        raise ValueError("a_length is defined for metric words")
    return len(word.letters)


def _sorted_lamps(lamps) -> list[Pos]:
    # Negative s-axis lamps most negative first, then t-axis lamps by index.
    def key(lamp: Pos):
        p, q = lamp
        return (0, p) if q == 0 and p < 0 else (1, q)

    return sorted(lamps, key=key)


def _power(base: str, exponent: int) -> list[Letter]:
    sign = 1 if exponent >= 0 else -1
    return [Letter(base, sign)] * abs(exponent)


def canonical_word(g: Element) -> Word:
    """Deterministic presentation word evaluating to ``g``.

    Written left to right: the translation to ``g.pos`` (s-letters then
    t-letters), then one press excursion per lamp.  Excursions appear in
    reverse canonical order so that, reading right to left, the lamps are
    visited most-negative-s first, then up the t-axis, with the final
    translation last.
    """
    p, q = g.pos
    letters: list[Letter] = _power("s", p) + _power("t", q)
    for lamp in reversed(_sorted_lamps(g.lamps)):
        lp, lq = lamp
        if lq == 0 and lp < 0:
            letters += _power("s", -lp) + [Letter("a", 1)] + _power("s", lp)
        else:
            letters += _power("t", -lq) + [Letter("a", 1)] + _power("t", lq)
    return Word(tuple(letters), PRESENTATION)


def lampstand_points(n: int) -> list[Pos]:
    """Lampstand points of the radius-``n`` hexagon, in canonical order."""
    return [(-i, 0) for i in range(n, 0, -1)] + [(0, j) for j in range(-n, n + 1)]


_HEX_CORNERS = ((1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1))


def random_element(n: int, seed) -> Element:
    """Deterministic pseudo-random element within the radius-``n`` hexagon.

    Mixes uniform draws with boundary cases: hexagon corner positions, the
    empty lamp set, and the full lampstand segment.
    """
    if n < 1:
        raise ValueError("random_element requires n >= 1")
    rng = random.Random(f"lampgrid:{n}:{seed}")
    stand = lampstand_points(n)

    roll = rng.random()
    if roll < 0.15:
        cp, cq = _HEX_CORNERS[rng.randrange(6)]
        pos = (cp * n, cq * n)
    else:
        while True:
            pos = (rng.randint(-n, n), rng.randint(-n, n))
            if abs(pos[0] + pos[1]) <= n:
                break

    roll = rng.random()
    if roll < 0.08:
        lamps: frozenset[Pos] = frozenset()
    elif roll < 0.16:
        lamps = frozenset(stand)
    else:
        density = rng.random()
        lamps = frozenset(pt for pt in stand if rng.random() < density)
    return Element(lamps, pos)


def move_elements() -> tuple[tuple[Letter, Element], ...]:
    """The distinct unit moves: metric letters and their inverses, deduplicated.

    ``a`` is its own inverse, so there are 17 moves rather than 18.
    """
    seen: dict[Element, Letter] = {}
    for base in METRIC_BASES:
        for sign in (1, -1):
            letter = Letter(base, sign)
            el = evaluate(Word((letter,), METRIC))
            if el not in seen:
                seen[el] = letter
    return tuple((letter, el) for el, letter in seen.items())
