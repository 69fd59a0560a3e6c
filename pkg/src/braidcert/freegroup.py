"""Reduced words in free groups and their automorphisms.

The free group carries generators ``a_j`` indexed by integers (negative
indices appear for the doubled braid groups) plus one extra stable generator
``t``.  A letter is ``(gen, exp)`` with ``exp`` +1 or -1 and ``gen`` either an
int (meaning ``a_gen``) or the string ``"t"``.

The invariant of a virtual braid word is the composite of the letter
automorphisms with the rightmost letter applied first, i.e.
``image(uv) = image(u) o image(v)``; that composition order is the one that
matches the known images of virtual braid words and makes the map a plain
group homomorphism into the automorphism group.
"""

from __future__ import annotations

import re
from typing import Iterable

from .errors import ParseError

T = "t"
Letter = tuple  # (gen, exp)
FreeWord = tuple  # tuple of letters


def reduce_word(letters: Iterable[Letter]) -> FreeWord:
    """Freely reduce: cancel adjacent (g, e)(g, -e) pairs until stable."""
    stack: list = []
    for gen, exp in letters:
        if stack and stack[-1][0] == gen and stack[-1][1] == -exp:
            stack.pop()
        else:
            stack.append((gen, exp))
    return tuple(stack)


def invert_word(word: Iterable[Letter]) -> FreeWord:
    return tuple((g, -e) for g, e in reversed(list(word)))


def concat(*words: Iterable[Letter]) -> FreeWord:
    out: list = []
    for w in words:
        out.extend(w)
    return reduce_word(out)


def _gen_sort_key(gen):
    return (1, 0) if gen == T else (0, gen)


class FreeAutomorphism:
    """An endomorphism of the free group given by images of the generators.

    All stored images are freely reduced.  Equality is decided on generator
    images, which is sound and complete for endomorphisms.
    """

    __slots__ = ("gens", "images")

    def __init__(self, gens, images: dict) -> None:
        self.gens = tuple(gens)
        self.images = {g: reduce_word(images.get(g, ((g, 1),))) for g in self.gens}
        unknown = set(images) - set(self.gens)
        if unknown:
            raise ValueError(f"images given for unknown generators {sorted(unknown, key=_gen_sort_key)}")

    @classmethod
    def identity(cls, gens) -> "FreeAutomorphism":
        return cls(gens, {})

    def image(self, gen) -> FreeWord:
        try:
            return self.images[gen]
        except KeyError:
            raise KeyError(f"unknown generator {gen!r}") from None

    def apply(self, word: Iterable[Letter]) -> FreeWord:
        out: list = []
        for gen, exp in word:
            img = self.image(gen)
            out.extend(img if exp == 1 else invert_word(img))
        return reduce_word(out)

    def compose(self, other: "FreeAutomorphism") -> "FreeAutomorphism":
        """``self`` after ``other``: (f.compose(g)).apply(w) == f.apply(g.apply(w))."""
        if self.gens != other.gens:
            raise ValueError("automorphisms over different generator sets")
        return FreeAutomorphism(
            self.gens, {g: self.apply(img) for g, img in other.images.items()}
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, FreeAutomorphism):
            return NotImplemented
        return self.gens == other.gens and self.images == other.images

    def __hash__(self) -> int:
        return hash((self.gens, tuple(sorted(self.images.items(), key=lambda kv: _gen_sort_key(kv[0])))))

    def is_identity(self) -> bool:
        return all(img == ((g, 1),) for g, img in self.images.items())

    def fixes_t(self) -> bool:
        return T not in self.gens or self.images[T] == ((T, 1),)

    def specialize_t1(self) -> "FreeAutomorphism":
        """Erase every t-letter from every image and re-reduce."""
        gens = tuple(g for g in self.gens if g != T)
        images = {
            g: tuple(l for l in self.images[g] if l[0] != T) for g in gens
        }
        return FreeAutomorphism(gens, images)

    def __repr__(self) -> str:
        parts = ", ".join(
            f"{format_gen(g)} -> {format_word(img)}" for g, img in self.images.items()
        )
        return f"FreeAutomorphism({parts})"


def auto_equal(phi: FreeAutomorphism, psi: FreeAutomorphism) -> bool:
    return phi == psi


def first_difference(phi: FreeAutomorphism, psi: FreeAutomorphism):
    """First generator (a-indices ascending, then t) where the images differ."""
    for g in sorted(phi.gens, key=_gen_sort_key):
        if phi.images[g] != psi.images.get(g):
            return g
    return None


# -- generator images of the invariant ----------------------------------------


def strand_gens(lo: int, hi: int):
    """Free-group generators for braid indices lo..hi: a_lo .. a_{hi+1} and t."""
    return tuple(range(lo, hi + 2)) + (T,)


def sigma_auto(i: int, gens) -> FreeAutomorphism:
    return FreeAutomorphism(
        gens,
        {
            i: ((i + 1, 1),),
            i + 1: ((i + 1, -1), (i, 1), (i + 1, 1)),
        },
    )


def sigma_inv_auto(i: int, gens) -> FreeAutomorphism:
    # the two-sided inverse of sigma_auto under compose(); see the tests,
    # which validate it by composing to the identity both ways
    return FreeAutomorphism(
        gens,
        {
            i: ((i, 1), (i + 1, 1), (i, -1)),
            i + 1: ((i, 1),),
        },
    )


def zeta_auto(i: int, gens) -> FreeAutomorphism:
    return FreeAutomorphism(
        gens,
        {
            i: ((T, 1), (i + 1, 1), (T, -1)),
            i + 1: ((T, -1), (i, 1), (T, 1)),
        },
    )


def manturov_image(letters, lo: int, hi: int) -> FreeAutomorphism:
    """Invariant of a braid word over sigma/zeta indices ``lo..hi``.

    ``letters`` iterates over ``(kind, index, exp)`` with kind ``"sig"`` or
    ``"zet"``; zeta letters are involutions so their exponent is ignored.
    """
    gens = strand_gens(lo, hi)
    result = FreeAutomorphism.identity(gens)
    for kind, index, exp in letters:
        if not lo <= index <= hi:
            raise IndexError(f"braid index {index} outside {lo}..{hi}")
        if kind == "sig":
            letter = sigma_auto(index, gens) if exp == 1 else sigma_inv_auto(index, gens)
        elif kind == "zet":
            letter = zeta_auto(index, gens)
        else:
            raise ValueError(f"unknown letter kind {kind!r}")
        result = result.compose(letter)
    return result


# -- text form -----------------------------------------------------------------
#
# "a1 a2^-1 t" with whitespace separation; negative indices like "a-1" appear
# for the doubled alphabets.

_LETTER_RE = re.compile(r"(?:a(-?\d+)|t)(?:\^(-?1))?$")


def format_gen(gen) -> str:
    return T if gen == T else f"a{gen}"


def format_word(word: Iterable[Letter]) -> str:
    parts = []
    for gen, exp in word:
        parts.append(format_gen(gen) + ("" if exp == 1 else "^-1"))
    return " ".join(parts) if parts else "1"


def parse_word(text: str) -> FreeWord:
    letters: list = []
    pos = 0
    for token in text.split():
        start = text.index(token, pos)
        pos = start + len(token)
        if token == "1":
            continue
        m = _LETTER_RE.match(token)
        if m is None:
            raise ParseError(f"bad free-group letter {token!r}", text, start)
        gen = T if m.group(1) is None else int(m.group(1))
        exp = -1 if m.group(2) == "-1" else 1
        letters.append((gen, exp))
    return reduce_word(letters)
