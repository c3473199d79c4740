"""Noncommutative Laurent polynomials over the integers or a small prime field.

A polynomial is a finite sum of coefficient times word.  Words are tuples of
interned letters: a positive integer ``i`` stands for the symbol with id ``i``
and ``-i`` for its inverse.  Adjacent ``s s^-1`` pairs cancel as soon as two
words are multiplied, so every stored word is reduced.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from sympy import isprime

from .errors import LegaugError

MAX_PRIME = 251


class RingMismatchError(LegaugError):
    """Raised when polynomials over different coefficient rings are combined."""


@dataclass(frozen=True)
class Ring:
    """Coefficient ring: the integers when ``p`` is None, otherwise F_p."""

    p: int | None = None

    def __post_init__(self) -> None:
        if self.p is not None and (not isprime(self.p) or self.p > MAX_PRIME):
            raise LegaugError(f"field characteristic must be a prime <= {MAX_PRIME}, got {self.p}")

    @classmethod
    def parse(cls, text: str) -> "Ring":
        text = text.strip()
        if text in ("Z", "ZZ"):
            return cls(None)
        if text.startswith("Fp:"):
            try:
                return cls(int(text[3:]))
            except ValueError as exc:
                raise LegaugError(f"bad field description {text!r}") from exc
        if text.startswith("F") and text[1:].isdigit():
            return cls(int(text[1:]))
        raise LegaugError(f"bad ring description {text!r}; use Z or Fp:<prime>")

    @property
    def is_field(self) -> bool:
        return self.p is not None

    @property
    def name(self) -> str:
        return "Z" if self.p is None else f"Fp:{self.p}"

    def reduce(self, c: int) -> int:
        return c if self.p is None else c % self.p

    def is_unit(self, c: int) -> bool:
        c = self.reduce(c)
        if self.p is None:
            return c in (1, -1)
        return c != 0

    def inv(self, c: int) -> int:
        c = self.reduce(c)
        if not self.is_unit(c):
            raise LegaugError(f"{c} is not invertible in {self.name}")
        if self.p is None:
            return c
        return pow(c, -1, self.p)

    def signed(self, c: int) -> int:
        """Symmetric representative, used for display."""
        c = self.reduce(c)
        if self.p is not None and c > self.p // 2:
            return c - self.p
        return c

    def elements(self) -> range:
        if self.p is None:
            raise LegaugError("the integers cannot be enumerated")
        return range(self.p)

    def __str__(self) -> str:
        return self.name


ZZ = Ring(None)


def field(p: int) -> Ring:
    return Ring(p)


# ---------------------------------------------------------------------------
# symbol interning

_lock = threading.Lock()
_ids: dict[str, int] = {}
_names: list[str] = [""]


def intern(name: str) -> int:
    """Return the positive id of ``name``, allocating one on first use."""
    i = _ids.get(name)
    if i is not None:
        return i
    if not name or any(ch.isspace() for ch in name) or "^-1" in name or name[0] in "+-" or name == "0":
        raise LegaugError(f"invalid symbol name {name!r}")
    with _lock:
        i = _ids.get(name)
        if i is None:
            _names.append(name)
            i = len(_names) - 1
            _ids[name] = i
    return i


def symbol_name(letter: int) -> str:
    return _names[abs(letter)]


def letter_key(letter: int) -> tuple[str, int]:
    return (_names[abs(letter)], 1 if letter > 0 else -1)


def letter_str(letter: int) -> str:
    name = _names[abs(letter)]
    return name if letter > 0 else name + "^-1"


@dataclass(frozen=True)
class Symbol:
    """A generator or the inverse of an invertible generator."""

    name: str
    exponent: int = 1

    def __post_init__(self) -> None:
        if self.exponent not in (1, -1):
            raise LegaugError("symbol exponent must be +1 or -1")

    @property
    def letter(self) -> int:
        i = intern(self.name)
        return i if self.exponent == 1 else -i

    def __str__(self) -> str:
        return self.name if self.exponent == 1 else self.name + "^-1"


Word = tuple[int, ...]


def word_of(symbols: Iterable["Symbol | str"]) -> Word:
    out: list[int] = []
    for s in symbols:
        if isinstance(s, str):
            s = parse_symbol(s)
        out.append(s.letter)
    return reduce_word(out)


def parse_symbol(text: str) -> Symbol:
    if text.endswith("^-1"):
        return Symbol(text[:-3], -1)
    return Symbol(text, 1)


def reduce_word(letters: Iterable[int]) -> Word:
    stack: list[int] = []
    for x in letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def join(u: Word, v: Word) -> Word:
    """Concatenate two reduced words, cancelling at the junction."""
    if not u or not v or u[-1] != -v[0]:
        return u + v
    i = 0
    n = min(len(u), len(v))
    while i < n and u[-1 - i] == -v[i]:
        i += 1
    return u[: len(u) - i] + v[i:]


def word_sort_key(w: Word) -> tuple:
    return (len(w), tuple(letter_key(x) for x in w))


def word_str(w: Word) -> str:
    return " ".join(letter_str(x) for x in w)


# ---------------------------------------------------------------------------


class NcPoly:
    """Immutable noncommutative Laurent polynomial."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[Word, int] | None = None, *, _clean: bool = False):
        self.ring = ring
        if terms is None:
            self._terms: dict[Word, int] = {}
        elif _clean:
            self._terms = dict(terms)
        else:
            clean: dict[Word, int] = {}
            for w, c in terms.items():
                w = reduce_word(w)
                clean[w] = clean.get(w, 0) + c
            self._terms = {w: ring.reduce(c) for w, c in clean.items() if ring.reduce(c) != 0}
        self._hash: int | None = None

    # constructors -------------------------------------------------------
    @classmethod
    def zero(cls, ring: Ring) -> "NcPoly":
        return cls(ring)

    @classmethod
    def const(cls, ring: Ring, c: int) -> "NcPoly":
        return cls(ring, {(): c})

    @classmethod
    def one(cls, ring: Ring) -> "NcPoly":
        return cls.const(ring, 1)

    @classmethod
    def gen(cls, ring: Ring, name: str, exponent: int = 1) -> "NcPoly":
        return cls(ring, {(Symbol(name, exponent).letter,): 1}, _clean=True)

    @classmethod
    def monomial(cls, ring: Ring, coef: int, symbols: Iterable[Symbol | str]) -> "NcPoly":
        return cls(ring, {word_of(symbols): coef})

    @classmethod
    def from_word(cls, ring: Ring, word: Word, coef: int = 1) -> "NcPoly":
        return cls(ring, {word: coef})

    # basic protocol -----------------------------------------------------
    def items(self):
        return self._terms.items()

    def terms(self) -> list[tuple[int, tuple[Symbol, ...]]]:
        """Terms in canonical order as (coefficient, symbols)."""
        out = []
        for w in sorted(self._terms, key=word_sort_key):
            syms = tuple(Symbol(symbol_name(x), 1 if x > 0 else -1) for x in w)
            out.append((self._terms[w], syms))
        return out

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def constant_term(self) -> int:
        return self._terms.get((), 0)

    def letters(self) -> set[int]:
        return {x for w in self._terms for x in w}

    def symbols(self) -> set[str]:
        return {symbol_name(x) for x in self.letters()}

    def _check(self, other: "NcPoly") -> None:
        if other.ring != self.ring:
            raise RingMismatchError(f"cannot combine polynomials over {self.ring} and {other.ring}")

    def _coerce(self, other) -> "NcPoly":
        if isinstance(other, NcPoly):
            self._check(other)
            return other
        if isinstance(other, int):
            return NcPoly.const(self.ring, other)
        return NotImplemented  # type: ignore[return-value]

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = NcPoly.const(self.ring, other)
        if not isinstance(other, NcPoly):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def __add__(self, other) -> "NcPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        for w, c in other._terms.items():
            acc[w] = acc.get(w, 0) + c
        return self._finish(acc)

    __radd__ = __add__

    def __neg__(self) -> "NcPoly":
        return self._finish({w: -c for w, c in self._terms.items()})

    def __sub__(self, other) -> "NcPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "NcPoly":
        return (-self) + other

    def scale(self, c: int) -> "NcPoly":
        return self._finish({w: v * c for w, v in self._terms.items()})

    def __mul__(self, other) -> "NcPoly":
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, NcPoly):
            return NotImplemented
        self._check(other)
        acc: dict[Word, int] = {}
        for u, a in self._terms.items():
            for v, b in other._terms.items():
                w = join(u, v)
                acc[w] = acc.get(w, 0) + a * b
        return self._finish(acc)

    def __rmul__(self, other) -> "NcPoly":
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def _finish(self, acc: dict[Word, int]) -> "NcPoly":
        r = self.ring
        if r.p is None:
            terms = {w: c for w, c in acc.items() if c}
        else:
            p = r.p
            terms = {}
            for w, c in acc.items():
                c %= p
                if c:
                    terms[w] = c
        return NcPoly(r, terms, _clean=True)

    def change_ring(self, ring: Ring) -> "NcPoly":
        if ring == self.ring:
            return self
        if self.ring.p is not None and ring.p != self.ring.p:
            raise RingMismatchError(f"cannot move coefficients from {self.ring} to {ring}")
        return NcPoly(ring, dict(self._terms))

    def coefficient(self, word: Word) -> int:
        return self._terms.get(word, 0)

    # display ------------------------------------------------------------
    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = ""
        for w in sorted(self._terms, key=word_sort_key):
            c = self.ring.signed(self._terms[w])
            mag = abs(c)
            body = str(mag) if not w else word_str(w) if mag == 1 else f"{mag} {word_str(w)}"
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out

    def __repr__(self) -> str:
        return f"NcPoly({self.ring.name}, {str(self)!r})"

    @classmethod
    def parse(cls, ring: Ring, text: str) -> "NcPoly":
        """Inverse of ``str``: terms separated by `` + `` or `` - ``, factors by spaces."""
        text = text.strip().replace(" - ", " + -")
        if text == "0":
            return cls.zero(ring)
        acc: dict[Word, int] = {}
        for chunk in text.split(" + "):
            toks = chunk.split()
            if not toks:
                raise LegaugError(f"empty term in {text!r}")
            coef = 1
            head = toks[0]
            if head.lstrip("-").isdigit():
                coef = int(head)
                toks = toks[1:]
            elif head.startswith("-"):
                coef = -1
                toks[0] = head[1:]
            w = word_of(toks)
            acc[w] = acc.get(w, 0) + coef
        return cls(ring, acc)


def coefficient_of(p: NcPoly, word: Sequence[Symbol | str] | Word) -> int:
    """Coefficient of a word (given as symbols, names, or a letter tuple)."""
    if word and isinstance(next(iter(word)), int):
        return p.coefficient(tuple(word))  # type: ignore[arg-type]
    return p.coefficient(word_of(word))  # type: ignore[arg-type]


def _letter_degree(letter: int, degrees: Mapping[str, int]) -> int:
    name = _names[abs(letter)]
    try:
        return degrees[name]
    except KeyError:
        raise LegaugError(f"no degree for symbol {name!r}") from None


def extend_derivation(
    values: Mapping[str, NcPoly], degrees: Mapping[str, int], p: NcPoly
) -> NcPoly:
    """Apply the graded derivation determined by ``values`` on generators.

    Symbols absent from ``values`` (and all inverse letters, whose symbols
    are assumed to be degree-0 invertibles) are treated as cycles.  The sign
    on the term for letter ``w_i`` is ``(-1)^(|w_1| + ... + |w_{i-1}|)``.
    """
    ring = p.ring
    acc: dict[Word, int] = {}
    cache: dict[int, NcPoly | None] = {}
    for w, c in p.items():
        deg = 0
        for i, x in enumerate(w):
            if x > 0:
                if x not in cache:
                    v = values.get(_names[x])
                    if v is not None and v.ring != ring:
                        raise RingMismatchError(f"derivation value for {_names[x]!r} lives over {v.ring}")
                    cache[x] = v if v else None
                dv = cache[x]
                if dv is not None:
                    sign = -c if deg & 1 else c
                    pre, post = w[:i], w[i + 1 :]
                    for u, b in dv.items():
                        ww = join(join(pre, u), post)
                        acc[ww] = acc.get(ww, 0) + sign * b
            deg += _letter_degree(x, degrees) if x > 0 else 0
    return p._finish(acc)


def _monomial_inverse(v: NcPoly) -> NcPoly | None:
    if len(v) != 1:
        return None
    (w, c), = v.items()
    if not v.ring.is_unit(c):
        return None
    return NcPoly(v.ring, {tuple(-x for x in reversed(w)): v.ring.inv(c)}, _clean=True)


def extend_hom(
    values: Mapping[str, NcPoly],
    p: NcPoly,
    inverse_values: Mapping[str, NcPoly] | None = None,
    *,
    identity_on_missing: bool = False,
) -> NcPoly:
    """Apply the algebra map determined by ``values`` on symbols.

    The image of ``s^-1`` is taken from ``inverse_values`` when supplied
    (and checked to be a two-sided inverse), otherwise inverted directly when
    the image of ``s`` is a unit times a word of invertible letters.
    """
    ring = p.ring
    inverse_values = inverse_values or {}
    img: dict[int, NcPoly] = {}

    def image(x: int) -> NcPoly:
        if x in img:
            return img[x]
        name = _names[abs(x)]
        if name not in values:
            if identity_on_missing:
                out = NcPoly(ring, {(x,): 1}, _clean=True)
                img[x] = out
                return out
            raise LegaugError(f"no image supplied for symbol {name!r}")
        v = values[name]
        if v.ring != ring:
            raise RingMismatchError(f"image of {name!r} lives over {v.ring}, expected {ring}")
        if x > 0:
            out = v
        else:
            if name in inverse_values:
                out = inverse_values[name]
                one = NcPoly.one(ring)
                if v * out != one or out * v != one:
                    raise LegaugError(f"supplied inverse for {name!r} is not a two-sided inverse")
            else:
                inv = _monomial_inverse(v)
                if inv is None:
                    raise LegaugError(f"image of invertible symbol {name!r} is not invertible: {v}")
                out = inv
        img[x] = out
        return out

    acc: dict[Word, int] = {}
    for w, c in p.items():
        prod: NcPoly = NcPoly.const(ring, c)
        for x in w:
            prod = prod * image(x)
            if prod.is_zero():
                break
        for u, b in prod.items():
            acc[u] = acc.get(u, 0) + b
    return p._finish(acc)


def iter_words(p: NcPoly) -> Iterator[tuple[Word, int]]:
    yield from p.items()
