"""Noncommutative polynomials in the curvature operators q_2, q_3, ...

A word is a tuple of letters d ≥ 2; the leftmost letter is the outermost
operator, so ``(3, 2)`` is q_3 ∘ q_2. Multiplication is concatenation.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction
from functools import lru_cache

from .linear import LinearCombination

QWord = tuple


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


def degree(word: QWord) -> int:
    return sum(word)


def qword_key(word: QWord) -> tuple:
    # degree first, then lexicographic on the letters
    return (degree(word), word)


def _runs(word: QWord):
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        yield word[i], j - i
        i = j


def format_qword(word: QWord) -> str:
    if not word:
        return "1"
    return "".join(f"q{d}" + (f"^{k}" if k > 1 else "") for d, k in _runs(word))


def latex_qword(word: QWord) -> str:
    if not word:
        return "1"
    out = []
    for d, k in _runs(word):
        s = f"q_{d}" if d < 10 else f"q_{{{d}}}"
        out.append(s + (f"^{k}" if 1 < k < 10 else f"^{{{k}}}" if k >= 10 else ""))
    return "".join(out)


class QPoly(LinearCombination):
    """Rational combination of q-words."""

    __slots__ = ()
    sort_key = staticmethod(qword_key)
    format_key = staticmethod(format_qword)

    @staticmethod
    def _mul_keys(k1, k2):
        return k1 + k2

    @classmethod
    def letter(cls, d: int) -> "QPoly":
        if d < 2:
            raise DomainError(f"curvature letters start at q2, got q{d}")
        return cls({(d,): 1})

    @classmethod
    def one(cls) -> "QPoly":
        return cls({(): 1})

    def degrees(self) -> set[int]:
        return {degree(w) for w in self._terms}

    def to_latex(self) -> str:
        if not self:
            return "0"
        out = ""
        for i, (word, c) in enumerate(self.items()):
            mag = abs(c)
            if c < 0:
                out += "-"
            elif i:
                out += "+"
            if mag.denominator != 1:
                out += f"\\frac{{{mag.numerator}}}{{{mag.denominator}}}"
            elif mag != 1 or not word:
                out += str(mag.numerator)
            if word:
                out += latex_qword(word)
        return out

    def to_json_terms(self) -> list[dict]:
        return [{"num": str(c.numerator), "den": str(c.denominator), "word": list(w)}
                for w, c in self.items()]

    @classmethod
    def from_json_terms(cls, terms: list[dict]) -> "QPoly":
        out = {}
        for t in terms:
            word = tuple(int(d) for d in t["word"])
            if any(d < 2 for d in word):
                raise DomainError(f"bad letter in word {word}")
            out[word] = out.get(word, 0) + Fraction(int(t["num"]), int(t["den"]))
        return cls(out)

    @classmethod
    def parse(cls, text: str) -> "QPoly":
        """Read the text form produced by ``str``, e.g. ``"7/15 q2^2 + 3/5 q4"``."""
        s = text.strip()
        if s == "0":
            return cls()
        out: dict = {}
        for sign, chunk in _TERM_SPLIT.findall(" + " + s if s[0] not in "+-" else " " + s):
            chunk = chunk.strip()
            m = _TERM.fullmatch(chunk)
            if not m:
                raise ValueError(f"cannot parse term {chunk!r}")
            coeff = Fraction(m.group(1)) if m.group(1) else Fraction(1)
            word: list[int] = []
            for d, k in _LETTER.findall(m.group(2) or ""):
                word.extend([int(d)] * (int(k) if k else 1))
            if any(d < 2 for d in word):
                raise DomainError(f"bad letter in {chunk!r}")
            key = tuple(word)
            out[key] = out.get(key, 0) + (-coeff if sign == "-" else coeff)
        return cls(out)


_TERM_SPLIT = re.compile(r"\s*([+-])\s*([^+-]+)")
_TERM = re.compile(r"(\d+(?:/\d+)?)?\s*((?:q\d+(?:\^\d+)?)*)")
_LETTER = re.compile(r"q(\d+)(?:\^(\d+))?")


def render(p: QPoly, n: int, fmt: str = "text") -> str:
    """Serialize an H_n result in one of the formats ``text``, ``json``, ``latex``."""
    if fmt == "text":
        return str(p)
    if fmt == "latex":
        return f"H_{{{n}}}={p.to_latex()}"
    if fmt == "json":
        return json.dumps({"n": n, "terms": p.to_json_terms()}, separators=(",", ":"))
    raise ValueError(f"unknown format {fmt!r}")


def words_of_degree(n: int) -> list[QWord]:
    """All q-words of total degree n (compositions of n into parts ≥ 2)."""
    if n == 0:
        return [()]
    out = []
    for d in range(2, n + 1):
        out.extend((d,) + rest for rest in words_of_degree(n - d))
    return out


@lru_cache(maxsize=None)
def word_count_of_degree(n: int) -> int:
    """Number of q-words of degree n; equals the Fibonacci number φ_{n-1}."""
    if n < 2:
        raise DomainError("word counts are defined for degree n ≥ 2")
    # c(m) = #compositions of m into parts ≥ 2, with c(0) = 1
    c = [1, 0]
    for m in range(2, n + 1):
        c.append(sum(c[m - d] for d in range(2, m + 1)))
    return c[n]
