"""Finitely supported linear combinations with exact rational coefficients."""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Any, Callable, Hashable, Iterable, Iterator


def as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"expected an exact rational coefficient, got {type(c).__name__}")


def accumulate(terms: dict, key, coeff) -> None:
    """Add ``coeff`` to ``terms[key]`` in place, dropping the key if it cancels."""
    if not coeff:
        return
    c = terms.get(key, 0) + coeff
    if c:
        terms[key] = c
    else:
        del terms[key]


class LinearCombination:
    """Immutable element of the free vector space over the rationals.

    Subclasses fix the basis (``sort_key`` for canonical order, ``format_key``
    for printing) and may define a product via ``_mul_keys``.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: dict | Iterable[tuple[Hashable, Any]] | None = None):
        clean: dict = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, dict) else terms
            for key, c in items:
                accumulate(clean, key, as_fraction(c))
        self._terms = clean

    @classmethod
    def _wrap(cls, terms: dict):
        # trusted constructor: caller guarantees Fraction coefficients, no zeros
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @staticmethod
    def sort_key(key) -> Any:
        return key

    @staticmethod
    def format_key(key) -> str:
        return repr(key)

    # --- container protocol ---

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator:
        return iter(self.keys())

    def __contains__(self, key) -> bool:
        return key in self._terms

    def __getitem__(self, key) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def keys(self) -> list:
        return sorted(self._terms, key=self.sort_key)

    def items(self) -> list[tuple[Any, Fraction]]:
        return [(k, self._terms[k]) for k in self.keys()]

    def raw_items(self):
        """Unordered view of (key, coefficient); cheaper than ``items``."""
        return self._terms.items()

    def to_dict(self) -> dict:
        return dict(self._terms)

    # --- vector space ---

    def __eq__(self, other) -> bool:
        if isinstance(other, LinearCombination):
            return type(self) is type(other) and self._terms == other._terms
        if isinstance(other, (int, Fraction)) and other == 0:
            return not self._terms
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        terms = dict(self._terms)
        for k, c in other._terms.items():
            accumulate(terms, k, c)
        return self._wrap(terms)

    def __neg__(self):
        return self._wrap({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        terms = dict(self._terms)
        for k, c in other._terms.items():
            accumulate(terms, k, -c)
        return self._wrap(terms)

    def scale(self, c):
        c = as_fraction(c)
        if not c:
            return self._wrap({})
        return self._wrap({k: c * v for k, v in self._terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, type(self)):
            terms: dict = {}
            for k1, c1 in self._terms.items():
                for k2, c2 in other._terms.items():
                    accumulate(terms, self._mul_keys(k1, k2), c1 * c2)
            return self._wrap(terms)
        return NotImplemented

    @staticmethod
    def _mul_keys(k1, k2):
        raise TypeError("this basis carries no product")

    def map_keys(self, f: Callable):
        """Apply a linear map given on basis elements as ``key -> same type``."""
        terms: dict = {}
        for k, c in self._terms.items():
            for k2, c2 in f(k)._terms.items():
                accumulate(terms, k2, c * c2)
        return self._wrap(terms)

    # --- printing ---

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, c in self.items():
            body = self.format_key(k)
            mag = abs(c)
            sign = "-" if c < 0 else "+"
            if body == "1":
                chunk = str(mag)
            elif mag == 1:
                chunk = body
            else:
                chunk = f"{mag} {body}"
            parts.append((sign, chunk))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, chunk in parts[1:]:
            out += f" {sign} {chunk}"
        return out

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r})"
