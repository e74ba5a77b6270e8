"""Sparse linear combinations over the rationals.

Every algebra in this package is a vector space over Q with some canonical
basis (trees, words, paths, tensor tuples).  Elements are represented as
immutable sparse mappings from basis keys to nonzero ``fractions.Fraction``
coefficients; no floating point is used anywhere, so "equals zero" always
means exactly zero.

Basis keys only need to be hashable and to render a canonical text via
``str``; the text is used for deterministic term ordering in output and for
pivot selection during rank computation.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Iterable, Mapping

Scalar = Fraction | int

_ZERO = Fraction(0)


class LinComb:
    """A finite Q-linear combination of basis keys.

    Zero coefficients are never stored; two combinations are equal iff they
    have identical term mappings.  Instances are treated as immutable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable[tuple[Hashable, Scalar]] = ()):
        data: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, coeff in items:
            c = data.get(key, _ZERO) + coeff
            if c:
                data[key] = c if isinstance(c, Fraction) else Fraction(c)
            else:
                data.pop(key, None)
        self._terms = data

    @classmethod
    def term(cls, key, coeff: Scalar = 1) -> "LinComb":
        out = cls.__new__(cls)
        c = coeff if isinstance(coeff, Fraction) else Fraction(coeff)
        out._terms = {key: c} if c else {}
        return out

    @classmethod
    def zero(cls) -> "LinComb":
        out = cls.__new__(cls)
        out._terms = {}
        return out

    def items(self):
        return self._terms.items()

    def sorted_items(self) -> list:
        return sorted(self._terms.items(), key=lambda kv: str(kv[0]))

    def support(self):
        return self._terms.keys()

    def coeff(self, key) -> Fraction:
        return self._terms.get(key, _ZERO)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LinComb):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        data = dict(self._terms)
        for key, c in other._terms.items():
            s = data.get(key, _ZERO) + c
            if s:
                data[key] = s
            else:
                data.pop(key, None)
        out = LinComb.__new__(LinComb)
        out._terms = data
        return out

    def __sub__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        data = dict(self._terms)
        for key, c in other._terms.items():
            s = data.get(key, _ZERO) - c
            if s:
                data[key] = s
            else:
                data.pop(key, None)
        out = LinComb.__new__(LinComb)
        out._terms = data
        return out

    def __neg__(self) -> "LinComb":
        out = LinComb.__new__(LinComb)
        out._terms = {k: -c for k, c in self._terms.items()}
        return out

    def __mul__(self, scalar: Scalar) -> "LinComb":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        if not scalar:
            return LinComb.zero()
        s = scalar if isinstance(scalar, Fraction) else Fraction(scalar)
        out = LinComb.__new__(LinComb)
        out._terms = {k: c * s for k, c in self._terms.items()}
        return out

    __rmul__ = __mul__

    def map_keys(self, f: Callable) -> "LinComb":
        """Relabel every basis key through ``f``, merging coincidences."""
        return LinComb((f(k), c) for k, c in self._terms.items())

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for key, c in self.sorted_items():
            if c == 1:
                term = str(key)
            elif c == -1:
                term = f"-{key}"
            else:
                term = f"{c}*{key}"
            if parts and not term.startswith("-"):
                parts.append(f"+ {term}")
            elif parts:
                parts.append(f"- {term[1:]}")
            else:
                parts.append(term)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LinComb<{self}>"


class Tensor:
    """A basis key of a tensor power: an ordered tuple of component keys."""

    __slots__ = ("legs", "_hash")

    def __init__(self, *legs):
        if len(legs) < 2:
            raise ValueError("a tensor key needs at least two legs")
        self.legs = legs
        self._hash = hash(legs)

    def __eq__(self, other):
        return isinstance(other, Tensor) and self.legs == other.legs

    def __hash__(self):
        return self._hash

    def __str__(self):
        return " ⊗ ".join(str(leg) for leg in self.legs)

    def __repr__(self):
        return f"Tensor{self.legs!r}"


def bilinear(f: Callable, x: LinComb, y: LinComb) -> LinComb:
    """Extend a basis-level binary map (returning a LinComb) bilinearly."""
    out = LinComb.zero()
    for kx, cx in x.items():
        for ky, cy in y.items():
            out = out + f(kx, ky) * (cx * cy)
    return out


def tensor(x: LinComb, y: LinComb) -> LinComb:
    """Kronecker product; keys become rank-2 ``Tensor`` keys.

    Tensor keys in either factor are flattened, so iterating this builds
    higher tensor powers with flat keys.
    """
    out = []
    for kx, cx in x.items():
        lx = kx.legs if isinstance(kx, Tensor) else (kx,)
        for ky, cy in y.items():
            ly = ky.legs if isinstance(ky, Tensor) else (ky,)
            out.append((Tensor(*lx, *ly), cx * cy))
    return LinComb(out)


def apply_on_leg(f: Callable, x: LinComb, leg: int) -> LinComb:
    """Apply a basis-level linear map to one leg of a tensor combination.

    ``f`` takes a component key and returns a LinComb (over plain keys or
    tensor keys, which get spliced flat into place).
    """
    out = LinComb.zero()
    for key, c in x.items():
        legs = key.legs if isinstance(key, Tensor) else (key,)
        image = f(legs[leg])
        for k2, c2 in image.items():
            mid = k2.legs if isinstance(k2, Tensor) else (k2,)
            newlegs = legs[:leg] + mid + legs[leg + 1 :]
            if len(newlegs) == 1:
                out = out + LinComb.term(newlegs[0], c * c2)
            else:
                out = out + LinComb.term(Tensor(*newlegs), c * c2)
    return out


def rank(vectors: Iterable[LinComb]) -> int:
    """Rank over Q of a family of sparse vectors, by exact Gaussian elimination.

    Pivot rows are stored normalized and without their pivot key; incoming
    rows are reduced until they either vanish or contribute a new pivot.
    """
    pivots: dict = {}
    r = 0
    for v in vectors:
        row = dict(v.items())
        while row:
            key = min(row, key=str)
            if key in pivots:
                c = row.pop(key)
                for k2, c2 in pivots[key].items():
                    s = row.get(k2, _ZERO) - c * c2
                    if s:
                        row[k2] = s
                    else:
                        row.pop(k2, None)
            else:
                c = row.pop(key)
                pivots[key] = {k2: c2 / c for k2, c2 in row.items()}
                r += 1
                break
    return r


def to_records(x: LinComb) -> list[dict]:
    """Machine-readable form: ``{"coeff": "p/q", "key": text}`` sorted by key."""
    return [{"coeff": str(c), "key": str(k)} for k, c in x.sorted_items()]
