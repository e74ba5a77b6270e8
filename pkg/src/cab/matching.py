"""Matching dialgebras: composition words, the quotient from trees, and
semi-homomorphism examples.

A matching dialgebra has two associative products additionally satisfying
(x·y)∘z = x·(y∘z) and (x∘y)·z = x∘(y·z); adding the two laws shows that the
pair of products is automatically compatible (every linear combination of
them is associative).

The free matching dialgebra has a basis of words: nonempty sequences of
nonempty letter blocks (text form ``a.b|c``).  Dot concatenates block lists;
circle concatenates merging the boundary blocks.  ``normalize`` is the
quotient map from trees, obtained by repeatedly rewriting
(t₁·...·tᵣ)∘a into t₁·...·(tᵣ∘a).

Any right semi-homomorphism R (a linear map with R(x·y) = R(x)·y) of an
associative algebra induces a matching partner x∘y = x·R(y); the truncated
polynomial algebra with R = multiplication by X and the binomial coproduct is
the worked example carried by ``SemiHomAlgebra``.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction
from functools import reduce
from typing import Callable, Sequence

from .linear import LinComb, Tensor, tensor
from .trees import Tree, factorize, is_irreducible, unwrap_root

_COLOR_RE = re.compile(r"[A-Za-z0-9_]+$")


class Word:
    """A word of the free matching dialgebra: nonempty blocks of letters.

    Text form: letters joined by '.', blocks by '|'; ``a.b|c`` has blocks
    (a,b) and (c,).  Degree is the total letter count.
    """

    __slots__ = ("blocks", "degree", "text", "_hash")

    def __init__(self, blocks):
        blocks = tuple(tuple(b) for b in blocks)
        if not blocks or any(not b for b in blocks):
            raise ValueError("a word needs nonempty blocks")
        self.blocks = blocks
        self.degree = sum(len(b) for b in blocks)
        self.text = "|".join(".".join(b) for b in blocks)
        self._hash = hash(self.text)

    def __eq__(self, other):
        return isinstance(other, Word) and self.text == other.text

    def __hash__(self):
        return self._hash

    def __str__(self):
        return self.text

    def __repr__(self):
        return f"Word<{self.text}>"


def parse_word(text: str, palette: Sequence[str] | None = None) -> Word:
    blocks = []
    for chunk in text.split("|"):
        letters = chunk.split(".")
        for letter in letters:
            if not _COLOR_RE.match(letter):
                raise ValueError(f"bad letter {letter!r} in word {text!r}")
            if palette is not None and letter not in palette:
                raise ValueError(f"letter {letter!r} not in palette")
        blocks.append(tuple(letters))
    return Word(blocks)


def m_dot(u: Word, w: Word) -> Word:
    """Concatenate block lists."""
    return Word(u.blocks + w.blocks)


def m_circ(u: Word, w: Word) -> Word:
    """Concatenate, merging u's last block with w's first block."""
    merged = u.blocks[-1] + w.blocks[0]
    return Word(u.blocks[:-1] + (merged,) + w.blocks[1:])


def word_dot(x: LinComb, y: LinComb) -> LinComb:
    return LinComb(
        (m_dot(u, w), a * b) for u, a in x.items() for w, b in y.items()
    )


def word_circ(x: LinComb, y: LinComb) -> LinComb:
    return LinComb(
        (m_circ(u, w), a * b) for u, a in x.items() for w, b in y.items()
    )


def word_star(x: LinComb, y: LinComb) -> LinComb:
    """The associative product circ − dot, primitive-generating on words."""
    return word_circ(x, y) - word_dot(x, y)


def normalize(t: Tree) -> Word:
    """Normal form of a tree in the matching quotient.

    A dot product maps to the concatenation of its factors' normal forms; an
    irreducible tree u∘a appends the letter a to the last block of u's form.
    The map intertwines both products and the coproducts.
    """
    if t.degree == 1:
        return Word(((t.children[0][0],),))
    if is_irreducible(t):
        u, a = unwrap_root(t)
        w = normalize(u)
        return Word(w.blocks[:-1] + (w.blocks[-1] + (a,),))
    return reduce(m_dot, (normalize(f) for f in factorize(t)))


def normalize_lin(x: LinComb) -> LinComb:
    """Quotient map on linear combinations of trees."""
    return x.map_keys(normalize)


def word_coproduct(x: LinComb) -> LinComb:
    """Deconcatenation along the letter sequence.

    Each of the degree−1 cut positions contributes one term: a cut inside a
    block splits that block in two, a cut at a block boundary splits the
    block list.  Coassociative; infinitesimal for both products; matches the
    tree coproduct through ``normalize``.
    """
    out = []
    for w, c in x.items():
        blocks = w.blocks
        last = len(blocks) - 1
        for bi, block in enumerate(blocks):
            for si in range(1, len(block) + 1):
                if si == len(block):
                    if bi == last:
                        continue
                    left = Word(blocks[: bi + 1])
                    right = Word(blocks[bi + 1 :])
                else:
                    left = Word(blocks[:bi] + (block[:si],))
                    right = Word((block[si:],) + blocks[bi + 1 :])
                out.append((Tensor(left, right), c))
    return LinComb(out)


# --- one-color specialization: compositions of an integer -------------------


def format_composition(c: Sequence[int]) -> str:
    return "(" + ",".join(str(part) for part in c) + ")"


def parse_composition(text: str) -> tuple[int, ...]:
    m = re.match(r"\(([0-9, ]+)\)$", text.strip())
    if not m:
        raise ValueError(f"bad composition literal {text!r}; expected (2,1)")
    parts = tuple(int(s) for s in m.group(1).split(","))
    if not parts or any(p < 1 for p in parts):
        raise ValueError("composition parts must be positive")
    return parts


def comp_dot(c: Sequence[int], d: Sequence[int]) -> tuple[int, ...]:
    return tuple(c) + tuple(d)


def comp_circ(c: Sequence[int], d: Sequence[int]) -> tuple[int, ...]:
    c, d = tuple(c), tuple(d)
    return c[:-1] + (c[-1] + d[0],) + d[1:]


def word_shape(w: Word) -> tuple[int, ...]:
    """Block lengths; a dialgebra map onto compositions for one color."""
    return tuple(len(b) for b in w.blocks)


def compositions(n: int) -> list[tuple[int, ...]]:
    """All ordered compositions of n, 2^{n-1} of them."""
    if n < 1:
        raise ValueError("need n >= 1")
    out = []
    for cuts in range(1 << (n - 1)):
        parts = []
        size = 1
        for i in range(n - 1):
            if cuts >> i & 1:
                parts.append(size)
                size = 1
            else:
                size += 1
        parts.append(size)
        out.append(tuple(parts))
    return out


def enumerate_words(n: int, colors: Sequence[str]) -> list[Word]:
    """All degree-n words over the palette: 2^{n-1} d^n of them."""
    palette = tuple(colors)
    out = []
    for shape in compositions(n):
        for letters in itertools.product(palette, repeat=n):
            blocks = []
            pos = 0
            for size in shape:
                blocks.append(letters[pos : pos + size])
                pos += size
            out.append(Word(blocks))
    return out


# --- tensor-square products --------------------------------------------------


def tensor_square_dot(x: LinComb, y: LinComb, dot_fn: Callable) -> LinComb:
    """Componentwise product on rank-2 tensors: (a₁⊗a₂)·(b₁⊗b₂) = a₁b₁⊗a₂b₂."""
    out = LinComb.zero()
    for kx, cx in x.items():
        a1, a2 = kx.legs
        for ky, cy in y.items():
            b1, b2 = ky.legs
            out = out + tensor(dot_fn(a1, b1), dot_fn(a2, b2)) * (cx * cy)
    return out


def tensor_square_star(x: LinComb, y: LinComb, dot_fn: Callable, circ_fn: Callable) -> LinComb:
    """(a₁⊗a₂)∗(b₁⊗b₂) = a₁·b₁ ⊗ a₂∘b₂ + a₁∘b₁ ⊗ a₂·b₂.

    Associative exactly when the underlying pair satisfies the compatibility
    identity; the products are passed as basis-level maps returning LinCombs.
    """
    out = LinComb.zero()
    for kx, cx in x.items():
        a1, a2 = kx.legs
        for ky, cy in y.items():
            b1, b2 = ky.legs
            c = cx * cy
            out = out + tensor(dot_fn(a1, b1), circ_fn(a2, b2)) * c
            out = out + tensor(circ_fn(a1, b1), dot_fn(a2, b2)) * c
    return out


def word_key_dot(u: Word, w: Word) -> LinComb:
    return LinComb.term(m_dot(u, w))


def word_key_circ(u: Word, w: Word) -> LinComb:
    return LinComb.term(m_circ(u, w))


# --- finite algebras carrying a right semi-homomorphism ----------------------

Vector = tuple


def _as_vec(coords, dim: int) -> Vector:
    v = tuple(c if isinstance(c, Fraction) else Fraction(c) for c in coords)
    if len(v) != dim:
        raise ValueError(f"expected dimension {dim}, got {len(v)}")
    return v


class SemiHomAlgebra:
    """A finite-dimensional associative algebra with a right semi-homomorphism.

    ``dot_table[i][j]`` holds coordinates of e_i·e_j; ``r_matrix`` holds R by
    columns (``r_matrix[i]`` = coordinates of R(e_i)).  Construction verifies
    associativity and R(x·y) = R(x)·y on all basis pairs.  The induced second
    product x∘y = x·R(y) makes the pair (·,∘) a matching dialgebra.

    An optional coproduct table (``delta_table[i]`` = matrix of Δ(e_i) over
    e_j⊗e_k) enables the coderivation and bialgebra diagnostics.
    """

    def __init__(self, dot_table, r_matrix, unit=None, delta_table=None):
        dim = len(dot_table)
        self.dim = dim
        self.dot_table = tuple(tuple(_as_vec(e, dim) for e in row) for row in dot_table)
        if any(len(row) != dim for row in self.dot_table):
            raise ValueError("dot table must be square")
        self.r_matrix = tuple(_as_vec(col, dim) for col in r_matrix)
        if len(self.r_matrix) != dim:
            raise ValueError("R must be dim x dim")
        self.unit = _as_vec(unit, dim) if unit is not None else None
        if delta_table is not None:
            delta_table = tuple(
                tuple(_as_vec(row, dim) for row in mat) for mat in delta_table
            )
            if len(delta_table) != dim or any(len(m) != dim for m in delta_table):
                raise ValueError("coproduct table must be dim x dim x dim")
        self.delta_table = delta_table
        self._check()

    # vectors ---------------------------------------------------------------

    @property
    def zero(self) -> Vector:
        return (Fraction(0),) * self.dim

    def basis(self, i: int) -> Vector:
        return tuple(Fraction(1 if j == i else 0) for j in range(self.dim))

    def vector(self, coords) -> Vector:
        return _as_vec(coords, self.dim)

    def dot(self, x: Vector, y: Vector) -> Vector:
        out = list(self.zero)
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if not b:
                    continue
                entry = self.dot_table[i][j]
                ab = a * b
                for k, t in enumerate(entry):
                    if t:
                        out[k] += ab * t
        return tuple(out)

    def r(self, x: Vector) -> Vector:
        out = list(self.zero)
        for i, a in enumerate(x):
            if not a:
                continue
            for k, t in enumerate(self.r_matrix[i]):
                if t:
                    out[k] += a * t
        return tuple(out)

    def circ(self, x: Vector, y: Vector) -> Vector:
        return self.dot(x, self.r(y))

    # tensor-square helpers: a rank-2 tensor element is a dim x dim matrix ---

    def delta(self, x: Vector):
        if self.delta_table is None:
            raise ValueError("this algebra carries no coproduct")
        out = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for i, a in enumerate(x):
            if not a:
                continue
            for j, row in enumerate(self.delta_table[i]):
                for k, t in enumerate(row):
                    if t:
                        out[j][k] += a * t
        return out

    def _mat_binary(self, p, q, left: Callable, right: Callable):
        out = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for i in range(self.dim):
            for j in range(self.dim):
                a = p[i][j]
                if not a:
                    continue
                for k in range(self.dim):
                    for l in range(self.dim):
                        b = q[k][l]
                        if not b:
                            continue
                        u = left(self.basis(i), self.basis(k))
                        v = right(self.basis(j), self.basis(l))
                        ab = a * b
                        for m, um in enumerate(u):
                            if not um:
                                continue
                            for n, vn in enumerate(v):
                                if vn:
                                    out[m][n] += ab * um * vn
        return out

    def mat_dot(self, p, q):
        return self._mat_binary(p, q, self.dot, self.dot)

    def mat_star(self, p, q):
        a = self._mat_binary(p, q, self.dot, self.circ)
        b = self._mat_binary(p, q, self.circ, self.dot)
        return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]

    @staticmethod
    def mat_sub(p, q):
        return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(p, q)]

    @staticmethod
    def mat_is_zero(p) -> bool:
        return all(not x for row in p for x in row)

    # diagnostics -------------------------------------------------------------

    def coderivation_residual(self, x: Vector):
        """Δ(R(x)) − (R⊗id + id⊗R)(Δ(x)); zero when R is a coderivation."""
        lhs = self.delta(self.r(x))
        dx = self.delta(x)
        out = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for j in range(self.dim):
            for k in range(self.dim):
                c = dx[j][k]
                if not c:
                    continue
                for m, t in enumerate(self.r_matrix[j]):
                    if t:
                        out[m][k] += c * t
                for m, t in enumerate(self.r_matrix[k]):
                    if t:
                        out[j][m] += c * t
        return self.mat_sub(lhs, out)

    def mult_residual(self, x: Vector, y: Vector):
        """Δ(x·y) − Δ(x)·Δ(y) with the componentwise tensor-square product."""
        return self.mat_sub(self.delta(self.dot(x, y)), self.mat_dot(self.delta(x), self.delta(y)))

    def bimatching_residual(self, x: Vector, y: Vector):
        """Δ(x∘y) − Δ(x)∗Δ(y) with the two-term tensor-square product."""
        return self.mat_sub(self.delta(self.circ(x, y)), self.mat_star(self.delta(x), self.delta(y)))

    def _check(self):
        es = [self.basis(i) for i in range(self.dim)]
        for i, x in enumerate(es):
            for j, y in enumerate(es):
                if self.r(self.dot(x, y)) != self.dot(self.r(x), y):
                    raise ValueError(f"R is not a right semi-homomorphism at ({i},{j})")
                for k, z in enumerate(es):
                    if self.dot(self.dot(x, y), z) != self.dot(x, self.dot(y, z)):
                        raise ValueError(f"product not associative at ({i},{j},{k})")
        if self.unit is not None:
            for i, x in enumerate(es):
                if self.dot(self.unit, x) != x or self.dot(x, self.unit) != x:
                    raise ValueError(f"unit fails at basis vector {i}")
        if self.delta_table is not None:
            self._check_coassociative()

    def _check_coassociative(self):
        # compare the two refinements of Δ into rank-3 tensors
        dim = self.dim
        for i in range(dim):
            left = {}
            right = {}
            d = self.delta_table[i]
            for j in range(dim):
                for k in range(dim):
                    c = d[j][k]
                    if not c:
                        continue
                    dj = self.delta_table[j]
                    for a in range(dim):
                        for b in range(dim):
                            if dj[a][b]:
                                key = (a, b, k)
                                left[key] = left.get(key, Fraction(0)) + c * dj[a][b]
                    dk = self.delta_table[k]
                    for a in range(dim):
                        for b in range(dim):
                            if dk[a][b]:
                                key = (j, a, b)
                                right[key] = right.get(key, Fraction(0)) + c * dk[a][b]
            diff = dict(left)
            for key, c in right.items():
                s = diff.get(key, Fraction(0)) - c
                if s:
                    diff[key] = s
                else:
                    diff.pop(key, None)
            if diff:
                raise ValueError(f"coproduct not coassociative at basis vector {i}")


def truncated_polynomial_algebra(m: int) -> SemiHomAlgebra:
    """Polynomials in one variable truncated below X^m.

    Basis 1, X, ..., X^{m-1}; R(X^n) = X^{n+1}; the coproduct sends X^n to
    Σ binom(n,i) X^{n-i} ⊗ X^i.  R(1) = X is primitive, so R is a coderivation
    away from the truncation boundary.
    """
    from math import comb

    if m < 2:
        raise ValueError("need m >= 2")
    dot_table = [
        [[1 if k == i + j else 0 for k in range(m)] for j in range(m)]
        for i in range(m)
    ]
    r_matrix = [[1 if k == i + 1 else 0 for k in range(m)] for i in range(m)]
    unit = [1] + [0] * (m - 1)
    # Δ(X^n)[n-i][i] = binom(n, i)
    delta = []
    for n in range(m):
        mat = [[0] * m for _ in range(m)]
        for i in range(n + 1):
            mat[n - i][i] = comb(n, i)
        delta.append(mat)
    return SemiHomAlgebra(dot_table, r_matrix, unit=unit, delta_table=delta)


def left_multiplication_semihom(dot_table, a_coords) -> SemiHomAlgebra:
    """R(x) = a·x for a fixed element a; always a right semi-homomorphism."""
    dim = len(dot_table)
    probe = SemiHomAlgebra(dot_table, [[1 if i == j else 0 for j in range(dim)] for i in range(dim)])
    a = probe.vector(a_coords)
    r_matrix = [probe.dot(a, probe.basis(i)) for i in range(dim)]
    return SemiHomAlgebra(dot_table, r_matrix)
