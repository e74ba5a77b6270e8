"""The free algebra with two compatible associative products on colored trees.

The dot product identifies roots; the circle product is defined by recursion
on its right factor and satisfies, together with dot, the compatibility
identity

    x∘(y·z) + x·(y∘z) = (x∘y)·z + (x·y)∘z,

which says exactly that every linear combination of the two products is again
associative.  Elements are ``LinComb`` values keyed by ``Tree``.

``FinAlgebra`` models a finite-dimensional algebra carrying two such products
via structure tables (verified at construction), and ``evaluate`` implements
the universal map from the tree algebra determined by a generator assignment.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from typing import Mapping, Sequence

from .linear import LinComb, Scalar
from .trees import (
    Tree,
    factorize,
    is_irreducible,
    leaf,
    root_concat,
    unwrap_root,
    wrap_root,
)


def elem(t: Tree | str) -> LinComb:
    """Wrap a tree (or tree text) as a one-term element."""
    if isinstance(t, str):
        from .trees import parse_tree

        t = parse_tree(t)
    return LinComb.term(t)


def dot(x: LinComb, y: LinComb) -> LinComb:
    """Bilinear extension of root identification; degree-additive."""
    out = []
    for t, a in x.items():
        for w, b in y.items():
            out.append((root_concat(t, w), a * b))
    return LinComb(out)


# write-once per key; a concurrent duplicate computation stores the same value
_CIRCLE_CACHE: dict = {}


def circle(x: LinComb, y: LinComb) -> LinComb:
    """Bilinear extension of the circle product on basis trees."""
    out = LinComb.zero()
    for t, a in x.items():
        for w, b in y.items():
            out = out + circle_trees(t, w) * (a * b)
    return out


def circle_trees(t: Tree, w: Tree) -> LinComb:
    """Circle product of basis trees, by recursion on the right factor.

    Degree 1: hang t below a new vertex carrying w's color.  Irreducible
    w = u∘a: t∘w = (t∘u)∘a.  Reducible w = w1·...·wm: the signed double sum
    over the maximal factorization.
    """
    key = (t, w)
    cached = _CIRCLE_CACHE.get(key)
    if cached is not None:
        return cached

    if w.degree == 1:
        result = LinComb.term(wrap_root(t, w.children[0][0]))
    elif is_irreducible(w):
        u, a = unwrap_root(w)
        result = circle(circle_trees(t, u), LinComb.term(leaf(a)))
    else:
        factors = factorize(w)
        m = len(factors)
        result = LinComb.zero()
        for i in range(m):
            head = reduce(root_concat, factors[:i], t)
            piece = circle_trees(head, factors[i])
            if i + 1 < m:
                tail = reduce(root_concat, factors[i + 1 :])
                piece = dot(piece, LinComb.term(tail))
            result = result + piece
        for i in range(1, m):
            head = reduce(root_concat, factors[:i])
            piece = dot(LinComb.term(t), circle_trees(head, factors[i]))
            if i + 1 < m:
                tail = reduce(root_concat, factors[i + 1 :])
                piece = dot(piece, LinComb.term(tail))
            result = result - piece

    _CIRCLE_CACHE[key] = result
    return result


def star(x: LinComb, y: LinComb, alpha: Scalar = 1, beta: Scalar = 1) -> LinComb:
    """alpha·(x·y) + beta·(x∘y); associative for every coefficient pair."""
    return dot(x, y) * alpha + circle(x, y) * beta


def lie_bracket(kind: str, x: LinComb, y: LinComb) -> LinComb:
    """Commutator of dot, circle, or their sum; all three are Lie brackets."""
    if kind == "dot":
        return dot(x, y) - dot(y, x)
    if kind == "circle":
        return circle(x, y) - circle(y, x)
    if kind == "sum":
        return star(x, y) - star(y, x)
    raise ValueError(f"unknown bracket kind {kind!r}")


Vector = tuple  # coordinates, entries Fraction


def _as_vector(coords: Sequence[Scalar], dim: int) -> Vector:
    v = tuple(c if isinstance(c, Fraction) else Fraction(c) for c in coords)
    if len(v) != dim:
        raise ValueError(f"expected a vector of dimension {dim}, got {len(v)}")
    return v


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c: Scalar, v: Vector) -> Vector:
    return tuple(c * a for a in v)


class FinAlgebra:
    """A finite-dimensional algebra with two products given by structure tables.

    ``dot_table[i][j]`` (resp. ``circ_table``) holds the coordinates of the
    product of basis vectors e_i and e_j.  Construction rejects tables that
    are not associative or that violate the compatibility identity, so the
    universal evaluation map below lands in a genuine target.
    """

    def __init__(self, dot_table, circ_table):
        dim = len(dot_table)
        if dim == 0 or len(circ_table) != dim:
            raise ValueError("tables must be nonempty and of equal dimension")
        self.dim = dim
        self.dot_table = tuple(
            tuple(_as_vector(entry, dim) for entry in row) for row in dot_table
        )
        self.circ_table = tuple(
            tuple(_as_vector(entry, dim) for entry in row) for row in circ_table
        )
        if any(len(row) != dim for row in self.dot_table + self.circ_table):
            raise ValueError("tables must be square")
        self._check_tables()

    @property
    def zero(self) -> Vector:
        return (Fraction(0),) * self.dim

    def basis(self, i: int) -> Vector:
        return tuple(Fraction(1 if j == i else 0) for j in range(self.dim))

    def vector(self, coords: Sequence[Scalar]) -> Vector:
        return _as_vector(coords, self.dim)

    def _apply(self, table, x: Vector, y: Vector) -> Vector:
        out = self.zero
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if not b:
                    continue
                out = vec_add(out, vec_scale(a * b, table[i][j]))
        return out

    def dot(self, x: Vector, y: Vector) -> Vector:
        return self._apply(self.dot_table, x, y)

    def circ(self, x: Vector, y: Vector) -> Vector:
        return self._apply(self.circ_table, x, y)

    def _check_tables(self):
        es = [self.basis(i) for i in range(self.dim)]
        for i, x in enumerate(es):
            for j, y in enumerate(es):
                for k, z in enumerate(es):
                    if self.dot(self.dot(x, y), z) != self.dot(x, self.dot(y, z)):
                        raise ValueError(f"dot table not associative at ({i},{j},{k})")
                    if self.circ(self.circ(x, y), z) != self.circ(x, self.circ(y, z)):
                        raise ValueError(f"circle table not associative at ({i},{j},{k})")
                    lhs = vec_add(self.circ(x, self.dot(y, z)), self.dot(x, self.circ(y, z)))
                    rhs = vec_add(self.dot(self.circ(x, y), z), self.circ(self.dot(x, y), z))
                    if lhs != rhs:
                        raise ValueError(f"tables not compatible at ({i},{j},{k})")


def evaluate(target: FinAlgebra, assign: Mapping[str, Sequence[Scalar]], x: LinComb) -> Vector:
    """The algebra map determined by a generator assignment.

    Generators go to their assigned vectors; an irreducible tree u∘a goes to
    the circle product of the image of u with the image of a; a product of
    irreducibles goes to the dot product of the factor images.  Extended
    linearly; a homomorphism for both products.
    """
    vectors = {color: target.vector(v) for color, v in assign.items()}
    out = target.zero
    for t, c in x.items():
        out = vec_add(out, vec_scale(c, _evaluate_tree(target, vectors, t)))
    return out


def _evaluate_tree(target: FinAlgebra, vectors, t: Tree) -> Vector:
    if t.degree == 1:
        color = t.children[0][0]
        if color not in vectors:
            raise KeyError(f"no assignment for color {color!r}")
        return vectors[color]
    if is_irreducible(t):
        u, a = unwrap_root(t)
        if a not in vectors:
            raise KeyError(f"no assignment for color {a!r}")
        return target.circ(_evaluate_tree(target, vectors, u), vectors[a])
    images = [_evaluate_tree(target, vectors, f) for f in factorize(t)]
    return reduce(target.dot, images)
