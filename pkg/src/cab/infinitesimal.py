"""Coalgebra structure of the tree algebra and its primitives.

The coproduct makes the tree algebra a coassociative coalgebra satisfying the
(non-unital) infinitesimal law with both products:

    Δ(x∙y) = x₁ ⊗ (x₂∙y) + (x∙y₁) ⊗ y₂ + x ⊗ y.

It is given recursively (generators are primitive; one rule per product) and
in closed form as a sum of complementary vertex-subset contractions along the
canonical vertex order.  The projector ``e`` kills dot-decomposables and
retracts onto primitives; applied to irreducible trees it produces the graded
primitive basis, whose dimension in degree n is d^n times the Catalan number
c_{n-1}.

The n-ary operations

    N_n(x₁,...,xₙ) = (x₁·...·x_{n-1})∘xₙ − x₁·((x₂·...·x_{n-1})∘xₙ)

close on primitives and satisfy the arity-mixing relations checked by
``n_relation_residual`` and ``n_aux_residual``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Sequence

from .linear import LinComb, Tensor, apply_on_leg, tensor
from .trees import (
    Tree,
    canonical_vertex_order,
    catalan,
    contract,
    enumerate_irreducible,
    factorize,
    is_irreducible,
    root_concat,
    unwrap_root,
)
from .algebra import circle, dot, star

_COPRODUCT_CACHE: dict = {}


def coproduct_tree(t: Tree) -> LinComb:
    """Coproduct of a basis tree (rank-2 tensor combination, possibly zero)."""
    cached = _COPRODUCT_CACHE.get(t)
    if cached is not None:
        return cached

    if t.degree == 1:
        result = LinComb.zero()
    elif is_irreducible(t):
        # t = u∘a:  Δ(t) = u₁ ⊗ (u₂∘a) + u ⊗ a
        u, a = unwrap_root(t)
        a_elem = LinComb.term(_leaf_tree(a))
        out = [(Tensor(u, _leaf_tree(a)), 1)]
        for key, c in coproduct_tree(u).items():
            u1, u2 = key.legs
            for w, c2 in circle(LinComb.term(u2), a_elem).items():
                out.append((Tensor(u1, w), c * c2))
        result = LinComb(out)
    else:
        # t = t'·t'' (first factor against the rest):
        # Δ(t) = t'₁ ⊗ (t'₂·t'') + (t'·t''₁) ⊗ t''₂ + t' ⊗ t''
        factors = factorize(t)
        t1 = factors[0]
        t2 = reduce(root_concat, factors[1:])
        out = [(Tensor(t1, t2), 1)]
        for key, c in coproduct_tree(t1).items():
            a, b = key.legs
            out.append((Tensor(a, root_concat(b, t2)), c))
        for key, c in coproduct_tree(t2).items():
            a, b = key.legs
            out.append((Tensor(root_concat(t1, a), b), c))
        result = LinComb(out)

    _COPRODUCT_CACHE[t] = result
    return result


def _leaf_tree(color: str) -> Tree:
    return Tree(((color, ()),))


def coproduct(x: LinComb) -> LinComb:
    """Linear extension of the tree coproduct."""
    out = LinComb.zero()
    for t, c in x.items():
        out = out + coproduct_tree(t) * c
    return out


def coproduct_closed(t: Tree) -> LinComb:
    """Closed form: sum of prefix/suffix contractions along the vertex order.

    For vertices a₁ < ... < aₙ in canonical order,
    Δ(t) = Σ_{i=1}^{n-1} t_{a₁..a_i} ⊗ t_{a_{i+1}..a_n}.
    """
    order = canonical_vertex_order(t)
    n = len(order)
    out = []
    for i in range(1, n):
        left = contract(t, order[:i])
        right = contract(t, order[i:])
        out.append((Tensor(left, right), 1))
    return LinComb(out)


def coassociativity_residual(x: LinComb) -> LinComb:
    """(Δ⊗id)Δ(x) − (id⊗Δ)Δ(x); zero by coassociativity."""
    d = coproduct(x)
    return apply_on_leg(coproduct_tree, d, 0) - apply_on_leg(coproduct_tree, d, 1)


def _product_and_weight(product):
    """Resolve a product selector to (binary op, weight of the x⊗y term)."""
    if product == "dot":
        return dot, 1
    if product == "circle":
        return circle, 1
    if isinstance(product, tuple) and product[0] == "star":
        _, alpha, beta = product
        return (lambda x, y: star(x, y, alpha, beta)), alpha + beta
    raise ValueError(f"unknown product {product!r}")


def infinitesimal_residual(product, x: LinComb, y: LinComb) -> LinComb:
    """Δ(x∙y) − [x₁⊗(x₂∙y) + (x∙y₁)⊗y₂ + w·x⊗y] for the chosen product.

    The weight w is 1 for dot and circle alone, and alpha+beta for
    ("star", alpha, beta); in particular ("star", -1, 1) has no x⊗y term.
    """
    mul, weight = _product_and_weight(product)
    residual = coproduct(mul(x, y))
    for key, c in coproduct(x).items():
        x1, x2 = key.legs
        residual = residual - tensor(LinComb.term(x1), mul(LinComb.term(x2), y)) * c
    for key, c in coproduct(y).items():
        y1, y2 = key.legs
        residual = residual - tensor(mul(x, LinComb.term(y1)), LinComb.term(y2)) * c
    return residual - tensor(x, y) * weight


_PROJECTOR_CACHE: dict = {}


def primitive_projector(x: LinComb) -> LinComb:
    """Idempotent projector onto primitives: e(t) = t − t₁·e(t₂).

    Vanishes on dot products of positive-degree elements; fixes primitives;
    its image has zero coproduct.
    """
    out = LinComb.zero()
    for t, c in x.items():
        out = out + _projector_tree(t) * c
    return out


def _projector_tree(t: Tree) -> LinComb:
    cached = _PROJECTOR_CACHE.get(t)
    if cached is not None:
        return cached
    result = LinComb.term(t)
    for key, c in coproduct_tree(t).items():
        t1, t2 = key.legs
        result = result - dot(LinComb.term(t1), _projector_tree(t2)) * c
    _PROJECTOR_CACHE[t] = result
    return result


def primitive_projector_series(x: LinComb) -> LinComb:
    """Alternating-sign form of the projector, as a cross-check.

    e(x) = Σ_{k>=0} (−1)^k (fold of dot)(Δ^{(k)}(x)) where Δ^{(k)} is the
    k-fold iterated coproduct; the sum stops once the iterate vanishes.
    """
    out = x
    current = coproduct(x)
    sign = -1
    while current:
        folded = LinComb.zero()
        for key, c in current.items():
            prod = reduce(root_concat, key.legs)
            folded = folded + LinComb.term(prod, c)
        out = out + folded * sign
        current = apply_on_leg(coproduct_tree, current, 0)
        sign = -sign
    return out


def n_op(n: int, xs: Sequence[LinComb]) -> LinComb:
    """N_n(x₁,...,xₙ) = (x₁·...·x_{n-1})∘xₙ − x₁·((x₂·...·x_{n-1})∘xₙ).

    N₂(x,y) = x∘y − x·y; for n >= 3 the defining expression, which also equals
    N₃(x₁, x₂·...·x_{n-1}, xₙ).
    """
    if n < 2:
        raise ValueError("n-ary operations start at arity 2")
    if len(xs) != n:
        raise ValueError(f"expected {n} arguments, got {len(xs)}")
    if n == 2:
        x, y = xs
        return circle(x, y) - dot(x, y)
    head = reduce(dot, xs[: n - 1])
    inner = reduce(dot, xs[1 : n - 1])
    return circle(head, xs[n - 1]) - dot(xs[0], circle(inner, xs[n - 1]))


def n_relation_arity(rel) -> int:
    """Number of arguments the relation ``rel`` takes."""
    if rel in ("low2", "low3"):
        return 4
    if rel == "low4":
        return 5
    kind = rel[0]
    if kind == "R1":
        return rel[1] + 1
    if kind == "R2":
        return rel[1] + 1
    if kind == "R3":
        return rel[1] + rel[2] - 1
    raise ValueError(f"unknown relation {rel!r}")


def n_relation_residual(rel, xs: Sequence[LinComb]) -> LinComb:
    """LHS − RHS of a defining relation of the primitive operations.

    ``rel`` is one of ("R1", n) for n >= 2, ("R2", n) for n >= 3,
    ("R3", n, r) for n, r >= 3, or the literal low-degree relations
    "low2", "low3", "low4".  Always zero in the tree algebra.
    """
    if len(xs) != n_relation_arity(rel):
        raise ValueError(f"relation {rel!r} takes {n_relation_arity(rel)} arguments")
    xs = list(xs)
    N = lambda args: n_op(len(args), args)

    if rel == "low2":
        x, y, z, t = xs
        return N([x, y, N([z, t])]) - N([N([x, y, z]), t]) - N([x, N([y, z]), t])
    if rel == "low3":
        x, y, z, t = xs
        return N([x, N([y, z, t])]) - N([N([x, y]), z, t]) + N([x, N([y, z]), t])
    if rel == "low4":
        x, y, z, t, w = xs
        return (
            N([x, y, N([z, t, w])])
            - N([N([x, y, z]), t, w])
            - N([x, N([y, z]), t, w])
            + N([x, y, N([z, t]), w])
        )

    kind = rel[0]
    if kind == "R1":
        n = rel[1]
        lhs = N(xs[: n - 1] + [N(xs[n - 1 : n + 1])])
        rhs = LinComb.zero()
        for i in range(1, n):
            rhs = rhs + N(xs[: i - 1] + [N(xs[i - 1 : n])] + [xs[n]])
        return lhs - rhs
    if kind == "R2":
        n = rel[1]
        lhs = N([xs[0], N(xs[1 : n + 1])])
        rhs = N([N(xs[0:2])] + xs[2 : n + 1])
        for i in range(3, n + 1):
            inner = N(xs[1 : n + 3 - i])
            rhs = rhs - N([xs[0], inner] + xs[n + 3 - i : n + 1])
        return lhs - rhs
    if kind == "R3":
        n, r = rel[1], rel[2]
        # argument layout: x, y₁..y_{n-2}, z, t₁..t_{r-2}, w
        z = xs[n - 1]
        ts = xs[n : n + r - 2]
        w = xs[n + r - 2]
        lhs = N(xs[: n - 1] + [N([z] + ts + [w])])
        rhs = N([N(xs[:n])] + ts + [w])
        for i in range(1, n - 1):
            inner = N(xs[i:n])
            rhs = rhs + N([xs[0]] + xs[1:i] + [inner] + ts + [w])
        for i in range(1, r - 1):
            inner = N([z] + ts[:i])
            rhs = rhs - N(xs[: n - 1] + [inner] + ts[i:] + [w])
        return lhs - rhs
    raise ValueError(f"unknown relation {rel!r}")


def n_aux_residual(name, xs: Sequence[LinComb]) -> LinComb:
    """Auxiliary identities relating N₂/N₃/Nₙ with dot products.

    lemma_i:  N₂(x·y, z) = N₃(x,y,z) + x·N₂(y,z)
    lemma_ii: N₂(x, y·z) = N₃(x,y,z) + N₂(x,y)·z
    ind_i:    N₂(x₁·...·x_{n-1}, xₙ) = Σ_j x₁·...·x_j · N_{n-j}(x_{j+1},...,xₙ)
    ind_ii:   N₂(x₁, x₂·...·xₙ) = Σ_j N_{n-j}(x₁,...,x_{n-j}) · x_{n-j+1}·...·xₙ
    """
    xs = list(xs)
    N = lambda args: n_op(len(args), args)
    if name == "lemma_i":
        x, y, z = xs
        return N([dot(x, y), z]) - N([x, y, z]) - dot(x, N([y, z]))
    if name == "lemma_ii":
        x, y, z = xs
        return N([x, dot(y, z)]) - N([x, y, z]) - dot(N([x, y]), z)
    n = len(xs)
    if n < 2:
        raise ValueError("ind_* need at least two arguments")
    if name == "ind_i":
        lhs = N([reduce(dot, xs[: n - 1]), xs[n - 1]])
        rhs = LinComb.zero()
        for j in range(n - 1):
            term = N(xs[j:])
            if j:
                term = dot(reduce(dot, xs[:j]), term)
            rhs = rhs + term
        return lhs - rhs
    if name == "ind_ii":
        lhs = N([xs[0], reduce(dot, xs[1:])])
        rhs = LinComb.zero()
        for j in range(n - 1):
            term = N(xs[: n - j])
            if j:
                term = dot(term, reduce(dot, xs[n - j :]))
            rhs = rhs + term
        return lhs - rhs
    raise ValueError(f"unknown identity {name!r}")


def primitive_basis(n: int, colors: Sequence[str]) -> list[LinComb]:
    """e applied to every irreducible tree of degree n; a basis of the
    degree-n primitives, of size d^n * c_{n-1}."""
    return [_projector_tree(t) for t in enumerate_irreducible(n, colors)]


@dataclass(frozen=True)
class DimRow:
    """One degree of the dimension bookkeeping.

    tree_dim:      d^n c_n, the tree-basis count;
    prim_dim:      d^n times the arity-composition recursion value, which the
                   row checks against d^n c_{n-1};
    cofree_dim:    Σ over compositions (m₁..m_k) of n of Π d^{m_i} c_{m_i - 1},
                   the graded dimension of the cofree coalgebra on the
                   primitives, checked against tree_dim.
    """

    n: int
    tree_dim: int
    prim_dim: int
    prim_expected: int
    cofree_dim: int

    @property
    def prim_ok(self) -> bool:
        return self.prim_dim == self.prim_expected

    @property
    def cofree_ok(self) -> bool:
        return self.cofree_dim == self.tree_dim


def _free_prim_dims(max_n: int) -> list[int]:
    """One-generator graded dimensions via the composition recursion:
    dims[1] = 1, dims[n] = Σ over compositions of n-1 of Π dims[parts]."""
    dims = [0] * (max_n + 1)
    dims[1] = 1
    for n in range(2, max_n + 1):
        total = 0
        for comp in _compositions(n - 1):
            prod = 1
            for m in comp:
                prod *= dims[m]
            total += prod
        dims[n] = total
    return dims


def _compositions(n: int):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


def dimension_report(max_n: int, d: int) -> list[DimRow]:
    """Per-degree dimension table over a d-color palette.

    Each row carries its two consistency checks (``prim_ok``, ``cofree_ok``);
    callers decide how to surface a mismatch.
    """
    if max_n < 1 or d < 1:
        raise ValueError("need max_n >= 1 and d >= 1")
    prim = _free_prim_dims(max_n)
    rows = []
    for n in range(1, max_n + 1):
        tree_dim = d**n * catalan(n)
        prim_dim = d**n * prim[n]
        prim_expected = d**n * catalan(n - 1)
        cofree = 0
        for comp in _compositions(n):
            prod = 1
            for m in comp:
                prod *= d**m * catalan(m - 1)
            cofree += prod
        rows.append(DimRow(n, tree_dim, prim_dim, prim_expected, cofree))
    return rows
