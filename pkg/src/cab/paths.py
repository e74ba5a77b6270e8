"""The path algebra over a finite point set.

Basis symbols p[s0,...,sn] (n >= 1) over a point set S.  The product glues
paths whose endpoints match and drops the matched pair:

    p[a,X,b] · p[b,Y,d] = p[a,X,Y,d],     zero when the endpoints differ;

its unit is e = Σ_i p[i,i].  The coproduct distributes the interior letters
over the two factors by order-preserving selection, keeping both endpoints on
each side.  First-point duplication R(p[a,X,b]) = p[a,a,X,b] is a right
semi-homomorphism; the induced second product keeps the matched point once:

    p[X,b] ∘ p[b,Y] = p[X,b,Y].

R is a coderivation for the coproduct, which the residual function witnesses;
the bialgebra-style diagnostics report how the coproduct interacts with each
product on the tensor square instead of asserting a law.
"""

from __future__ import annotations

import itertools
import re
from typing import Sequence

from .linear import LinComb, Tensor
from .matching import tensor_square_dot, tensor_square_star

_POINT_RE = re.compile(r"[A-Za-z0-9_]+$")


class Path:
    """A basis path: a tuple of at least two points, text form ``p[a,x,b]``."""

    __slots__ = ("points", "text", "_hash")

    def __init__(self, points):
        points = tuple(points)
        if len(points) < 2:
            raise ValueError("a path needs at least two points")
        self.points = points
        self.text = "p[" + ",".join(points) + "]"
        self._hash = hash(self.text)

    def __eq__(self, other):
        return isinstance(other, Path) and self.points == other.points

    def __hash__(self):
        return self._hash

    def __str__(self):
        return self.text

    def __repr__(self):
        return f"Path{self.points!r}"


def parse_path(text: str, points: Sequence[str] | None = None) -> Path:
    m = re.match(r"p\[([^]]*)\]$", text.strip())
    if not m:
        raise ValueError(f"bad path literal {text!r}; expected p[a,b,...]")
    symbols = [s.strip() for s in m.group(1).split(",")]
    for s in symbols:
        if not _POINT_RE.match(s):
            raise ValueError(f"bad point {s!r} in {text!r}")
        if points is not None and s not in points:
            raise ValueError(f"point {s!r} not in the declared set")
    return Path(symbols)


def path_elem(p: Path | str) -> LinComb:
    if isinstance(p, str):
        p = parse_path(p)
    return LinComb.term(p)


def path_unit(points: Sequence[str]) -> LinComb:
    """e = Σ_i p[i,i]; the two-sided unit for the path product."""
    return LinComb((Path((s, s)), 1) for s in points)


def _mul_paths(p: Path, q: Path) -> LinComb:
    if p.points[-1] != q.points[0]:
        return LinComb.zero()
    return LinComb.term(Path(p.points[:-1] + q.points[1:]))


def path_mul(x: LinComb, y: LinComb) -> LinComb:
    out = LinComb.zero()
    for p, a in x.items():
        for q, b in y.items():
            out = out + _mul_paths(p, q) * (a * b)
    return out


def _circ_paths(p: Path, q: Path) -> LinComb:
    if p.points[-1] != q.points[0]:
        return LinComb.zero()
    return LinComb.term(Path(p.points + q.points[1:]))


def path_circ(x: LinComb, y: LinComb) -> LinComb:
    """x∘y; equals x·R(y) and keeps the matched point once."""
    out = LinComb.zero()
    for p, a in x.items():
        for q, b in y.items():
            out = out + _circ_paths(p, q) * (a * b)
    return out


def _r_path(p: Path) -> LinComb:
    return LinComb.term(Path((p.points[0],) + p.points))


def path_R(x: LinComb) -> LinComb:
    """Duplicate each path's first point; R(x·y) = R(x)·y."""
    return x.map_keys(lambda p: Path((p.points[0],) + p.points))


def _coproduct_path(p: Path) -> LinComb:
    a, b = p.points[0], p.points[-1]
    interior = p.points[1:-1]
    n = len(interior)
    out = []
    for k in range(n + 1):
        for chosen in itertools.combinations(range(n), k):
            chosen_set = set(chosen)
            left = (a,) + tuple(interior[i] for i in chosen) + (b,)
            right = (a,) + tuple(interior[i] for i in range(n) if i not in chosen_set) + (b,)
            out.append((Tensor(Path(left), Path(right)), 1))
    return LinComb(out)


def path_coproduct(x: LinComb) -> LinComb:
    """Sum over order-preserving two-colorings of the interior letters."""
    out = LinComb.zero()
    for p, c in x.items():
        out = out + _coproduct_path(p) * c
    return out


def path_coassociativity_residual(x: LinComb) -> LinComb:
    from .linear import apply_on_leg

    d = path_coproduct(x)
    return apply_on_leg(_coproduct_path, d, 0) - apply_on_leg(_coproduct_path, d, 1)


def path_coderivation_residual(x: LinComb) -> LinComb:
    """Δ(R(x)) − (R⊗id + id⊗R)(Δ(x)); zero for every x."""
    from .linear import apply_on_leg

    d = path_coproduct(x)
    return path_coproduct(path_R(x)) - apply_on_leg(_r_path, d, 0) - apply_on_leg(_r_path, d, 1)


def path_mult_residual(x: LinComb, y: LinComb, product: str = "dot") -> LinComb:
    """Componentwise multiplicativity diagnostic for one product.

    product="dot":  Δ(x·y) − Δ(x)·Δ(y);
    product="circ": Δ(x∘y) − Δ(x)∘Δ(y).

    Reported, not asserted: the circ form is nonzero already on
    p[a,x] ∘ p[x,b].
    """
    if product == "dot":
        return path_mult_residual_generic(x, y, path_mul, _mul_paths)
    if product == "circ":
        return path_mult_residual_generic(x, y, path_circ, _circ_paths)
    raise ValueError(f"unknown product {product!r}")


def path_mult_residual_generic(x, y, mul, basis_mul) -> LinComb:
    return path_coproduct(mul(x, y)) - tensor_square_dot(
        path_coproduct(x), path_coproduct(y), basis_mul
    )


def path_bimatching_residual(x: LinComb, y: LinComb) -> LinComb:
    """Δ(x∘y) − Δ(x)∗Δ(y) with ∗ the two-term tensor-square product.

    A diagnostic: zero whenever the dot-multiplicativity and coderivation
    identities hold on the inputs involved.
    """
    return path_coproduct(path_circ(x, y)) - tensor_square_star(
        path_coproduct(x), path_coproduct(y), _mul_paths, _circ_paths
    )


def enumerate_paths(points: Sequence[str], max_interior: int) -> list[Path]:
    """All basis paths with up to ``max_interior`` interior points."""
    pts = tuple(points)
    out = []
    for n in range(max_interior + 1):
        for a in pts:
            for interior in itertools.product(pts, repeat=n):
                for b in pts:
                    out.append(Path((a,) + interior + (b,)))
    return out
