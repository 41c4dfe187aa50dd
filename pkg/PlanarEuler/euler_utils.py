"""
============
Euler polynomial of a planar graph and the real/complex classification.
============

For a connected planar graph with f-vector (f0, f1, f2) the Euler polynomial is

    p(x) = f2 x^3 + f1 x^2 + f0 x + 2.

Whenever f0 - f1 + f2 = 2, p(x) = (x + 1)(f2 x^2 + (f1 - f2) x + 2), so p has the root -1 and the
remaining roots are real iff the cofactor discriminant delta = (f0 - 2)^2 - 8 f2 is non-negative.
Equivalently (f0 + 2)^2 >= 8 (f1 + 2). Graphs with delta >= 0 are real, the others complex.

All verdicts use exact integer arithmetic; floats only appear in root approximations.
"""

import cmath
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple, Tuple

import numpy as np

from PlanarEuler.graph_utils import Graph, degree, edge_count, is_connected, remove_vertex
from PlanarEuler.planarity_utils import face_count


class PreconditionError(ValueError):
    """A documented precondition does not hold. The message names it."""


class FVector(NamedTuple):
    f0: int
    f1: int
    f2: int

    @property
    def satisfies_euler(self) -> bool:
        return self.f0 - self.f1 + self.f2 == 2


class Classification(str, Enum):
    REAL = "real"
    COMPLEX = "complex"


@dataclass(frozen=True)
class EulerPolynomial:
    fvector: FVector
    coefficients: Tuple[int, int, int, int]
    delta: int

    def __call__(self, x):
        a3, a2, a1, a0 = self.coefficients
        return ((a3 * x + a2) * x + a1) * x + a0

    @property
    def cofactor(self) -> Tuple[int, int, int]:
        """Coefficients of the quadratic left after dividing by (x + 1)."""
        a3, a2, _, a0 = self.coefficients
        return (a3, a2 - a3, a0)

    def __str__(self):
        a3, a2, a1, a0 = self.coefficients
        return "{}x^3 + {}x^2 + {}x + {}".format(a3, a2, a1, a0)


@dataclass(frozen=True)
class RootSet:
    """Roots of an Euler polynomial.

    `quadratic` holds the integer coefficients whose roots accompany the exact root -1 (for a degenerate
    polynomial with f2 = 0 they are the coefficients of p itself and there is no extra root).
    `discriminant` is the exact discriminant of that quadratic.
    """
    quadratic: Tuple[int, int, int]
    discriminant: int
    degenerate: bool
    approximations: Tuple[complex, ...] = field(default=())

    @property
    def all_real(self) -> bool:
        return self.discriminant >= 0

    @property
    def known_root(self):
        return None if self.degenerate else -1

    def to_dict(self) -> dict:
        return {
            "known_root": self.known_root,
            "quadratic": list(self.quadratic),
            "discriminant": self.discriminant,
            "degenerate": self.degenerate,
            "all_real": self.all_real,
            "approximations": [[z.real, z.imag] for z in self.approximations],
        }


def fvector_of(g: Graph) -> FVector:
    """f-vector (vertices, edges, faces) of a connected planar graph.

    Raises DisconnectedGraphError or NonPlanarError through `face_count`.
    """
    return FVector(g.n, edge_count(g), face_count(g))


def euler_polynomial(f: FVector) -> EulerPolynomial:
    f = FVector(*f)
    return EulerPolynomial(
        fvector=f,
        coefficients=(f.f2, f.f1, f.f0, 2),
        delta=(f.f0 - 2) ** 2 - 8 * f.f2,
    )


def inequality_one(f: FVector) -> int:
    """(f0 + 2)^2 - 8 (f1 + 2); non-negative iff the edge inequality holds."""
    return (f[0] + 2) ** 2 - 8 * (f[1] + 2)


def inequality_two(f: FVector) -> int:
    """(f0 - 2)^2 - 8 f2; non-negative iff the face inequality holds."""
    return (f[0] - 2) ** 2 - 8 * f[2]


def classify(f: FVector) -> Classification:
    """Real iff (f0 - 2)^2 >= 8 f2. Accepts any f-vector, graph-derived or not.

    When the Euler relation holds the verdict coincides with (f0 + 2)^2 >= 8 (f1 + 2).
    """
    f = FVector(*f)
    real = inequality_two(f) >= 0
    if f.satisfies_euler and real != (inequality_one(f) >= 0):
        raise RuntimeError("edge and face inequalities disagree on Euler-consistent f-vector {}".format(tuple(f)))
    return Classification.REAL if real else Classification.COMPLEX


def classify_graph(g: Graph) -> Classification:
    return classify(fvector_of(g))


def _quadratic_roots(a: int, b: int, c: int, discriminant: int) -> Tuple[complex, ...]:
    if a == 0:
        if b == 0:
            return ()
        return (complex(-c / b),)
    if discriminant >= 0:
        root = math.isqrt(discriminant)
        sq = float(root) if root * root == discriminant else math.sqrt(discriminant)
        # avoid cancellation: take the larger-magnitude root first
        q = -0.5 * (b + math.copysign(sq, b)) if b != 0 else 0.5 * sq
        if q == 0:
            return (complex(0.0), complex(0.0))
        return (complex(q / a), complex(c / q))
    sq = cmath.sqrt(discriminant)
    return ((-b + sq) / (2 * a), (-b - sq) / (2 * a))


def roots(p: EulerPolynomial) -> RootSet:
    """Closed-form roots of an Euler polynomial.

    Parameters
    ----------
    p: EulerPolynomial
        polynomial of an Euler-consistent f-vector, or one with f2 = 0

    Returns
    -------
    rootset: RootSet
        -1 plus the cofactor roots; with f2 = 0 the cubic degenerates to f1 x^2 + f0 x + 2 and its roots
        are returned with `degenerate` set
    """
    a3, a2, a1, a0 = p.coefficients
    if a3 == 0:
        disc = a1 * a1 - 4 * a2 * a0
        return RootSet(
            quadratic=(a2, a1, a0),
            discriminant=disc,
            degenerate=True,
            approximations=_quadratic_roots(a2, a1, a0, disc),
        )
    if a3 < 0 or not p.fvector.satisfies_euler:
        raise ValueError(
            "closed-form roots need f2 >= 0 and f0 - f1 + f2 = 2, got f-vector {}".format(tuple(p.fvector))
        )
    a, b, c = p.cofactor
    disc = b * b - 4 * a * c
    return RootSet(
        quadratic=(a, b, c),
        discriminant=disc,
        degenerate=False,
        approximations=(complex(-1.0),) + _quadratic_roots(a, b, c, disc),
    )


def factorization_holds(f: FVector) -> bool:
    """Exact check of p(-1) = 0 and p(x) = (x + 1)(f2 x^2 + (f1 - f2) x + 2)."""
    p = euler_polynomial(f)
    product = np.polymul(np.array([1, 1], dtype=np.int64), np.array(p.cofactor, dtype=np.int64))
    return p(-1) == 0 and np.array_equal(product, np.array(p.coefficients, dtype=np.int64))


def numeric_roots(p: EulerPolynomial) -> np.ndarray:
    """Numerical roots from companion-matrix eigenvalues.

    For Euler-consistent polynomials the exact root -1 is deflated first and the quotient is solved,
    which keeps a repeated root at -1 from smearing into a spurious complex pair.
    """
    coefficients = np.array(p.coefficients, dtype=float)
    if p.coefficients[0] == 0:
        return np.roots(coefficients)
    if p.fvector.satisfies_euler:
        quotient, _ = np.polydiv(coefficients, np.array([1.0, 1.0]))
        return np.concatenate(([-1.0 + 0j], np.roots(quotient).astype(complex)))
    return np.roots(coefficients).astype(complex)


def numeric_all_real(p: EulerPolynomial, tol: float = 1e-9) -> bool:
    return bool(np.max(np.abs(np.imag(numeric_roots(p))), initial=0.0) < tol)


def quadratic_edge_bound(f0: int) -> int:
    """Largest f1 with (f0 + 2)^2 >= 8 (f1 + 2): more edges than this make a graph of order f0 complex."""
    return (f0 + 2) ** 2 // 8 - 2


def quadratic_bound_window(limit: int, triangle_free: bool = False) -> Tuple[int, ...]:
    """Orders 3 <= f0 <= limit where the quadratic edge bound is strictly below the linear planar edge bound.

    The linear bound is 3 (f0 - 2), or 2 (f0 - 2) for triangle-free graphs. Compared over the reals,
    (f0 + 2)^2 / 8 - 2 < c (f0 - 2).
    """
    c = 2 if triangle_free else 3
    return tuple(f0 for f0 in range(3, limit + 1) if (f0 + 2) ** 2 < 8 * (c * (f0 - 2) + 2))


def delete_degree2_preserves_complex(g: Graph, x: int) -> bool:
    """Delete a degree-2 vertex from a complex connected planar graph and report whether the result is complex.

    Parameters
    ----------
    g: Graph
        connected planar complex graph with at least 7 vertices
    x: int
        vertex of degree 2 whose removal keeps the graph connected

    Returns
    -------
    preserved: bool
        True iff G - x classifies Complex
    """
    f = fvector_of(g)
    if f.f0 < 7:
        raise PreconditionError("f0 >= 7 violated: graph has {} vertices".format(f.f0))
    if classify(f) is not Classification.COMPLEX:
        raise PreconditionError("G complex violated: f-vector {} is real".format(tuple(f)))
    d = degree(g, x)
    if d != 2:
        raise PreconditionError("degree(x) = 2 violated: vertex {} has degree {}".format(x, d))
    h = remove_vertex(g, x)
    if not is_connected(h):
        raise PreconditionError("G - x connected violated: removing vertex {} disconnects the graph".format(x))
    return classify_graph(h) is Classification.COMPLEX
