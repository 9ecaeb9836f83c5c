"""Exact Newton polyhedra of polynomial supports.

The Newton polyhedron of f is the convex hull of supp(f) + the nonnegative
orthant.  Only its compact facets matter here; each one is the solution set
of <A, B> = 1 for a unique covector B with all entries strictly positive.
Everything below is exact: facets come from solving n-point linear systems
over Q, and vertexhood is decided by an exact simplex feasibility test, so
no floating-point hull code is involved anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import ValidationError
from .poly import Exponent, Polynomial


def _dot(a, b) -> Fraction:
    return sum((Fraction(x) * y for x, y in zip(a, b)), Fraction(0))


def _covector_for(points) -> tuple[Fraction, ...] | None:
    """Solve <A, B> = 1 for all A in points; None if not uniquely solvable."""
    n = len(points[0])
    m = [[Fraction(p[j]) for j in range(n)] + [Fraction(1)] for p in points]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            return None
        m[col], m[pivot] = m[pivot], m[col]
        pv = m[col][col]
        m[col] = [v / pv for v in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                factor = m[r][col]
                m[r] = [m[r][k] - factor * m[col][k] for k in range(n + 1)]
    return tuple(m[i][n] for i in range(n))


def _lp_feasible(points, target) -> bool:
    """Exact test for: exists lam >= 0 with sum lam = 1 and T lam <= target.

    Phase-1 simplex over Q with Bland's rule.  Row 0 is the convex-combination
    equality (one artificial variable); the n coordinate rows get slacks and
    start basic since target >= 0 componentwise.
    """
    m = len(points)
    if m == 0:
        return False
    n = len(target)
    art = m + n
    ncols = art + 1
    rows = [[Fraction(1)] * m + [Fraction(0)] * n + [Fraction(1)]]
    rhs = [Fraction(1)]
    for i in range(n):
        row = [Fraction(points[j][i]) for j in range(m)] + [Fraction(0)] * (n + 1)
        row[m + i] = Fraction(1)
        rows.append(row)
        rhs.append(Fraction(target[i]))
    basis = [art] + [m + i for i in range(n)]
    while True:
        in_basis = set(basis)
        entering = -1
        for j in range(art):  # the artificial never re-enters
            if j in in_basis:
                continue
            # reduced cost of j for objective "minimize artificial"
            rc = -sum(rows[i][j] for i in range(len(rows)) if basis[i] == art)
            if rc < 0:
                entering = j
                break
        if entering < 0:
            value = sum(rhs[i] for i in range(len(rows)) if basis[i] == art)
            return value == 0
        leave = -1
        best = None
        for i in range(len(rows)):
            a = rows[i][entering]
            if a > 0:
                ratio = rhs[i] / a
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    best = ratio
                    leave = i
        if leave < 0:
            raise AssertionError("phase-1 objective cannot be unbounded")
        pv = rows[leave][entering]
        rows[leave] = [v / pv for v in rows[leave]]
        rhs[leave] /= pv
        for i in range(len(rows)):
            if i != leave and rows[i][entering]:
                factor = rows[i][entering]
                rows[i] = [rows[i][k] - factor * rows[leave][k] for k in range(ncols)]
                rhs[i] -= factor * rhs[leave]
        basis[leave] = entering


def _affine_rank(points) -> int:
    pts = list(points)
    if len(pts) <= 1:
        return 0
    base = pts[0]
    rows = [[Fraction(x - y) for x, y in zip(p, base)] for p in pts[1:]]
    rank = 0
    ncols = len(base)
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][col]
        rows[rank] = [v / pv for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [rows[r][k] - factor * rows[rank][k] for k in range(ncols)]
        rank += 1
        if rank == len(rows):
            break
    return rank


@dataclass(frozen=True)
class CompactFacet:
    """A compact facet: covector B > 0 with <A, B> = 1 on incident points."""

    covector: tuple[Fraction, ...]
    incident_points: tuple[Exponent, ...]

    def weight(self, point) -> Fraction:
        return _dot(point, self.covector)

    def shifted_weight(self, exponent) -> Fraction:
        """<exponent + (1,...,1), B>: the pole-order weight of a monomial."""
        return _dot(tuple(e + 1 for e in exponent), self.covector)


@dataclass(frozen=True)
class NewtonPolyhedron:
    n: int
    support: tuple[Exponent, ...]
    facets: tuple[CompactFacet, ...]
    vertices: frozenset[Exponent]

    def shifted_weight_monomial(self, exponent) -> Fraction:
        if len(exponent) != self.n:
            raise ValidationError(f"exponent length {len(exponent)}, expected {self.n}")
        if not self.facets:
            raise ValidationError("the polyhedron has no compact facets")
        return min(f.shifted_weight(exponent) for f in self.facets)

    def shifted_weight(self, g: Polynomial) -> Fraction:
        """Minimum shifted weight over the support of g."""
        if g.is_zero:
            raise ValidationError("the zero polynomial has no weight")
        if g.n != self.n:
            raise ValidationError(f"polynomial in {g.n} variables, expected {self.n}")
        return min(self.shifted_weight_monomial(e) for e in g.support())

    def shifted_weight_one(self) -> Fraction:
        """Shifted weight of the constant monomial; the minimal-exponent value."""
        return self.shifted_weight_monomial((0,) * self.n)

    def minimizing_facet_count(self) -> int:
        """How many facets attain the shifted weight of 1."""
        best = self.shifted_weight_one()
        zero = (0,) * self.n
        return sum(1 for f in self.facets if f.shifted_weight(zero) == best)

    def is_simplicial(self) -> bool:
        """True iff every compact facet carries exactly n polyhedron vertices."""
        return all(
            sum(1 for p in f.incident_points if p in self.vertices) == self.n
            for f in self.facets
        )

    def diagonal_face(self, p: int) -> tuple[tuple[Exponent, ...], int]:
        """Smallest compact face through the diagonal point (1,..,1)/(p+1).

        Requires the shifted weight of 1 to equal p+1 exactly, so the point
        sits on the compact boundary.  Returns the support points lying on
        every facet through the point, and the affine dimension of that set.
        """
        if p < 0:
            raise ValidationError(f"need p >= 0, got {p}")
        target = Fraction(p + 1)
        if self.shifted_weight_one() != target:
            raise ValidationError(
                f"shifted weight of 1 is {self.shifted_weight_one()}, not {target}"
            )
        zero = (0,) * self.n
        active = [f for f in self.facets if f.shifted_weight(zero) == target]
        pts = set(active[0].incident_points)
        for f in active[1:]:
            pts &= set(f.incident_points)
        face = tuple(sorted(pts))
        return face, _affine_rank(face)


def is_convenient(f: Polynomial) -> bool:
    """True iff a pure power of every variable appears in supp(f)."""
    if f.n == 0:
        return False
    pure = [False] * f.n
    for e in f.support():
        nz = [i for i, x in enumerate(e) if x]
        if len(nz) == 1:
            pure[nz[0]] = True
    return all(pure)


def compute_polyhedron(f: Polynomial) -> NewtonPolyhedron:
    """Compact facets and vertices of the Newton polyhedron of f.

    Facets: every compact facet is spanned by n affinely independent support
    points, and affinely independent points on a hyperplane missing the
    origin are linearly independent, so solving <A, B> = 1 on each n-subset
    and keeping the strictly positive covectors that support the whole
    support set finds them all.  Coplanar subsets collapse by covector.
    """
    if f.n == 0:
        raise ValidationError("need at least one variable")
    if f.is_zero:
        raise ValidationError("the zero polynomial has no Newton polyhedron")
    support = tuple(sorted(f.support()))
    n = f.n
    if (0,) * n in support:
        raise ValidationError("constant term present: f(0) != 0")
    found: dict[tuple[Fraction, ...], tuple[Exponent, ...]] = {}
    for subset in combinations(support, n):
        cov = _covector_for(subset)
        if cov is None or any(b <= 0 for b in cov) or cov in found:
            continue
        if all(_dot(a, cov) >= 1 for a in support):
            found[cov] = tuple(a for a in support if _dot(a, cov) == 1)
    facets = tuple(CompactFacet(cov, found[cov]) for cov in sorted(found))
    others = {a: [b for b in support if b != a] for a in support}
    vertices = frozenset(a for a in support if not _lp_feasible(others[a], a))
    return NewtonPolyhedron(n, support, facets, vertices)


def facets_json(polyhedron: NewtonPolyhedron) -> list[dict]:
    return [
        {
            "covector": [f"{b.numerator}/{b.denominator}" for b in facet.covector],
            "incident_points": [list(p) for p in facet.incident_points],
        }
        for facet in polyhedron.facets
    ]
