"""Regularity numbers, syzygy degree bounds, and degree-bound sets.

The regularity number of a module under a positive coarsening vector is the
stable threshold of the coarse vanishing conditions on local cohomology; it
is computed from the a-invariants as max_i (a^i - c_v (1 - i) + 1).  The
closed form for the ring itself and the shift rule for free modules are
implemented directly so they can serve as independent checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import GradingError, InputError, MregError, ZeroModuleError
from .grading import enumerate_bounded_region, positive_coarsening_candidates
from .localcoh import (
    AInvariants,
    a_invariants_ext,
    a_invariants_hochster,
    complex_from_squarefree_ideal,
    local_cohomology_piece_dimension,
)
from .poly import Multidegree, MultigradedRing
from .resolution import (
    ModulePresentation,
    betti_table,
    cached_minimal_resolution,
    coarsen_resolution,
    minimalize_presentation,
    regnum_lower_bound,
)


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@dataclass(frozen=True)
class CoarseningConstants:
    """The three integers controlling coarse vanishing and degree growth."""

    v: Multidegree
    c_v: int
    s_v: int
    sigma: int

    def to_json(self) -> dict:
        return {"v": list(self.v), "c": self.c_v, "s": self.s_v, "sigma": self.sigma}


def coarsening_constants(R: MultigradedRing, v) -> CoarseningConstants:
    """c_v = lcm of coarse variable degrees, sigma their sum, s_v the growth step."""
    v = tuple(int(x) for x in v)
    w = R.vdegs(v)
    if any(x < 1 for x in w):
        raise GradingError(f"{v} is not a positive coarsening vector (vdegs {w})")
    c = 1
    for x in w:
        c = _lcm(c, x)
    sigma = sum(w)
    s = max(R.n * c - sigma, c)
    return CoarseningConstants(v, c, s, sigma)


def regnum_ring(R: MultigradedRing, v) -> int:
    """(n-1) c_v + 1 - sigma, the closed-form regularity number of the ring."""
    cst = coarsening_constants(R, v)
    return (R.n - 1) * cst.c_v + 1 - cst.sigma


def regnum_free(shifts, R: MultigradedRing, v) -> int:
    """max over the shifts d of regnum_ring + d . v."""
    shifts = [tuple(s) for s in shifts]
    if not shifts:
        raise InputError("free module needs at least one generator")
    base = regnum_ring(R, v)
    v = tuple(v)
    return max(base + sum(a * b for a, b in zip(d, v)) for d in shifts)


def module_a_invariants(P: ModulePresentation, v, route: str = "ext") -> AInvariants:
    """a-invariants by the requested route ("ext" or "hochster")."""
    if route == "ext":
        return a_invariants_ext(P, v)
    if route == "hochster":
        K = _complex_of_quotient(P)
        return a_invariants_hochster(K, P.ring, v)
    raise InputError(f"unknown a-invariant route {route!r}")


def _complex_of_quotient(P: ModulePresentation):
    if len(P.shifts) != 1 or any(P.shifts[0]):
        raise InputError("Hochster route needs a cyclic quotient S/I")
    gens = [col[0] for col in P.relations]
    return complex_from_squarefree_ideal(P.ring, gens)


def regnum_module(P: ModulePresentation, v, route: str = "ext") -> int:
    """max_i of a^i - c_v (1 - i) + 1 over the finite a-invariants."""
    cst = coarsening_constants(P.ring, v)
    ai = module_a_invariants(P, v, route)
    finite = ai.finite_items()
    if not finite:
        raise ZeroModuleError(
            "all local cohomology vanishes; the module is zero or the engine is broken"
        )
    return max(a - cst.c_v * (1 - i) + 1 for i, a in finite)


def vreg_membership(P: ModulePresentation, v, p: int) -> bool:
    """Does p satisfy every coarse vanishing condition?

    For each i the progression p + c_v(1-i) + N c_v is checked against the
    graded pieces of local cohomology, truncated at a^i because everything
    above the a-invariant vanishes by definition.
    """
    cst = coarsening_constants(P.ring, v)
    ai = a_invariants_ext(P, v)
    for i, a in ai.finite_items():
        q = p + cst.c_v * (1 - i)
        while q <= a:
            if local_cohomology_piece_dimension(P, v, i, q) > 0:
                return False
            q += cst.c_v
    return True


def syzygy_degree_bound(regnum: int, constants: CoarseningConstants, i: int) -> int:
    """Upper bound regnum + i s_v + c_v - 1 for coarse i-th syzygy degrees."""
    if i < 0:
        raise InputError("homological index must be nonnegative")
    return regnum + i * constants.s_v + constants.c_v - 1


def minimal_generator_degrees(P: ModulePresentation) -> tuple[Multidegree, ...]:
    """Multidegrees of a minimal generating set of coker(P)."""
    return minimalize_presentation(P).shifts


@dataclass(frozen=True)
class DegreeBoundSet:
    """Finite set of multidegrees allowed for minimal i-th syzygies."""

    i: int
    v: Multidegree
    degrees: tuple[Multidegree, ...]
    bases: tuple[Multidegree, ...]
    bound: int

    def as_set(self) -> frozenset:
        return frozenset(self.degrees)

    def to_json(self) -> dict:
        return {
            "i": self.i,
            "v": list(self.v),
            "bound": self.bound,
            "bases": [list(b) for b in self.bases],
            "degrees": [list(d) for d in self.degrees],
        }


def degree_bound_set(P: ModulePresentation, v, i: int, bases=None) -> DegreeBoundSet:
    """Enumerate the bounded region landing the degree bound for level i.

    Bases default to the minimal generator degrees of the module, which
    support its Hilbert series inside finitely many semigroup translates.
    """
    v = tuple(v)
    cst = coarsening_constants(P.ring, v)
    bound = syzygy_degree_bound(regnum_module(P, v), cst, i)
    if bases is None:
        bases = minimal_generator_degrees(P)
    bases = tuple(tuple(b) for b in bases)
    region = enumerate_bounded_region(bases, P.ring.degrees, v, bound)
    return DegreeBoundSet(i, v, region.points(), bases, bound)


def intersect_degree_bounds(P: ModulePresentation, vectors, i: int) -> DegreeBoundSet:
    """Set intersection of the per-vector degree-bound sets."""
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        raise InputError("need at least one coarsening vector")
    sets = [degree_bound_set(P, v, i) for v in vectors]
    inter = set(sets[0].degrees)
    for s in sets[1:]:
        inter &= set(s.degrees)
    return DegreeBoundSet(
        i,
        vectors[0],
        tuple(sorted(inter)),
        sets[0].bases,
        max(s.bound for s in sets),
    )


def minimal_coarsening_set(P: ModulePresentation, candidates=None,
                           i_range=(0, 1, 2), box: int = 5) -> list[Multidegree]:
    """An irredundant subfamily realizing the full intersection of bound sets.

    Candidates default to the primitive positive coarsening vectors in the
    coordinate box.  Greedy elimination in decreasing lexicographic order:
    a vector is dropped whenever the remaining family still cuts out the
    same intersection for every homological index in i_range.  The result is
    minimal relative to the candidate family (dropping more vectors only
    enlarges intersections).
    """
    if candidates is None:
        candidates = positive_coarsening_candidates(P.ring.degrees, box)
    candidates = [tuple(v) for v in candidates]
    if not candidates:
        raise InputError("no candidate coarsening vectors")
    i_range = list(i_range)
    dsets = {
        v: {i: frozenset(degree_bound_set(P, v, i).degrees) for i in i_range}
        for v in candidates
    }

    def family_intersection(family, i):
        out = None
        for v in family:
            out = dsets[v][i] if out is None else out & dsets[v][i]
        return out

    target = {i: family_intersection(candidates, i) for i in i_range}
    kept = list(candidates)
    for v in sorted(candidates, reverse=True):
        trial = [u for u in kept if u != v]
        if trial and all(family_intersection(trial, i) == target[i] for i in i_range):
            kept = trial
    return sorted(kept)


@dataclass(frozen=True)
class ScalarCheckReport:
    """Both sides of the scalar-multiple laws, computed independently."""

    v: Multidegree
    d: int
    dv: Multidegree
    regnum_v: int
    regnum_dv: int
    regnum_identity_holds: bool
    set_comparisons: tuple  # (i, sets equal?) pairs

    def to_json(self) -> dict:
        return {
            "v": list(self.v),
            "d": self.d,
            "dv": list(self.dv),
            "regnum_v": self.regnum_v,
            "regnum_dv": self.regnum_dv,
            "regnum_identity_holds": self.regnum_identity_holds,
            "set_comparisons": [
                {"i": i, "equal": eq} for i, eq in self.set_comparisons
            ],
        }


def scalar_coarsening_report(P: ModulePresentation, v, d: int,
                             i_range=(0, 1, 2)) -> ScalarCheckReport:
    """Check regnum_{dv} = d regnum_v - d + 1 and the equality of bound sets."""
    if d < 1:
        raise InputError("scalar must be a positive integer")
    v = tuple(v)
    dv = tuple(d * x for x in v)
    rv = regnum_module(P, v)
    rdv = regnum_module(P, dv)
    comparisons = []
    for i in i_range:
        s_v = degree_bound_set(P, v, i).as_set()
        s_dv = degree_bound_set(P, dv, i).as_set()
        comparisons.append((i, s_v == s_dv))
    return ScalarCheckReport(
        v, d, dv, rv, rdv, rdv == d * rv - d + 1, tuple(comparisons)
    )


@dataclass(frozen=True)
class RegularityReport:
    """Everything the coarsening v says about one module."""

    constants: CoarseningConstants
    a_invariants: AInvariants
    regnum: int
    lower_bound: int
    bounds: tuple  # (i, degree bound) pairs

    def to_json(self) -> dict:
        out = self.constants.to_json()
        out["a_invariants"] = self.a_invariants.to_json()
        out["regnum"] = self.regnum
        out["lower_bound"] = self.lower_bound
        out["bounds"] = {str(i): b for i, b in self.bounds}
        return out


def regularity_report(P: ModulePresentation, v, i_max: int | None = None,
                      route: str = "ext") -> RegularityReport:
    v = tuple(v)
    cst = coarsening_constants(P.ring, v)
    ai = module_a_invariants(P, v, route)
    regnum = regnum_module(P, v, route)
    F = cached_minimal_resolution(P)
    lower = regnum_lower_bound(betti_table(coarsen_resolution(F, v)), cst.c_v, cst.s_v)
    if lower > regnum:
        raise MregError("resolution lower bound exceeds the regularity number")
    if i_max is None:
        i_max = F.length
    bounds = tuple((i, syzygy_degree_bound(regnum, cst, i)) for i in range(i_max + 1))
    return RegularityReport(cst, ai, regnum, lower, bounds)
