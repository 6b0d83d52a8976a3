"""Independent linear-algebra check of the claimed monomial bases.

Everything here recomputes ring invariants from scratch: a degree slice is
spanned by ALL squarefree canonical monomials (squares vanish structurally),
every three-term relation times every complementary squarefree monomial is
imposed as an integer row, and the quotient is measured by exact integer
elimination.  No straightening logic is reused, so agreement with
normalform.reduce_element is meaningful evidence.

Elimination keeps an echelon basis of the row lattice without ever dividing
a row (extended-gcd pivot combination only), so the pivot rows generate
exactly the lattice spanned by the relation rows.  When every pivot's
leading coefficient is a unit, the lattice is saturated: reducing any y with
k*y in the lattice uses integer multiples only, and a nonzero residue would
have its leading entry on a non-pivot column, which no lattice vector has.
Saturated means torsion-free quotient.  Otherwise the invariant factors of
the pivot rows are computed outright: unit entries peel off first and the
small residue goes through a dense Smith reduction.

Four spaces are modelled.  "E" is the one-copy ring on m+n points, "B" the
one-copy ring on the m shared points, "EXBE" the two-copy ring, and "X" the
fibre: the one-copy ring on m+n points with the extra rows w(i,j), j <= m,
killing the classes pulled back from the base.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb, gcd

from .algebra import (
    ONE_COPY,
    PLAIN,
    PRIMED,
    TWO_COPY,
    AlgebraContext,
    Element,
    Generator,
    Monomial,
    canonical_factors,
    _raw_element,
)
from .errors import OracleInconsistencyError, ParameterError, SizeCapExceeded

DEFAULT_CAP = 200_000

SPACES = ("B", "E", "X", "EXBE")


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, u, v) with u*a + v*b = g = gcd(a, b), g > 0."""
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


class IntegerEchelon:
    """Incremental echelon basis of an integer row lattice.

    Rows are sparse dicts {column: coefficient}.  add() reduces a row against
    the current pivots; a surviving row becomes a new pivot.  Replacements use
    unimodular 2x2 combinations, so the pivot rows always generate the same
    lattice as every row fed in.
    """

    def __init__(self):
        self.pivots: dict[int, dict[int, int]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def unit_pivots_only(self) -> bool:
        return all(abs(row[c]) == 1 for c, row in self.pivots.items())

    def add(self, row: dict[int, int]) -> int | None:
        """Insert a row (consumed); returns its pivot column or None."""
        pivots = self.pivots
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                pivots[c] = row
                return c
            a, b = piv[c], row[c]
            if b % a == 0:
                q = b // a
                for col, val in piv.items():
                    nv = row.get(col, 0) - q * val
                    if nv:
                        row[col] = nv
                    elif col in row:
                        del row[col]
            else:
                g, u, v = _xgcd(a, b)
                cols = set(piv) | set(row)
                new_piv: dict[int, int] = {}
                new_row: dict[int, int] = {}
                pa, rb = a // g, b // g
                for col in cols:
                    pv, rv = piv.get(col, 0), row.get(col, 0)
                    np_ = u * pv + v * rv
                    nr = pa * rv - rb * pv
                    if np_:
                        new_piv[col] = np_
                    if nr:
                        new_row[col] = nr
                pivots[c] = new_piv
                row = new_row
        return None


def _dense_invariant_factors(mat: list[list[int]]) -> list[int]:
    """Invariant factors of a small dense integer matrix (textbook Smith)."""
    mat = [row[:] for row in mat]
    rows, cols = len(mat), len(mat[0]) if mat else 0
    factors: list[int] = []
    top = 0
    while top < rows and top < cols:
        # locate the smallest nonzero entry and move it to (top, top)
        best = None
        for r in range(top, rows):
            for c in range(top, cols):
                v = mat[r][c]
                if v and (best is None or abs(v) < abs(best[2])):
                    best = (r, c, v)
        if best is None:
            break
        r, c, _ = best
        mat[top], mat[r] = mat[r], mat[top]
        for rr in range(rows):
            mat[rr][top], mat[rr][c] = mat[rr][c], mat[rr][top]
        pivot = mat[top][top]
        dirty = False
        for r in range(top + 1, rows):
            if mat[r][top]:
                q = mat[r][top] // pivot
                mat[r] = [x - q * y for x, y in zip(mat[r], mat[top])]
                if mat[r][top]:
                    dirty = True
        for c in range(top + 1, cols):
            if mat[top][c]:
                q = mat[top][c] // pivot
                for rr in range(rows):
                    mat[rr][c] -= q * mat[rr][top]
                if mat[top][c]:
                    dirty = True
        if dirty:
            continue  # remainders left; pick a smaller pivot next sweep
        factors.append(abs(pivot))
        top += 1
    # enforce the divisibility chain d1 | d2 | ...
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            a, b = factors[i], factors[j]
            g = gcd(a, b)
            factors[i], factors[j] = g, a * b // g
    return factors


def _invariant_factors_sparse(pivot_rows: list[dict[int, int]]) -> list[int]:
    """Invariant factors of the lattice generated by the given rows.

    Unit entries peel off one by one (each contributes a factor 1); whatever
    is left is small and handled densely.
    """
    rows: dict[int, dict[int, int]] = {i: dict(r) for i, r in enumerate(pivot_rows)}
    col_rows: dict[int, set[int]] = {}
    for rid, row in rows.items():
        for c in row:
            col_rows.setdefault(c, set()).add(rid)
    ones = 0
    while True:
        pick = None
        pick_fill = None
        for rid, row in rows.items():
            for c, v in row.items():
                if v == 1 or v == -1:
                    fill = (len(row) - 1) * (len(col_rows[c]) - 1)
                    if pick_fill is None or fill < pick_fill:
                        pick, pick_fill = (rid, c, v), fill
                        if fill == 0:
                            break
            if pick_fill == 0:
                break
        if pick is None:
            break
        rid, c, v = pick
        row = rows.pop(rid)
        for col in row:
            col_rows[col].discard(rid)
        for other in list(col_rows.get(c, ())):
            orow = rows[other]
            factor = orow[c] * v  # v in {1,-1} is its own inverse
            for col, val in row.items():
                nv = orow.get(col, 0) - factor * val
                if nv:
                    if col not in orow:
                        col_rows.setdefault(col, set()).add(other)
                    orow[col] = nv
                elif col in orow:
                    del orow[col]
                    col_rows[col].discard(other)
        ones += 1
    factors = [1] * ones
    if rows:
        live_cols = sorted({c for row in rows.values() for c in row})
        col_pos = {c: k for k, c in enumerate(live_cols)}
        dense = []
        for row in rows.values():
            line = [0] * len(live_cols)
            for c, val in row.items():
                line[col_pos[c]] = val
            dense.append(line)
        factors.extend(_dense_invariant_factors(dense))
    return factors


# -- ring models --------------------------------------------------------------

RelationTerm = tuple[tuple[Generator, ...], int]
Relation = tuple[RelationTerm, ...]


def _norm(copy: str, i: int, j: int, m: int) -> Generator:
    if copy == PRIMED and j > m:
        return Generator(PRIMED, i, j)
    return Generator(PLAIN, i, j)


@lru_cache(maxsize=None)
def _ring_model(space: str, m: int, n: int) -> tuple[tuple[Generator, ...], Relation]:
    """Generators (canonical order) and relations of a space's ring model."""
    if space not in SPACES:
        raise ParameterError(f"unknown space {space!r}; expected one of {SPACES}")
    points = m if space == "B" else m + n
    copies = (PLAIN, PRIMED) if space == "EXBE" else (PLAIN,)
    gens = [
        Generator(PLAIN, i, j) for j in range(2, points + 1) for i in range(1, j)
    ]
    if space == "EXBE":
        gens.extend(
            Generator(PRIMED, i, j)
            for j in range(m + 1, points + 1)
            for i in range(1, j)
        )
    relations: list[Relation] = []
    for i, j, k in combinations(range(1, points + 1), 3):
        for copy in copies:
            if copy == PRIMED and k <= m:
                continue  # normalizes to the plain triple
            gij, gik, gjk = _norm(copy, i, j, m), _norm(copy, i, k, m), _norm(copy, j, k, m)
            relations.append((((gij, gik), 1), ((gij, gjk), -1), ((gik, gjk), 1)))
    if space == "X":
        # the ideal generated by the classes pulled back from the base
        relations.extend(
            (((Generator(PLAIN, i, j),), 1),)
            for j in range(2, m + 1)
            for i in range(1, j)
        )
    return tuple(gens), tuple(relations)


def _space_top_step(space: str, m: int, n: int) -> int:
    return {"B": m - 1, "E": m + n - 1, "X": n, "EXBE": 2 * n + m - 1}[space]


def _candidate_test(space: str, m: int):
    """Predicate: is this squarefree monomial a claimed basis monomial?"""

    def distinct_uppers(mono: Monomial) -> bool:
        for prev, cur in zip(mono.factors, mono.factors[1:]):
            if prev.copy == cur.copy and prev.j == cur.j:
                return False
        return True

    if space == "X":
        # fibre basis: distinct uppers, none of them among the shared points
        return lambda mono: distinct_uppers(mono) and all(
            g.j > m for g in mono.factors
        )
    return distinct_uppers


@dataclass(frozen=True)
class DegreeSlice:
    """One exactly-eliminated degree of a space's ring model."""

    space: str
    m: int
    n: int
    d_even: bool
    step: int
    spanning: tuple[Monomial, ...]  # column order: non-candidates, then candidates
    col_of: dict[Monomial, int]
    n_noncand: int
    pivots: dict[int, dict[int, int]]
    rank: int
    invariant_factors_nontrivial: tuple[int, ...]
    pivot_on_candidate: bool

    @property
    def ncols(self) -> int:
        return len(self.spanning)

    @property
    def dimension(self) -> int:
        return self.ncols - self.rank

    @property
    def candidate_count(self) -> int:
        return self.ncols - self.n_noncand

    @property
    def torsion_free(self) -> bool:
        return not self.invariant_factors_nontrivial

    @property
    def basis_match(self) -> bool:
        return (not self.pivot_on_candidate) and self.dimension == self.candidate_count


@lru_cache(maxsize=None)
def _build_slice(space: str, m: int, n: int, d_even: bool, step: int) -> DegreeSlice:
    gens, relations = _ring_model(space, m, n)
    is_candidate = _candidate_test(space, m)
    noncand: list[Monomial] = []
    cand: list[Monomial] = []
    for factors in combinations(gens, step):
        mono = Monomial(factors)
        (cand if is_candidate(mono) else noncand).append(mono)
    spanning = tuple(noncand + cand)
    col_of = {mono: c for c, mono in enumerate(spanning)}
    n_noncand = len(noncand)

    ech = IntegerEchelon()
    for relation in relations:
        rel_step = len(relation[0][0])
        if step < rel_step:
            continue
        for comp in combinations(gens, step - rel_step):
            row: dict[int, int] = {}
            for factors, rc in relation:
                sign, mono = canonical_factors(factors + comp, d_even)
                if not sign:
                    continue
                col = col_of[mono]
                v = row.get(col, 0) + rc * sign
                if v:
                    row[col] = v
                elif col in row:
                    del row[col]
            if row:
                ech.add(row)

    if ech.unit_pivots_only():
        nontrivial: tuple[int, ...] = ()
    else:
        factors = _invariant_factors_sparse(list(ech.pivots.values()))
        nontrivial = tuple(f for f in factors if f != 1)
    pivot_on_candidate = any(c >= n_noncand for c in ech.pivots)
    return DegreeSlice(
        space=space,
        m=m,
        n=n,
        d_even=d_even,
        step=step,
        spanning=spanning,
        col_of=col_of,
        n_noncand=n_noncand,
        pivots=ech.pivots,
        rank=ech.rank,
        invariant_factors_nontrivial=nontrivial,
        pivot_on_candidate=pivot_on_candidate,
    )


def slice_for(
    space: str, m: int, n: int, d: int, step: int, cap: int = DEFAULT_CAP
) -> DegreeSlice:
    """The eliminated degree slice, subject to the spanning-set size cap."""
    gens, _ = _ring_model(space, m, n)
    size = comb(len(gens), step)
    if size > cap:
        raise SizeCapExceeded(
            f"{space} (m={m}, n={n}) step {step} spans {size} monomials, cap is {cap}"
        )
    return _build_slice(space, m, n, d % 2 == 0, step)


def feasible_max_step(space: str, m: int, n: int, cap: int = DEFAULT_CAP) -> int:
    """Largest step S <= top such that every step <= S fits under the cap."""
    gens, _ = _ring_model(space, m, n)
    g = len(gens)
    top = _space_top_step(space, m, n)
    s = -1
    while s < top and comb(g, s + 1) <= cap:
        s += 1
    return s


# -- reports ------------------------------------------------------------------


@dataclass(frozen=True)
class StepReport:
    step: int
    spanning: int
    rank: int
    dimension: int
    basis_count: int
    basis_match: bool
    torsion_free: bool
    nontrivial_factors: tuple[int, ...] = ()

    @property
    def ok(self) -> bool:
        return self.basis_match and self.torsion_free


@dataclass(frozen=True)
class OracleReport:
    space: str
    m: int
    n: int
    d: int
    steps: tuple[StepReport, ...]

    @property
    def dimensions(self) -> list[int]:
        return [s.dimension for s in self.steps]

    @property
    def ok(self) -> bool:
        return all(s.ok for s in self.steps)

    @property
    def first_failure(self) -> int | None:
        for s in self.steps:
            if not s.ok:
                return s.step
        return None

    def to_obj(self) -> dict:
        return {
            "space": self.space,
            "m": self.m,
            "n": self.n,
            "d": self.d,
            "ok": self.ok,
            "steps": [
                {
                    "step": s.step,
                    "spanning": s.spanning,
                    "rank": s.rank,
                    "dimension": s.dimension,
                    "basis_count": s.basis_count,
                    "basis_match": s.basis_match,
                    "torsion_free": s.torsion_free,
                    "nontrivial_factors": list(s.nontrivial_factors),
                }
                for s in self.steps
            ],
        }


def space_dimensions(
    m: int,
    n: int,
    d: int,
    space: str,
    max_step: int | None = None,
    cap: int = DEFAULT_CAP,
) -> OracleReport:
    """Oracle dimensions of one space, steps 0..max_step (default: top)."""
    if m < 1 or n < 1 or d < 2:
        raise ParameterError(f"need m, n >= 1 and d >= 2, got m={m}, n={n}, d={d}")
    if max_step is None:
        max_step = _space_top_step(space, m, n)
    steps = []
    for step in range(max_step + 1):
        sl = slice_for(space, m, n, d, step, cap)
        steps.append(
            StepReport(
                step=step,
                spanning=sl.ncols,
                rank=sl.rank,
                dimension=sl.dimension,
                basis_count=sl.candidate_count,
                basis_match=sl.basis_match,
                torsion_free=sl.torsion_free,
                nontrivial_factors=sl.invariant_factors_nontrivial,
            )
        )
    return OracleReport(space=space, m=m, n=n, d=d, steps=tuple(steps))


def _ctx_space(ctx: AlgebraContext) -> str:
    return "EXBE" if ctx.mode == TWO_COPY else "E"


def oracle_dimensions(
    ctx: AlgebraContext, max_step: int | None = None, cap: int = DEFAULT_CAP
) -> OracleReport:
    """Oracle dimensions of the context's own ring."""
    return space_dimensions(ctx.m, ctx.n, ctx.d, _ctx_space(ctx), max_step, cap)


def verify_basis(
    ctx: AlgebraContext, max_step: int | None = None, cap: int = DEFAULT_CAP
) -> OracleReport:
    """Check the claimed basis degree by degree; report.ok is the verdict."""
    return oracle_dimensions(ctx, max_step, cap)


def oracle_project(e: Element, cap: int = DEFAULT_CAP) -> Element:
    """Project an element onto the candidate basis using only the oracle.

    Reduction against the echelon tracks an explicit denominator; anything
    non-integral, or any residue outside the candidate columns, contradicts
    the basis claim and raises OracleInconsistencyError.
    """
    ctx = e.ctx
    if not e:
        return e
    step = e.homogeneous_step()
    sl = slice_for(_ctx_space(ctx), ctx.m, ctx.n, ctx.d, step, cap)
    v: dict[int, int] = {}
    for mono, coeff in e.terms():
        col = sl.col_of.get(mono)
        if col is None:
            raise ParameterError(f"monomial {mono} is not in the oracle span")
        v[col] = coeff
    den = 1
    while True:
        pcols = [c for c in v if c in sl.pivots]
        if not pcols:
            break
        c = min(pcols)  # pivot tails only touch larger columns, so this advances
        piv = sl.pivots[c]
        a, b = piv[c], v[c]
        if b % a == 0:
            q = b // a
            for col, val in piv.items():
                nv = v.get(col, 0) - q * val
                if nv:
                    v[col] = nv
                elif col in v:
                    del v[col]
        else:
            den *= a
            nv: dict[int, int] = {}
            for col in set(v) | set(piv):
                x = a * v.get(col, 0) - b * piv.get(col, 0)
                if x:
                    nv[col] = x
            v = nv
            g = abs(den)
            for x in v.values():
                g = gcd(g, x)
                if g == 1:
                    break
            if g > 1:
                den //= g
                v = {col: x // g for col, x in v.items()}
    if den < 0:
        den = -den
        v = {col: -x for col, x in v.items()}
    if den != 1:
        raise OracleInconsistencyError(
            f"projection of {e} has denominator {den}: the relation lattice "
            "is not saturated where the basis claims it is"
        )
    bad = sorted(c for c in v if c < sl.n_noncand)
    if bad:
        culprit = sl.spanning[bad[0]]
        raise OracleInconsistencyError(
            f"residue of {e} touches non-basis column {culprit}: the claimed "
            "basis does not span this degree"
        )
    return _raw_element(ctx, {sl.spanning[c]: x for c, x in v.items()})


def clear_caches() -> None:
    """Drop memoized slices and ring models (frees elimination memory)."""
    _build_slice.cache_clear()
    _ring_model.cache_clear()


def sample_element(
    ctx: AlgebraContext,
    step: int,
    rng: random.Random,
    max_terms: int = 4,
    coeff_bound: int = 9,
) -> Element:
    """A random homogeneous element: a few squarefree monomials, small coeffs."""
    gens, _ = _ring_model(_ctx_space(ctx), ctx.m, ctx.n)
    if step > len(gens):
        raise ParameterError(f"step {step} exceeds the generator count {len(gens)}")
    terms: dict[Monomial, int] = {}
    for _ in range(rng.randint(1, max_terms)):
        factors = tuple(sorted(rng.sample(gens, step), key=Generator.key))
        coeff = rng.choice([c for c in range(-coeff_bound, coeff_bound + 1) if c])
        mono = Monomial(factors)
        terms[mono] = terms.get(mono, 0) + coeff
    return Element(ctx, terms)
