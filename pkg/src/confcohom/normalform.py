"""Straightening onto the monomial basis, and the closed-form expansions.

A canonical monomial is *basic* iff its upper indices are pairwise distinct
within each copy.  The count of basic monomials per degree step is the
coefficient of the rank generating function P_B * P_X^2 (two-copy) or P_E
(one-copy), which is what the independent oracle verifies.

Reduction repeatedly rewrites the largest repeated upper index: for a < b < j
in one copy,

    w(a,j)*w(b,j) = w(a,b)*w(b,j) - w(a,b)*w(a,j),

spliced in place and re-canonicalized.  The multiset of upper indices drops
strictly at each rewrite, so the recursion terminates; results are memoized
per (context, monomial).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product
from typing import NamedTuple, Sequence

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
from .errors import ParameterError

SPACES = ("B", "E", "X", "EXBE")


def is_basis_monomial(ctx: AlgebraContext, mono: Monomial) -> bool:
    """True when upper indices are pairwise distinct within each copy."""
    for prev, cur in zip(mono.factors, mono.factors[1:]):
        if prev.copy == cur.copy and prev.j == cur.j:
            return False
    return True


def _rewrite_position(factors: tuple[Generator, ...]) -> int:
    """Index of the first factor of the pair to rewrite.

    Picks the largest repeated upper index (plain copy first on ties); within
    that run, the two smallest lower indices are the adjacent leading pair.
    """
    best, best_key = -1, (0, False)
    for pos in range(len(factors) - 1):
        a, b = factors[pos], factors[pos + 1]
        if a.copy == b.copy and a.j == b.j:
            # Later pairs of the same run compare equal, so the strict ">"
            # keeps the leading pair (the two smallest lower indices).
            key = (a.j, a.copy == PLAIN)
            if key > best_key:
                best, best_key = pos, key
    return best


@lru_cache(maxsize=None)
def _reduced(ctx: AlgebraContext, mono: Monomial) -> tuple[tuple[Monomial, int], ...]:
    """Basis expansion of a single monomial, as an immutable term tuple."""
    if is_basis_monomial(ctx, mono):
        return ((mono, 1),)
    factors = mono.factors
    pos = _rewrite_position(factors)
    a, b = factors[pos], factors[pos + 1]  # (copy, a.i, j), (copy, b.i, j), a.i < b.i
    low = ctx.generator(a.i, b.i, primed=(a.copy == PRIMED))
    out: dict[Monomial, int] = {}
    for kept, term_sign in ((b, 1), (a, -1)):
        spliced = factors[:pos] + (low, kept) + factors[pos + 2 :]
        sign, m2 = canonical_factors(spliced, ctx.d_even)
        if not sign:
            continue
        for m3, c3 in _reduced(ctx, m2):
            c = out.get(m3, 0) + term_sign * sign * c3
            if c:
                out[m3] = c
            elif m3 in out:
                del out[m3]
    return tuple(sorted(out.items(), key=lambda t: t[0].sort_key()))


def clear_caches() -> None:
    """Drop the monomial-reduction memo table."""
    _reduced.cache_clear()


def reduce_element(e: Element) -> Element:
    """Rewrite an element as a combination of basis monomials."""
    out: dict[Monomial, int] = {}
    for mono, coeff in e.terms():
        for m2, c2 in _reduced(e.ctx, mono):
            c = out.get(m2, 0) + coeff * c2
            if c:
                out[m2] = c
            elif m2 in out:
                del out[m2]
    return _raw_element(e.ctx, out)


class AdmissiblePair(NamedTuple):
    """An admissible lower-index sequence I for J, with d_I = #distinct(I)."""

    sequence: tuple[int, ...]
    distinct_count: int


def admissible_sequences(J: Sequence[int]) -> list[AdmissiblePair]:
    """All J-admissible sequences in lexicographic order.

    Base case I = J for length one; each extension appends either the
    previous entry or the new upper index, so there are 2^(len(J)-1) of them.
    """
    J = tuple(J)
    if not J:
        raise ParameterError("J must be nonempty")
    if any(a >= b for a, b in zip(J, J[1:])):
        raise ParameterError(f"J must be strictly increasing, got {J}")
    pairs: list[AdmissiblePair] = [AdmissiblePair((J[0],), 1)]
    for j_new in J[1:]:
        nxt: list[AdmissiblePair] = []
        for seq, dc in pairs:
            # seq[-1] <= old max < j_new, so both children stay nondecreasing
            # and lexicographic order is preserved.
            nxt.append(AdmissiblePair(seq + (seq[-1],), dc))
            nxt.append(AdmissiblePair(seq + (j_new,), dc + 1))
        pairs = nxt
    return pairs


def expand_constant_column(
    ctx: AlgebraContext, J: Sequence[int], r: int, primed: bool = False
) -> Element:
    """Basis expansion of the column product w(j1,r)*...*w(jl,r).

    Closed form: (-1)^l * sum over J-admissible I of (-1)^{d_I} times
    w(i1,j2)*w(i2,j3)*...*w(i_{l-1},jl)*w(il,r).  The terms land on distinct
    basis monomials; that is asserted, not assumed.
    """
    J = tuple(J)
    if not J:
        raise ParameterError("J must be nonempty")
    if any(a >= b for a, b in zip(J, J[1:])):
        raise ParameterError(f"J must be strictly increasing, got {J}")
    if r <= J[-1]:
        raise ParameterError(f"need r > max(J), got r={r}, J={J}")
    if r > ctx.points:
        raise ParameterError(f"r={r} out of range 1..{ctx.points}")
    if primed and ctx.mode == ONE_COPY:
        raise ParameterError("one-copy mode has no primed generators")
    uppers = J[1:] + (r,)
    length = len(J)
    out: dict[Monomial, int] = {}
    for seq, dc in admissible_sequences(J):
        factors = tuple(
            ctx.generator(i, u, primed) for i, u in zip(seq, uppers)
        )
        sign, mono = canonical_factors(factors, ctx.d_even)
        # Uppers strictly increase, so the factors are already canonical.
        assert sign == 1 and mono is not None, "column expansion lost canonical order"
        assert mono not in out, f"column expansion collided on {mono}"
        assert is_basis_monomial(ctx, mono), f"column expansion left the basis: {mono}"
        out[mono] = -1 if (length + dc) % 2 else 1
    return _raw_element(ctx, out)


def basis_monomials(ctx: AlgebraContext, step: int) -> list[Monomial]:
    """All basis monomials with the given number of factors, canonical order."""
    if step < 0:
        raise ParameterError(f"step must be >= 0, got {step}")
    plain_uppers = range(2, ctx.points + 1)
    primed_uppers = range(ctx.m + 1, ctx.points + 1) if ctx.mode == TWO_COPY else range(0)

    def copy_parts(copy: str, uppers: range, k: int) -> list[tuple[Generator, ...]]:
        parts: list[tuple[Generator, ...]] = []
        for chosen in combinations(uppers, k):
            for lows in product(*(range(1, u) for u in chosen)):
                parts.append(tuple(Generator(copy, i, u) for i, u in zip(lows, chosen)))
        return parts

    out: list[Monomial] = []
    for k in range(step + 1):
        plains = copy_parts(PLAIN, plain_uppers, k)
        if not plains:
            continue
        primes = copy_parts(PRIMED, primed_uppers, step - k)
        out.extend(Monomial(p + q) for p in plains for q in primes)
    out.sort(key=Monomial.sort_key)
    return out


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return out


def _poly_prod(linear_coeffs: Sequence[int]) -> list[int]:
    """Product of (1 + k*t) over the given k values, as a coefficient list."""
    out = [1]
    for k in linear_coeffs:
        out = _poly_mul(out, [1, k])
    return out


def poincare_polynomial(ctx: AlgebraContext, space: str) -> list[int]:
    """Betti numbers per degree step for B, E, X or the fibrewise square EXBE.

    B is the configuration space of the m shared points, E of all m+n points,
    X the fibre (n points avoiding m fixed ones); EXBE has P_B * P_X^2.  The
    cohomological degree of step s is s*(d-1).
    """
    m, n = ctx.m, ctx.n
    if space == "B":
        return _poly_prod(range(1, m))
    if space == "E":
        return _poly_prod(range(1, m + n))
    if space == "X":
        return _poly_prod(range(m, m + n))
    if space == "EXBE":
        px = _poly_prod(range(m, m + n))
        return _poly_mul(_poly_prod(range(1, m)), _poly_mul(px, px))
    raise ParameterError(f"unknown space {space!r}; expected one of {SPACES}")
