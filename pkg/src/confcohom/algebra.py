"""Exact integer arithmetic in configuration-space cohomology rings.

Two rings are modelled.  In one-copy mode, the cohomology of the ordered
configuration space of m+n points in R^d: one generator w(i,j) of degree d-1
for each pair i < j, subject to w(i,j)^2 = 0 and the three-term relations

    w(i,j)*w(i,k) - w(i,j)*w(j,k) + w(i,k)*w(j,k) = 0      (i < j < k).

In two-copy mode, the ring of the fibrewise product of two copies of the
bundle "forget the last n points": a second family wp(i,j) satisfying the
same relations, with wp(i,j) = w(i,j) whenever j <= m (the first m points
are shared).  That identification is structural: constructing a primed
generator with upper index <= m returns the plain one.

Generators have odd degree when d is even, so products are canonicalized by
permutation parity into (copy, upper index, lower index) order; for odd d
everything commutes.  Coefficients are arbitrary-precision integers, and no
floating point enters anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, NamedTuple

from .errors import ContextMismatchError, ParameterError

PLAIN = "w"
PRIMED = "wp"

ONE_COPY = "one-copy"
TWO_COPY = "two-copy"


class Generator(NamedTuple):
    """A degree d-1 generator w(i,j) (copy "w") or wp(i,j) (copy "wp")."""

    copy: str
    i: int
    j: int

    def key(self) -> tuple[str, int, int]:
        # Canonical total order: plain before primed ("w" < "wp"), then by
        # upper index, then by lower index.  Never rely on raw tuple order.
        return (self.copy, self.j, self.i)

    def __str__(self) -> str:
        return f"{self.copy}({self.i},{self.j})"


class Monomial(NamedTuple):
    """A product of distinct generators in canonical order (() is the unit)."""

    factors: tuple[Generator, ...]

    @property
    def step(self) -> int:
        """Number of factors; the cohomological degree is step * (d-1)."""
        return len(self.factors)

    def sort_key(self):
        return (len(self.factors), tuple(g.key() for g in self.factors))

    def __str__(self) -> str:
        return "*".join(str(g) for g in self.factors) if self.factors else "1"


ONE = Monomial(())


def canonical_factors(
    factors: Iterable[Generator], d_even: bool
) -> tuple[int, Monomial | None]:
    """Sort a factor list into canonical order, tracking the sign.

    Returns (sign, monomial), or (0, None) when a generator repeats (squares
    vanish; checked before sorting).  The sign is the permutation parity when
    d is even and +1 otherwise.
    """
    keys = [g.key() for g in factors]
    if len(set(keys)) != len(keys):
        return 0, None
    inversions = 0
    for a in range(len(keys)):
        ka = keys[a]
        for kb in keys[a + 1 :]:
            if ka > kb:
                inversions += 1
    sign = -1 if (d_even and inversions % 2) else 1
    ordered = tuple(sorted(factors, key=Generator.key))
    return sign, Monomial(ordered)


@dataclass(frozen=True)
class AlgebraContext:
    """Immutable ring parameters.

    m: shared points (obstacles), n: moving points (robots), d: ambient
    dimension, mode: TWO_COPY for the fibrewise product ring, ONE_COPY for
    the plain configuration space of m+n points.
    """

    m: int
    n: int
    d: int
    mode: str = TWO_COPY

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ParameterError(f"need m >= 1 and n >= 1, got m={self.m}, n={self.n}")
        if self.d < 2:
            raise ParameterError(f"need d >= 2, got d={self.d}")
        if self.mode not in (ONE_COPY, TWO_COPY):
            raise ParameterError(f"unknown mode {self.mode!r}")

    @property
    def points(self) -> int:
        return self.m + self.n

    @property
    def gen_degree(self) -> int:
        return self.d - 1

    @property
    def d_even(self) -> bool:
        return self.d % 2 == 0

    @property
    def top_step(self) -> int:
        # Top nonvanishing degree step: the rank generating function is
        # P_B * P_X^2 in two-copy mode (degree 2n+m-1) and P_E in one-copy
        # mode (degree m+n-1).
        if self.mode == TWO_COPY:
            return 2 * self.n + self.m - 1
        return self.m + self.n - 1

    @property
    def top_degree(self) -> int:
        return self.top_step * self.gen_degree

    def one_copy(self) -> "AlgebraContext":
        """The one-copy sibling ring (same m, n, d)."""
        return AlgebraContext(self.m, self.n, self.d, ONE_COPY)

    def generator(self, i: int, j: int, primed: bool = False) -> Generator:
        """The canonical generator; primed with j <= m collapses to plain."""
        if i >= j:
            raise ParameterError(f"generator needs i < j, got ({i},{j})")
        if i < 1 or j > self.points:
            raise ParameterError(
                f"generator indices out of range 1..{self.points}: ({i},{j})"
            )
        if primed:
            if self.mode == ONE_COPY:
                raise ParameterError("one-copy mode has no primed generators")
            if j > self.m:
                return Generator(PRIMED, i, j)
        return Generator(PLAIN, i, j)

    def generators(self) -> list[Generator]:
        """All generators in canonical order."""
        out = [
            Generator(PLAIN, i, j)
            for j in range(2, self.points + 1)
            for i in range(1, j)
        ]
        if self.mode == TWO_COPY:
            out.extend(
                Generator(PRIMED, i, j)
                for j in range(self.m + 1, self.points + 1)
                for i in range(1, j)
            )
        return out

    def zero(self) -> "Element":
        return Element(self, {})

    def one(self) -> "Element":
        return Element(self, {ONE: 1})

    def gen_element(self, i: int, j: int, primed: bool = False) -> "Element":
        """The generator as a ring element."""
        return Element(self, {Monomial((self.generator(i, j, primed),)): 1})

    def monomial_element(self, mono: Monomial) -> "Element":
        return Element(self, {mono: 1})


class Element:
    """An integer linear combination of monomials over a fixed context.

    Value type: arithmetic returns new elements, zero coefficients are never
    stored, equality is context + term-map equality.
    """

    __slots__ = ("ctx", "_terms")

    def __init__(self, ctx: AlgebraContext, terms: Mapping[Monomial, int] | None = None):
        self.ctx = ctx
        self._terms: dict[Monomial, int] = {}
        if terms:
            for mono, coeff in terms.items():
                if not isinstance(coeff, int):
                    raise ParameterError(f"coefficient {coeff!r} is not an integer")
                if coeff:
                    self._terms[mono] = coeff

    # -- inspection ---------------------------------------------------------

    def terms(self) -> list[tuple[Monomial, int]]:
        """Term list in canonical monomial order."""
        return sorted(self._terms.items(), key=lambda t: t[0].sort_key())

    def coefficient(self, mono: Monomial) -> int:
        return self._terms.get(mono, 0)

    def support(self) -> frozenset[Monomial]:
        return frozenset(self._terms)

    def steps(self) -> set[int]:
        """The set of degree steps appearing in this element."""
        return {mono.step for mono in self._terms}

    @property
    def is_homogeneous(self) -> bool:
        return len(self.steps()) <= 1

    def homogeneous_step(self) -> int | None:
        """The common degree step, or None for 0 (which sits in every degree)."""
        steps = self.steps()
        if not steps:
            return None
        if len(steps) > 1:
            raise ParameterError("element is not homogeneous")
        return steps.pop()

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self.terms())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.ctx == other.ctx and self._terms == other._terms

    def __str__(self) -> str:
        parts: list[str] = []
        for mono, coeff in self.terms():
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            if mono is ONE or not mono.factors:
                body = str(mag)
            elif mag == 1:
                body = str(mono)
            else:
                body = f"{mag}*{mono}"
            parts.append(f"{sign} {body}" if parts else (f"-{body}" if coeff < 0 else body))
        return " ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"Element({self.ctx.m},{self.ctx.n},{self.ctx.d},{self.ctx.mode}: {self})"

    # -- arithmetic ---------------------------------------------------------

    def _check_ctx(self, other: "Element") -> None:
        if self.ctx != other.ctx:
            raise ContextMismatchError(
                f"mixed contexts: {self.ctx} vs {other.ctx}"
            )

    def __add__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        self._check_ctx(other)
        out = dict(self._terms)
        for mono, coeff in other._terms.items():
            c = out.get(mono, 0) + coeff
            if c:
                out[mono] = c
            elif mono in out:
                del out[mono]
        return _raw_element(self.ctx, out)

    def __sub__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "Element":
        return _raw_element(self.ctx, {m: -c for m, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return self.ctx.zero()
            return _raw_element(self.ctx, {m: c * other for m, c in self._terms.items()})
        if not isinstance(other, Element):
            return NotImplemented
        self._check_ctx(other)
        d_even = self.ctx.d_even
        out: dict[Monomial, int] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                sign, mono = canonical_factors(ma.factors + mb.factors, d_even)
                if not sign:
                    continue
                c = out.get(mono, 0) + sign * ca * cb
                if c:
                    out[mono] = c
                elif mono in out:
                    del out[mono]
        return _raw_element(self.ctx, out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented


def _raw_element(ctx: AlgebraContext, terms: dict[Monomial, int]) -> Element:
    """Wrap an already-clean term dict without copying (internal)."""
    e = Element(ctx)
    e._terms = terms
    return e
