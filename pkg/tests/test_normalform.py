"""Straightening, admissible sequences, column expansions, Betti numbers."""

import random
from math import comb

import pytest

from confcohom import (
    AlgebraContext,
    Monomial,
    ParameterError,
    admissible_sequences,
    basis_monomials,
    expand_constant_column,
    is_basis_monomial,
    poincare_polynomial,
    reduce_element,
)
from confcohom.oracle import sample_element


def _mono(ctx, *pairs):
    """Monomial from (i, j) or (i, j, 'wp') factor specs (canonical input)."""
    return Monomial(
        tuple(ctx.generator(p[0], p[1], primed=(len(p) > 2)) for p in pairs)
    )


def test_basis_characterization():
    ctx = AlgebraContext(2, 2, 2)
    assert is_basis_monomial(ctx, _mono(ctx))
    assert is_basis_monomial(ctx, _mono(ctx, (1, 3), (2, 4)))
    # repeated upper index within one copy is not basic
    assert not is_basis_monomial(ctx, _mono(ctx, (1, 3), (2, 3)))
    # the same upper index across the two copies is fine
    assert is_basis_monomial(ctx, _mono(ctx, (1, 3), (2, 3, "wp")))
    assert not is_basis_monomial(ctx, _mono(ctx, (1, 3, "wp"), (2, 3, "wp")))


def test_reduce_three_term_example():
    # w(1,3)*w(2,3) = w(1,2)*w(2,3) - w(1,2)*w(1,3)
    ctx = AlgebraContext(2, 1, 2)
    e = reduce_element(ctx.gen_element(1, 3) * ctx.gen_element(2, 3))
    w12, w13, w23 = ctx.gen_element(1, 2), ctx.gen_element(1, 3), ctx.gen_element(2, 3)
    assert e == w12 * w23 - w12 * w13


def test_reduce_fixes_basis_elements_and_is_idempotent():
    rng = random.Random(99)
    for d in (2, 3):
        ctx = AlgebraContext(2, 2, d)
        for _ in range(50):
            e = sample_element(ctx, rng.randint(0, 4), rng)
            r = reduce_element(e)
            assert reduce_element(r) == r
            assert all(is_basis_monomial(ctx, mono) for mono, _ in r.terms())


def test_reduce_respects_products():
    rng = random.Random(4242)
    ctx = AlgebraContext(2, 2, 2)
    for _ in range(40):
        a = sample_element(ctx, rng.randint(0, 2), rng)
        b = sample_element(ctx, rng.randint(0, 2), rng)
        assert reduce_element(a * b) == reduce_element(reduce_element(a) * reduce_element(b))


def test_reduce_kills_overfull_degrees():
    # more factors than the top step must collapse to zero
    ctx = AlgebraContext(2, 1, 2)
    gens = ctx.generators()
    product = ctx.one()
    for g in gens[:4]:
        product = product * ctx.monomial_element(Monomial((g,)))
    assert product.homogeneous_step() == ctx.top_step + 1
    assert not reduce_element(product)


def test_admissible_count_and_order():
    for J in [(2,), (1, 4), (2, 5, 6), (1, 2, 3, 4, 5)]:
        pairs = admissible_sequences(J)
        assert len(pairs) == 2 ** (len(J) - 1)
        seqs = [p.sequence for p in pairs]
        assert seqs == sorted(seqs)
        assert len(set(seqs)) == len(seqs)
        for seq, dc in pairs:
            assert seq[0] == J[0]
            assert all(a <= b for a, b in zip(seq, seq[1:]))
            assert all(i <= j for i, j in zip(seq, J))
            assert dc == len(set(seq))


def test_admissible_worked_example():
    pairs = admissible_sequences((2, 5, 6))
    assert [p.sequence for p in pairs] == [(2, 2, 2), (2, 2, 6), (2, 5, 5), (2, 5, 6)]
    assert [p.distinct_count for p in pairs] == [1, 2, 2, 3]


def test_admissible_validation():
    with pytest.raises(ParameterError):
        admissible_sequences(())
    with pytest.raises(ParameterError):
        admissible_sequences((2, 2))
    with pytest.raises(ParameterError):
        admissible_sequences((3, 1))


def test_expand_worked_example():
    ctx = AlgebraContext(2, 1, 2)
    e = expand_constant_column(ctx, (1, 2), 3)
    w12, w13, w23 = ctx.gen_element(1, 2), ctx.gen_element(1, 3), ctx.gen_element(2, 3)
    assert e == w12 * w23 - w12 * w13


def test_expand_matches_direct_reduction():
    # every J, r, copy, small contexts, both parities
    for m, n in [(2, 2), (1, 3), (3, 1)]:
        for d in (2, 3):
            ctx = AlgebraContext(m, n, d)
            points = ctx.points
            for r in range(2, points + 1):
                for mask in range(1, 2 ** (r - 1)):
                    J = tuple(j for j in range(1, r) if mask & (1 << (j - 1)))
                    for primed in (False, True):
                        expansion = expand_constant_column(ctx, J, r, primed)
                        direct = ctx.one()
                        for j in J:
                            direct = direct * ctx.gen_element(j, r, primed)
                        assert expansion == reduce_element(direct), (m, n, d, J, r, primed)


def test_expand_validation():
    ctx = AlgebraContext(2, 1, 2)
    with pytest.raises(ParameterError):
        expand_constant_column(ctx, (), 3)
    with pytest.raises(ParameterError):
        expand_constant_column(ctx, (2, 1), 3)
    with pytest.raises(ParameterError):
        expand_constant_column(ctx, (1, 3), 3)
    with pytest.raises(ParameterError):
        expand_constant_column(ctx, (1, 2), 4)
    with pytest.raises(ParameterError):
        expand_constant_column(ctx.one_copy(), (1,), 3, primed=True)


def test_poincare_small_cases():
    ctx = AlgebraContext(2, 1, 2)
    assert poincare_polynomial(ctx, "B") == [1, 1]
    assert poincare_polynomial(ctx, "E") == [1, 3, 2]
    assert poincare_polynomial(ctx, "X") == [1, 2]
    assert poincare_polynomial(ctx, "EXBE") == [1, 5, 8, 4]
    with pytest.raises(ParameterError):
        poincare_polynomial(ctx, "Y")


def test_poincare_product_structure():
    for m in range(1, 5):
        for n in range(1, 5):
            ctx = AlgebraContext(m, n, 2)
            pb = poincare_polynomial(ctx, "B")
            px = poincare_polynomial(ctx, "X")
            pe = poincare_polynomial(ctx, "E")
            pexbe = poincare_polynomial(ctx, "EXBE")
            # total ranks multiply: |E| = |B|*|X|, |EXBE| = |B|*|X|^2
            assert sum(pe) == sum(pb) * sum(px)
            assert sum(pexbe) == sum(pb) * sum(px) ** 2
            assert len(pexbe) - 1 == 2 * n + m - 1
            assert len(pe) - 1 == m + n - 1
            assert len(px) - 1 == n
            assert len(pb) - 1 == m - 1


def test_basis_counts_match_poincare():
    for m, n in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (1, 3)]:
        ctx = AlgebraContext(m, n, 2)
        coeffs = poincare_polynomial(ctx, "EXBE")
        for step in range(len(coeffs) + 2):
            expected = coeffs[step] if step < len(coeffs) else 0
            assert len(basis_monomials(ctx, step)) == expected, (m, n, step)
        one = ctx.one_copy()
        ecoeffs = poincare_polynomial(ctx, "E")
        for step in range(len(ecoeffs) + 2):
            expected = ecoeffs[step] if step < len(ecoeffs) else 0
            assert len(basis_monomials(one, step)) == expected, (m, n, step)


def test_basis_monomials_are_basic_sorted_unique():
    ctx = AlgebraContext(2, 2, 2)
    for step in range(0, 6):
        monos = basis_monomials(ctx, step)
        keys = [mo.sort_key() for mo in monos]
        assert keys == sorted(keys)
        assert len(set(monos)) == len(monos)
        assert all(is_basis_monomial(ctx, mo) for mo in monos)
        assert all(mo.step == step for mo in monos)
