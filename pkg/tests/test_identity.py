import math

from fractions import Fraction

import pytest

from floorpoly.chains import ChainInput
from floorpoly.exact import AdaptiveReal
from floorpoly.exceptions import DomainError, SizeGuardError, UnresolvableFloorError
from floorpoly.identity import (ExpansionTerm, TermExpr, chain_product, cubic_identity, eval_identity,
                                generate_terms, render_chain, term_count, verify_arbitrary_bracket)
from floorpoly.tools import random_rational


class RandomBracket(object):
    """ A fixed but arbitrary map from rationals to rationals """
    def __init__(self, rng):
        self.rng = rng
        self.images = {}

    def __call__(self, value):
        if value not in self.images:
            self.images[value] = random_rational(self.rng, bound=50)
        return self.images[value]


def test_term_count_formula():
    assert [term_count(n) for n in range(1, 6)] == [1, 4, 11, 26, 57]
    for n in range(1, 21):
        assert term_count(n) == n + 2 * sum(math.comb(n, size) for size in range(2, n + 1))


@pytest.mark.parametrize('n', range(1, 13))
def test_generated_term_count(n):
    identity = generate_terms(n)
    assert len(identity) == term_count(n)
    assert len(identity.by_kind(TermExpr.COMBINED)) == n
    assert len(identity.by_kind(TermExpr.SPLIT_FLOOR)) == len(identity.by_kind(TermExpr.SPLIT_FRACTIONAL))


def test_render_one_factor():
    assert generate_terms(1).render() == 'x0'


def test_render_two_factors():
    assert generate_terms(2).render() == 'x0*fl(x1) + x1*fl(x0) - fl(x0)*fl(x1) + fr(x0)*fr(x1)'


def test_render_three_factors():
    assert generate_terms(3).rendered == [
        'x0*fl(x1*fl(x2))',
        'x1*fl(x2*fl(x0))',
        'x2*fl(x0*fl(x1))',
        '-fl(x0)*fl(x1*fl(x2))',
        '-fl(x0*fl(x1))*fl(x2)',
        '-fl(x1)*fl(x2*fl(x0))',
        'fl(x0)*fl(x1)*fl(x2)',
        'fr(x0)*fr(x1*fl(x2))',
        'fr(x0*fl(x1))*fr(x2)',
        'fr(x1)*fr(x2*fl(x0))',
        'fr(x0)*fr(x1)*fr(x2)',
    ]


def test_identity_lookup():
    identity = generate_terms(3)
    assert identity['-fl(x0*fl(x1))*fl(x2)'].cut_points == (0, 2)
    assert identity[0].kind == TermExpr.COMBINED
    with pytest.raises(KeyError):
        identity['x0*x1*x2']


def test_render_chain():
    assert render_chain(0, 3, 3) == 'x0*fl(x1*fl(x2))'
    assert render_chain(2, 4, 3) == 'x2*fl(x0)'


@pytest.mark.parametrize('n', [0, 21])
def test_generate_terms_size_guard(n):
    with pytest.raises(SizeGuardError):
        generate_terms(n)


def test_term_validation():
    with pytest.raises(DomainError):
        TermExpr(TermExpr.COMBINED, (0, 1), 3)
    with pytest.raises(DomainError):
        TermExpr(TermExpr.SPLIT_FLOOR, (1, 0), 3)
    with pytest.raises(DomainError):
        TermExpr('mixed', (0,), 3)


def test_eval_identity_examples(half_integers):
    assert eval_identity(half_integers[:2]) == Fraction(15, 4)
    assert eval_identity([Fraction(5, 2)] * 3) == Fraction(125, 8)
    assert eval_identity([Fraction(7, 3)]) == Fraction(7, 3)


def test_eval_identity_on_adaptive_entries():
    root = AdaptiveReal.nth_root(2, 2)
    value = eval_identity([root, root])
    assert isinstance(value, AdaptiveReal)
    assert 2 in value.enclosure(64)
    assert value.enclosure(64).width < Fraction(1, 2 ** 40)


def test_eval_identity_propagates_unresolvable_floor():
    root = AdaptiveReal.nth_root(2, 2)
    with pytest.raises(UnresolvableFloorError):
        eval_identity([root * root, Fraction(5, 2)], precision_cap=256)


@pytest.mark.parametrize('n', [1, 2, 3, 4, 5, 6, pytest.param(7, marks=pytest.mark.slow),
                               pytest.param(8, marks=pytest.mark.slow)])
def test_identity_is_exact(n, rational_vector):
    terms = generate_terms(n)
    for _ in range(1000):
        chain = ChainInput(rational_vector(n))
        assert eval_identity(chain, terms) == chain_product(chain)


@pytest.mark.parametrize('n', range(2, 7))
def test_identity_holds_for_any_bracket(n, rng, rational_vector):
    brackets = [lambda value: value, lambda value: 0, lambda value: round(value)]
    brackets += [RandomBracket(rng) for _ in range(100)]
    for bracket in brackets:
        assert verify_arbitrary_bracket(rational_vector(n, bound=100), bracket)


def test_eval_identity_rejects_mismatched_terms():
    with pytest.raises(SizeGuardError):
        eval_identity([Fraction(1, 2)] * 3, generate_terms(2))


def test_cubic_identity(rng):
    assert cubic_identity(Fraction(5, 2)) == Fraction(125, 8)
    terms = generate_terms(3)
    for _ in range(1000):
        x = random_rational(rng)
        assert cubic_identity(x) == x ** 3 == eval_identity(ChainInput.constant(x, 3), terms)


def test_expansion_term_render():
    term = ExpansionTerm(9, [(2, 2), (6, 1), (7, 3)])
    assert term.render() == 'x1*fl(x2*fl(x3))*x4*x5*fl(x6)*fl(x7*fl(x8*fl(x0)))'
    assert term.bare_positions == [1, 4, 5]
    assert ExpansionTerm(3, []).render() == 'x0*x1*x2'


def test_expansion_term_predicted_cut_sets():
    term = ExpansionTerm(9, [(2, 2), (6, 1), (7, 3)])
    assert term.predicted_cut_sets() == {
        frozenset({1, 2, 4, 5, 6, 7}),
        frozenset({1, 4, 5, 6, 7}),
        frozenset({1, 2, 4, 5, 7}),
        frozenset({1, 4, 5, 7}),
    }


def test_expansion_term_rejects_overlapping_blocks():
    with pytest.raises(DomainError):
        ExpansionTerm(4, [(0, 2), (1, 2)])
    with pytest.raises(DomainError):
        ExpansionTerm(4, [(0, 0)])
