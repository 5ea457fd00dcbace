from fractions import Fraction

import pytest

from floorpoly.chains import ChainInput
from floorpoly.exceptions import SizeGuardError
from floorpoly.identity import ExpansionTerm, TermExpr, cancellation_certificate, chain_product, expand_cut_set


@pytest.mark.parametrize('n', range(1, 10))
def test_certificate_holds(n):
    certificate = cancellation_certificate(n)
    assert certificate.holds
    assert certificate.bare_group.coefficient == 1
    assert certificate.bare_group.cut_sets == {frozenset(range(n))}
    assert certificate.nonzero_residuals == []
    assert certificate.characterization_mismatches == []


def test_single_factor_certificate():
    certificate = cancellation_certificate(1)
    assert len(certificate) == 1
    assert certificate['x0'].coefficient == 1


def test_worked_example_cancels():
    certificate = cancellation_certificate(9)
    group = certificate[ExpansionTerm(9, [(2, 2), (6, 1), (7, 3)])]

    assert group.signs_by_cut_set() == {
        frozenset({1, 2, 4, 5, 6, 7}): -1,
        frozenset({1, 4, 5, 6, 7}): 1,
        frozenset({1, 2, 4, 5, 7}): 1,
        frozenset({1, 4, 5, 7}): -1,
    }
    assert group.coefficient == 0
    assert group.matches_characterization
    assert certificate['x1*fl(x2*fl(x3))*x4*x5*fl(x6)*fl(x7*fl(x8*fl(x0)))'] is group


def test_combined_term_cancels_against_its_pair():
    certificate = cancellation_certificate(3)
    group = certificate[ExpansionTerm(3, [(1, 2)])]
    assert group.signs_by_cut_set() == {frozenset({0}): 1, frozenset({0, 1}): -1}


def test_expand_cut_set_of_one_point():
    assert list(expand_cut_set((1,), 3)) == [(ExpansionTerm(3, [(2, 2)]), 1, TermExpr.COMBINED)]
    assert list(expand_cut_set((0,), 1)) == [(ExpansionTerm(1, []), 1, TermExpr.COMBINED)]


def test_expand_cut_set_of_two_points():
    expanded = list(expand_cut_set((0, 1), 2))
    assert expanded == [
        (ExpansionTerm(2, []), 1, TermExpr.SPLIT_FRACTIONAL),
        (ExpansionTerm(2, [(1, 1)]), -1, TermExpr.SPLIT_FRACTIONAL),
        (ExpansionTerm(2, [(0, 1)]), -1, TermExpr.SPLIT_FRACTIONAL),
        (ExpansionTerm(2, [(0, 1), (1, 1)]), 1, TermExpr.SPLIT_FRACTIONAL),
        (ExpansionTerm(2, [(0, 1), (1, 1)]), -1, TermExpr.SPLIT_FLOOR),
    ]


def test_printed_cubic_form_is_flagged():
    certificate = cancellation_certificate(3)
    assert len(certificate.notes) == 1
    assert 'fails (' in certificate.notes[0]
    assert "-x2*fl(x0*fl(x1))" in certificate.summary()


def test_summary_and_dict():
    certificate = cancellation_certificate(4)
    summary = certificate.summary()
    assert 'all residual coefficients zero' in summary
    assert 'cut sets match the predicted characterization' in summary

    document = certificate.to_dict()
    assert document['holds'] is True
    assert document['bare_coefficient'] == 1
    assert document['nonzero_residuals'] == []


@pytest.mark.parametrize('n', range(2, 7))
def test_expansion_evaluates_to_the_product(n, rational_vector):
    certificate = cancellation_certificate(n)
    for _ in range(50):
        chain = ChainInput(rational_vector(n, bound=1000))
        product = chain_product(chain)
        assert certificate.evaluate(chain) == product
        assert certificate.evaluate(chain, grouped=False) == product


def test_expansion_evaluates_with_any_bracket(half_integers):
    certificate = cancellation_certificate(3)
    chain = ChainInput(half_integers)
    assert certificate.evaluate(chain, bracket=lambda value: value / 3) == Fraction(105, 8)


@pytest.mark.parametrize('n', [0, 10])
def test_certificate_size_guard(n):
    with pytest.raises(SizeGuardError):
        cancellation_certificate(n)
