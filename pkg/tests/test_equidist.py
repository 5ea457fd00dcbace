import json
import math

from fractions import Fraction

import numpy as np
import pytest

from floorpoly.config import DEFAULTS
from floorpoly.equidist import (CONSISTENT_NONUNIFORM, CONSISTENT_UNIFORM, HYPOTHESIS_UNVERIFIED, INCONCLUSIVE,
                                OUTSIDE_HYPOTHESIS, PILOT_REFERENCES, SCHEMA_VERSION, WITHIN_HYPOTHESIS, AlphaSpec,
                                DistributionReport, GeneratedSequence, PilotThresholds, SequenceSpec,
                                certified_fraction, check_unresolved, corollary_experiment, derive_thresholds,
                                expected_chain_behaviour, generate, histogram, hypothesis_label, k2_closed_form_check,
                                pilot_thresholds, rational_power_scaling_check, report_document, star_discrepancy,
                                trend_verdict, weyl_sums, write_csv, write_json)
from floorpoly.exceptions import AlphaFormatError, DomainError, ExcessiveUnresolvedError

GOLDEN = (1 + math.sqrt(5)) / 2


@pytest.mark.parametrize('literal, expected', [
    ('rat:3', 3.0),
    ('rat:7/2', 3.5),
    ('rat:-1/4', -0.25),
    ('root:2,3', 2 ** (1 / 3)),
    ('root:9/4,2', 1.5),
    ('pi', math.pi),
])
def test_alpha_spec_parsing(literal, expected):
    alpha = AlphaSpec(literal)
    assert float(alpha()) == pytest.approx(expected, rel=1e-15)
    assert str(alpha) == literal
    assert alpha.to_json() == {'alpha': literal}


@pytest.mark.parametrize('literal', ['root:2', 'e', 'rat:1/0', 'root:2,0', 'rat:0.5', '', 'pi:3'])
def test_alpha_spec_rejects_bad_literals(literal):
    with pytest.raises(AlphaFormatError):
        AlphaSpec(literal)


def test_alpha_spec_rational_powers():
    assert AlphaSpec('root:2,3').power_is_rational(3) is True
    assert AlphaSpec('root:2,3').power_is_rational(2) is False
    assert AlphaSpec('pi').power_is_rational(2) is False
    assert AlphaSpec('rat:3/2').power_is_rational(5) is True


def test_sequence_spec_validation():
    assert SequenceSpec('nested-alpha', ['rat:1/2', 'rat:3', 'pi'], N=10).k == 3
    assert SequenceSpec('floored-product', ['rat:1', 'root:2,2'], N=10).k == 1
    with pytest.raises(DomainError):
        SequenceSpec('spiral', ['pi'], N=10)
    with pytest.raises(DomainError):
        SequenceSpec('power-chain', ['pi'], k=0, N=10)
    with pytest.raises(DomainError):
        SequenceSpec('power-chain', ['pi'], k=2, N=0)
    with pytest.raises(DomainError):
        SequenceSpec('power-chain', ['pi', 'rat:2'], k=2, N=10)
    with pytest.raises(DomainError):
        SequenceSpec('nested-alpha', ['rat:-1', 'pi'], N=10)
    with pytest.raises(AlphaFormatError):
        SequenceSpec('power-chain', ['tau'], k=2, N=10)


def test_rational_chain_is_zero_mod_one():
    sequence = generate(SequenceSpec('power-chain', ['rat:3'], k=2, N=100))
    assert len(sequence) == 100
    assert sequence.unresolved_count == 0
    assert np.all(sequence.values == 0)


def test_floored_product_of_ones_is_zero():
    sequence = generate(SequenceSpec('floored-product', ['rat:1', 'rat:1', 'rat:1'], N=50))
    assert np.all(sequence.values == 0)


def test_nested_alpha_values():
    sequence = generate(SequenceSpec('nested-alpha', ['rat:1/2', 'rat:3'], N=4))
    assert list(sequence.values) == [0.5, 0.0, 0.5, 0.0]


def test_theorem_combination_first_value():
    spec = SequenceSpec('theorem-combination', ['root:2,2'], k=2, N=1)
    enclosure = certified_fraction(spec, 1)
    assert enclosure.width <= Fraction(1, 2 ** 53)
    assert float(enclosure.lo) == pytest.approx(3 - 2 * math.sqrt(2), abs=1e-15)


@pytest.mark.parametrize('alpha', ['pi', 'root:2,2', 'rat:7/3'])
def test_theorem_combination_of_depth_one_vanishes(alpha):
    sequence = generate(SequenceSpec('theorem-combination', [alpha], k=1, m=3, N=20))
    assert sequence.unresolved_count == 0
    assert list(sequence.values) == [0.0] * 20


def test_generation_is_deterministic_across_jobs():
    spec = SequenceSpec('power-chain', ['root:2,3'], k=3, N=3000)
    serial = generate(spec, jobs=1)
    parallel = generate(spec, jobs=2)
    assert np.array_equal(serial.values, parallel.values)
    assert np.array_equal(serial.indices, parallel.indices)
    assert serial.unresolved == parallel.unresolved


def test_star_discrepancy_examples():
    count = 100
    assert star_discrepancy([i / count for i in range(count)]) == pytest.approx(1 / count)
    assert star_discrepancy([0.0] * 10) == 1
    assert star_discrepancy([(n * GOLDEN) % 1 for n in range(1, 1001)]) < 0.01


def test_star_discrepancy_rejects_bad_points():
    with pytest.raises(DomainError):
        star_discrepancy([])
    with pytest.raises(DomainError):
        star_discrepancy([0.5, 1.0])
    with pytest.raises(DomainError):
        star_discrepancy([-0.1])


def test_weyl_sums_examples():
    count = 64
    assert max(weyl_sums([i / count for i in range(count)], H=8)) < 1e-12
    assert weyl_sums([0.0] * 10, H=3) == [1.0, 1.0, 1.0]
    assert weyl_sums([(n * GOLDEN) % 1 for n in range(1, 10_001)], H=1)[0] < 0.01
    with pytest.raises(DomainError):
        weyl_sums([0.5], H=0)


def test_histogram():
    assert histogram([0.05, 0.15, 0.15, 0.95], bins=10) == [1, 2, 0, 0, 0, 0, 0, 0, 0, 1]


@pytest.mark.parametrize('discrepancy, tenth, expected', [
    (0.003, 0.009, CONSISTENT_UNIFORM),
    (0.012, 0.03, INCONCLUSIVE),
    (0.009, 0.008, INCONCLUSIVE),
    (0.05, 0.06, CONSISTENT_NONUNIFORM),
    (0.05, 0.015, INCONCLUSIVE),
    (0.5, None, INCONCLUSIVE),
])
def test_trend_verdict(discrepancy, tenth, expected):
    assert trend_verdict(discrepancy, tenth) == expected


def test_distribution_report_invariants():
    sequence = generate(SequenceSpec('power-chain', ['root:2,2'], k=2, N=2000))
    report = DistributionReport(sequence, harmonics=4, bins=20, label='chain')
    assert sum(report.histogram) + report.unresolved_count == report.N == 2000
    assert 0 < report.star_discrepancy <= 1
    assert len(report.weyl) == 4 and all(0 <= value <= 1 for value in report.weyl)
    assert report.tenth_N == 200
    assert report.to_dict()['spec']['alphas'] == ['root:2,2']


def test_rational_report_is_nonuniform():
    report = DistributionReport(generate(SequenceSpec('power-chain', ['rat:3'], k=2, N=100)))
    assert report.star_discrepancy == 1
    assert report.verdict() == CONSISTENT_NONUNIFORM


def test_reports_are_deterministic(tmp_path):
    spec = SequenceSpec('theorem-combination', ['pi'], k=3, N=500)
    first = report_document(DistributionReport(generate(spec)).to_dict(), {'seed': 0})
    second = report_document(DistributionReport(generate(spec)).to_dict(), {'seed': 0})
    assert first == second
    assert first['schema_version'] == SCHEMA_VERSION

    write_json(first, str(tmp_path / 'first.json'))
    write_json(second, str(tmp_path / 'second.json'))
    assert (tmp_path / 'first.json').read_bytes() == (tmp_path / 'second.json').read_bytes()
    assert json.loads((tmp_path / 'first.json').read_text())['report']['N'] == 500


def test_write_json_needs_an_existing_directory(tmp_path):
    with pytest.raises(FileNotFoundError):
        write_json({}, str(tmp_path / 'missing' / 'report.json'))


def test_write_csv(tmp_path):
    sequence = generate(SequenceSpec('nested-alpha', ['rat:1/2', 'rat:3'], N=3))
    write_csv(sequence, str(tmp_path / 'values.csv'))
    assert (tmp_path / 'values.csv').read_text().splitlines() == ['0.5', '0', '0.5']


def test_low_precision_cap_skips_points():
    sequence = generate(SequenceSpec('power-chain', ['pi'], k=3, N=50, precision_cap=64))
    assert sequence.unresolved_count > 40
    assert len(sequence) + sequence.unresolved_count == 50
    report = DistributionReport(sequence)
    assert sum(report.histogram) + report.unresolved_count == 50
    with pytest.raises(ExcessiveUnresolvedError) as error:
        check_unresolved(sequence)
    assert error.value.total == 50


def test_check_unresolved_tolerates_a_few_skips():
    spec = SequenceSpec('power-chain', ['pi'], k=2, N=10_000)
    sequence = GeneratedSequence(spec, np.arange(1, 10_000), np.zeros(9_999), [10_000])
    check_unresolved(sequence)
    with pytest.raises(ExcessiveUnresolvedError):
        check_unresolved(GeneratedSequence(spec, np.arange(1, 9_989), np.zeros(9_988), list(range(9_989, 10_001))))


@pytest.mark.parametrize('literal, k, expected', [
    ('root:2,3', 3, WITHIN_HYPOTHESIS),
    ('root:2,2', 3, OUTSIDE_HYPOTHESIS),
    ('pi', 4, WITHIN_HYPOTHESIS),
    ('rat:3/2', 3, OUTSIDE_HYPOTHESIS),
    ('rat:3/2', 2, WITHIN_HYPOTHESIS),
])
def test_hypothesis_label(literal, k, expected):
    assert hypothesis_label(AlphaSpec(literal), k) == expected


def test_hypothesis_unverified_for_undecidable_alphas():
    class UndecidableAlpha(AlphaSpec):
        def power_is_rational(self, exponent):
            return None

    assert hypothesis_label(UndecidableAlpha('pi'), 3) == HYPOTHESIS_UNVERIFIED


def test_expected_chain_behaviour():
    assert expected_chain_behaviour(AlphaSpec('root:2,3'), 3) == 'nonuniform'
    assert expected_chain_behaviour(AlphaSpec('root:2,3'), 2) == 'uniform'
    assert expected_chain_behaviour(AlphaSpec('pi'), 3) == 'uniform'


@pytest.mark.parametrize('literal, N', [('root:2,2', 2000), pytest.param('pi', 10_000, marks=pytest.mark.slow),
                                        pytest.param('root:2,2', 10_000, marks=pytest.mark.slow)])
def test_k2_closed_form(literal, N):
    check = k2_closed_form_check(literal, N)
    assert check.passed
    assert check.checked == N
    assert check.mismatches == []


@pytest.mark.parametrize('literal, k', [('root:2,3', 3), ('rat:3/2', 3), ('root:5,2', 4)])
def test_rational_power_scaling(literal, k):
    check = rational_power_scaling_check(literal, k, 1000)
    assert check.passed
    assert check.checked == 1000


def test_rational_power_scaling_needs_a_rational_power():
    with pytest.raises(DomainError):
        rational_power_scaling_check('pi', 3, 10)
    with pytest.raises(DomainError):
        rational_power_scaling_check('root:2,3', 2, 10)


def test_corollary_experiment_for_a_rational_alpha():
    result = corollary_experiment('rat:3', 2, N=100)
    assert result.verdicts == {'power-chain': CONSISTENT_NONUNIFORM, 'theorem-combination': CONSISTENT_NONUNIFORM}
    assert 'power-chain' in result.summary()
    assert result.to_dict()['hypothesis'] == WITHIN_HYPOTHESIS


def test_corollary_experiment_rejects_depth_one():
    with pytest.raises(DomainError):
        corollary_experiment('pi', 1, N=100)


@pytest.mark.slow
def test_cube_root_of_two_chain_is_nonuniform():
    result = corollary_experiment('root:2,3', 3, N=100_000, jobs=2)
    assert result.expected_chain == 'nonuniform'
    assert result.verdicts['power-chain'] == CONSISTENT_NONUNIFORM
    assert result.verdicts['theorem-combination'] == CONSISTENT_NONUNIFORM


@pytest.mark.slow
def test_pi_chain_is_uniform_and_combination_is_not():
    result = corollary_experiment('pi', 3, N=100_000, jobs=2)
    assert result.hypothesis == WITHIN_HYPOTHESIS
    assert result.verdicts['power-chain'] == CONSISTENT_UNIFORM
    assert result.verdicts['theorem-combination'] == CONSISTENT_NONUNIFORM
    assert result['power-chain'].unresolved_count == 0


def test_derive_thresholds():
    ceiling, floor = derive_thresholds([0.004, 0.003], [0.05, 0.2, 0.04], margin=2.0)
    assert ceiling == pytest.approx(0.008)
    assert floor == pytest.approx(0.02)
    with pytest.raises(DomainError):
        derive_thresholds([], [0.05])
    with pytest.raises(DomainError):
        derive_thresholds([0.004], [0.05], margin=0.5)


def test_pilot_thresholds_record_every_reference():
    pilot = pilot_thresholds(N=1000)
    assert [(anchor['variant'], anchor['alpha'], anchor['k']) for anchor in pilot.anchors] == \
        [(variant, literal, k) for variant, literal, k, _ in PILOT_REFERENCES]
    for anchor in pilot.anchors:
        assert 0 < anchor['star_discrepancy'] <= 1
        assert 0 < anchor['tenth_star_discrepancy'] <= 1

    uniform = [anchor['star_discrepancy'] for anchor in pilot.anchors if anchor['expected'] == 'uniform']
    assert pilot.uniform_ceiling == pytest.approx(max(uniform) * DEFAULTS.pilot_margin)
    document = json.loads(json.dumps(pilot.to_dict()))
    assert document['separated'] == pilot.separated
    assert 'nonuniform_floor' in pilot.summary()


def test_pilot_thresholds_reject_tiny_runs():
    with pytest.raises(DomainError):
        pilot_thresholds(N=5)


@pytest.mark.slow
def test_default_thresholds_match_the_pilot():
    pilot = pilot_thresholds(N=100_000, jobs=2)
    assert isinstance(pilot, PilotThresholds)
    assert pilot.separated
    for anchor in pilot.anchors:
        if anchor['expected'] == 'uniform':
            assert anchor['star_discrepancy'] < anchor['tenth_star_discrepancy']
            assert anchor['star_discrepancy'] < DEFAULTS.uniform_ceiling
        else:
            assert anchor['star_discrepancy'] > DEFAULTS.nonuniform_floor
            assert anchor['tenth_star_discrepancy'] > DEFAULTS.nonuniform_floor
