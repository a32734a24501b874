import dataclasses
import json
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy.combinatorics import Permutation

from partfin.counting import (
    arrangement_count,
    bell_count,
    enumerate_injective_sequences,
    enumerate_partitions,
    partition_count_bounded,
)
from partfin.errors import CharacterizationFailure, LimitExceeded, PreconditionError
from partfin.fraenkel import (
    apply_to_partition,
    apply_to_seq,
    bounded_partitions,
    check_bundle,
    equivariant_injection_exists,
    filter_supported,
    fix_generators,
    fix_group,
    fraenkel_report,
    is_supported,
    orbit_decomposition,
    recheck_certificate,
    supported_partitions,
    supported_sequences,
    verify_equivariant_injection,
)
from partfin.models.finseq import FinSeq
from partfin.models.group import AtomGroup, AtomSet, Support, cycle_notation, identity, transposition
from partfin.models.partition import SetPartition
from tests.conftest import part, seq

SIX = AtomSet.of_size(6)


def test_action_examples():
    swap = transposition(0, 1, 6)
    assert apply_to_seq(identity(6), seq(3, 1, 4)) == seq(3, 1, 4)
    assert apply_to_seq(swap, seq(0, 2)) == seq(1, 2)
    assert apply_to_partition(transposition(0, 1, 3), part(3, {0, 2})) == part(3, {1, 2})


def test_action_laws():
    pi = transposition(0, 3, 5)
    sigma = transposition(1, 3, 5)
    # sympy composes left to right: (sigma * pi)(i) == pi(sigma(i))
    composed = sigma * pi

    for s in list(enumerate_injective_sequences(AtomSet.of_size(5).carrier))[:120]:
        assert apply_to_seq(composed, s) == apply_to_seq(pi, apply_to_seq(sigma, s))

    for p in enumerate_partitions(AtomSet.of_size(5).carrier):
        image = apply_to_partition(composed, p)
        assert image == apply_to_partition(pi, apply_to_partition(sigma, p))
        assert SetPartition(image.rgs) == image
        assert apply_to_partition(identity(5), p) == p


@pytest.mark.parametrize(
    "atoms, support, expected",
    [
        (4, {0, 1}, ["(2;3)"]),
        (4, {0, 1, 2, 3}, []),
        (5, {0}, ["(1;2)", "(2;3)", "(3;4)"]),
    ],
)
def test_fix_generators(atoms, support, expected):
    gens = fix_generators(AtomSet.of_size(atoms), Support(support))
    assert [cycle_notation(g) for g in gens] == expected


def test_fix_generators_reject_outside_support():
    with pytest.raises(PreconditionError):
        fix_generators(AtomSet.of_size(3), Support({5}))


def test_fix_group_order():
    assert fix_group(SIX, Support({0, 1})).order == 24
    assert fix_group(SIX, Support(set(range(6)))).order == 1


@pytest.mark.parametrize(
    "x, expected",
    [
        (seq(0, 1), True),
        (seq(2), False),
        (part(6, {0, 1}), True),
        (part(6, {0, 2}), False),
        (SetPartition.singletons(6), True),
    ],
)
def test_is_supported(x, expected):
    assert is_supported(x, Support({0, 1}), SIX) is expected


def test_support_closure():
    atoms = AtomSet.of_size(5)
    small, large = Support({0}), Support({0, 3})
    objects = list(enumerate_injective_sequences(atoms.carrier)) + list(enumerate_partitions(atoms.carrier))
    for x in objects:
        if is_supported(x, small, atoms):
            assert is_supported(x, large, atoms)


def test_supported_sequences_examples():
    assert set(supported_sequences(SIX, Support({0, 1}))) == {seq(), seq(0), seq(1), seq(0, 1), seq(1, 0)}
    assert supported_sequences(SIX, Support()) == [seq()]
    assert len(supported_sequences(SIX, Support({0, 1, 2}))) == 16


def test_supported_sequences_need_two_free_atoms():
    with pytest.raises(PreconditionError):
        supported_sequences(SIX, Support({0, 1, 2, 3, 4}))


def test_supported_partitions_examples():
    assert set(supported_partitions(SIX, Support({0, 1}), 2)) == {SetPartition.singletons(6), part(6, {0, 1})}
    assert supported_partitions(SIX, Support(), 1) == [SetPartition.singletons(6)]
    assert len(supported_partitions(AtomSet.of_size(7), Support({0, 1, 2}), 3)) == 5
    assert len(supported_partitions(SIX, Support({0, 1, 2}), 2)) == 5


@pytest.mark.parametrize("b", [0, 3, 4])
def test_supported_partitions_block_bound_precondition(b):
    with pytest.raises(PreconditionError):
        supported_partitions(SIX, Support({0, 1, 2}), b)


def _check_characterizations(atom_set, support):
    e = len(support)
    assert len(supported_sequences(atom_set, support)) == arrangement_count(e)
    for b in range(1, atom_set.size - e):
        found = supported_partitions(atom_set, support, b)
        assert len(found) == bell_count(e)


@pytest.mark.parametrize("atoms", [4, 5, 6])
def test_characterizations_for_every_support(atoms):
    atom_set = AtomSet.of_size(atoms)
    for e in range(atoms - 1):
        for chosen in combinations(range(atoms), e):
            _check_characterizations(atom_set, Support(set(chosen)))


@pytest.mark.parametrize("e", [0, 1, 2, 3, 4, 5])
def test_characterizations_on_seven_atoms(e):
    atom_set = AtomSet.of_size(7)
    _check_characterizations(atom_set, Support(set(range(e))))
    _check_characterizations(atom_set, Support(set(range(7 - e, 7))))


def test_boundary_bound_admits_the_complement_block():
    support = Support({0, 1, 2})
    boundary = filter_supported(bounded_partitions(SIX, support, 3), support, SIX)
    assert part(6, {3, 4, 5}) in boundary
    assert len(boundary) > bell_count(3)


def test_block_bound_skips_blocks_inside_the_support():
    support = Support({0, 1, 2})
    bounded = list(bounded_partitions(SIX, support, 2))
    assert part(6, {0, 1, 2}) in bounded
    assert part(6, {3, 4, 5}) not in bounded
    assert part(6, {2, 3, 4}) not in bounded
    assert part(6, {2, 3}) in bounded


def test_orbit_examples():
    group = fix_group(SIX, Support({0, 1}))

    [orbit] = orbit_decomposition([seq(2), seq(3), seq(4), seq(5)], group)
    assert orbit.size == 4
    assert len(orbit.stabilizer) == 6

    [fixed] = orbit_decomposition([seq(0, 1)], group)
    assert fixed.size == 1

    records = orbit_decomposition(supported_sequences(SIX, Support({0, 1})), group)
    assert [r.size for r in records] == [1] * 5


def test_orbit_stabilizer_identity():
    group = fix_group(SIX, Support({0}))
    records = orbit_decomposition(enumerate_partitions(SIX.carrier, max_block=2), group)
    assert sum(r.size for r in records) == partition_count_bounded(6, 2)
    assert all(r.satisfies_orbit_stabilizer(group.order) for r in records)


def test_orbit_decomposition_needs_closed_sets():
    group = fix_group(SIX, Support({0, 1}))
    with pytest.raises(PreconditionError):
        orbit_decomposition([seq(2)], group)


def test_group_enumeration_limit():
    with pytest.raises(LimitExceeded):
        AtomGroup.symmetric(range(8)).elements()


def test_no_injection_into_bounded_partitions():
    group = fix_group(SIX, Support({0, 1}))
    X = list(enumerate_injective_sequences(SIX.carrier))
    Y = list(enumerate_partitions(SIX.carrier, max_block=2))

    verdict = equivariant_injection_exists(X, Y, group)
    assert not verdict.exists

    cert = verdict.certificate
    assert (cert.supported_x, cert.supported_y) == (5, 2)
    assert cert.pigeonhole
    assert cert.matching_size < cert.x_orbits
    assert recheck_certificate(cert, X, Y, group)


def test_tampered_certificate_fails_recheck():
    group = fix_group(SIX, Support({0, 1}))
    X = list(enumerate_injective_sequences(SIX.carrier))
    Y = list(enumerate_partitions(SIX.carrier, max_block=2))
    cert = equivariant_injection_exists(X, Y, group).certificate

    assert not recheck_certificate(dataclasses.replace(cert, supported_y=3), X, Y, group)
    assert not recheck_certificate(dataclasses.replace(cert, matching_size=cert.x_orbits), X, Y, group)


def test_identity_map_when_sets_coincide():
    group = fix_group(SIX, Support({0}))
    X = list(enumerate_partitions(SIX.carrier, max_block=2))

    verdict = equivariant_injection_exists(X, X, group)
    assert verdict.exists
    assert all(x == y for x, y in verdict.mapping.items())


def test_identity_map_into_a_larger_set_is_verified():
    group = fix_group(SIX, Support({0, 1}))
    X = [seq(a) for a in range(2, 6)]
    Y = X + [seq()]

    verdict = equivariant_injection_exists(X, Y, group)
    assert verdict.exists
    assert verdict.mapping == {x: x for x in X}
    assert verify_equivariant_injection(verdict.mapping, group, Y)


def test_identity_map_that_fails_verification_raises(monkeypatch):
    monkeypatch.setattr("partfin.fraenkel.verify_equivariant_injection", lambda *args: False)
    group = fix_group(SIX, Support({0}))
    X = [SetPartition.singletons(6)]

    with pytest.raises(CharacterizationFailure):
        equivariant_injection_exists(X, X, group)


def test_free_orbit_has_no_partner_among_fixed_points():
    group = AtomGroup.symmetric(range(4))
    X = [seq(0), seq(1), seq(2), seq(3)]
    Y = [seq(), SetPartition.singletons(4)]

    verdict = equivariant_injection_exists(X, Y, group)
    assert not verdict.exists
    assert not verdict.certificate.pigeonhole
    assert verdict.certificate.obstruction == ((6, 4, 1, 0),)
    assert recheck_certificate(verdict.certificate, X, Y, group)


def test_matching_builds_a_verified_map():
    group = fix_group(SIX, Support({0, 1}))
    X = [seq(a) for a in range(2, 6)]
    Y = list(enumerate_partitions(SIX.carrier, max_block=2))

    verdict = equivariant_injection_exists(X, Y, group)
    assert verdict.exists
    assert set(verdict.mapping) == set(X)
    assert verify_equivariant_injection(verdict.mapping, group, Y)
    assert len(set(verdict.mapping.values())) == 4


def test_verify_rejects_non_equivariant_map():
    group = fix_group(SIX, Support({0, 1}))
    mapping = {seq(a): SetPartition.singletons(6) for a in range(2, 6)}
    assert not verify_equivariant_injection(mapping, group)

    targets = {2: 2, 3: 3, 4: 5, 5: 4}
    mapping = {seq(a): part(6, {0, targets[a]}) for a in range(2, 6)}
    assert not verify_equivariant_injection(mapping, group)


def test_report_examples():
    bundle = fraenkel_report(6, [2, 1], 2)
    assert [r.e for r in bundle.reports] == [1, 2]
    assert [(r.supported_sequences, r.supported_partitions) for r in bundle.reports] == [(2, 1), (5, 2)]
    assert all(r.inequality_holds and not r.verdict.exists and r.rechecked for r in bundle.reports)
    assert bundle.passed

    [empty] = fraenkel_report(6, [0], 2).reports
    assert (empty.supported_sequences, empty.supported_partitions) == (1, 1)
    assert not empty.inequality_claimed
    assert empty.passed

    [five] = fraenkel_report(5, [2], 2).reports
    assert (five.supported_sequences, five.supported_partitions) == (5, 2)
    assert five.passed


def test_report_with_three_atom_support():
    [report] = fraenkel_report(6, [3], 2).reports
    assert (report.supported_sequences, report.supported_partitions) == (16, 5)
    assert report.passed


def test_report_records_serialize():
    bundle = fraenkel_report(5, [1], 2)
    [record] = bundle.to_records()
    assert record["kind"] == "fraenkel"
    assert record["certificate"]["pigeonhole"] is True
    json.dumps(record)


@pytest.mark.parametrize(
    "atoms, e, b, error",
    [
        (7, 1, 2, LimitExceeded),
        (6, 3, 3, PreconditionError),
        (6, 1, 0, PreconditionError),
        (6, -1, 2, PreconditionError),
    ],
)
def test_bundle_limits(atoms, e, b, error):
    with pytest.raises(error):
        check_bundle(atoms, e, b)
    with pytest.raises(error):
        fraenkel_report(atoms, [e], b)


def test_finseq_flag_does_not_affect_equality():
    assert FinSeq((1, 2), injective=True) == FinSeq((1, 2))


FIVE = AtomSet.of_size(5)
PARTITIONS_OF_FIVE = list(enumerate_partitions(FIVE.carrier))
SEQUENCES_OF_FIVE = list(enumerate_injective_sequences(FIVE.carrier))
permutations_of_five = st.permutations(range(5)).map(lambda af: Permutation(list(af)))


@given(permutations_of_five, permutations_of_five, st.sampled_from(SEQUENCES_OF_FIVE))
def test_sequence_action_is_a_group_action(pi, sigma, s):
    assert apply_to_seq(sigma * pi, s) == apply_to_seq(pi, apply_to_seq(sigma, s))
    assert apply_to_seq(pi, s).is_injective()


@given(permutations_of_five, st.sampled_from(PARTITIONS_OF_FIVE))
def test_partition_action_preserves_block_sizes(pi, p):
    image = apply_to_partition(pi, p)
    assert sorted(image.block_sizes()) == sorted(p.block_sizes())
    assert apply_to_partition(~pi, image) == p


@given(
    st.sets(st.integers(min_value=0, max_value=4), max_size=3),
    st.integers(min_value=0, max_value=4),
    st.sampled_from(PARTITIONS_OF_FIVE),
)
def test_support_closure_on_random_supports(chosen, extra, p):
    if is_supported(p, Support(chosen), FIVE):
        assert is_supported(p, Support(chosen | {extra}), FIVE)
