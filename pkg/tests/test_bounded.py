import pytest

from partfin.counting import block_of, enumerate_sequences
from partfin.encodings.bounded import (
    bounded_distinguishing_label,
    bounded_escape_seed,
    bounded_partition_to_seq,
    bounded_seq_to_partition,
    least_avoiding_row,
)
from partfin.errors import NotInRange, PreconditionError
from partfin.models.carrier import Carrier
from partfin.models.marker import MarkerGrid
from partfin.models.partition import SetPartition
from tests.conftest import part, seq

# n = 1 grid: a{j}{i} = 3j + i, plain x = 9
A00, A01, A02, A10, A11, A12 = 0, 1, 2, 3, 4, 5
X = 9


def test_least_avoiding_row(grid1):
    assert least_avoiding_row(seq(), grid1) == 0
    assert least_avoiding_row(seq(A00), grid1) == 1
    assert least_avoiding_row(seq(X), grid1) == 0


def test_encode_examples(grid1):
    assert bounded_seq_to_partition(seq(), grid1) == part(10, {A00, A01, A02})
    assert bounded_seq_to_partition(seq(X), grid1) == part(10, {X, A00}, {A01, A02})
    assert bounded_seq_to_partition(seq(A00), grid1) == part(10, {A00, A10}, {A11, A12})


def test_decode_examples(grid1):
    assert bounded_partition_to_seq(part(10, {X, A00}, {A01, A02}), grid1) == seq(X)
    assert bounded_partition_to_seq(part(10, {A00, A01, A02}), grid1) == seq()
    assert bounded_partition_to_seq(part(10, {A00, A10}, {A11, A12}), grid1) == seq(A00)


@pytest.mark.parametrize(
    "blocks",
    [
        [],
        [{A00, A01, A02}, {A10, A11, A12}],
        [{A01, A02}],
        [{A00, A02}],
        [{A01, A02}, {A00, X, A10}],
    ],
    ids=["no-tail", "two-tails", "uncovered-a00", "gap-in-tail", "entry-block-off-shape"],
)
def test_decode_rejects_shapes_outside_image(grid1, blocks):
    with pytest.raises(NotInRange):
        bounded_partition_to_seq(part(10, *blocks), grid1)


def test_length_bound_is_a_precondition(grid1):
    with pytest.raises(PreconditionError):
        bounded_seq_to_partition(seq(X, X), grid1)


def test_every_sequence_round_trips_with_distinct_images(grid2):
    sequences = list(enumerate_sequences(grid2.carrier, 2))
    assert len(sequences) == 421

    images = [bounded_seq_to_partition(c, grid2) for c in sequences]
    assert len(set(images)) == 421

    for c, p in zip(sequences, images):
        assert bounded_partition_to_seq(p, grid2) == c


def test_both_injectivity_cases_separate_images(grid2):
    sequences = list(enumerate_sequences(grid2.carrier, 2))
    seen = set()
    for b in sequences[:30]:
        pb = bounded_seq_to_partition(b, grid2)
        for c in sequences:
            if b == c:
                continue
            case, label = bounded_distinguishing_label(b, c, grid2)
            seen.add(case)
            assert block_of(pb, label) != block_of(bounded_seq_to_partition(c, grid2), label)

    assert seen == {1, 2}


def test_case_two_label_is_last_cell_of_first_row(grid1):
    case, label = bounded_distinguishing_label(seq(X), seq(A00), grid1)
    assert case == 2
    assert label == A02


def test_escape_seed_is_outside_the_image(grid1):
    seed = bounded_escape_seed(grid1)
    assert seed.block_sizes() == (3, 3, 3, 1)

    with pytest.raises(NotInRange):
        bounded_partition_to_seq(seed, grid1)


def test_large_grid_names():
    g = MarkerGrid.with_plain(9, ())
    assert g.width == 11
    assert g.carrier.name(g.cell(10, 3)) == "a10_3"


def test_grid_needs_room():
    with pytest.raises(PreconditionError):
        MarkerGrid.leading(1, Carrier(8))
    with pytest.raises(PreconditionError):
        MarkerGrid(1, Carrier(10), ((0, 1, 2), (3, 4, 5), (6, 7, 0)))


def test_grid_positions(grid1):
    assert grid1.position(A12) == (1, 2)
    assert grid1.position(X) is None
    assert grid1.row(1) == frozenset({A10, A11, A12})
    assert SetPartition.singletons(10).size == grid1.carrier.size
