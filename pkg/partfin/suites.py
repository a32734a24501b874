"""Property suites behind ``verify``; a failing suite is a result, not an exception."""
import logging
from dataclasses import dataclass
from typing import Optional

from partfin.config import Config
from partfin.counting import (
    arrangement_count,
    bell_count,
    bell_numbers,
    block_of,
    enumerate_injective_sequences,
    enumerate_partitions,
    enumerate_sequences,
    partition_count_bounded,
    verify_finite_inequality,
)
from partfin.encodings.bounded import (
    bounded_distinguishing_label,
    bounded_escape_seed,
    bounded_partition_to_seq,
    bounded_seq_to_partition,
    least_avoiding_row,
)
from partfin.encodings.dedekind import (
    dedekind_distinguishing_label,
    dedekind_escape_seed,
    partition_to_seq_dedekind,
    seq_to_partition_dedekind,
)
from partfin.encodings.diagonal import diagonal_family, distinguishing_witness, earlier_indices
from partfin.encodings.seqnat import decode_nat_as_seq, encode_seq_as_nat
from partfin.encodings.skeleton import (
    escape_iteration,
    first_occurrence_order,
    flatten_to_injective_stream,
)
from partfin.errors import NotInRange, StreamExhausted
from partfin.fraenkel import bounded_partitions, esize_report, filter_supported
from partfin.models.carrier import Carrier
from partfin.models.finseq import FinSeq
from partfin.models.group import AtomSet, Support
from partfin.models.lazy_subset import BaseFamily
from partfin.models.marker import MarkerGrid, MarkerUniverse

logger = logging.getLogger(__name__)


class Counterexample(Exception):
    pass


@dataclass
class SuiteResult:
    name: str
    passed: bool
    checks: int
    counterexample: Optional[str] = None

    def to_record(self):
        return {
            "kind": "suite",
            "name": self.name,
            "passed": self.passed,
            "checks": self.checks,
            "counterexample": self.counterexample,
        }


def _rejects(decoder, p, shape):
    try:
        decoder(p, shape)
    except NotInRange:
        return True
    return False


class _Checker:
    def __init__(self):
        self.count = 0

    def __call__(self, condition, description):
        self.count += 1
        if not condition:
            raise Counterexample(description)


def counting_suite(check):
    report = verify_finite_inequality(1000, cutoff=Config.ENUMERATION_CUTOFF)
    failure = report.first_failure
    check(failure is None, f"a(n) > B(n) fails or disagrees with enumeration at {failure}")

    bells = bell_numbers(60)
    for n in range(61):
        check(bell_count(n) == bells[n], f"binomial and triangle Bell numbers differ at n={n}")

    for n in range(7):
        carrier = Carrier(n)
        for name, stream in (
            ("injective sequences", list(enumerate_injective_sequences(carrier))),
            ("partitions", list(enumerate_partitions(carrier))),
            ("sequences", list(enumerate_sequences(carrier, 3))),
        ):
            check(len(set(stream)) == len(stream), f"duplicate {name} at n={n}")

        check(
            list(enumerate_partitions(carrier, max_block=max(n, 1))) == list(enumerate_partitions(carrier)),
            f"max_block = size changes the partitions at n={n}",
        )
        for b in range(1, n + 1):
            total = sum(1 for _ in enumerate_partitions(carrier, max_block=b))
            check(total == partition_count_bounded(n, b), f"bounded partition count at n={n}, b={b}")

    check(arrangement_count(5) == 326, "a(5) != 326")


def dedekind_suite(check):
    u = MarkerUniverse(Carrier.named("xyz"), 4)
    sequences = list(enumerate_sequences(u.base, 4))
    check(len(sequences) == 121, f"expected 121 sequences, got {len(sequences)}")

    images = {}
    for a in sequences:
        p = seq_to_partition_dedekind(a, u)
        check(p not in images, f"{a!r} and {images.get(p)!r} share an image")
        images[p] = a
        check(
            all(sum(1 for x in block if u.is_base(x)) <= 1 for block in p.blocks),
            f"image of {a!r} has a block with two base labels",
        )
        check(partition_to_seq_dedekind(p, u) == a, f"decoder does not invert {a!r}")

    for a in sequences[:40]:
        for b in sequences:
            if a == b:
                continue
            label = dedekind_distinguishing_label(a, b, u)
            pa, pb = seq_to_partition_dedekind(a, u), seq_to_partition_dedekind(b, u)
            check(block_of(pa, label) != block_of(pb, label), f"label {label} does not separate {a!r}, {b!r}")

    check(_rejects(partition_to_seq_dedekind, dedekind_escape_seed(u), u), "escape seed was decoded")


def bounded_suite(check):
    g = MarkerGrid.with_plain(2, ("x", "y", "z", "w"))
    sequences = list(enumerate_sequences(g.carrier, 2))
    check(len(sequences) == 421, f"expected 421 sequences, got {len(sequences)}")

    images = {}
    for c in sequences:
        p = bounded_seq_to_partition(c, g)
        check(p not in images, f"{c!r} and {images.get(p)!r} share an image")
        images[p] = c
        check(bounded_partition_to_seq(p, g) == c, f"decoder does not invert {c!r}")

        j = least_avoiding_row(c, g)
        tails = [
            block for block in p.blocks
            if len(block) >= 2 and any(block <= g.row(r) and g.cell(r, g.n + 1) in block for r in range(g.width))
        ]
        check(len(tails) == 1 and tails[0] <= g.row(j), f"image of {c!r} has {len(tails)} tail blocks")

    partitions = {c: p for p, c in images.items()}
    cases = set()
    for b in sequences[:60]:
        for c in sequences:
            if b == c:
                continue
            case, label = bounded_distinguishing_label(b, c, g)
            cases.add(case)
            check(
                block_of(partitions[b], label) != block_of(partitions[c], label),
                f"case {case} label {label} does not separate {b!r}, {c!r}",
            )
    check(cases == {1, 2}, f"injectivity cases hit: {sorted(cases)}")

    check(_rejects(bounded_partition_to_seq, bounded_escape_seed(g), g), "escape seed was decoded")


def diagonal_suite(check):
    K = Config.DIAGONAL_K
    window = 2 * K + 1

    for description in ("singleton:m", "evens", "periodic:110"):
        family = diagonal_family(BaseFamily(description))
        for k in range(K + 1):
            for earlier in earlier_indices(k, window):
                witness = distinguishing_witness(family, k, earlier)
                check(witness.differs, f"{description}: no difference at {witness!r}")

    family = diagonal_family(BaseFamily("singleton:m"))
    check(family(0).members(200) == list(range(1, 201)), "G(0) != N minus {0}")
    check(family(1).members(200) == list(range(2, 201)), "G(1) != N minus {0,1}")


def skeleton_suite(check):
    count = Config.ESCAPE_TOY_COUNT
    values = escape_iteration(lambda n: n + 1, lambda n: n, 0, count)
    check(values == list(range(count)), "escape iteration on n -> n+1 is not 0, 1, 2, ...")

    b, a, c, x = 1, 0, 2, 0
    check(first_occurrence_order([FinSeq((b, a)), FinSeq((c, a))]) == [b, a, c], "first occurrence order")
    check(first_occurrence_order([FinSeq((x,)), FinSeq((x,))]) == [x], "first occurrence repeats")

    stream = flatten_to_injective_stream([FinSeq((0,)), FinSeq((0,)), FinSeq((0, 1)), FinSeq((2,))])
    emitted = []
    try:
        for label in stream:
            emitted.append(label)
    except StreamExhausted as e:
        check(list(e.emitted) == [0, 1, 2], "exhaustion reports the emitted labels")
    check(emitted == [0, 1, 2], f"flattening emitted {emitted}")

    top = Config.SEQNAT_MAX_ENTRY
    for s in enumerate_sequences(Carrier(top + 1), Config.SEQNAT_MAX_LENGTH):
        check(decode_nat_as_seq(encode_seq_as_nat(s)) == s, f"decode(encode({s!r})) != {s!r}")
    for z in range(Config.SEQNAT_DECODE_RANGE + 1):
        check(encode_seq_as_nat(decode_nat_as_seq(z)) == z, f"encode(decode({z})) != {z}")


def fraenkel_suite(check):
    atoms = 6
    for e, counts in ((1, (2, 1)), (2, (5, 2)), (3, (16, 5))):
        report = esize_report(atoms, e, 2)
        check(report.passed, f"fraenkel report failed for e={e}: {report.to_record()}")
        found = (report.supported_sequences, report.supported_partitions)
        check(found == counts, f"supported counts for e={e} are {found}, expected {counts}")

    # b = |A minus E| lets the whole complement become one supported block
    atom_set = AtomSet.of_size(atoms)
    support = Support.leading(3)
    boundary = filter_supported(bounded_partitions(atom_set, support, 3), support, atom_set)
    check(
        any(frozenset({3, 4, 5}) in p.blocks for p in boundary),
        "boundary b = |A minus E| does not admit the complement block",
    )


SUITES = {
    "counting": counting_suite,
    "dedekind": dedekind_suite,
    "bounded": bounded_suite,
    "diagonal": diagonal_suite,
    "skeleton": skeleton_suite,
    "fraenkel": fraenkel_suite,
}


def run_suite(name):
    suite = SUITES[name]
    check = _Checker()
    logger.info("suite %s started", name)

    try:
        suite(check)
    except Counterexample as e:
        logger.warning("suite %s failed: %s", name, e)
        return SuiteResult(name, False, check.count, str(e))

    logger.info("suite %s passed %d checks", name, check.count)
    return SuiteResult(name, True, check.count)
