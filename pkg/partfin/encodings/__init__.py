from partfin.encodings.dedekind import (
    seq_to_partition_dedekind,
    partition_to_seq_dedekind,
    dedekind_distinguishing_label,
    dedekind_escape_seed,
)
from partfin.encodings.bounded import (
    least_avoiding_row,
    bounded_seq_to_partition,
    bounded_partition_to_seq,
    bounded_distinguishing_label,
    bounded_escape_seed,
)
from partfin.encodings.diagonal import (
    pairing_F,
    pairing_F_inverse,
    diagonal_family,
    distinguishing_witness,
    DiagonalFamily,
)
from partfin.encodings.seqnat import encode_seq_as_nat, decode_nat_as_seq
from partfin.encodings.skeleton import (
    escape_iteration,
    first_occurrence_order,
    flatten_to_injective_stream,
)
