from partfin.models.carrier import Carrier
from partfin.models.finseq import FinSeq
from partfin.models.partition import SetPartition
from partfin.models.marker import MarkerUniverse, MarkerGrid
from partfin.models.lazy_subset import LazySubset, BaseFamily, TwoCopyOrdinal
from partfin.models.group import AtomSet, Support, AtomGroup, OrbitRecord, NonexistenceCertificate

__all__ = [
    "Carrier",
    "FinSeq",
    "SetPartition",
    "MarkerUniverse",
    "MarkerGrid",
    "LazySubset",
    "BaseFamily",
    "TwoCopyOrdinal",
    "AtomSet",
    "Support",
    "AtomGroup",
    "OrbitRecord",
    "NonexistenceCertificate",
]
