"""Finite shadow of the basic Fraenkel model: atoms 0..n-1, supports, fix(E)."""
import logging
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import singledispatch
from typing import Dict, List, Optional

import networkx as nx

from partfin.config import Config
from partfin.counting import (
    arrangement_count,
    bell_count,
    enumerate_injective_sequences,
    enumerate_partitions,
)
from partfin.errors import CharacterizationFailure, LimitExceeded, PreconditionError
from partfin.models.carrier import Carrier
from partfin.models.finseq import FinSeq
from partfin.models.group import (
    AtomGroup,
    AtomSet,
    NonexistenceCertificate,
    OrbitRecord,
    Support,
    transposition,
)
from partfin.models.partition import SetPartition

logger = logging.getLogger(__name__)


@singledispatch
def act(x, af):
    raise TypeError(f"no permutation action on {type(x).__name__}")


@act.register
def _(x: int, af):
    return af[x]


@act.register
def _(x: FinSeq, af):
    return FinSeq(tuple(af[e] for e in x.entries), injective=x.injective)


@act.register
def _(x: SetPartition, af):
    return SetPartition.from_blocks([[af[e] for e in block] for block in x.blocks], x.size)


@singledispatch
def sort_key(x):
    raise TypeError(f"no ordering for {type(x).__name__}")


@sort_key.register
def _(x: int):
    return (0, 0, (x,))


@sort_key.register
def _(x: FinSeq):
    return (1, len(x), x.entries)


@sort_key.register
def _(x: SetPartition):
    return (2, x.size, x.rgs)


def apply_to_seq(perm, s):
    return act(s, tuple(perm.array_form))


def apply_to_partition(perm, p):
    return act(p, tuple(perm.array_form))


# plain array-form tuples; sympy Permutation is too slow inside the orbit loops
def _compose(a, b):
    # a after b
    return tuple(a[i] for i in b)


def _inverse(a):
    inv = [0] * len(a)
    for i, x in enumerate(a):
        inv[x] = i
    return tuple(inv)


def _conjugate(t, s, t_inv):
    return tuple(t[s[t_inv[i]]] for i in range(len(t)))


def fix_generators(atom_set, support):
    """Adjacent transpositions of the atoms outside E; they generate fix(E)."""
    support.check_within(atom_set)
    free = support.outside(atom_set)
    return [transposition(a, b, atom_set.size) for a, b in zip(free, free[1:])]


def fix_group(atom_set, support, limit=None):
    return AtomGroup(atom_set.size, fix_generators(atom_set, support), limit=limit)


def is_supported(x, support, atom_set):
    return all(act(x, tuple(g.array_form)) == x for g in fix_generators(atom_set, support))


def filter_supported(elements, support, atom_set):
    forms = [tuple(g.array_form) for g in fix_generators(atom_set, support)]
    return [x for x in elements if all(act(x, af) == x for af in forms)]


def _embed(p, support, atom_set):
    """Partition of E (on labels 0..|E|-1) extended by singletons of A minus E."""
    atoms = sorted(support.atoms)
    blocks = [[atoms[i] for i in block] for block in p.blocks]
    return SetPartition.from_blocks(blocks, atom_set.size, fill_singletons=True)


def supported_sequences(atom_set, support):
    support.check_within(atom_set)
    if len(support.outside(atom_set)) < 2:
        raise PreconditionError("at least two atoms must lie outside the support")

    found = filter_supported(enumerate_injective_sequences(atom_set.carrier), support, atom_set)
    expected = [s for s in enumerate_injective_sequences(atom_set.carrier) if s.entry_set() <= support.atoms]

    if set(found) != set(expected):
        raise CharacterizationFailure(
            f"supported sequences for {support!r} differ from sequences over the support"
        )
    return found


def bounded_partitions(atom_set, support, b):
    """Partitions whose blocks meeting A minus E have at most b elements; blocks inside E are unbounded."""
    free = frozenset(support.outside(atom_set))
    for p in enumerate_partitions(atom_set.carrier):
        if all(len(block) <= b for block in p.blocks if block & free):
            yield p


def supported_partitions(atom_set, support, b):
    """Exactly Y + singletons(A minus E) for Y any partition of E; needs 1 <= b < |A minus E|."""
    support.check_within(atom_set)
    free = len(support.outside(atom_set))
    if not 1 <= b < free:
        raise PreconditionError(f"block bound b={b} must satisfy 1 <= b < {free}")

    found = filter_supported(bounded_partitions(atom_set, support, b), support, atom_set)
    inner = Carrier(len(support))
    expected = [_embed(y, support, atom_set) for y in enumerate_partitions(inner)]

    if set(found) != set(expected):
        raise CharacterizationFailure(
            f"supported partitions for {support!r}, b={b} differ from partitions of the support"
        )
    return found


def _orbit(x, generator_forms, unit):
    """Orbit of x as {member: t} with t * x == member, in BFS order."""
    transversal = {x: unit}
    queue = deque([x])
    while queue:
        y = queue.popleft()
        t = transversal[y]
        for gen in generator_forms:
            z = act(y, gen)
            if z not in transversal:
                transversal[z] = _compose(gen, t)
                queue.append(z)
    return transversal


def _decompose(elements, group):
    elements = sorted(set(elements), key=sort_key)
    pool = set(elements)
    group_elements = group.elements()
    gens = group.generator_forms
    unit = tuple(range(group.degree))

    parts = []
    placed = set()
    for x in elements:
        if x in placed:
            continue

        transversal = _orbit(x, gens, unit)
        stray = next((y for y in transversal if y not in pool), None)
        if stray is not None:
            raise PreconditionError(f"element set is not closed under the group: {stray!r}")
        placed.update(transversal)

        stabilizer = tuple(g for g in group_elements if act(x, g) == x)
        record = OrbitRecord(x, tuple(transversal), stabilizer)
        if not record.satisfies_orbit_stabilizer(group.order):
            raise CharacterizationFailure(f"orbit-stabilizer identity fails for {record!r}")
        parts.append((record, transversal))

    return parts


def orbit_decomposition(elements, group):
    return [record for record, _ in _decompose(elements, group)]


def _member_stabilizers(record, transversal):
    """{stabilizer of member: first member with it}, via conjugation of the representative's."""
    offers = {}
    for member, t in transversal.items():
        t_inv = _inverse(t)
        key = frozenset(_conjugate(t, s, t_inv) for s in record.stabilizer)
        offers.setdefault(key, member)
    return offers


@dataclass
class EquivarianceVerdict:
    exists: bool
    mapping: Optional[Dict[object, object]] = None
    certificate: Optional[NonexistenceCertificate] = None

    def to_record(self):
        record = {"kind": "verdict", "exists": self.exists}
        if self.certificate is not None:
            record["certificate"] = self.certificate.to_record()
        if self.mapping is not None:
            record["mapping_size"] = len(self.mapping)
        return record


def verify_equivariant_injection(mapping, group, codomain=None):
    values = list(mapping.values())
    if len(set(values)) != len(values):
        return False
    if codomain is not None and not set(values) <= set(codomain):
        return False

    for gen in group.generator_forms:
        for x, y in mapping.items():
            image = act(x, gen)
            if image not in mapping or mapping[image] != act(y, gen):
                return False
    return True


def equivariant_injection_exists(X, Y, group):
    """Bipartite matching of X-orbits to Y-orbits with the same stabilizer."""
    x_parts = _decompose(X, group)
    y_parts = _decompose(Y, group)

    if {x for record, _ in x_parts for x in record.members} <= set(Y):
        mapping = {x: x for record, _ in x_parts for x in record.members}
        if not verify_equivariant_injection(mapping, group, Y):
            raise CharacterizationFailure("identity map on X is not an equivariant injection into Y")
        return EquivarianceVerdict(True, mapping=mapping)

    y_offers = [_member_stabilizers(record, transversal) for record, transversal in y_parts]

    graph = nx.Graph()
    left = [("x", i) for i in range(len(x_parts))]
    graph.add_nodes_from(left, bipartite=0)
    graph.add_nodes_from((("y", j) for j in range(len(y_parts))), bipartite=1)
    for i, (record, _) in enumerate(x_parts):
        key = frozenset(record.stabilizer)
        for j, offers in enumerate(y_offers):
            if key in offers:
                graph.add_edge(("x", i), ("y", j))

    matching = nx.bipartite.hopcroft_karp_matching(graph, top_nodes=left)
    matched = {node[1]: partner[1] for node, partner in matching.items() if node[0] == "x"}

    if len(matched) == len(x_parts):
        mapping = {}
        for i, j in sorted(matched.items()):
            record, transversal = x_parts[i]
            target = y_offers[j][frozenset(record.stabilizer)]
            for member, t in transversal.items():
                mapping[member] = act(target, t)

        if not verify_equivariant_injection(mapping, group, Y):
            raise CharacterizationFailure("matched orbits did not yield an equivariant injection")
        logger.info("equivariant injection found on %d elements", len(mapping))
        return EquivarianceVerdict(True, mapping=mapping)

    certificate = _certificate(x_parts, y_parts, y_offers, matched)
    logger.info("no equivariant injection: %r", certificate)
    return EquivarianceVerdict(False, certificate=certificate)


def _certificate(x_parts, y_parts, y_offers, matched):
    def stabilizer_class(offers):
        return frozenset(offers)

    x_classes = [stabilizer_class(_member_stabilizers(r, t)) for r, t in x_parts]
    y_classes = Counter(stabilizer_class(offers) for offers in y_offers)

    rows = []
    seen = {}
    for (record, _), cls in zip(x_parts, x_classes):
        if cls not in seen:
            seen[cls] = len(rows)
            rows.append([len(record.stabilizer), record.size, 0, y_classes.get(cls, 0)])
        rows[seen[cls]][2] += 1

    unmatched = next(r.representative for i, (r, _) in enumerate(x_parts) if i not in matched)

    return NonexistenceCertificate(
        supported_x=sum(1 for r, _ in x_parts if r.size == 1),
        supported_y=sum(1 for r, _ in y_parts if r.size == 1),
        x_orbits=len(x_parts),
        y_orbits=len(y_parts),
        matching_size=len(matched),
        obstruction=tuple(tuple(row) for row in rows),
        unmatched_representative=unmatched,
    )


def recheck_certificate(certificate, X, Y, group):
    """Recount a certificate's claims from scratch, without the orbit machinery."""
    forms = group.generator_forms
    fixed_x = sum(1 for x in set(X) if all(act(x, g) == x for g in forms))
    fixed_y = sum(1 for y in set(Y) if all(act(y, g) == y for g in forms))
    if (fixed_x, fixed_y) != (certificate.supported_x, certificate.supported_y):
        return False

    # some stabilizer class must need more Y-orbits than it is offered
    starved = any(x > y for _, _, x, y in certificate.obstruction)
    return starved and certificate.matching_size < certificate.x_orbits


@dataclass
class EsizeReport:
    atoms: int
    e: int
    b: int
    supported_sequences: int
    supported_partitions: int
    expected_sequences: int
    expected_partitions: int
    verdict: EquivarianceVerdict
    rechecked: bool

    @property
    def inequality_claimed(self):
        return self.e >= 1

    @property
    def inequality_holds(self):
        return self.supported_sequences > self.supported_partitions

    @property
    def passed(self):
        counts_agree = (
            self.supported_sequences == self.expected_sequences
            and self.supported_partitions == self.expected_partitions
        )
        inequality = self.inequality_holds or not self.inequality_claimed
        return counts_agree and inequality and not self.verdict.exists and self.rechecked

    def to_record(self):
        record = {
            "kind": "fraenkel",
            "atoms": self.atoms,
            "e": self.e,
            "b": self.b,
            "supported_sequences": self.supported_sequences,
            "supported_partitions": self.supported_partitions,
            "inequality_claimed": self.inequality_claimed,
            "inequality_holds": self.inequality_holds,
            "injection_exists": self.verdict.exists,
            "rechecked": self.rechecked,
            "passed": self.passed,
        }
        if self.verdict.certificate is not None:
            record["certificate"] = self.verdict.certificate.to_record()
        return record


def check_bundle(atom_count, e, b):
    if atom_count > Config.BUNDLE_ATOM_LIMIT:
        raise LimitExceeded("atom count", atom_count, Config.BUNDLE_ATOM_LIMIT)
    if e < 0 or not 1 <= b < atom_count - e:
        raise PreconditionError(
            f"E size {e} with b={b} on {atom_count} atoms violates 1 <= b < atoms - e"
        )


def esize_report(atom_count, e, b):
    """Supported counts and the certifier's verdict for E = {0, ..., e-1}."""
    check_bundle(atom_count, e, b)

    atom_set = AtomSet.of_size(atom_count)
    support = Support.leading(e)
    group = fix_group(atom_set, support)

    sequences = supported_sequences(atom_set, support)
    partitions = supported_partitions(atom_set, support, b)

    X = list(enumerate_injective_sequences(atom_set.carrier))
    Y = list(bounded_partitions(atom_set, support, b))
    verdict = equivariant_injection_exists(X, Y, group)
    rechecked = verdict.exists or recheck_certificate(verdict.certificate, X, Y, group)

    report = EsizeReport(
        atoms=atom_count,
        e=e,
        b=b,
        supported_sequences=len(sequences),
        supported_partitions=len(partitions),
        expected_sequences=arrangement_count(e),
        expected_partitions=bell_count(e),
        verdict=verdict,
        rechecked=rechecked,
    )
    logger.info("fraenkel atoms=%d e=%d b=%d passed=%s", atom_count, e, b, report.passed)
    return report


@dataclass
class FraenkelBundle:
    reports: List[EsizeReport] = field(default_factory=list)

    @property
    def passed(self):
        return all(r.passed for r in self.reports)

    def to_records(self):
        return [r.to_record() for r in self.reports]


def fraenkel_report(atom_count, e_sizes, b):
    for e in e_sizes:
        check_bundle(atom_count, e, b)
    return FraenkelBundle([esize_report(atom_count, e, b) for e in sorted(set(e_sizes))])
