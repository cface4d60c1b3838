'''
This module decides whether square-free monomial ideals have linear
resolutions over fields of characteristic 2.

Two independent routes are provided. The homological route sweeps the
reduced homology of all induced subcomplexes of the Stanley-Reisner complex.
The combinatorial route decides whether the Stanley-Reisner complex is
chorded. The `criterion_report` runs both and records whether they agree.

Example
-------

```python-repl
>>> from chordx.ideal import parse_ideal
>>> from chordx.resolution import betti_table, has_linear_resolution
>>> ideal = parse_ideal('x0*x1*x2\\nx3*x4*x5')
>>> result = has_linear_resolution(ideal)
>>> result.linear, result.witness.index
(False, 3)
>>> print(betti_table(ideal).format())
   3 4 5
0: 2 . .
1: . . 1
```
'''

from typing import Dict, Iterator, List, Optional, Sequence, Tuple
from concurrent.futures import Executor
from dataclasses import dataclass, field
from itertools import combinations, repeat
import logging

from .chordality import (ChordedVerdict, GraphChordality, Mode, SearchCaps, SearchStatus, SkeletonVerdict,
                         SpecialCycle, Verdict, clique_complex, graph_complement, is_chordal_graph, is_chorded,
                         is_d_chorded, special_cycle_scan)
from .complex import SimplicialComplex, d_closure, d_complement, face_mask, mask_face, pure_skeleton
from .errors import EnumerationInfeasible, InfeasibleError
from .homology import InducedHomology
from .ideal import MonomialIdeal, edge_ideal, facet_complex, ideal_to_dict, stanley_reisner_complex

__all__ = ['BettiTable', 'CrosscheckRecord', 'LinearityResult', 'LinearityWitness', 'NecessaryCondition',
           'ResolutionReport', 'SWEEP_LIMIT', 'betti_table', 'criterion_report', 'froeberg_crosscheck',
           'has_linear_resolution', 'one_direction_check']

log = logging.getLogger(__name__)

SWEEP_LIMIT = 20
'''
The default bound on the number of variables for sweeps over all subsets.
'''

_CHUNK = 64


@dataclass(frozen=True)
class LinearityWitness:
    '''
    A vertex set whose induced subcomplex has nonzero reduced homology in a
    dimension forbidden for linear resolutions.
    '''
    subset: Tuple[int, ...]
    index: int
    dim: int

    def to_dict(self, labels: Sequence[str]) -> dict:
        '''
        Convert the witness into a JSON-compatible dictionary.
        '''
        return {'subset': [labels[v] for v in self.subset], 'index': self.index, 'dimension': self.dim}


@dataclass(frozen=True)
class LinearityResult:
    '''
    Whether an ideal has a linear resolution, with a witness if it has not.
    '''
    linear: bool
    degree: Optional[int]
    '''
    The generation degree; `None` for the zero ideal.
    '''
    witness: Optional[LinearityWitness] = None

    def __bool__(self) -> bool:
        return self.linear


def _check_size(n: int, limit: int):
    if n > limit:
        raise InfeasibleError(f'{n} variables exceed the sweep limit of {limit}')


def _ordered_subsets(n: int, start: int = 1) -> List[int]:
    return [face_mask(c) for size in range(start, n + 1) for c in combinations(range(n), size)]


def _sweep_chunk(complex_: SimplicialComplex, masks: Sequence[int]) -> List[List[int]]:
    homology = InducedHomology(complex_)
    return [homology.dims(m) for m in masks]


def _sweep(complex_: SimplicialComplex, masks: List[int],
           executor: Optional[Executor] = None) -> Iterator[Tuple[int, List[int]]]:
    '''
    Yield the reduced Betti numbers of the induced subcomplexes in the order
    of the given masks.
    '''
    if executor is None:
        homology = InducedHomology(complex_)
        for mask in masks:
            yield mask, homology.dims(mask)
        return
    chunks = [masks[i:i + _CHUNK] for i in range(0, len(masks), _CHUNK)]
    for chunk, dims in zip(chunks, executor.map(_sweep_chunk, repeat(complex_), chunks)):
        yield from zip(chunk, dims)


def has_linear_resolution(ideal: MonomialIdeal, limit: int = SWEEP_LIMIT,
                          executor: Optional[Executor] = None) -> LinearityResult:
    '''
    Decide whether an ideal generated in degree `t` has a linear resolution
    over GF(2).

    This is the case if and only if the reduced homology of every induced
    subcomplex of the Stanley-Reisner complex vanishes outside of dimension
    `t-2`. Vertex sets are visited by size and then by bitmask, so the
    witness is the first failing set in this order.

    Parameters
    ----------
    ideal
        An ideal generated in a single degree.
    limit
        The largest number of variables to sweep.
    executor
        An optional executor to distribute the sweep.

    Returns
    -------
    The result with a witness if the resolution is not linear.
    '''
    if not ideal.generators:
        return LinearityResult(True, None)
    t = ideal.generation_degree
    _check_size(ideal.n_variables, limit)
    complex_ = stanley_reisner_complex(ideal)
    # vertex sets with fewer than t elements induce simplices
    masks = _ordered_subsets(ideal.n_variables, t if t >= 2 else 1)
    log.debug('sweeping %d vertex sets of %s', len(masks), ideal)
    for mask, dims in _sweep(complex_, masks, executor):
        for i, dim in enumerate(dims, -1):
            if dim and i != t - 2:
                return LinearityResult(False, t, LinearityWitness(mask_face(mask), i, dim))
    return LinearityResult(True, t)


@dataclass(frozen=True)
class BettiTable:
    '''
    Graded Betti numbers `β_{i,j}` over GF(2); absent entries are zero.
    '''
    entries: Dict[Tuple[int, int], int] = field(default_factory=dict)

    def __getitem__(self, key: Tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def is_linear(self) -> bool:
        '''
        Whether all nonzero Betti numbers lie on a single diagonal `j - i`.
        '''
        return len({j - i for i, j in self.entries}) <= 1

    def format(self) -> str:
        '''
        Format the table with rows `i` and columns `j - i`.
        '''
        if not self.entries:
            return '0'
        rows = range(max(i for i, _ in self.entries) + 1)
        shifts = [j - i for i, j in self.entries]
        cols = range(min(shifts), max(shifts) + 1)
        cells = [[str(self[i, i + k]) if self[i, i + k] else '.' for k in cols] for i in rows]
        width = max(len(str(k)) for k in cols)
        width = max([width] + [len(c) for row in cells for c in row])
        prefix = len(f'{rows[-1]}: ')
        lines = [' ' * prefix + ' '.join(str(k).rjust(width) for k in cols)]
        for i, row in zip(rows, cells):
            lines.append(f'{i}: '.rjust(prefix) + ' '.join(c.rjust(width) for c in row))
        return '\n'.join(lines)

    def to_dict(self) -> dict:
        '''
        Convert the table into a JSON-compatible dictionary.
        '''
        return {'entries': [[i, j, b] for (i, j), b in sorted(self.entries.items())]}


def betti_table(ideal: MonomialIdeal, limit: int = SWEEP_LIMIT, executor: Optional[Executor] = None) -> BettiTable:
    '''
    Compute the graded Betti numbers of an ideal over GF(2).

    The number `β_{i,j}` is the sum of the reduced Betti numbers in dimension
    `j-i-2` of the subcomplexes of the Stanley-Reisner complex induced on
    vertex sets of size `j`.

    Parameters
    ----------
    ideal
        The ideal.
    limit
        The largest number of variables to sweep.
    executor
        An optional executor to distribute the sweep.

    Returns
    -------
    The table.
    '''
    _check_size(ideal.n_variables, limit)
    complex_ = stanley_reisner_complex(ideal)
    entries: Dict[Tuple[int, int], int] = {}
    for mask, dims in _sweep(complex_, _ordered_subsets(ideal.n_variables), executor):
        j = bin(mask).count('1')
        for h, dim in enumerate(dims, -1):
            i = j - h - 2
            if dim and i >= 0:
                entries[i, j] = entries.get((i, j), 0) + dim
    return BettiTable(entries)


# ------------------------------------------------------------------------------


@dataclass(frozen=True)
class NecessaryCondition:
    '''
    Whether a complex is the `d`-closure of its pure `d`-skeleton and the
    skeleton is `d`-chorded. Both hold whenever the Stanley-Reisner ideal has
    a `(d+1)`-linear resolution.
    '''
    closure_equal: bool
    skeleton: Optional[SkeletonVerdict]

    @property
    def verdict(self) -> Verdict:
        '''
        Whether both conditions hold.
        '''
        if not self.closure_equal:
            return Verdict.NO
        return Verdict.YES if self.skeleton is None else self.skeleton.verdict

    def to_dict(self) -> dict:
        '''
        Convert the result into a JSON-compatible dictionary.
        '''
        return {'closure_equal': self.closure_equal, 'verdict': self.verdict.value,
                'skeleton': None if self.skeleton is None else self.skeleton.to_dict()}


def _skeleton_of(complex_: SimplicialComplex, d: int, mode: Mode, caps: SearchCaps) -> Optional[SkeletonVerdict]:
    if d < 1 or d > complex_.dim:
        return None
    return is_d_chorded(pure_skeleton(complex_, d), mode, caps).skeletons[0]


def one_direction_check(complex_: SimplicialComplex, d: int, mode: Mode = Mode.BOUNDARY,
                        caps: SearchCaps = SearchCaps()) -> NecessaryCondition:
    '''
    Check that a complex is the `d`-closure of its pure `d`-skeleton and that
    this skeleton is `d`-chorded.

    Skeletons of dimension zero or above the dimension of the complex count
    as chorded.
    '''
    if d > complex_.dim:
        skeleton = SimplicialComplex.from_faces([], complex_.n_vertices, complex_.labels)
    else:
        skeleton = pure_skeleton(complex_, d)
    closure_equal = d_closure(skeleton, d) == complex_
    return NecessaryCondition(closure_equal, _skeleton_of(complex_, d, mode, caps) if closure_equal else None)


def _special_verdict(special: Sequence[SpecialCycle]) -> Verdict:
    status = {s.search.status for s in special}
    if SearchStatus.EXHAUSTED in status:
        return Verdict.NO
    if SearchStatus.INCONCLUSIVE in status:
        return Verdict.INCONCLUSIVE
    return Verdict.YES


def _from_dim(verdict: ChordedVerdict, d: int) -> Verdict:
    return Verdict.combine(s.verdict for s in verdict.skeletons if s.dim >= d)


@dataclass(frozen=True)
class ResolutionReport:
    '''
    The verdicts of the homological and the combinatorial criteria for linear
    resolutions over fields of characteristic 2.

    The verdict keys are `homology` (the subset sweep), `chorded` (the
    Stanley-Reisner complex is chorded), `skeletons` (its pure `m`-skeletons
    are `m`-chorded for `m >= d`), `complement_closure` and
    `complement_skeletons` (the same for the `d`-closure of the
    `d`-complement of the facet complex), and `special_cycles` (the `d`-skeleton
    is `d`-chorded and all special cycles have chord sets).
    '''
    ideal: MonomialIdeal
    degree: Optional[int]
    linear: LinearityResult
    verdicts: Dict[str, Verdict]
    chorded: ChordedVerdict
    complement: Optional[ChordedVerdict]
    '''
    The verdict on the closure of the complement if it differs from the
    Stanley-Reisner complex.
    '''
    special: Tuple[SpecialCycle, ...]
    necessary: NecessaryCondition
    mode: Mode = Mode.BOUNDARY
    caps: SearchCaps = SearchCaps()
    notes: Tuple[str, ...] = ()

    @property
    def disagreements(self) -> List[str]:
        '''
        The criteria whose conclusive verdicts differ from the homological
        one.
        '''
        expected = Verdict.YES if self.linear else Verdict.NO
        result = [k for k, v in self.verdicts.items() if v is not Verdict.INCONCLUSIVE and v is not expected]
        if self.linear and self.necessary.verdict is Verdict.NO:
            result.append('necessary_condition')
        return result

    @property
    def agreement(self) -> bool:
        '''
        Whether all conclusive criteria agree.
        '''
        return not self.disagreements

    @property
    def conclusive(self) -> bool:
        '''
        Whether all criteria were decided.
        '''
        return all(v is not Verdict.INCONCLUSIVE for v in self.verdicts.values())

    def to_dict(self) -> dict:
        '''
        Convert the report into a JSON-compatible dictionary.
        '''
        labels = self.ideal.labels
        return {'characteristic': 2,
                'ideal': ideal_to_dict(self.ideal),
                'degree': self.degree,
                'linear': self.linear.linear,
                'witness': None if self.linear.witness is None else self.linear.witness.to_dict(labels),
                'verdicts': {k: v.value for k, v in self.verdicts.items()},
                'agreement': self.agreement,
                'disagreements': self.disagreements,
                'chorded': self.chorded.to_dict(),
                'complement': None if self.complement is None else self.complement.to_dict(),
                'special_cycles': [s.to_dict() for s in self.special],
                'necessary_condition': self.necessary.to_dict(),
                'mode': self.mode.value,
                'caps': self.caps.to_dict(),
                'notes': list(self.notes)}

    def format(self) -> str:
        '''
        Summarize the report as text.
        '''
        lines = [f'ideal {self.ideal} over a field of characteristic 2',
                 f'generation degree: {self.degree}',
                 f'linear resolution: {"yes" if self.linear else "no"}']
        if self.linear.witness is not None:
            w = self.linear.witness
            subset = ' '.join(self.ideal.labels[v] for v in w.subset)
            lines.append(f'  witness: reduced homology of rank {w.dim} in degree {w.index} on {{{subset}}}')
        for key, verdict in self.verdicts.items():
            lines.append(f'{key}: {verdict.value}')
        failing = self.chorded.failing
        if failing is not None and failing.witness is not None:
            lines.append(f'  not {failing.dim}-chorded: face-minimal cycle {failing.witness.cycle} has no chord set')
        for entry in self.special:
            lines.append(f'  special {entry.cycle.dim}-cycle {entry.cycle}: {entry.search.status.value}')
        lines.append(f'necessary condition: {self.necessary.verdict.value}')
        lines.extend(self.notes)
        lines.append('agreement: ' + ('yes' if self.agreement else 'no (' + ', '.join(self.disagreements) + ')'))
        return '\n'.join(lines)


def criterion_report(ideal: MonomialIdeal, mode: Mode = Mode.BOUNDARY, caps: SearchCaps = SearchCaps(),
                     limit: int = SWEEP_LIMIT, executor: Optional[Executor] = None) -> ResolutionReport:
    '''
    Run all criteria for a linear resolution of an ideal generated in a
    single degree.

    Parameters
    ----------
    ideal
        An ideal generated in degree `d+1`.
    mode
        How chord sets are established.
    caps
        Bounds on the chord-set searches.
    limit
        The largest number of variables to sweep.
    executor
        An optional executor to distribute the subset sweep.

    Returns
    -------
    The report; inconclusive verdicts are kept as such.
    '''
    linear = has_linear_resolution(ideal, limit, executor)
    complex_ = stanley_reisner_complex(ideal)
    d = (linear.degree or 1) - 1
    notes: List[str] = []

    chorded = is_chorded(complex_, mode, caps)
    upsilon = d_complement(facet_complex(ideal), d)
    closure = d_closure(upsilon, d)
    complement = None
    if closure == complex_:
        complement_verdict = chorded
    else:
        notes.append('the closure of the complement differs from the Stanley-Reisner complex')
        complement = complement_verdict = is_chorded(closure, mode, caps)

    special: Tuple[SpecialCycle, ...] = ()
    special_verdict = Verdict.INCONCLUSIVE
    try:
        if 1 <= d < complex_.dim:
            special = tuple(special_cycle_scan(complex_, d, caps))
        base = _skeleton_of(complex_, d, mode, caps)
        special_verdict = Verdict.combine([base.verdict if base is not None else Verdict.YES,
                                           _special_verdict(special)])
    except EnumerationInfeasible as err:
        notes.append(f'special cycle scan: {err}')

    verdicts = {'homology': Verdict.YES if linear else Verdict.NO,
                'chorded': chorded.verdict,
                'skeletons': _from_dim(chorded, d),
                'complement_closure': complement_verdict.verdict,
                'complement_skeletons': _from_dim(complement_verdict, d),
                'special_cycles': special_verdict}
    necessary = one_direction_check(complex_, d, mode, caps) if d >= 1 else NecessaryCondition(True, None)
    report = ResolutionReport(ideal, linear.degree, linear, verdicts, chorded, complement, special, necessary,
                              mode, caps, tuple(notes))
    log.info('report for %s: linear=%s agreement=%s', ideal, linear.linear, report.agreement)
    return report


# ------------------------------------------------------------------------------


@dataclass(frozen=True)
class CrosscheckRecord:
    '''
    The outcome of comparing linear resolutions of the edge ideal of the
    complement of a graph with the chordality of the graph.
    '''
    graph: SimplicialComplex
    chordal: GraphChordality
    linear: LinearityResult
    chorded: Optional[Verdict] = None
    '''
    Whether the clique complex is chorded, if computed.
    '''

    @property
    def agrees(self) -> bool:
        '''
        Whether the oracles agree.
        '''
        if self.linear.linear != self.chordal.chordal:
            return False
        if self.chorded is None or self.chorded is Verdict.INCONCLUSIVE:
            return True
        return (self.chorded is Verdict.YES) == self.chordal.chordal

    def to_dict(self) -> dict:
        '''
        Convert the record into a JSON-compatible dictionary.
        '''
        labels = self.graph.labels
        return {'edges': [[labels[u], labels[v]] for u, v in (f for f in self.graph.facets if len(f) == 2)],
                'chordal': self.chordal.chordal,
                'linear': self.linear.linear,
                'chorded': None if self.chorded is None else self.chorded.value,
                'agrees': self.agrees}


def froeberg_crosscheck(graph: SimplicialComplex, limit: int = SWEEP_LIMIT, chorded: bool = False,
                        mode: Mode = Mode.BOUNDARY, caps: SearchCaps = SearchCaps()) -> CrosscheckRecord:
    '''
    Compare whether the edge ideal of the complement of a graph has a linear
    resolution with whether the graph is chordal.

    Parameters
    ----------
    graph
        A complex of dimension at most one.
    limit
        The largest number of vertices to sweep.
    chorded
        Whether to also decide if the clique complex of the graph is chorded.
    mode
        How chord sets are established.
    caps
        Bounds on the chord-set searches.

    Returns
    -------
    The record of both answers.
    '''
    ideal = edge_ideal(graph_complement(graph))
    linear = has_linear_resolution(ideal, limit)
    oracle = is_chordal_graph(graph)
    verdict = is_chorded(clique_complex(graph), mode, caps).verdict if chorded else None
    return CrosscheckRecord(graph, oracle, linear, verdict)
