'''
This module decides whether simplicial complexes are chorded.

A face-minimal `d`-dimensional cycle that is not `d`-complete has a chord set
if extra `d`-faces split it into at least two cycles on fewer vertices such
that the extra faces are covered an even and the faces of the cycle an odd
number of times. A pure complex is `d`-chorded if all such cycles have a chord
set, and a complex is chorded if all its pure skeletons are.

Chord sets are searched exactly by enumerating the face-minimal cycles of the
complex spanned by the cycle and its candidate chords and selecting a family
of them with the answer set solver. A faster sufficient test checks whether
the cycle bounds inside the closure of the complex on its vertices.

Example
-------

```python-repl
>>> from chordx.chordality import is_chorded
>>> from chordx.instances import triangle_pair
>>> from chordx.complex import d_closure
>>> verdict = is_chorded(d_closure(triangle_pair()))
>>> verdict.verdict.value, verdict.failing.dim
('no', 3)
```
'''

from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
import logging

import networkx as nx

from .backend import solve_parity_cover
from .complex import (Face, SimplicialComplex, d_closure, face_mask, faces_of_dim, induced_subcomplex, is_d_complete,
                      pure_skeleton)
from .cycles import CycleCertificate, certify_cycle, enumerate_face_minimal_cycles, is_d_dimensional_cycle
from .errors import ChordSetViolation, EnumerationInfeasible, PreconditionError, PurityError
from .homology import Chain, is_boundary

__all__ = ['ChordSearch', 'ChordSetCertificate', 'ChordedVerdict', 'CycleVerdict', 'GraphChordality', 'Mode',
           'SearchCaps', 'SearchStatus', 'SkeletonVerdict', 'SpecialCycle', 'Verdict', 'boundary_certificate',
           'clique_complex', 'complex_to_graph', 'find_chord_set_exact', 'graph_complement', 'is_chordal_graph',
           'is_chorded', 'is_d_chorded', 'special_cycle_scan', 'verify_chord_set']

log = logging.getLogger(__name__)

CycleLike = Union[SimplicialComplex, CycleCertificate]


class Mode(Enum):
    '''
    How cycles are shown to have chord sets.
    '''
    EXACT = 'exact'
    '''
    Search chord sets exhaustively.
    '''
    BOUNDARY = 'boundary'
    '''
    Try the boundary certificate first and search exhaustively only if it
    fails.
    '''


class Verdict(Enum):
    '''
    A three-valued answer.
    '''
    YES = 'yes'
    NO = 'no'
    INCONCLUSIVE = 'inconclusive'

    @classmethod
    def combine(cls, verdicts: Iterable['Verdict']) -> 'Verdict':
        '''
        Conjoin verdicts; a single no decides, otherwise any inconclusive
        verdict makes the result inconclusive.
        '''
        result = cls.YES
        for verdict in verdicts:
            if verdict is cls.NO:
                return cls.NO
            if verdict is cls.INCONCLUSIVE:
                result = cls.INCONCLUSIVE
        return result


class SearchStatus(Enum):
    '''
    The outcome of an exact chord-set search.
    '''
    FOUND = 'found'
    EXHAUSTED = 'exhausted'
    INCONCLUSIVE = 'inconclusive'


@dataclass(frozen=True)
class SearchCaps:
    '''
    Bounds on the exact chord-set search.
    '''
    kernel_cap: int = 20
    '''
    The largest kernel dimension whose cycles are enumerated.
    '''
    chord_cap: int = 12
    '''
    The largest number of chords a chord set may have.
    '''
    family_cap: int = 256
    '''
    The largest number of candidate cycles handed to the solver.
    '''
    widen: bool = False
    '''
    Whether chords may be any `d`-faces of the complex instead of the faces
    on the vertices of the cycle.
    '''

    def to_dict(self) -> dict:
        '''
        Convert the caps into a JSON-compatible dictionary.
        '''
        return {'kernel_cap': self.kernel_cap, 'chord_cap': self.chord_cap, 'family_cap': self.family_cap,
                'widen': self.widen}


def _faces_dict(complex_: SimplicialComplex, faces: Iterable[Face]) -> List[List[str]]:
    return [[complex_.labels[v] for v in f] for f in faces]


@dataclass(frozen=True)
class ChordSetCertificate:
    '''
    A verified chord set of a cycle together with the decomposition it
    induces.
    '''
    ambient: SimplicialComplex
    cycle: SimplicialComplex
    chords: Tuple[Face, ...]
    parts: Tuple[SimplicialComplex, ...]

    def to_dict(self) -> dict:
        '''
        Convert the certificate into a JSON-compatible dictionary.
        '''
        return {'dimension': self.cycle.dim,
                'cycle': _faces_dict(self.cycle, self.cycle.facets),
                'chords': _faces_dict(self.cycle, self.chords),
                'parts': [_faces_dict(p, p.facets) for p in self.parts]}


@dataclass(frozen=True)
class ChordSearch:
    '''
    The result of an exact chord-set search with a transcript of the steps
    taken.
    '''
    status: SearchStatus
    certificate: Optional[ChordSetCertificate] = None
    transcript: Tuple[str, ...] = ()

    def to_dict(self) -> dict:
        '''
        Convert the search result into a JSON-compatible dictionary.
        '''
        return {'status': self.status.value,
                'certificate': None if self.certificate is None else self.certificate.to_dict(),
                'transcript': list(self.transcript)}


@dataclass(frozen=True)
class CycleVerdict:
    '''
    Whether a single face-minimal cycle has a chord set and how this was
    decided.
    '''
    cycle: CycleCertificate
    verdict: Verdict
    method: str
    '''
    Either `boundary` or `exact`.
    '''
    boundary: Optional[Chain] = None
    search: Optional[ChordSearch] = None

    def to_dict(self) -> dict:
        '''
        Convert the verdict into a JSON-compatible dictionary.
        '''
        result = {'cycle': self.cycle.to_dict(), 'verdict': self.verdict.value, 'method': self.method}
        if self.boundary is not None:
            result['boundary'] = _faces_dict(self.boundary.complex, self.boundary.support)
        if self.search is not None:
            result['search'] = self.search.to_dict()
        return result


@dataclass(frozen=True)
class SkeletonVerdict:
    '''
    Whether a pure `d`-dimensional complex is `d`-chorded.
    '''
    dim: int
    verdict: Verdict
    reason: str
    cycles: Tuple[CycleVerdict, ...] = ()
    '''
    The decided non-complete face-minimal cycles.
    '''
    kernel_dim: Optional[int] = None
    '''
    The kernel dimension blocking the enumeration, if any.
    '''

    @property
    def witness(self) -> Optional[CycleVerdict]:
        '''
        The first cycle without a chord set, if any.
        '''
        return next((c for c in self.cycles if c.verdict is Verdict.NO), None)

    def to_dict(self) -> dict:
        '''
        Convert the verdict into a JSON-compatible dictionary.
        '''
        return {'dimension': self.dim, 'verdict': self.verdict.value, 'reason': self.reason,
                'kernel_dimension': self.kernel_dim, 'cycles': [c.to_dict() for c in self.cycles]}


@dataclass(frozen=True)
class ChordedVerdict:
    '''
    Verdicts on the pure skeletons of a complex.
    '''
    complex: SimplicialComplex
    mode: Mode
    skeletons: Tuple[SkeletonVerdict, ...] = field(default=())

    @property
    def verdict(self) -> Verdict:
        '''
        The combined verdict of all skeletons.
        '''
        return Verdict.combine(s.verdict for s in self.skeletons)

    @property
    def failing(self) -> Optional[SkeletonVerdict]:
        '''
        The first skeleton that is not chorded, if any.
        '''
        return next((s for s in self.skeletons if s.verdict is Verdict.NO), None)

    def __getitem__(self, dim: int) -> SkeletonVerdict:
        for skeleton in self.skeletons:
            if skeleton.dim == dim:
                return skeleton
        raise KeyError(dim)

    def to_dict(self) -> dict:
        '''
        Convert the verdict into a JSON-compatible dictionary.
        '''
        return {'verdict': self.verdict.value, 'mode': self.mode.value,
                'skeletons': [s.to_dict() for s in self.skeletons]}


@dataclass(frozen=True)
class SpecialCycle:
    '''
    A 1-complete, face-minimal, non-complete cycle of a skeleton of a closure
    together with the outcome of its chord-set search.
    '''
    cycle: CycleCertificate
    search: ChordSearch

    def to_dict(self) -> dict:
        '''
        Convert the entry into a JSON-compatible dictionary.
        '''
        return {'cycle': self.cycle.to_dict(), 'search': self.search.to_dict()}


def _as_complex(cycle: CycleLike) -> SimplicialComplex:
    return cycle.cycle if isinstance(cycle, CycleCertificate) else cycle


def verify_chord_set(ambient: SimplicialComplex, cycle: CycleLike, chords: Iterable[Iterable[int]],
                     parts: Sequence[CycleLike]) -> ChordSetCertificate:
    '''
    Verify the defining properties of a chord set.

    Parameters
    ----------
    ambient
        The complex containing the cycle and the chords.
    cycle
        A `d`-dimensional cycle of the ambient complex.
    chords
        `d`-faces of the ambient complex not belonging to the cycle.
    parts
        The cycles the chords decompose the cycle into.

    Returns
    -------
    The certificate.

    Raises
    ------
    ChordSetViolation
        With `number` 0 if the input is malformed and 1 to 4 for the violated
        property: (1) the parts are at least two distinct `d`-dimensional
        cycles whose faces are exactly the chords and the faces of the cycle,
        (2) every chord lies in an even number of parts, (3) every face of the
        cycle lies in an odd number of parts, and (4) every part has fewer
        vertices than the cycle.
    '''
    omega = _as_complex(cycle)
    d = omega.dim
    if not omega.is_pure or d < 1 or not is_d_dimensional_cycle(omega):
        raise ChordSetViolation(0, f'{omega} is not a d-dimensional cycle')
    for face in omega.facets:
        if not ambient.has_face(face):
            raise ChordSetViolation(0, 'the cycle is not contained in the ambient complex', face)
    chord_set = sorted({tuple(sorted(c)) for c in chords})
    for face in chord_set:
        if len(face) != d + 1 or not ambient.has_face(face):
            raise ChordSetViolation(0, f'chords must be {d}-faces of the ambient complex', face)
        if face in omega.facets:
            raise ChordSetViolation(0, 'chords must not belong to the cycle', face)

    pieces = [_as_complex(p) for p in parts]
    if len(pieces) < 2:
        raise ChordSetViolation(1, 'a chord set decomposes the cycle into at least two cycles')
    if len({p.facets for p in pieces}) != len(pieces):
        raise ChordSetViolation(1, 'the cycles of the decomposition must be distinct')
    for piece in pieces:
        if not piece.is_pure or piece.dim != d or not is_d_dimensional_cycle(piece):
            witness = piece.facets[0] if piece.facets else None
            raise ChordSetViolation(1, f'{piece} is not a {d}-dimensional cycle', witness)
    union = {f for p in pieces for f in p.facets}
    expected = set(chord_set) | set(omega.facets)
    if union != expected:
        raise ChordSetViolation(1, 'the cycles do not consist of the chords and the faces of the cycle',
                                min(union ^ expected))

    def count(face: Face) -> int:
        return sum(1 for p in pieces if face in p.facets)

    for face in chord_set:
        if count(face) % 2:
            raise ChordSetViolation(2, 'a chord lies in an odd number of cycles', face)
    for face in omega.facets:
        if count(face) % 2 == 0:
            raise ChordSetViolation(3, 'a face of the cycle lies in an even number of cycles', face)
    size = len(omega.vertices)
    for piece in pieces:
        if len(piece.vertices) >= size:
            raise ChordSetViolation(4, f'{piece} does not have fewer vertices than the cycle', piece.vertices)
    return ChordSetCertificate(ambient, omega, tuple(chord_set), tuple(sorted(pieces, key=lambda p: p.facets)))


def _check_cycle(ambient: SimplicialComplex, omega: SimplicialComplex) -> CycleCertificate:
    for face in omega.facets:
        if not ambient.has_face(face):
            raise PreconditionError('support', f'{omega.label(face)} is not a face of the ambient complex')
    certificate = certify_cycle(omega)
    if not certificate.face_minimal:
        raise PreconditionError('face-minimal', f'{omega} is not face-minimal')
    if certificate.d_complete:
        raise PreconditionError('complete', f'{omega} is {certificate.dim}-complete')
    return certificate


def find_chord_set_exact(ambient: SimplicialComplex, cycle: CycleLike,
                         caps: SearchCaps = SearchCaps()) -> ChordSearch:
    '''
    Search a chord set of a cycle exhaustively.

    The candidate chords are the `d`-faces of the ambient complex on the
    vertices of the cycle that do not belong to it. The face-minimal cycles
    formed by the candidates and the cycle with fewer vertices than the cycle
    are enumerated, and a family of them with the required parities is
    selected by the answer set solver. Restricting to distinct face-minimal
    cycles loses no chord set because every decomposition can be refined into
    one of this form.

    Parameters
    ----------
    ambient
        The complex providing the chords.
    cycle
        A face-minimal, non-complete cycle of the ambient complex.
    caps
        Bounds on the search.

    Returns
    -------
    The search result; it is `exhausted` only if all candidate chords were
    admissible and `inconclusive` if a cap was hit.
    '''
    omega = _as_complex(cycle)
    _check_cycle(ambient, omega)
    d = omega.dim
    transcript: List[str] = []

    def note(msg: str, *args):
        text = msg % args
        log.debug('chord search on %s: %s', omega, text)
        transcript.append(text)

    own = set(omega.facets)
    allowed = omega.vertex_mask
    candidates = [f for f in faces_of_dim(ambient, d)
                  if f not in own and (caps.widen or face_mask(f) & ~allowed == 0)]
    note('%d candidate chords', len(candidates))

    spanned = SimplicialComplex.from_faces(candidates + list(omega.facets), ambient.n_vertices, ambient.labels)
    try:
        circuits = enumerate_face_minimal_cycles(spanned, d, caps.kernel_cap)
    except EnumerationInfeasible as err:
        note('kernel dimension %d exceeds the cap %d', err.kernel_dim, err.cap)
        return ChordSearch(SearchStatus.INCONCLUSIVE, transcript=tuple(transcript))
    size = len(omega.vertices)
    smaller = [c for c in circuits if len(c.vertices) < size]
    note('%d face-minimal cycles, %d on fewer vertices', len(circuits), len(smaller))
    if len(smaller) > caps.family_cap:
        note('family of %d cycles exceeds the cap %d', len(smaller), caps.family_cap)
        return ChordSearch(SearchStatus.INCONCLUSIVE, transcript=tuple(transcript))

    items = {f: i for i, f in enumerate(faces_of_dim(spanned, d))}
    sets = [face_mask(items[f] for f in c.faces) for c in smaller]
    odd = face_mask(items[f] for f in omega.facets)
    even = face_mask(items[f] for f in candidates)
    selection = solve_parity_cover(sets, odd, even, caps.chord_cap, 2)
    if selection is not None:
        parts = [smaller[j].cycle for j in selection]
        chords = sorted({f for p in parts for f in p.facets} - own)
        note('selected %d cycles with %d chords', len(parts), len(chords))
        certificate = verify_chord_set(ambient, omega, chords, parts)
        return ChordSearch(SearchStatus.FOUND, certificate, tuple(transcript))
    if len(candidates) <= caps.chord_cap:
        note('no chord set exists')
        return ChordSearch(SearchStatus.EXHAUSTED, transcript=tuple(transcript))
    note('no chord set with at most %d chords', caps.chord_cap)
    return ChordSearch(SearchStatus.INCONCLUSIVE, transcript=tuple(transcript))


def _closure_on(ambient: SimplicialComplex, d: int, vertices: Iterable[int]) -> SimplicialComplex:
    vertices = tuple(vertices)
    restricted = pure_skeleton(induced_subcomplex(ambient, vertices), d)
    return induced_subcomplex(d_closure(restricted, d), vertices)


def boundary_certificate(ambient: SimplicialComplex, cycle: CycleLike,
                         closure: Optional[SimplicialComplex] = None) -> Optional[Chain]:
    '''
    Check whether a cycle bounds in the `d`-closure of the ambient complex
    restricted to the vertices of the cycle.

    A bounding chain implies that the cycle has a chord set.

    Parameters
    ----------
    ambient
        The complex containing the cycle.
    cycle
        A face-minimal, non-complete `d`-dimensional cycle.
    closure
        The restricted closure if already computed.

    Returns
    -------
    A `(d+1)`-chain bounding the cycle or `None`.
    '''
    omega = _as_complex(cycle)
    d = omega.dim
    for face in omega.facets:
        if not ambient.has_face(face):
            raise PreconditionError('support', f'{omega.label(face)} is not a face of the ambient complex')
    if closure is None:
        closure = _closure_on(ambient, d, omega.vertices)
    return is_boundary(closure, Chain(closure, d, omega.facets))


def _decide_cycle(ambient: SimplicialComplex, cycle: CycleCertificate, mode: Mode, caps: SearchCaps,
                  closures: Dict[int, SimplicialComplex]) -> CycleVerdict:
    if mode is Mode.BOUNDARY:
        key = cycle.cycle.vertex_mask
        if key not in closures:
            closures[key] = _closure_on(ambient, cycle.dim, cycle.vertices)
        chain = boundary_certificate(ambient, cycle, closures[key])
        if chain is not None:
            return CycleVerdict(cycle, Verdict.YES, 'boundary', boundary=chain)
        log.debug('%s is not boundary-certified, escalating', cycle)
    search = find_chord_set_exact(ambient, cycle, caps)
    verdict = {SearchStatus.FOUND: Verdict.YES,
               SearchStatus.EXHAUSTED: Verdict.NO,
               SearchStatus.INCONCLUSIVE: Verdict.INCONCLUSIVE}[search.status]
    return CycleVerdict(cycle, verdict, 'exact', search=search)


def _skeleton_verdict(complex_: SimplicialComplex, mode: Mode, caps: SearchCaps) -> SkeletonVerdict:
    if not complex_.is_pure:
        raise PurityError('d-chordedness is defined for pure complexes')
    d = complex_.dim
    if d < 1:
        raise PreconditionError('dimension', 'd-chordedness requires dimension at least 1')
    if is_d_complete(complex_, d):
        return SkeletonVerdict(d, Verdict.YES, f'{d}-complete')
    try:
        cycles = enumerate_face_minimal_cycles(complex_, d, caps.kernel_cap)
    except EnumerationInfeasible as err:
        return SkeletonVerdict(d, Verdict.INCONCLUSIVE, str(err), kernel_dim=err.kernel_dim)
    closures: Dict[int, SimplicialComplex] = {}
    decided = []
    for cycle in cycles:
        if cycle.d_complete:
            continue
        result = _decide_cycle(complex_, cycle, mode, caps, closures)
        decided.append(result)
        if result.verdict is Verdict.NO:
            return SkeletonVerdict(d, Verdict.NO, f'{cycle} has no chord set', tuple(decided))
    verdict = Verdict.combine(c.verdict for c in decided)
    reason = 'all face-minimal cycles have chord sets' if verdict is Verdict.YES else 'search caps reached'
    return SkeletonVerdict(d, verdict, reason, tuple(decided))


def is_d_chorded(complex_: SimplicialComplex, mode: Mode = Mode.BOUNDARY,
                 caps: SearchCaps = SearchCaps()) -> ChordedVerdict:
    '''
    Decide whether a pure `d`-dimensional complex is `d`-chorded.

    Parameters
    ----------
    complex_
        A pure complex of dimension at least one.
    mode
        How chord sets are established. In boundary mode, cycles without a
        bounding chain are searched exhaustively.
    caps
        Bounds on the exact search.

    Returns
    -------
    The verdict with a single skeleton entry. A no-verdict carries a cycle
    without a chord set and the transcript of its search.
    '''
    skeleton = _skeleton_verdict(complex_, mode, caps)
    log.info('%d-chorded: %s (%s)', skeleton.dim, skeleton.verdict.value, skeleton.reason)
    return ChordedVerdict(complex_, mode, (skeleton,))


def is_chorded(complex_: SimplicialComplex, mode: Mode = Mode.BOUNDARY,
               caps: SearchCaps = SearchCaps()) -> ChordedVerdict:
    '''
    Decide whether all pure `d`-skeletons of a complex with `d >= 1` are
    `d`-chorded.
    '''
    skeletons = []
    for d in range(1, complex_.dim + 1):
        skeleton = _skeleton_verdict(pure_skeleton(complex_, d), mode, caps)
        log.info('%d-chorded: %s (%s)', d, skeleton.verdict.value, skeleton.reason)
        skeletons.append(skeleton)
    return ChordedVerdict(complex_, mode, tuple(skeletons))


def special_cycle_scan(complex_: SimplicialComplex, d: int,
                       caps: SearchCaps = SearchCaps()) -> List[SpecialCycle]:
    '''
    List the 1-complete, face-minimal, non-complete cycles of the pure
    `m`-skeletons of a `d`-closure for all `m > d` and search their chord sets.

    Parameters
    ----------
    complex_
        A complex equal to the `d`-closure of its pure `d`-skeleton.
    d
        The dimension of the skeleton the complex is the closure of.
    caps
        Bounds on the enumeration and the searches.

    Returns
    -------
    The cycles with their search results ordered by dimension and faces.
    '''
    if d < 0 or d > complex_.dim:
        raise PreconditionError('closure', f'no faces of dimension {d}')
    if d_closure(pure_skeleton(complex_, d), d) != complex_:
        raise PreconditionError('closure', f'the complex is not the {d}-closure of its pure {d}-skeleton')
    result = []
    for m in range(d + 1, complex_.dim + 1):
        skeleton = pure_skeleton(complex_, m)
        for cycle in enumerate_face_minimal_cycles(skeleton, m, caps.kernel_cap):
            if cycle.one_complete and not cycle.d_complete:
                search = find_chord_set_exact(skeleton, cycle, caps)
                log.info('special %d-cycle %s: %s', m, cycle, search.status.value)
                result.append(SpecialCycle(cycle, search))
    return result


# ------------------------------------------------------------------------------


@dataclass(frozen=True)
class GraphChordality:
    '''
    The answer of the chordal graph oracle with its witness.
    '''
    chordal: bool
    order: Tuple[int, ...] = ()
    '''
    A perfect elimination order if the graph is chordal.
    '''
    cycle: Tuple[int, ...] = ()
    '''
    A chordless cycle of length at least four otherwise.
    '''

    def __bool__(self) -> bool:
        return self.chordal


def _check_graph(graph: SimplicialComplex):
    if graph.dim > 1:
        raise ValueError('expected a graph, i.e., a complex of dimension at most 1')


def complex_to_graph(graph: SimplicialComplex) -> nx.Graph:
    '''
    Convert a complex of dimension at most one into a networkx graph on its
    ground set.
    '''
    _check_graph(graph)
    result = nx.Graph()
    result.add_nodes_from(range(graph.n_vertices))
    result.add_edges_from(faces_of_dim(graph, 1))
    return result


def graph_complement(graph: SimplicialComplex) -> SimplicialComplex:
    '''
    Return the complement of a graph on the same ground set.

    Vertices of the ground set are vertices of the complement.
    '''
    _check_graph(graph)
    n = graph.n_vertices
    missing = [e for e in combinations(range(n), 2) if not graph.has_face(e)]
    return SimplicialComplex.from_faces(missing + [(v,) for v in range(n)], n, graph.labels)


def clique_complex(graph: SimplicialComplex) -> SimplicialComplex:
    '''
    Return the clique complex of a graph, its 1-closure.
    '''
    _check_graph(graph)
    edges = SimplicialComplex.from_faces(faces_of_dim(graph, 1), graph.n_vertices, graph.labels)
    return d_closure(edges, 1)


def _max_cardinality_order(graph: nx.Graph) -> List[int]:
    weight = {v: 0 for v in graph}
    order: List[int] = []
    while weight:
        v = min(weight, key=lambda u: (-weight[u], u))
        del weight[v]
        order.append(v)
        for u in graph[v]:
            if u in weight:
                weight[u] += 1
    order.reverse()
    return order


def _chordless_cycle(graph: nx.Graph) -> Tuple[int, ...]:
    for x in sorted(graph):
        nbrs = sorted(graph[x])
        for a, b in combinations(nbrs, 2):
            if graph.has_edge(a, b):
                continue
            blocked = (set(nbrs) | {x}) - {a, b}
            view = graph.subgraph(v for v in graph if v not in blocked)
            try:
                path = nx.shortest_path(view, a, b)
            except nx.NetworkXNoPath:
                continue
            return (x,) + tuple(path)
    raise ValueError('graph is chordal')


def is_chordal_graph(graph: SimplicialComplex) -> GraphChordality:
    '''
    Decide whether a graph is chordal.

    A maximum cardinality search yields a candidate elimination order which
    is checked to be perfect. If it is not, a chordless cycle is extracted.

    Parameters
    ----------
    graph
        A complex of dimension at most one.

    Returns
    -------
    The answer with a perfect elimination order or a chordless cycle.
    '''
    g = complex_to_graph(graph)
    order = _max_cardinality_order(g)
    position = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [u for u in g[v] if position[u] > position[v]]
        if not later:
            continue
        first = min(later, key=position.__getitem__)
        if any(u != first and not g.has_edge(first, u) for u in later):
            return GraphChordality(False, cycle=_chordless_cycle(g))
    return GraphChordality(True, order=tuple(order))
