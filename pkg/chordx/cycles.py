'''
This module recognizes and enumerates `d`-dimensional cycles.

A `d`-dimensional cycle is a pure, `d`-path-connected complex in which every
`(d-1)`-face lies in an even number of `d`-faces. Face-minimal cycles are
exactly the minimal nonzero supports of the kernel of the boundary operator,
which is how they are enumerated.

Example
-------

```python-repl
>>> from chordx.complex import SimplicialComplex
>>> from chordx.cycles import enumerate_face_minimal_cycles
>>> gamma = SimplicialComplex.from_labeled(['125', '235', '345', '145', '126', '236', '346', '146',
...                                        '123', '134'])
>>> [len(c.faces) for c in enumerate_face_minimal_cycles(gamma, 2)]
[6, 6, 8]
```
'''

from typing import Dict, Iterable, List, Sequence, Tuple
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
import logging

import numpy as np

from .complex import (Face, SimplicialComplex, face_mask, faces_of_dim, is_d_complete, mask_face, path_components,
                      popcount)
from .errors import EnumerationInfeasible, PreconditionError, PurityError
from .gf2 import GF2Matrix, kernel_basis, rank
from .homology import boundary_matrix

__all__ = ['CycleCertificate', 'certify_cycle', 'cone_extension', 'enumerate_face_minimal_cycles',
           'is_d_dimensional_cycle', 'kernel_supports', 'vertex_link_cycles']

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CycleCertificate:
    '''
    A certified `d`-dimensional cycle together with its completeness flags.
    '''
    cycle: SimplicialComplex
    '''
    The cycle as a pure `d`-dimensional complex.
    '''
    dim: int
    '''
    The dimension of the cycle.
    '''
    face_minimal: bool
    '''
    Whether no proper subset of the faces forms a cycle.
    '''
    d_complete: bool
    '''
    Whether all `(d+1)`-subsets of the vertices of the cycle are faces.
    '''
    one_complete: bool
    '''
    Whether all vertex pairs of the cycle lie in a common face.
    '''

    @property
    def faces(self) -> Tuple[Face, ...]:
        '''
        The `d`-faces of the cycle.
        '''
        return self.cycle.facets

    @property
    def vertices(self) -> Tuple[int, ...]:
        '''
        The vertices of the cycle.
        '''
        return self.cycle.vertices

    def __str__(self) -> str:
        return str(self.cycle)

    def to_dict(self) -> dict:
        '''
        Convert the certificate into a JSON-compatible dictionary.
        '''
        labels = self.cycle.labels
        return {'dimension': self.dim,
                'faces': [[labels[v] for v in f] for f in self.faces],
                'flags': {'face_minimal': self.face_minimal,
                          'd_complete': self.d_complete,
                          'one_complete': self.one_complete}}


def _even_incidence(faces: Iterable[Face]) -> bool:
    counts: Counter = Counter()
    for face in faces:
        counts.update(combinations(face, len(face) - 1))
    return all(n % 2 == 0 for n in counts.values())


def _cycle_dim(complex_: SimplicialComplex) -> int:
    if not complex_.is_pure:
        raise PurityError('cycles are pure complexes')
    if complex_.dim < 1:
        raise PreconditionError('dimension', 'cycles have dimension at least 1')
    return complex_.dim


def is_d_dimensional_cycle(complex_: SimplicialComplex) -> bool:
    '''
    Check whether a pure complex of dimension at least one is a
    `d`-dimensional cycle.
    '''
    _cycle_dim(complex_)
    return _even_incidence(complex_.facets) and len(path_components(complex_)) == 1


def certify_cycle(complex_: SimplicialComplex) -> CycleCertificate:
    '''
    Certify that a complex is a `d`-dimensional cycle and compute its flags.

    Face-minimality holds if and only if the boundary operator restricted to
    the faces of the cycle has a one-dimensional kernel.

    Parameters
    ----------
    complex_
        A pure complex of dimension at least one.

    Returns
    -------
    The certificate.
    '''
    d = _cycle_dim(complex_)
    if not is_d_dimensional_cycle(complex_):
        raise PreconditionError('cycle', f'{complex_} is not a {d}-dimensional cycle')
    matrix = boundary_matrix(complex_, d)
    minimal = matrix.n_cols - rank(matrix) == 1
    return CycleCertificate(complex_, d, minimal, is_d_complete(complex_, d), is_d_complete(complex_, 1))


_POPCOUNT = np.array([bin(i).count('1') for i in range(256)], dtype=np.int64)


def _to_words(vector: np.ndarray, n_words: int) -> np.ndarray:
    packed = np.packbits(np.asarray(vector, dtype=np.uint8), bitorder='little')
    return np.pad(packed, (0, 8 * n_words - packed.size)).view('<u8')


def kernel_supports(basis: Sequence[np.ndarray]) -> List[int]:
    '''
    Return the inclusion-minimal nonzero supports of the span of the given
    vectors.

    The `2^k - 1` nonzero combinations are built by doubling on packed words.
    Visiting them by increasing support size, the smallest remaining one is
    minimal and all its supersets are dropped at once.

    Parameters
    ----------
    basis
        Linearly independent 0/1 vectors of equal length.

    Returns
    -------
    The minimal supports as bitmasks over vector positions, sorted by size.
    '''
    if not basis:
        return []
    n_words = max(1, -(-len(basis[0]) // 64))
    span = np.zeros((1 << len(basis), n_words), dtype='<u8')
    for j, vector in enumerate(basis):
        half = 1 << j
        span[half:2 * half] = span[:half] ^ _to_words(vector, n_words)
    span = span[1:]
    sizes = _POPCOUNT[span.view(np.uint8)].sum(axis=1)
    remaining = span[np.argsort(sizes, kind='stable')]
    minimal: List[int] = []
    while len(remaining):
        support = remaining[0]
        minimal.append(int.from_bytes(support.tobytes(), 'little'))
        remaining = remaining[((remaining & support) != support).any(axis=1)]
    return sorted(minimal, key=lambda m: (popcount(m), m))


def enumerate_face_minimal_cycles(complex_: SimplicialComplex, d: int,
                                  kernel_cap: int = 20) -> List[CycleCertificate]:
    '''
    Enumerate all face-minimal `d`-dimensional cycles formed by `d`-faces of a
    complex.

    Parameters
    ----------
    complex_
        The complex.
    d
        The dimension of the cycles, at least one.
    kernel_cap
        The largest kernel dimension to enumerate.

    Returns
    -------
    The certified cycles ordered by their face lists.

    Raises
    ------
    EnumerationInfeasible
        If the kernel of the boundary operator has dimension above
        `kernel_cap`.
    '''
    if d < 1:
        raise ValueError('cycles have dimension at least 1')
    faces = faces_of_dim(complex_, d)
    if not faces:
        return []
    basis = kernel_basis(boundary_matrix(complex_, d))
    if len(basis) > kernel_cap:
        raise EnumerationInfeasible(len(basis), kernel_cap)
    supports = kernel_supports(basis)
    log.debug('dimension %d: %d faces, kernel dimension %d, %d face-minimal cycles',
              d, len(faces), len(basis), len(supports))
    result = []
    for support in supports:
        cycle = SimplicialComplex.from_faces([faces[i] for i in mask_face(support)], complex_.n_vertices,
                                             complex_.labels)
        result.append(CycleCertificate(cycle, d, True, is_d_complete(cycle, d), is_d_complete(cycle, 1)))
    result.sort(key=lambda c: c.faces)
    return result


def _grow(complex_: SimplicialComplex, v: int):
    n = max(complex_.n_vertices, v + 1)
    labels = list(complex_.labels)
    for i in range(complex_.n_vertices, n):
        label = str(i)
        while label in labels:
            label = f'v{label}'
        labels.append(label)
    return n, labels


def cone_extension(omega: CycleCertificate, filling: Iterable[Iterable[int]], v: int) -> CycleCertificate:
    '''
    Extend a `d`-dimensional cycle to a `(d+1)`-dimensional one by coning
    over a new vertex and closing it with a minimal filling.

    Parameters
    ----------
    omega
        The cycle.
    filling
        `(d+1)`-faces on the vertices of the cycle whose boundary sum is the
        sum of the faces of the cycle; no proper subset may have the same
        boundary.
    v
        A vertex outside of the cycle; the ground set grows if necessary.

    Returns
    -------
    The certified cycle consisting of the cone faces `F ∪ {v}` and the
    filling.

    Raises
    ------
    PreconditionError
        Naming the violated clause: `vertex`, `support`, `boundary`, or
        `minimality`.
    '''
    d = omega.dim
    if v < 0 or v in omega.vertices:
        raise PreconditionError('vertex', f'vertex {v} must lie outside of the cycle')
    filling = sorted({tuple(sorted(a)) for a in filling})
    allowed = omega.cycle.vertex_mask
    for face in filling:
        if len(face) != d + 2 or face_mask(face) & ~allowed:
            raise PreconditionError('support', f'{face} is not a {d + 1}-face on the vertices of the cycle')

    parity: Counter = Counter()
    for face in filling:
        parity.update(combinations(face, d + 1))
    if {f for f, n in parity.items() if n % 2} != set(omega.faces):
        raise PreconditionError('boundary', 'the filling does not bound the cycle')

    ridges = sorted(parity)
    index: Dict[Face, int] = {f: i for i, f in enumerate(ridges)}
    dense = np.zeros((len(ridges), len(filling)), dtype=np.uint8)
    for j, face in enumerate(filling):
        for ridge in combinations(face, d + 1):
            dense[index[ridge], j] = 1
    if rank(GF2Matrix.from_dense(dense, len(filling))) < len(filling):
        raise PreconditionError('minimality', 'a proper subset of the filling has the same boundary')

    n, labels = _grow(omega.cycle, v)
    cone = [f + (v,) for f in omega.faces]
    return certify_cycle(SimplicialComplex.from_faces(cone + filling, n, labels))


def vertex_link_cycles(omega: CycleCertificate, v: int) -> List[CycleCertificate]:
    '''
    Decompose the link of a vertex in a cycle into `(d-1)`-dimensional
    cycles.

    Parameters
    ----------
    omega
        A cycle of dimension at least two.
    v
        A vertex of the cycle.

    Returns
    -------
    The certified path-connected components of the link.
    '''
    if v not in omega.vertices:
        raise PreconditionError('vertex', f'vertex {v} is not a vertex of the cycle')
    if omega.dim < 2:
        raise PreconditionError('dimension', 'vertex links of 1-dimensional cycles are vertex pairs')
    link = [tuple(u for u in f if u != v) for f in omega.faces if v in f]
    star = SimplicialComplex.from_faces(link, omega.cycle.n_vertices, omega.cycle.labels)
    return [certify_cycle(part) for part in path_components(star)]

