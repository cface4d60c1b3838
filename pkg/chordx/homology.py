'''
This module provides chains, boundary operators, and reduced homology over
GF(2).

The empty complex `{∅}` has a one-dimensional reduced homology group in
dimension -1 while the void complex has no homology at all. The boundary
operator in dimension zero is the augmentation, a single row of ones indexed
by the empty face.

Example
-------

```python-repl
>>> from chordx.complex import SimplicialComplex
>>> from chordx.homology import reduced_homology
>>> tetra = SimplicialComplex.from_labeled(['123', '124', '134', '234'])
>>> reduced_homology(tetra)
[0, 0, 0, 1]
```
'''

from typing import Dict, Iterable, List, Optional, Tuple
from dataclasses import dataclass, field
import logging

import numpy as np

from .complex import Face, SimplicialComplex, face_mask, faces_of_dim
from .errors import PreconditionError
from .gf2 import GF2Matrix, rank, solve

__all__ = ['Chain', 'InducedHomology', 'boundary_matrix', 'chain_boundary', 'is_boundary', 'reduced_homology',
           'reduced_homology_dim']

log = logging.getLogger(__name__)


def _index(faces: Iterable[Face]) -> Dict[Face, int]:
    return {f: i for i, f in enumerate(faces)}


@dataclass(frozen=True)
class Chain:
    '''
    A chain of `d`-faces with coefficients in GF(2).

    Chains are identified with their supports; addition is the symmetric
    difference of supports.
    '''
    complex: SimplicialComplex
    '''
    The complex whose `d`-faces index the chain.
    '''
    dim: int
    '''
    The dimension of the chain.
    '''
    support: Tuple[Face, ...] = field(default=())
    '''
    The faces with coefficient one in lexicographic order.
    '''

    def __post_init__(self):
        support = tuple(sorted(set(tuple(sorted(f)) for f in self.support)))
        for f in support:
            if len(f) != self.dim + 1 or not self.complex.has_face(f):
                raise ValueError(f'{f} is not a {self.dim}-face of the complex')
        object.__setattr__(self, 'support', support)

    @classmethod
    def from_vector(cls, complex_: SimplicialComplex, dim: int, vector: Iterable[int]) -> 'Chain':
        '''
        Construct a chain from a 0/1 vector indexed by `faces_of_dim(complex_, dim)`.
        '''
        faces = faces_of_dim(complex_, dim)
        coeffs = np.asarray(list(vector), dtype=np.int64)
        if coeffs.shape != (len(faces),):
            raise ValueError(f'expected a vector of length {len(faces)}')
        return cls(complex_, dim, tuple(f for f, x in zip(faces, coeffs) if x & 1))

    def vector(self, complex_: Optional[SimplicialComplex] = None) -> np.ndarray:
        '''
        Return the coefficient vector with respect to the `d`-faces of the
        given complex, which defaults to the chain's complex.
        '''
        faces = faces_of_dim(self.complex if complex_ is None else complex_, self.dim)
        index = _index(faces)
        vec = np.zeros(len(faces), dtype=np.uint8)
        for f in self.support:
            if f not in index:
                raise ValueError(f'{f} is not a face of the complex')
            vec[index[f]] = 1
        return vec

    def __add__(self, other: 'Chain') -> 'Chain':
        if self.dim != other.dim:
            raise ValueError('cannot add chains of different dimensions')
        return Chain(self.complex, self.dim, tuple(set(self.support) ^ set(other.support)))

    def __bool__(self) -> bool:
        return bool(self.support)

    def __str__(self) -> str:
        return ' + '.join(self.complex.label(f) for f in self.support) or '0'


def boundary_matrix(complex_: SimplicialComplex, d: int) -> GF2Matrix:
    '''
    Return the matrix of the boundary operator from `d`-chains to
    `(d-1)`-chains.

    Parameters
    ----------
    complex_
        The complex.
    d
        The dimension of the source chains, at least zero.

    Returns
    -------
    A matrix whose rows are indexed by the `(d-1)`-faces and whose columns are
    indexed by the `d`-faces in lexicographic order.
    '''
    if d < 0:
        raise ValueError('boundary operators start in dimension 0')
    rows = faces_of_dim(complex_, d - 1)
    cols = faces_of_dim(complex_, d)
    index = _index(rows)
    dense = np.zeros((len(rows), len(cols)), dtype=np.uint8)
    for j, face in enumerate(cols):
        for k in range(len(face)):
            dense[index[face[:k] + face[k + 1:]], j] = 1
    return GF2Matrix.from_dense(dense, len(cols))


def chain_boundary(chain: Chain) -> Chain:
    '''
    Return the boundary of a chain.
    '''
    if chain.dim < 0:
        raise ValueError('the boundary of a (-1)-chain is not defined')
    vec = boundary_matrix(chain.complex, chain.dim).dot(chain.vector())
    return Chain.from_vector(chain.complex, chain.dim - 1, vec)


def _boundary_rank(complex_: SimplicialComplex, d: int) -> int:
    if d < 0 or d > complex_.dim:
        return 0
    return rank(boundary_matrix(complex_, d))


def reduced_homology_dim(complex_: SimplicialComplex, i: int) -> int:
    '''
    Return the dimension of the `i`-th reduced homology group over GF(2).

    Parameters
    ----------
    complex_
        The complex.
    i
        The homological dimension, at least -1.

    Returns
    -------
    The number of `i`-faces minus the ranks of the boundary operators leaving
    and entering dimension `i`.
    '''
    if i < -1:
        raise ValueError('reduced homology starts in dimension -1')
    n_faces = len(faces_of_dim(complex_, i))
    if n_faces == 0:
        return 0
    return n_faces - _boundary_rank(complex_, i) - _boundary_rank(complex_, i + 1)


def reduced_homology(complex_: SimplicialComplex) -> List[int]:
    '''
    Return the reduced Betti numbers of a complex for dimensions `-1..dim`.

    The void complex yields an empty list.
    '''
    if complex_.is_void:
        return []
    ranks = [_boundary_rank(complex_, d) for d in range(complex_.dim + 2)]
    result = []
    for i in range(-1, complex_.dim + 1):
        n_faces = len(faces_of_dim(complex_, i))
        result.append(n_faces - (ranks[i] if i >= 0 else 0) - ranks[i + 1])
    return result


def is_boundary(complex_: SimplicialComplex, chain: Chain) -> Optional[Chain]:
    '''
    Check whether a cycle is the boundary of a chain of the complex.

    Parameters
    ----------
    complex_
        The complex providing the `(d+1)`-faces.
    chain
        A `d`-chain whose faces belong to the complex and whose boundary
        vanishes.

    Returns
    -------
    A `(d+1)`-chain whose boundary is the given chain, or `None` if there is
    none.
    '''
    d = chain.dim
    vec = chain.vector(complex_)
    if d >= 0 and boundary_matrix(complex_, d).dot(vec).any():
        raise PreconditionError('cycle', f'the {d}-chain {chain} has a nonzero boundary')
    if not vec.any():
        return Chain(complex_, d + 1)
    if d + 1 > complex_.dim:
        return None
    solution = solve(boundary_matrix(complex_, d + 1), vec)
    if solution is None:
        return None
    return Chain.from_vector(complex_, d + 1, solution)


class InducedHomology:
    '''
    Reduced homology of the induced subcomplexes of a fixed complex.

    The boundary matrices of the complex are built once; the homology of the
    subcomplex induced on a vertex set `S` is computed by selecting the rows
    and columns of faces contained in `S`.

    Parameters
    ----------
    complex_
        The complex; its ground set may have at most 64 vertices.
    max_dim
        The largest homological dimension of interest; defaults to the
        dimension of the complex.
    '''
    def __init__(self, complex_: SimplicialComplex, max_dim: Optional[int] = None):
        if complex_.n_vertices > 64:
            raise ValueError('subset sweeps support at most 64 vertices')
        self.complex = complex_
        self.max_dim = complex_.dim if max_dim is None else min(max_dim, complex_.dim)
        top = self.max_dim + 1
        self._masks = [np.array([face_mask(f) for f in faces_of_dim(complex_, i)], dtype=np.uint64)
                       for i in range(-1, top + 1)]
        self._boundaries = [boundary_matrix(complex_, d).to_dense() for d in range(0, top + 1)]
        log.debug('induced homology of %s: %s faces per dimension', complex_,
                  [len(m) for m in self._masks])

    def _select(self, i: int, subset: np.uint64) -> np.ndarray:
        masks = self._masks[i + 1]
        return np.flatnonzero((masks & ~subset) == 0)

    def _rank(self, d: int, rows: np.ndarray, cols: np.ndarray) -> int:
        if rows.size == 0 or cols.size == 0:
            return 0
        return rank(GF2Matrix.from_dense(self._boundaries[d][np.ix_(rows, cols)]))

    def dims(self, subset: int) -> List[int]:
        '''
        Return the reduced Betti numbers of the subcomplex induced on the
        vertex set encoded by the bitmask `subset`.

        Returns
        -------
        The dimensions for `-1..max_dim`; an empty list for the void complex.
        '''
        if self.complex.is_void:
            return []
        sub = np.uint64(subset)
        selected = [self._select(i, sub) for i in range(-1, self.max_dim + 2)]
        ranks = [self._rank(d, selected[d], selected[d + 1]) for d in range(0, self.max_dim + 2)]
        result = []
        for i in range(-1, self.max_dim + 1):
            result.append(selected[i + 1].size - (ranks[i] if i >= 0 else 0) - ranks[i + 1])
        return result

    def dim(self, subset: int, i: int) -> int:
        '''
        Return the `i`-th reduced Betti number of the subcomplex induced on
        `subset`.
        '''
        if i < -1:
            raise ValueError('reduced homology starts in dimension -1')
        dims = self.dims(subset)
        return dims[i + 1] if i + 1 < len(dims) else 0
