'''
This module provides dense matrices over the two-element field.

Rows are packed into little-endian 64-bit words so that row additions during
Gaussian elimination are vectorized XORs over whole words.

Example
-------

```python-repl
>>> import numpy as np
>>> from chordx.gf2 import GF2Matrix, kernel_basis, rank
>>> m = GF2Matrix.from_dense([[1, 1, 0], [0, 1, 1]])
>>> rank(m)
2
>>> [v.tolist() for v in kernel_basis(m)]
[[1, 1, 1]]
```
'''

from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

__all__ = ['GF2Matrix', 'kernel_basis', 'rank', 'reduce', 'solve']

WORD = 64

ArrayLike = Union[np.ndarray, Sequence[Sequence[int]]]


def _n_words(n_cols: int) -> int:
    return (n_cols + WORD - 1) // WORD


def _pack(dense: np.ndarray) -> np.ndarray:
    n_rows, n_cols = dense.shape
    width = _n_words(n_cols) * WORD
    if width == 0:
        return np.zeros((n_rows, 0), dtype=np.uint64)
    padded = np.zeros((n_rows, width), dtype=np.uint8)
    padded[:, :n_cols] = dense
    return np.ascontiguousarray(np.packbits(padded, axis=1, bitorder='little')).view('<u8')


def _unpack(words: np.ndarray, n_cols: int) -> np.ndarray:
    if words.shape[1] == 0:
        return np.zeros((words.shape[0], n_cols), dtype=np.uint8)
    bits = np.unpackbits(np.ascontiguousarray(words).view(np.uint8), axis=1, bitorder='little')
    return bits[:, :n_cols]


class GF2Matrix:
    '''
    An immutable matrix over GF(2) with word-packed rows.

    Use `GF2Matrix.from_dense` to construct matrices from 0/1 arrays.
    '''
    __slots__ = ('n_rows', 'n_cols', 'words')

    n_rows: int
    n_cols: int
    words: np.ndarray

    def __init__(self, n_rows: int, n_cols: int, words: np.ndarray):
        if n_rows < 0 or n_cols < 0:
            raise ValueError('matrix dimensions must be nonnegative')
        if words.shape != (n_rows, _n_words(n_cols)) or words.dtype != np.uint64:
            raise ValueError('packed words do not match the matrix dimensions')
        words.flags.writeable = False
        self.n_rows = n_rows
        self.n_cols = n_cols
        self.words = words

    @classmethod
    def from_dense(cls, dense: ArrayLike, n_cols: Optional[int] = None) -> 'GF2Matrix':
        '''
        Construct a matrix from a 0/1 array; entries are taken modulo 2.

        Parameters
        ----------
        dense
            A two-dimensional array.
        n_cols
            The number of columns; only needed for matrices without rows given
            as empty lists.
        '''
        arr = np.asarray(dense, dtype=np.int64)
        if arr.size == 0 and arr.ndim != 2:
            arr = arr.reshape(0, n_cols or 0)
        if arr.ndim != 2:
            raise ValueError('expected a two-dimensional array')
        arr = (arr & 1).astype(np.uint8)
        return cls(arr.shape[0], arr.shape[1], _pack(arr))

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> 'GF2Matrix':
        '''
        Return the zero matrix of the given shape.
        '''
        return cls(n_rows, n_cols, np.zeros((n_rows, _n_words(n_cols)), dtype=np.uint64))

    @classmethod
    def identity(cls, n: int) -> 'GF2Matrix':
        '''
        Return the identity matrix of size `n`.
        '''
        return cls.from_dense(np.eye(n, dtype=np.uint8))

    @property
    def shape(self) -> Tuple[int, int]:
        '''
        The pair `(n_rows, n_cols)`.
        '''
        return self.n_rows, self.n_cols

    def to_dense(self) -> np.ndarray:
        '''
        Return the entries as a `uint8` array.
        '''
        return _unpack(self.words, self.n_cols)

    def transpose(self) -> 'GF2Matrix':
        '''
        Return the transposed matrix.
        '''
        return GF2Matrix.from_dense(self.to_dense().T)

    def submatrix(self, rows: Optional[Iterable[int]] = None, cols: Optional[Iterable[int]] = None) -> 'GF2Matrix':
        '''
        Return the matrix restricted to the given row and column indices.
        '''
        dense = self.to_dense()
        if rows is not None:
            dense = dense[np.fromiter(rows, dtype=np.intp)]
        if cols is not None:
            dense = dense[:, np.fromiter(cols, dtype=np.intp)]
        return GF2Matrix.from_dense(dense, dense.shape[1])

    def dot(self, vector: ArrayLike) -> np.ndarray:
        '''
        Multiply the matrix with a column vector.
        '''
        vec = np.asarray(vector, dtype=np.int64)
        if vec.shape != (self.n_cols,):
            raise ValueError(f'expected a vector of length {self.n_cols}')
        return ((self.to_dense().astype(np.int64) @ (vec & 1)) & 1).astype(np.uint8)

    def dump(self) -> str:
        '''
        Return the entries as rows of `0`/`1` characters.
        '''
        return '\n'.join(''.join('1' if x else '0' for x in row) for row in self.to_dense())

    def __eq__(self, other) -> bool:
        if not isinstance(other, GF2Matrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self.words, other.words))

    def __hash__(self) -> int:
        return hash((self.n_rows, self.n_cols, self.words.tobytes()))

    def __repr__(self) -> str:
        return f'GF2Matrix({self.n_rows}x{self.n_cols})'


def reduce(matrix: GF2Matrix) -> Tuple[np.ndarray, List[int]]:
    '''
    Bring a matrix into reduced row echelon form.

    Parameters
    ----------
    matrix
        The matrix to reduce; it is not modified.

    Returns
    -------
    The packed nonzero rows of the reduced form and the pivot column of each
    row.
    '''
    words = matrix.words.copy()
    pivots: List[int] = []
    r = 0
    for col in range(matrix.n_cols):
        if r == matrix.n_rows:
            break
        w, b = divmod(col, WORD)
        bit = np.uint64(1) << np.uint64(b)
        hits = np.flatnonzero(words[r:, w] & bit)
        if hits.size == 0:
            continue
        p = r + int(hits[0])
        if p != r:
            words[[r, p]] = words[[p, r]]
        others = np.flatnonzero(words[:, w] & bit)
        others = others[others != r]
        if others.size:
            words[others] ^= words[r]
        pivots.append(col)
        r += 1
    return words[:r], pivots


def rank(matrix: GF2Matrix) -> int:
    '''
    Return the rank of a matrix over GF(2).
    '''
    return len(reduce(matrix)[1])


def kernel_basis(matrix: GF2Matrix) -> List[np.ndarray]:
    '''
    Return a basis of the null space.

    The basis has one vector per non-pivot column of the reduced form; the
    vector has a one in that column and zeros in all other free columns.

    Parameters
    ----------
    matrix
        The matrix.

    Returns
    -------
    A list of `n_cols - rank` vectors of type `uint8`.
    '''
    words, pivots = reduce(matrix)
    dense = _unpack(words, matrix.n_cols)
    pivot_set = set(pivots)
    basis = []
    for free in range(matrix.n_cols):
        if free in pivot_set:
            continue
        vec = np.zeros(matrix.n_cols, dtype=np.uint8)
        vec[free] = 1
        if pivots:
            vec[pivots] = dense[:, free]
        basis.append(vec)
    return basis


def solve(matrix: GF2Matrix, rhs: ArrayLike) -> Optional[np.ndarray]:
    '''
    Solve the system `matrix @ x = rhs` over GF(2).

    Parameters
    ----------
    matrix
        The coefficient matrix.
    rhs
        A vector with one entry per row.

    Returns
    -------
    Some solution with all free variables set to zero, or `None` if the
    right-hand side is not in the column space.
    '''
    b = np.asarray(rhs, dtype=np.int64)
    if b.shape != (matrix.n_rows,):
        raise ValueError(f'expected a right-hand side of length {matrix.n_rows}')
    augmented = np.hstack([matrix.to_dense(), (b & 1).astype(np.uint8).reshape(-1, 1)])
    words, pivots = reduce(GF2Matrix.from_dense(augmented, matrix.n_cols + 1))
    if pivots and pivots[-1] == matrix.n_cols:
        return None
    dense = _unpack(words, matrix.n_cols + 1)
    x = np.zeros(matrix.n_cols, dtype=np.uint8)
    if pivots:
        x[pivots] = dense[:, matrix.n_cols]
    return x
