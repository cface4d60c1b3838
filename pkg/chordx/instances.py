'''
This module provides the built-in example complexes and ideals together with
seeded generators of random instances.

The generators draw from `numpy.random.Generator` objects so that a seed
determines all generated instances.

Example
-------

```python-repl
>>> from chordx.instances import all_graphs, random_ideal
>>> sum(1 for _ in all_graphs(4))
64
>>> import numpy as np
>>> random_ideal(np.random.default_rng(42), 5, 1).generation_degree
2
```
'''

from typing import Iterator, List, Optional
from itertools import combinations

import numpy as np

from .complex import SimplicialComplex
from .ideal import MonomialIdeal

__all__ = ['ALIASES', 'BUILTIN', 'all_graphs', 'graph_from_bits', 'octahedron', 'octahedron_chorded',
           'octahedron_solid', 'random_graph', 'random_ideal', 'rng_from_seed', 'rp2', 'tetra_fan', 'tetra_fan_closure',
           'tetrahedron', 'triangle_pair', 'triangle_pair_ideal']

_OCTA = ['125', '235', '345', '145', '126', '236', '346', '146']


def triangle_pair() -> SimplicialComplex:
    '''
    Return the pure 2-dimensional complex of all 3-subsets of `x0..x5` except
    `x0x1x2` and `x3x4x5`.

    It is 2-chorded but its 2-closure is not chorded, and its Stanley-Reisner
    ideal has no linear resolution over GF(2).
    '''
    labels = [f'x{i}' for i in range(6)]
    faces = [f for f in combinations(range(6), 3) if f not in ((0, 1, 2), (3, 4, 5))]
    return SimplicialComplex.from_faces(faces, 6, labels)


def triangle_pair_ideal() -> MonomialIdeal:
    '''
    Return the ideal `(x0x1x2, x3x4x5)`.
    '''
    return MonomialIdeal.from_generators([(0, 1, 2), (3, 4, 5)], 6)


def octahedron() -> SimplicialComplex:
    '''
    Return the boundary of the octahedron with equator `1234` and apexes `5`
    and `6`.
    '''
    return SimplicialComplex.from_labeled(_OCTA)


def octahedron_chorded() -> SimplicialComplex:
    '''
    Return the octahedron with the chords `123` and `134` splitting it into
    two pyramids.
    '''
    return SimplicialComplex.from_labeled(_OCTA + ['123', '134'])


def octahedron_solid() -> SimplicialComplex:
    '''
    Return the octahedron with the triangles `123`, `134`, `135`, and `136`
    whose 2-closure fills it with four tetrahedra.
    '''
    return SimplicialComplex.from_labeled(_OCTA + ['123', '134', '135', '136'])


def tetrahedron() -> SimplicialComplex:
    '''
    Return the boundary of the tetrahedron.
    '''
    return SimplicialComplex.from_labeled(['123', '124', '134', '234'])


def rp2() -> SimplicialComplex:
    '''
    Return the six-vertex triangulation of the real projective plane.
    '''
    return SimplicialComplex.from_labeled(['124', '125', '134', '136', '156', '235', '236', '246', '345', '456'])


def tetra_fan() -> SimplicialComplex:
    '''
    Return the pure 2-dimensional complex `<abc, abd, acd, bcd, bce, cde>`.
    '''
    return SimplicialComplex.from_labeled(['abc', 'abd', 'acd', 'bcd', 'bce', 'cde'])


def tetra_fan_closure() -> SimplicialComplex:
    '''
    Return the 2-closure `<abcd, bce, cde, ae>` of `tetra_fan()`.
    '''
    return SimplicialComplex.from_labeled(['abcd', 'bce', 'cde', 'ae'])


BUILTIN = {'triangle_pair': triangle_pair,
           'octa': octahedron_chorded,
           'rp2': rp2,
           'tetra_fan': tetra_fan,
           'tetra': tetrahedron}
'''
Named complexes available on the command line.
'''

ALIASES = {'ex216': 'triangle_pair',
           'fig5': 'tetra_fan'}
'''
Further command line names of built-in complexes.
'''


# ------------------------------------------------------------------------------


def rng_from_seed(seed: Optional[int]) -> np.random.Generator:
    '''
    Return a generator for the given seed reduced to 64 bits.
    '''
    return np.random.default_rng(None if seed is None else seed & (2 ** 64 - 1))


def _pick(rng: np.random.Generator, items: List[tuple], p: float) -> List[tuple]:
    if not items:
        return []
    chosen = [f for f, x in zip(items, rng.random(len(items))) if x < p]
    if not chosen:
        chosen = [items[int(rng.integers(len(items)))]]
    return chosen


def random_ideal(rng: np.random.Generator, n: int, d: int, p: Optional[float] = None) -> MonomialIdeal:
    '''
    Draw a square-free ideal generated in degree `d+1` on `n` variables.

    Each `(d+1)`-subset becomes a generator with probability `p`, which is
    drawn uniformly from `[0.1, 0.6]` if omitted. At least one generator is
    chosen.
    '''
    if not 0 <= d < n:
        raise ValueError('generators of degree d+1 require 0 <= d < n')
    if p is None:
        p = float(rng.uniform(0.1, 0.6))
    return MonomialIdeal.from_generators(_pick(rng, list(combinations(range(n), d + 1)), p), n)


def graph_from_bits(n: int, bits: int) -> SimplicialComplex:
    '''
    Return the graph on `n` vertices whose edges are selected by the bits of
    `bits` in lexicographic edge order.
    '''
    edges = [e for i, e in enumerate(combinations(range(n), 2)) if bits >> i & 1]
    return SimplicialComplex.from_faces(edges + [(v,) for v in range(n)], n)


def random_graph(rng: np.random.Generator, n: int, p: float = 0.5) -> SimplicialComplex:
    '''
    Draw a graph on `n` vertices with edge probability `p`.
    '''
    pairs = list(combinations(range(n), 2))
    edges = [e for e, x in zip(pairs, rng.random(len(pairs))) if x < p]
    return SimplicialComplex.from_faces(edges + [(v,) for v in range(n)], n)


def all_graphs(n: int) -> Iterator[SimplicialComplex]:
    '''
    Enumerate all labeled graphs on `n` vertices.
    '''
    for bits in range(1 << (n * (n - 1) // 2)):
        yield graph_from_bits(n, bits)
