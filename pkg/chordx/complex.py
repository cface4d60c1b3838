'''
This module provides faces, simplicial complexes, and the skeleton, closure,
and complement calculus on them.

Complexes are stored by their facets. Vertices are dense integer ids
`0..n-1`, each carrying a display label, so that complexes print like the
examples in the literature.

Example
-------

The following example computes the 2-closure of a pure 2-dimensional complex:

```python-repl
>>> from chordx.complex import SimplicialComplex, d_closure, format_complex
>>> gamma = SimplicialComplex.from_labeled(['abc', 'abd', 'acd', 'bcd', 'bce', 'cde'])
>>> print(format_complex(d_closure(gamma)))
@vertices a b c d e
a b c d
a e
b c e
c d e
```
'''

from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from re import fullmatch

import networkx as nx

from .errors import EmptySkeletonError, ParseError, PurityError

__all__ = ['Face', 'SimplicialComplex', 'complex_to_dict', 'd_closure', 'd_complement', 'face_mask', 'faces_of_dim',
           'format_complex', 'induced_subcomplex', 'is_d_complete', 'mask_face', 'maximal_masks', 'parse_complex',
           'path_components', 'popcount', 'pure_skeleton', 'resolve_labels', 'split_lines']

Face = Tuple[int, ...]


def popcount(mask: int) -> int:
    '''
    Return the number of set bits of a non-negative integer.
    '''
    return bin(mask).count('1')


def face_mask(face: Iterable[int]) -> int:
    '''
    Encode a face as a bitmask.
    '''
    mask = 0
    for v in face:
        mask |= 1 << v
    return mask


def mask_face(mask: int) -> Face:
    '''
    Decode a bitmask into a face.
    '''
    face = []
    v = 0
    while mask:
        if mask & 1:
            face.append(v)
        mask >>= 1
        v += 1
    return tuple(face)


def maximal_masks(masks: Iterable[int]) -> List[int]:
    '''
    Return the inclusion-maximal elements among the given bitmasks.
    '''
    kept: List[int] = []
    for mask in sorted(set(masks), key=lambda m: (-popcount(m), m)):
        if not any(mask & ~other == 0 for other in kept):
            kept.append(mask)
    return kept


def _natural_key(label: str):
    match = fullmatch(r'(\D*)(\d+)', label)
    if match is None:
        return (label, -1)
    return (match[1], int(match[2]))


def _make_face(vertices: Iterable[int]) -> Face:
    face = tuple(sorted(vertices))
    if len(set(face)) != len(face):
        raise ValueError(f'repeated vertex in face {face}')
    if face and face[0] < 0:
        raise ValueError(f'negative vertex in face {face}')
    return face


@dataclass(frozen=True)
class SimplicialComplex:
    '''
    A simplicial complex on the vertices `0..n_vertices-1` given by its facets.

    The facets form an antichain and are sorted lexicographically. The void
    complex has no facets at all, while the empty complex `{∅}` has the empty
    face as its only facet.

    Use `SimplicialComplex.from_faces` to construct complexes from arbitrary
    generating faces.
    '''
    n_vertices: int
    '''
    The number of vertices of the ground set.
    '''
    facets: Tuple[Face, ...]
    '''
    The facets in canonical order.
    '''
    labels: Tuple[str, ...]
    '''
    Display labels indexed by vertex id.
    '''

    @classmethod
    def from_faces(cls, faces: Iterable[Iterable[int]], n_vertices: Optional[int] = None,
                   labels: Optional[Sequence[str]] = None) -> 'SimplicialComplex':
        '''
        Construct the complex generated by the given faces.

        Parameters
        ----------
        faces
            Faces generating the complex; faces contained in other faces are
            dropped.
        n_vertices
            The size of the ground set. Defaults to one more than the largest
            vertex, or the number of labels if given.
        labels
            Optional vertex labels.

        Returns
        -------
        The complex.
        '''
        normalized = [_make_face(f) for f in faces]
        used = max((f[-1] for f in normalized if f), default=-1) + 1
        if n_vertices is None:
            n_vertices = len(labels) if labels is not None else used
        if used > n_vertices:
            raise ValueError(f'vertex id {used - 1} out of range for {n_vertices} vertices')
        if labels is None:
            labels = [str(v) for v in range(n_vertices)]
        if len(labels) != n_vertices or len(set(labels)) != n_vertices:
            raise ValueError('labels must be unique and match the number of vertices')
        facets = tuple(sorted(mask_face(m) for m in maximal_masks(face_mask(f) for f in normalized)))
        return cls(n_vertices, facets, tuple(labels))

    @classmethod
    def from_labeled(cls, faces: Iterable[Iterable[str]],
                     labels: Optional[Sequence[str]] = None) -> 'SimplicialComplex':
        '''
        Construct a complex from faces given as sequences of labels.

        Strings are split into characters, so `'abc'` denotes the face
        `{a, b, c}`. Without explicit labels, the labels are ordered
        naturally (`x2` before `x10`).
        '''
        faces = [tuple(f) for f in faces]
        if labels is None:
            labels = sorted({v for f in faces for v in f}, key=_natural_key)
        index = {label: i for i, label in enumerate(labels)}
        return cls.from_faces([[index[v] for v in f] for f in faces], len(labels), labels)

    @classmethod
    def void(cls, n_vertices: int = 0, labels: Optional[Sequence[str]] = None) -> 'SimplicialComplex':
        '''
        Return the complex without any faces.
        '''
        return cls.from_faces([], n_vertices, labels)

    @classmethod
    def simplex(cls, n_vertices: int, labels: Optional[Sequence[str]] = None) -> 'SimplicialComplex':
        '''
        Return the full simplex on `n_vertices` vertices.
        '''
        return cls.from_faces([range(n_vertices)], n_vertices, labels)

    @property
    def is_void(self) -> bool:
        '''
        Whether the complex has no faces at all.
        '''
        return not self.facets

    @property
    def dim(self) -> int:
        '''
        The dimension of the complex; -1 for `{∅}` and -2 for the void complex.
        '''
        return max((len(f) - 1 for f in self.facets), default=-2)

    @property
    def is_pure(self) -> bool:
        '''
        Whether all facets have the same dimension.
        '''
        return len({len(f) for f in self.facets}) <= 1

    @cached_property
    def vertices(self) -> Tuple[int, ...]:
        '''
        The vertices contained in some facet.
        '''
        return mask_face(self.vertex_mask)

    @cached_property
    def vertex_mask(self) -> int:
        '''
        The vertices contained in some facet as a bitmask.
        '''
        mask = 0
        for m in self.facet_masks:
            mask |= m
        return mask

    @cached_property
    def facet_masks(self) -> Tuple[int, ...]:
        '''
        The facets encoded as bitmasks.
        '''
        return tuple(face_mask(f) for f in self.facets)

    def has_face(self, face: Iterable[int]) -> bool:
        '''
        Check whether the given vertex set is a face of the complex.
        '''
        mask = face_mask(face)
        return any(mask & ~m == 0 for m in self.facet_masks)

    def has_mask(self, mask: int) -> bool:
        '''
        Check whether the given bitmask encodes a face of the complex.
        '''
        return any(mask & ~m == 0 for m in self.facet_masks)

    def label(self, face: Iterable[int]) -> str:
        '''
        Return a readable representation of a face.
        '''
        names = [self.labels[v] for v in face]
        if all(len(n) == 1 for n in names):
            return ''.join(names) or '{}'
        return '{' + ','.join(names) + '}'

    def __str__(self) -> str:
        return '<' + ', '.join(self.label(f) for f in self.facets) + '>'


def faces_of_dim(complex_: SimplicialComplex, d: int) -> Tuple[Face, ...]:
    '''
    Return the `d`-dimensional faces of a complex in lexicographic order.

    Parameters
    ----------
    complex_
        The complex.
    d
        The dimension, at least -1.

    Returns
    -------
    All `(d+1)`-subsets of facets; empty if `d` exceeds the dimension.
    '''
    if d < -1:
        raise ValueError('dimension must be at least -1')
    faces = set()
    for facet in complex_.facets:
        if len(facet) > d:
            faces.update(combinations(facet, d + 1))
    return tuple(sorted(faces))


def pure_skeleton(complex_: SimplicialComplex, d: int) -> SimplicialComplex:
    '''
    Return the pure `d`-skeleton, the complex generated by the `d`-faces.

    Raises `EmptySkeletonError` if `d` exceeds the dimension of the complex.
    '''
    if d > complex_.dim:
        raise EmptySkeletonError(f'no faces of dimension {d} in a complex of dimension {complex_.dim}')
    return SimplicialComplex.from_faces(faces_of_dim(complex_, d), complex_.n_vertices, complex_.labels)


def d_complement(complex_: SimplicialComplex, d: int) -> SimplicialComplex:
    '''
    Return the `d`-complement whose facets are the `(d+1)`-subsets of the
    ground set that are not faces.

    The ground set is the full vertex range of the complex, including vertices
    in no facet.
    '''
    missing = [f for f in combinations(range(complex_.n_vertices), d + 1) if not complex_.has_face(f)]
    return SimplicialComplex.from_faces(missing, complex_.n_vertices, complex_.labels)


def induced_subcomplex(complex_: SimplicialComplex, subset: Iterable[int]) -> SimplicialComplex:
    '''
    Return the subcomplex of all faces contained in `subset`.

    The ground set is kept so that vertex ids and labels stay stable. The
    induced subcomplex of a non-void complex on the empty set is `{∅}`.
    '''
    mask = face_mask(subset)
    if mask >> complex_.n_vertices:
        raise ValueError('subset exceeds the ground set')
    faces = [mask_face(m & mask) for m in complex_.facet_masks]
    return SimplicialComplex.from_faces(faces, complex_.n_vertices, complex_.labels)


def d_closure(complex_: SimplicialComplex, d: Optional[int] = None) -> SimplicialComplex:
    '''
    Return the `d`-closure of a pure `d`-dimensional complex.

    A subset of the ground set with more than `d+1` elements is a face of the
    closure if and only if all its `(d+1)`-subsets are faces; all subsets with
    at most `d` elements are faces.

    Parameters
    ----------
    complex_
        The pure complex.
    d
        The dimension; taken from the complex if omitted. Passing it allows to
        close complexes without any `d`-faces.

    Returns
    -------
    The closure on the ground set of the complex.
    '''
    if d is None:
        if complex_.is_void or not complex_.is_pure:
            raise PurityError('the d-closure requires a pure complex')
        d = complex_.dim
    elif any(len(f) != d + 1 for f in complex_.facets):
        raise PurityError(f'the {d}-closure requires a pure {d}-dimensional complex')

    n = complex_.n_vertices
    top = set(complex_.facet_masks)
    found = list(complex_.facets)
    level = list(complex_.facets)
    while level:
        grown = []
        for face in level:
            for v in range(face[-1] + 1, n):
                bit = 1 << v
                # only subsets through v are new, the others lie in face
                if all((face_mask(sub) | bit) in top for sub in combinations(face, d)):
                    grown.append(face + (v,))
        found.extend(grown)
        level = grown

    lower: Iterable[Face] = combinations(range(n), d) if d > 0 else [()]
    return SimplicialComplex.from_faces(list(lower) + found, n, complex_.labels)


def path_components(complex_: SimplicialComplex) -> List[SimplicialComplex]:
    '''
    Split a pure complex into its `d`-path-connected components.

    Two `d`-faces are adjacent if they share a `(d-1)`-face. The components
    are returned in canonical order.
    '''
    if not complex_.is_pure:
        raise PurityError('path components require a pure complex')
    graph = nx.Graph()
    graph.add_nodes_from(complex_.facets)
    by_ridge: Dict[Face, List[Face]] = {}
    for facet in complex_.facets:
        for ridge in combinations(facet, len(facet) - 1):
            by_ridge.setdefault(ridge, []).append(facet)
    for faces in by_ridge.values():
        nx.add_path(graph, faces)
    parts = [sorted(c) for c in nx.connected_components(graph)]
    return [SimplicialComplex.from_faces(p, complex_.n_vertices, complex_.labels) for p in sorted(parts)]


def is_d_complete(complex_: SimplicialComplex, d: int, subset: Optional[Iterable[int]] = None) -> bool:
    '''
    Check whether every `(d+1)`-subset of `subset` is a face.

    The subset defaults to the vertices contained in facets of the complex.
    '''
    vertices = complex_.vertices if subset is None else tuple(sorted(subset))
    return all(complex_.has_face(f) for f in combinations(vertices, d + 1))


# ------------------------------------------------------------------------------

def split_lines(text: str, what: str) -> Iterator[Tuple[int, Optional[List[str]], List[str]]]:
    '''
    Yield line numbers with directive arguments or tokens of non-comment lines.
    '''
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        if line.startswith('@'):
            head, *args = line.split()
            if head != f'@{what}':
                raise ParseError(f'unknown directive {head}', lineno)
            yield lineno, args, []
            continue
        yield lineno, None, line.split()


def resolve_labels(lines: Sequence[Tuple[int, Sequence[str]]], declared: Optional[Sequence[str]]) -> Dict[str, int]:
    '''
    Map labels to vertex ids, either in declaration order or naturally sorted.
    '''
    if declared is not None:
        if len(set(declared)) != len(declared):
            raise ParseError('repeated label in declaration', lines[0][0] if lines else 0)
        labels = list(declared)
        for lineno, tokens in lines:
            for token in tokens:
                if token not in labels:
                    raise ParseError(f'undeclared vertex {token}', lineno)
    else:
        labels = sorted({t for _, tokens in lines for t in tokens}, key=_natural_key)
    return {label: i for i, label in enumerate(labels)}


def parse_complex(text: str) -> SimplicialComplex:
    '''
    Parse a complex from its text format.

    Each line lists the vertices of one facet separated by whitespace; `{}`
    denotes the empty face. Lines starting with `#` are ignored. An optional
    line `@vertices v1 v2 ...` fixes the ground set and its order.

    Parameters
    ----------
    text
        The text to parse.

    Returns
    -------
    The parsed complex.
    '''
    declared = None
    lines: List[Tuple[int, List[str]]] = []
    for lineno, args, tokens in split_lines(text, 'vertices'):
        if args is not None:
            if declared is not None:
                raise ParseError('repeated @vertices directive', lineno)
            declared = args
            continue
        if tokens == ['{}']:
            tokens = []
        if len(set(tokens)) != len(tokens):
            raise ParseError('repeated vertex in face', lineno)
        lines.append((lineno, tokens))
    index = resolve_labels(lines, declared)
    labels = sorted(index, key=index.__getitem__)
    return SimplicialComplex.from_faces([[index[t] for t in tokens] for _, tokens in lines], len(labels), labels)


def format_complex(complex_: SimplicialComplex) -> str:
    '''
    Serialize a complex canonically, one facet per line.
    '''
    lines = ['@vertices ' + ' '.join(complex_.labels) if complex_.labels else '@vertices']
    for facet in complex_.facets:
        lines.append(' '.join(complex_.labels[v] for v in facet) if facet else '{}')
    return '\n'.join(lines)


def complex_to_dict(complex_: SimplicialComplex) -> dict:
    '''
    Convert a complex into a JSON-compatible dictionary.
    '''
    return {'vertices': list(complex_.labels),
            'facets': [[complex_.labels[v] for v in f] for f in complex_.facets]}
