'''
This module provides square-free monomial ideals together with the
Stanley-Reisner and facet dictionaries between ideals and complexes.

A square-free monomial is identified with its support, so generators are
faces over the variables `0..n-1`.

Example
-------

```python-repl
>>> from chordx.ideal import parse_ideal, stanley_reisner_complex
>>> ideal = parse_ideal('x1*x2\\nx2*x3\\nx3*x4\\nx1*x4')
>>> print(stanley_reisner_complex(ideal))
<{x1,x3}, {x2,x4}>
```
'''

from typing import Iterable, List, Optional, Sequence, Set, Tuple
from dataclasses import dataclass

from .complex import (Face, SimplicialComplex, face_mask, faces_of_dim, mask_face, popcount, resolve_labels,
                      split_lines, _natural_key)
from .errors import MixedDegreeError, ParseError, UnitIdealError

__all__ = ['MonomialIdeal', 'edge_ideal', 'facet_complex', 'facet_ideal', 'format_ideal', 'ideal_to_dict',
           'minimal_nonfaces', 'parse_ideal', 'stanley_reisner_complex', 'stanley_reisner_ideal']


def _minimal_masks(masks: Iterable[int]) -> List[int]:
    kept: List[int] = []
    for mask in sorted(set(masks), key=lambda m: (popcount(m), m)):
        if not any(other & ~mask == 0 for other in kept):
            kept.append(mask)
    return kept


@dataclass(frozen=True)
class MonomialIdeal:
    '''
    A square-free monomial ideal in `n_variables` variables given by its
    minimal generators.
    '''
    n_variables: int
    '''
    The number of variables of the polynomial ring.
    '''
    generators: Tuple[Face, ...]
    '''
    Supports of the minimal generators in canonical order.
    '''
    labels: Tuple[str, ...]
    '''
    Variable names indexed by variable id.
    '''

    @classmethod
    def from_generators(cls, generators: Iterable[Iterable[int]], n_variables: Optional[int] = None,
                        labels: Optional[Sequence[str]] = None) -> 'MonomialIdeal':
        '''
        Construct the ideal generated by the given monomial supports.

        Non-minimal generators are dropped. The empty support, i.e., the unit
        monomial, raises a `UnitIdealError`.
        '''
        supports = [tuple(sorted(set(g))) for g in generators]
        if any(not g for g in supports):
            raise UnitIdealError('the unit monomial is not a valid generator')
        used = max((g[-1] for g in supports), default=-1) + 1
        if n_variables is None:
            n_variables = len(labels) if labels is not None else used
        if used > n_variables:
            raise ValueError(f'variable id {used - 1} out of range for {n_variables} variables')
        if labels is None:
            labels = [f'x{i}' for i in range(n_variables)]
        if len(labels) != n_variables or len(set(labels)) != n_variables:
            raise ValueError('labels must be unique and match the number of variables')
        gens = tuple(sorted(mask_face(m) for m in _minimal_masks(face_mask(g) for g in supports)))
        return cls(n_variables, gens, tuple(labels))

    @classmethod
    def from_labeled(cls, generators: Iterable[Iterable[str]],
                     labels: Optional[Sequence[str]] = None) -> 'MonomialIdeal':
        '''
        Construct an ideal from generators given as sequences of variable
        names.
        '''
        generators = [tuple(g) for g in generators]
        if labels is None:
            labels = sorted({v for g in generators for v in g}, key=_natural_key)
        index = {label: i for i, label in enumerate(labels)}
        return cls.from_generators([[index[v] for v in g] for g in generators], len(labels), labels)

    @property
    def degrees(self) -> Set[int]:
        '''
        The degrees of the minimal generators.
        '''
        return {len(g) for g in self.generators}

    @property
    def generation_degree(self) -> int:
        '''
        The common degree of all generators.

        Raises a `MixedDegreeError` if the generators have different degrees
        and a `ValueError` for the zero ideal.
        '''
        degrees = self.degrees
        if not degrees:
            raise ValueError('the zero ideal has no generation degree')
        if len(degrees) > 1:
            raise MixedDegreeError(f'generators of degrees {sorted(degrees)}')
        return next(iter(degrees))

    def monomial(self, generator: Face) -> str:
        '''
        Return the monomial with the given support as a string.
        '''
        return '*'.join(self.labels[v] for v in generator)

    def __str__(self) -> str:
        return '(' + ', '.join(self.monomial(g) for g in self.generators) + ')'


def stanley_reisner_complex(ideal: MonomialIdeal) -> SimplicialComplex:
    '''
    Return the Stanley-Reisner complex `N(I)` whose faces are the supports of
    the square-free monomials outside of the ideal.

    Parameters
    ----------
    ideal
        The ideal.

    Returns
    -------
    The complex on the variables of the ring; variables occurring in no
    generator are cone points.
    '''
    n = ideal.n_variables
    gens = [face_mask(g) for g in ideal.generators]
    if any(g == 0 for g in gens):
        raise UnitIdealError('the unit ideal has no Stanley-Reisner complex')
    in_some = 0
    for g in gens:
        in_some |= g

    def addable(mask: int, v: int) -> bool:
        grown = mask | 1 << v
        return not any(g & ~grown == 0 for g in gens if g >> v & 1)

    facets: List[int] = []

    def extend(v: int, mask: int):
        if v == n:
            if all(not addable(mask, u) for u in range(n) if not mask >> u & 1):
                facets.append(mask)
            return
        if addable(mask, v):
            extend(v + 1, mask | 1 << v)
            # a vertex in no generator can never be blocked later
            if not in_some >> v & 1:
                return
        extend(v + 1, mask)

    extend(0, 0)
    return SimplicialComplex.from_faces([mask_face(m) for m in facets], n, ideal.labels)


def minimal_nonfaces(complex_: SimplicialComplex) -> List[Face]:
    '''
    Return the inclusion-minimal subsets of the ground set that are not
    faces.

    The minimal non-face of the void complex is the empty set.
    '''
    if complex_.is_void:
        return [()]
    n = complex_.n_vertices
    result = []
    for size in range(1, complex_.dim + 3):
        for face in faces_of_dim(complex_, size - 2):
            start = face[-1] + 1 if face else 0
            for v in range(start, n):
                mask = face_mask(face) | 1 << v
                if complex_.has_mask(mask):
                    continue
                if all(complex_.has_mask(mask & ~(1 << u)) for u in face):
                    result.append(face + (v,))
    return sorted(result)


def stanley_reisner_ideal(complex_: SimplicialComplex) -> MonomialIdeal:
    '''
    Return the Stanley-Reisner ideal generated by the minimal non-faces.
    '''
    if complex_.is_void:
        raise UnitIdealError('the void complex has the unit ideal as Stanley-Reisner ideal')
    return MonomialIdeal.from_generators(minimal_nonfaces(complex_), complex_.n_vertices, complex_.labels)


def facet_complex(ideal: MonomialIdeal) -> SimplicialComplex:
    '''
    Return the facet complex `F(I)` whose facets are the generator supports.
    '''
    return SimplicialComplex.from_faces(ideal.generators, ideal.n_variables, ideal.labels)


def facet_ideal(complex_: SimplicialComplex) -> MonomialIdeal:
    '''
    Return the facet ideal generated by the facets of the complex.
    '''
    return MonomialIdeal.from_generators(complex_.facets, complex_.n_vertices, complex_.labels)


def edge_ideal(graph: SimplicialComplex) -> MonomialIdeal:
    '''
    Return the edge ideal of a graph given as a complex of dimension at most
    one.
    '''
    if graph.dim > 1:
        raise ValueError('edge ideals require a graph')
    return MonomialIdeal.from_generators(faces_of_dim(graph, 1), graph.n_vertices, graph.labels)


# ------------------------------------------------------------------------------

def parse_ideal(text: str) -> MonomialIdeal:
    '''
    Parse an ideal from its text format.

    Each line holds one square-free monomial written as `x0*x1*x2` or
    `x0 x1 x2`. Lines starting with `#` are ignored and an optional line
    `@variables x0 x1 ...` fixes the variables of the ring.

    Parameters
    ----------
    text
        The text to parse.

    Returns
    -------
    The parsed ideal.
    '''
    declared = None
    lines: List[Tuple[int, List[str]]] = []
    for lineno, args, tokens in split_lines(text.replace('*', ' '), 'variables'):
        if args is not None:
            if declared is not None:
                raise ParseError('repeated @variables directive', lineno)
            declared = args
            continue
        if len(set(tokens)) != len(tokens):
            raise ParseError('monomial is not square-free', lineno)
        lines.append((lineno, tokens))
    index = resolve_labels(lines, declared)
    labels = sorted(index, key=index.__getitem__)
    return MonomialIdeal.from_generators([[index[t] for t in tokens] for _, tokens in lines], len(labels), labels)


def format_ideal(ideal: MonomialIdeal) -> str:
    '''
    Serialize an ideal, one generator per line.
    '''
    lines = ['@variables ' + ' '.join(ideal.labels) if ideal.labels else '@variables']
    lines.extend(ideal.monomial(g) for g in ideal.generators)
    return '\n'.join(lines)


def ideal_to_dict(ideal: MonomialIdeal) -> dict:
    '''
    Convert an ideal into a JSON-compatible dictionary.
    '''
    return {'variables': list(ideal.labels),
            'generators': [[ideal.labels[v] for v in g] for g in ideal.generators]}
