'''
This module encodes parity-constrained set covers as ground logic programs
for clingo.

A parity-constrained cover selects some of the given sets such that every
item of one group is covered an odd number of times and every item of another
group an even number of times.

Example
-------

```python-repl
>>> from chordx.backend import solve_parity_cover
>>> solve_parity_cover([0b11, 0b10, 0b01], odd=0b01, even=0b10)
[0, 1]
```

Rules can also be stated over symbols with `CoverBackend`:

```python-repl
>>> from clingo import Control, Function, Number
>>> from chordx.backend import CoverBackend
>>> ctl = Control(['0'])
>>> a, b = Function('a'), Function('b')
>>> with CoverBackend(ctl.backend()) as backend:
...     backend.add_choice([a, b])
...     backend.add_parity([a, b], odd=True, name=Number(0))
...
>>> ctl.solve().satisfiable
True
```
'''

from typing import Iterable, List, Optional, Sequence
import logging

from clingo import Backend, Control, Function, Number, Symbol

from .complex import popcount

__all__ = ['CoverBackend', 'solve_parity_cover']

log = logging.getLogger(__name__)


class CoverBackend:
    '''
    Context manager around a `clingo.backend.Backend` that states rules over
    symbols.

    Besides plain rules it offers choices, parity chains, and cardinality
    bounds, which is all the chord search needs.
    '''

    backend: Backend
    '''
    The wrapped backend.
    '''

    def __init__(self, backend: Backend):
        self.backend = backend
        self._bounds = 0

    def __enter__(self) -> 'CoverBackend':
        self.backend.__enter__()
        return self

    def __exit__(self, type_, value, traceback):
        return self.backend.__exit__(type_, value, traceback)

    def _lits(self, atoms: Iterable[Symbol], positive: bool = True) -> List[int]:
        lits = [self.backend.add_atom(atom) for atom in atoms]
        return lits if positive else [-lit for lit in lits]

    def add_rule(self, head: Sequence[Symbol] = (), pos_body: Sequence[Symbol] = (),
                 neg_body: Sequence[Symbol] = (), choice: bool = False) -> None:
        '''
        Add the rule `head :- pos_body, not neg_body`.

        An empty head gives an integrity constraint.
        '''
        self.backend.add_rule(self._lits(head), self._lits(pos_body) + self._lits(neg_body, False), choice)

    def add_choice(self, atoms: Sequence[Symbol]) -> None:
        '''
        Let each of the atoms be true or false freely.
        '''
        self.add_rule(atoms, choice=True)

    def add_parity(self, atoms: Sequence[Symbol], odd: bool, name: Symbol) -> None:
        '''
        Require that an odd or even number of the given atoms is true.

        The parity is propagated along a chain of auxiliary atoms
        `parity(name,t)` holding if an odd number of the first `t` atoms is
        true.

        Parameters
        ----------
        atoms
            The atoms to count.
        odd
            Whether the number of true atoms must be odd.
        name
            A symbol distinguishing the chain from other chains.
        '''
        if not atoms:
            if odd:
                self.add_rule()
            return
        prev = Function('parity', [name, Number(1)])
        self.add_rule([prev], [atoms[0]])
        for t, atom in enumerate(atoms[1:], 2):
            cur = Function('parity', [name, Number(t)])
            self.add_rule([cur], [prev], [atom])
            self.add_rule([cur], [atom], [prev])
            prev = cur
        if odd:
            self.add_rule([], [], [prev])
        else:
            self.add_rule([], [prev])

    def _count(self, head: Sequence[Symbol], atoms: Sequence[Symbol], lower: int):
        self.backend.add_weight_rule(self._lits(head), lower, [(lit, 1) for lit in self._lits(atoms)])

    def add_at_most(self, atoms: Sequence[Symbol], bound: int) -> None:
        '''
        Require that at most `bound` of the given atoms are true.
        '''
        if len(atoms) > bound:
            self._count([], atoms, bound + 1)

    def add_at_least(self, atoms: Sequence[Symbol], bound: int) -> None:
        '''
        Require that at least `bound` of the given atoms are true.
        '''
        if bound <= 0:
            return
        self._bounds += 1
        reached = Function('at_least', [Number(self._bounds)])
        self._count([reached], atoms, bound)
        self.add_rule([], [], [reached])


def solve_parity_cover(sets: Sequence[int], odd: int, even: int, max_even: Optional[int] = None,
                       min_sets: int = 2) -> Optional[List[int]]:
    '''
    Select sets covering the items in `odd` an odd number of times and the
    items in `even` an even number of times.

    Parameters
    ----------
    sets
        The candidate sets as bitmasks over items. Sets must not contain items
        outside of `odd | even`.
    odd
        Items to cover an odd number of times.
    even
        Items to cover an even number of times.
    max_even
        If given, at most this many items of `even` may be covered at all.
    min_sets
        The least number of sets to select.

    Returns
    -------
    The sorted indices of the selected sets or `None` if no selection exists.
    '''
    if any(s & ~(odd | even) for s in sets):
        raise ValueError('sets must be contained in the items')
    if odd & ~_union(sets):
        return None
    select = [Function('select', [Number(j)]) for j in range(len(sets))]

    ctl = Control(['--models=1'], message_limit=0)
    with CoverBackend(ctl.backend()) as backend:
        backend.add_choice(select)
        covered = []
        items = odd | even
        i = 0
        while items >> i:
            if items >> i & 1:
                covers = [select[j] for j, s in enumerate(sets) if s >> i & 1]
                backend.add_parity(covers, bool(odd >> i & 1), Number(i))
                if even >> i & 1 and covers:
                    used = Function('covered', [Number(i)])
                    for atom in covers:
                        backend.add_rule([used], [atom])
                    covered.append(used)
            i += 1
        if max_even is not None:
            backend.add_at_most(covered, max_even)
        backend.add_at_least(select, min_sets)

    log.debug('parity cover: %d sets, %d odd and %d even items', len(sets), popcount(odd), popcount(even))
    with ctl.solve(yield_=True) as handle:
        for model in handle:
            return sorted(sym.arguments[0].number for sym in model.symbols(atoms=True) if sym.name == 'select')
    return None


def _union(sets: Iterable[int]) -> int:
    result = 0
    for s in sets:
        result |= s
    return result
