'''
Exceptions raised by the chordx package.
'''

from typing import Optional, Tuple

__all__ = ['ChordSetViolation', 'ChordxError', 'EmptySkeletonError', 'EnumerationInfeasible', 'InfeasibleError',
           'MixedDegreeError', 'ParseError', 'PreconditionError', 'PurityError', 'UnitIdealError']


class ChordxError(Exception):
    '''
    Base class of all errors raised by chordx.
    '''


class ParseError(ChordxError, ValueError):
    '''
    Raised for malformed complex or ideal files.

    Parameters
    ----------
    message
        The diagnostic.
    line
        The 1-based line number the diagnostic refers to.
    '''
    def __init__(self, message: str, line: int = 0):
        super().__init__(f'line {line}: {message}' if line else message)
        self.line = line


class PurityError(ChordxError, ValueError):
    '''
    Raised if an operation requiring a pure complex gets a non-pure one.
    '''


class EmptySkeletonError(ChordxError, ValueError):
    '''
    Raised if a skeleton above the dimension of a complex is requested.
    '''


class UnitIdealError(ChordxError, ValueError):
    '''
    Raised for the unit ideal, i.e., an ideal with the empty monomial as
    generator, and for the void complex it corresponds to.
    '''


class MixedDegreeError(ChordxError, ValueError):
    '''
    Raised if an ideal is not generated in a single degree.
    '''


class PreconditionError(ChordxError, ValueError):
    '''
    Raised if the precondition of an operation does not hold.

    Parameters
    ----------
    clause
        Short name of the violated clause.
    message
        The diagnostic.
    '''
    def __init__(self, clause: str, message: str):
        super().__init__(f'{clause}: {message}')
        self.clause = clause


class ChordSetViolation(PreconditionError):
    '''
    Raised if a proposed chord set violates one of its defining properties.

    Parameters
    ----------
    number
        The violated property (1 to 4) or 0 for a malformed input.
    message
        The diagnostic.
    witness
        A face witnessing the violation, if any.
    '''
    def __init__(self, number: int, message: str, witness: Optional[Tuple[int, ...]] = None):
        super().__init__(f'clause {number}', message)
        self.number = number
        self.witness = witness


class EnumerationInfeasible(ChordxError, RuntimeError):
    '''
    Raised if a kernel is too large to enumerate its supports.
    '''
    def __init__(self, kernel_dim: int, cap: int):
        super().__init__(f'kernel dimension {kernel_dim} exceeds the cap {cap}')
        self.kernel_dim = kernel_dim
        self.cap = cap


class InfeasibleError(ChordxError, RuntimeError):
    '''
    Raised if an exhaustive sweep exceeds the configured size bound.
    '''
