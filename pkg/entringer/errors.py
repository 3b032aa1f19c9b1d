#-*- coding:utf-8 -*-

__all__ = ['EntringerError', 'DuplicateValue', 'DuplicateAbsValue',
    'InvalidPermutation', 'RelabelError', 'TreeError', 'ParseError',
    'PreconditionError', 'RangeError', 'GuardExceeded', 'UnknownCheck']


### Exceptions ###
class EntringerError(Exception):
    '''Base class of all errors raised by this package.'''
    pass


class DuplicateValue(EntringerError, ValueError):
    '''A word or permutation repeats an entry.'''
    pass

class DuplicateAbsValue(DuplicateValue):
    '''A signed permutation repeats an absolute value.'''
    pass

class InvalidPermutation(EntringerError, ValueError):
    '''The entries do not cover [n] (or their absolute values do not).'''
    pass

class RelabelError(EntringerError, ValueError):
    '''An order relabeling got a target set of the wrong size.'''
    pass

class TreeError(EntringerError, ValueError):
    '''A tree violates the increasing 1-2 tree invariants.'''
    pass

class ParseError(EntringerError, ValueError):
    '''Malformed text or JSON input.'''
    pass

class PreconditionError(EntringerError, ValueError):
    '''A map was applied to an object outside of its domain.'''
    pass


class RangeError(EntringerError, IndexError):
    '''A size or refinement parameter is out of range.'''
    pass


class GuardExceeded(EntringerError, RuntimeError):
    '''An enumeration was requested beyond the configured size guard.'''
    pass


class UnknownCheck(EntringerError, KeyError):
    '''A verification check id is not registered.'''
    def __str__(self):
        return str(self.args[0]) if self.args else ''
