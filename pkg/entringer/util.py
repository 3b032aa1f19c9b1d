#-*- coding:utf-8 -*-

import os
import itertools

from contextlib import contextmanager


### Usefull functions ###
@contextmanager
def ignored(*exceptions):
    '''Silence certain exceptions.'''
    try:
        yield
    except exceptions:
        pass

def cleanpath(path):
    '''Make any path absolute.'''
    return os.path.abspath(os.path.realpath(os.path.expanduser(os.path.expandvars(path))))

def getenv_int(name, default):
    '''Read an integer setting from the environment, falling back to
    `default` when the variable is unset or empty.
    '''
    value = os.getenv(name, '').strip()
    if not value:
        return default
    try:
        return int(value)
    except ValueError:
        msg = 'environment variable {} must be an integer, got {!r}'
        raise ValueError(msg.format(name, value))

def triples(seq):
    '''Iterate over all windows of three consecutive items.'''
    a, b, c = itertools.tee(seq, 3)
    next(b, None)
    next(c, None)
    next(c, None)
    return zip(a, b, c)

def pairs(seq):
    '''Iterate over all windows of two consecutive items.'''
    a, b = itertools.tee(seq)
    next(b, None)
    return zip(a, b)
