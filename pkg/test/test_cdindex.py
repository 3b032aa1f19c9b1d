#-*- coding:utf-8 -*-

import pytest

import entringer.cdindex as cdindex
from entringer.core import Permutation, parse_entries
from entringer.errors import PreconditionError
from entringer.families import enumerate_family
from entringer.bijections import phi


@pytest.mark.parametrize('w,expected', [
    ([6, 8, 4, 5, 1, 2, 9, 3, 7], 'ababaaba'),
    ([0, 5, 7, 3, 4, 1, 2, 8, 6], 'aababaab'),
    ([1, 2, 3], 'aa'),
    ([1], ''),
    (Permutation('3412'), 'aba'),
])
def test_variation(w, expected):
    assert cdindex.variation(w) == expected

def test_variation_empty():
    with pytest.raises(PreconditionError):
        cdindex.variation([])

@pytest.mark.parametrize('text', ['684512937', '25134', '21', '1'])
def test_variation_reverse(text):
    w = parse_entries(text)
    swapped = cdindex.variation(w[::-1]).translate(str.maketrans('ab', 'ba'))
    assert swapped == cdindex.variation(w)[::-1]


def gen_andre():
    yield '684512937', 'cddcd'
    yield '1234', 'ccc'
    yield '3412', 'cd'
    yield '1', ''
    yield pytest.param('21', None,
        marks=pytest.mark.xfail(raises=PreconditionError, strict=True))

@pytest.mark.parametrize('text,expected', gen_andre())
def test_reduced_variation_andre(text, expected):
    assert cdindex.reduced_variation_andre(Permutation(text)) == expected

def gen_simsun():
    yield '57341286', 'cddcd'
    yield '231', 'cd'
    yield '123', 'ccc'
    yield '', ''
    yield pytest.param('321', None,
        marks=pytest.mark.xfail(raises=PreconditionError, strict=True))

@pytest.mark.parametrize('text,expected', gen_simsun())
def test_reduced_variation_simsun(text, expected):
    assert cdindex.reduced_variation_simsun(Permutation(text)) == expected

@pytest.mark.parametrize('cd,weight', [('cddcd', 8), ('', 0), ('ccc', 3), ('dd', 4)])
def test_cd_weight(cd, weight):
    assert cdindex.cd_weight(cd) == weight

@pytest.mark.parametrize('n', range(1, 7))
def test_preservation(n):
    for p in enumerate_family('andre', n):
        cd = cdindex.reduced_variation_andre(p)
        assert cd == cdindex.reduced_variation_simsun(phi(p))
        assert cdindex.cd_weight(cd) == n - 1
