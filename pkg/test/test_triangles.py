#-*- coding:utf-8 -*-

import pytest

import json

import entringer.triangles as triangles
from entringer.errors import RangeError
from entringer.triangles import TriangleKind


### Values ###
def test_entringer_rows(entringer7, entringer_rows):
    for n, values in entringer_rows.items():
        assert [v for _, v in entringer7.row(n)] == values
    assert entringer7.row_sums == [1, 1, 2, 5, 16, 61, 272]

def test_arnold_rows(arnold6, arnold_rows):
    for n, values in arnold_rows.items():
        assert [v for _, v in arnold6.row(n)] == values
    assert arnold6.row_sums == [1, 3, 11, 57, 361, 2763]

@pytest.mark.parametrize('n,k,expected', [(5, 3, 4), (7, 4, 46), (1, 1, 1), (7, 1, 0)])
def test_entringer_entries(entringer7, n, k, expected):
    assert entringer7[n, k] == expected

@pytest.mark.parametrize('n,k,expected', [
    (4, -3, 4), (5, 4, 80), (6, 6, 512), (3, -2, 2), (4, 2, 14), (5, -4, 16)])
def test_arnold_entries(arnold6, n, k, expected):
    assert arnold6[n, k] == expected

def test_numbers():
    assert triangles.euler_number(6) == 61
    assert triangles.euler_number(8) == 1385
    assert triangles.euler_number(10) == 50521
    assert triangles.springer_number(5) == 361
    assert triangles.springer_number(6) == 2763

def test_exact_integers():
    table = triangles.entringer_table(30)
    for n in range(1, 30):
        assert table[n + 1, n + 1] == table.row_sum(n)
    big = table.row_sum(25)
    assert isinstance(big, int)
    assert big > 2 ** 64

def test_identities():
    entringer = triangles.entringer_table(12)
    arnold = triangles.arnold_table(12)
    for n in range(3, 13):
        assert entringer[n, n] == entringer[n, n - 1]
    for n in range(1, 13):
        assert arnold[n, 1] == arnold[n, -1]
    for n in range(2, 13):
        assert arnold[n, -n] == 0


### Access ###
def test_ks(entringer7, arnold6):
    assert entringer7.ks(3) == [1, 2, 3]
    assert arnold6.ks(2) == [-2, -1, 1, 2]
    assert entringer7.row(3) == [(1, 0), (2, 1), (3, 1)]

def gen_bad_keys():
    yield TriangleKind.ENTRINGER, (0, 1)
    yield TriangleKind.ENTRINGER, (8, 1)
    yield TriangleKind.ENTRINGER, (3, 4)
    yield TriangleKind.ENTRINGER, (3, 0)
    yield TriangleKind.ENTRINGER, (3, -1)
    yield TriangleKind.ARNOLD, (3, 0)
    yield TriangleKind.ARNOLD, (3, -4)
    yield TriangleKind.ARNOLD, (7, 1)

@pytest.mark.parametrize('kind,key', gen_bad_keys())
def test_bad_keys(kind, key, entringer7, arnold6):
    table = entringer7 if kind is TriangleKind.ENTRINGER else arnold6
    with pytest.raises(RangeError):
        table[key]
    with pytest.raises(IndexError):
        table[key]

@pytest.mark.parametrize('build', [triangles.entringer_table, triangles.arnold_table])
def test_bad_size(build):
    with pytest.raises(RangeError):
        build(0)

def test_read_only(entringer7):
    with pytest.raises(ValueError):
        entringer7._values[1, 1] = 5

def test_equality():
    assert triangles.entringer_table(5) == triangles.entringer_table(5)
    assert triangles.entringer_table(5) != triangles.entringer_table(6)
    assert triangles.entringer_table(3) != triangles.arnold_table(3)
    assert repr(triangles.arnold_table(3)) == 'TriangleTable(arnold, n_max=3)'


### Export ###
def test_to_csv(entringer7):
    lines = entringer7.to_csv().splitlines()
    assert lines[0] == 'n,k,value'
    assert len(lines) == 1 + 28
    assert '7,4,46' in lines

def test_to_csv_arnold():
    lines = triangles.arnold_table(2).to_csv().splitlines()
    assert lines == ['n,k,value', '1,-1,1', '1,1,1', '2,-2,0', '2,-1,1', '2,1,1', '2,2,2']

def test_to_json(entringer7):
    obj = entringer7.to_json_obj()
    assert obj['schema_version'] == triangles.SCHEMA_VERSION
    assert obj['kind'] == 'entringer'
    assert obj['n_max'] == 7
    assert obj['rows'][6] == {'n': 7, 'k': list(range(1, 8)),
        'values': [0, 16, 32, 46, 56, 61, 61], 'sum': 272}
    assert json.loads(entringer7.to_json()) == obj

def test_to_text(entringer7):
    lines = entringer7.to_text().splitlines()
    assert lines[0] == '1: 1 | 1'
    assert lines[6] == '7: 0 16 32 46 56 61 61 | 272'

def gen_boustrophedon():
    yield 'entringer', 1, ['1', '0 -> 1', '1 <- 1 <- 0', '0 -> 1 -> 2 -> 2']
    yield 'arnold', 1, ['1', '2 <- 1', '0 -> 2 -> 3', '16 <- 16 <- 14 <- 11']
    yield 'arnold', 2, ['1', '1 <- 0', '3 -> 4 -> 4', '11 <- 8 <- 4 <- 0']

@pytest.mark.parametrize('kind,twin,expected', gen_boustrophedon())
def test_boustrophedon(kind, twin, expected):
    build = triangles.entringer_table if kind == 'entringer' else triangles.arnold_table
    text = build(4).to_boustrophedon(twin)
    lines = text.splitlines()
    assert [line.strip() for line in lines] == expected
    assert lines[0].startswith(' ')
    assert lines[-1] == lines[-1].strip()

def test_boustrophedon_twin():
    with pytest.raises(ValueError):
        triangles.arnold_table(3).to_boustrophedon(3)
