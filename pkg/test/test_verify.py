#-*- coding:utf-8 -*-

import pytest

import json

import entringer.verify as verify
from entringer.core import Permutation
from entringer.errors import GuardExceeded, UnknownCheck


def _report(reports, check_id):
    return next(r for r in reports if r.check_id == check_id)


### Single checks ###
def test_psi_equality_small():
    report, = verify.run_checks(['psi-equality'], n_max_a=2)
    assert report.passed
    assert report.status == verify.PASS
    assert report.counts == {'compared': 1}
    assert report.params == {'n_max': 2, 'type': 'A'}
    assert report.counterexample is None and report.mismatch is None

def test_entringer_families(entringer_rows):
    report, = verify.run_checks(['entringer-families'], n_max_a=7)
    assert report.passed
    for name in ('alt', 'tree', 'andre', 'simsun'):
        assert report.counts[name] == [entringer_rows[n] for n in range(1, 8)]

def test_arnold_families(arnold_rows):
    report, = verify.run_checks(['arnold-families'], n_max_b=5)
    assert report.passed
    assert report.params['type'] == 'B'
    assert report.counts['alt-b'][4][1] == 16
    assert report.counts['tree-b'] == [arnold_rows[n] for n in range(1, 6)]
    assert report.counts['snake'][2] == [3, 4, 4]
    assert report.counts['simsun-b'] == report.counts['andre-h']

def test_triangle_identities():
    report, = verify.run_checks(['triangle-identities'], n_max_a=6)
    assert report.passed
    assert report.counts['euler'] == [1, 1, 2, 5, 16, 61]
    assert report.counts['springer'] == [1, 3, 11, 57, 361, 2763]


### Runner ###
def test_all_checks_small():
    reports = verify.run_checks(n_max_a=5, n_max_b=3)
    assert [r.check_id for r in reports] == sorted(verify.CHECKS)
    failed = [r.to_dict() for r in reports if not r.passed]
    assert not failed
    assert _report(reports, 'omega-bijection').counts == {'compared': 1 + 1 + 2 + 5 + 16}
    assert _report(reports, 'conjugation').params == {'n_max': 3, 'type': 'B'}
    json.dumps([r.to_dict() for r in reports])

def test_parallel_jobs():
    selection = ['phi-bijection', 'cd-preservation', 'andre-valley']
    serial = verify.run_checks(selection, n_max_a=5)
    parallel = verify.run_checks(selection, n_max_a=5, jobs=2)
    assert [r.check_id for r in parallel] == sorted(selection)
    assert [r.counts for r in parallel] == [r.counts for r in serial]

def test_unknown_check():
    with pytest.raises(UnknownCheck):
        verify.run_checks(['psi-equality', 'no-such-check'])
    with pytest.raises(KeyError):
        verify.run_checks(['no-such-check'])

def test_guard():
    with pytest.raises(GuardExceeded):
        verify.run_checks(['psi-equality'], n_max_a=verify.MAX_N_TYPE_A + 1)
    with pytest.raises(GuardExceeded):
        verify.run_checks(['conjugation'], n_max_b=verify.MAX_N_TYPE_B + 1)


### Failing checks ###
def _failing_mismatch(n_max):
    verify._compare_rows('x', 3, [1, 2, 3], [0, 1, 1], [0, 1, 2])

def _failing_witness(n_max):
    raise verify._witness(Permutation('2143'), 'made up', 4)

def test_failing_mismatch(monkeypatch):
    monkeypatch.setitem(verify.CHECKS, 'fake', (_failing_mismatch, 'A'))
    report, = verify.run_checks(['fake'], n_max_a=3)
    assert not report.passed
    assert report.status == verify.FAIL
    assert report.mismatch == ('x n=3 k=3', 1, 2)
    assert report.to_dict()['mismatch'] == ['x n=3 k=3', 1, 2]

def test_failing_witness(monkeypatch):
    monkeypatch.setitem(verify.CHECKS, 'fake', (_failing_witness, 'B'))
    report, = verify.run_checks(['fake'], n_max_b=2)
    assert report.counterexample == {'n': 4, 'object': '2143', 'reason': 'made up'}
    assert report.params == {'n_max': 2, 'type': 'B'}


def test_duplicate_image_witness():
    domain = lambda n: [Permutation('312'), Permutation('213')]
    with pytest.raises(verify._Failure) as err:
        verify._bijection_sweep([3], domain, lambda p: 0, lambda n: [0])
    assert err.value.counterexample == {'n': 3, 'object': '213',
        'reason': 'same image as 312'}


### Conjecture ###
def test_conjecture_small():
    reports = verify.check_conjecture(3)
    assert [r.params['n'] for r in reports] == [1, 2, 3]
    assert all(r.passed for r in reports)
    assert reports[-1].counts == {'arnold': [3, 4, 4], 'hetyei': [3, 4, 4]}

def test_conjecture_counterexample(monkeypatch):
    monkeypatch.setattr(verify, 'count_hetyei_fast', lambda n, k, force=False: 0)
    reports = verify.check_conjecture(2)
    assert not reports[0].passed
    assert reports[0].counterexample == {'n': 1, 'k': 1, 'arnold': 1, 'hetyei': 0}
    assert reports[1].mismatch == ('S n=2 k=1', 1, 0)

def test_conjecture_guard():
    with pytest.raises(GuardExceeded):
        verify.check_conjecture(verify.MAX_N_TYPE_A)
    assert len(verify.check_conjecture(0)) == 0


### Default sizes ###
@pytest.mark.slow
def test_default_checks():
    reports = verify.run_checks(jobs=2)
    assert all(r.passed for r in reports)
    assert _report(reports, 'psi-bijection').params['n_max'] == verify.DEFAULT_N_MAX_A

@pytest.mark.slow
def test_default_conjecture():
    reports = verify.check_conjecture()
    assert len(reports) == verify.DEFAULT_N_MAX_CONJECTURE
    assert all(r.passed for r in reports)
