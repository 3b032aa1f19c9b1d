#-*- coding:utf-8 -*-

import pytest

import doctest

import entringer.bijections as bijections
import entringer.families as families
from entringer.bijections import basic
from entringer.core import Permutation, SignedPermutation
from entringer.errors import GuardExceeded, PreconditionError
from entringer.tree import tree_from_literal


def P(text):
    return SignedPermutation(text) if '-' in text else Permutation(text)


# alternating, tree, André, Simsun
TYPE_A_CHAINS = [
    ('2143', '1(2,3(4))', '3412', '231'),
    ('3241', '1(2(3,4))', '1423', '132'),
    ('3142', '1(2(3),4)', '4123', '312'),
    ('4231', '1(2(3(4)))', '1234', '123'),
    ('4132', '1(2(4),3)', '3124', '213'),
]

# signed alternating, signed tree, signed André
TYPE_B_CHAINS = [
    ('1-23', '-2(1,3)', '3-21'),
    ('1-32', '-3(1,2)', '2-31'),
    ('1-3-2', '-3(-2(1))', '-3-21'),
    ('213', '1(2,3)', '312'),
    ('2-13', '-1(2,3)', '3-12'),
    ('2-31', '-3(1(2))', '-312'),
    ('2-3-1', '-3(-1(2))', '-3-12'),
    ('312', '1(2(3))', '123'),
    ('3-12', '-1(2(3))', '-123'),
    ('3-21', '-2(1(3))', '-213'),
    ('3-2-1', '-2(-1(3))', '-2-13'),
]

# Hetyei signed André, signed Simsun
HETYEI_PAIRS = [
    ('1234', '123'), ('3124', '213'), ('-3124', '-213'), ('1423', '132'),
    ('1-423', '1-32'), ('4123', '312'), ('-4123', '-312'), ('3412', '231'),
    ('-3412', '-231'), ('3-412', '2-31'), ('-3-412', '-2-31'),
]


### omega ###
@pytest.mark.parametrize('alt,literal,andre,simsun', TYPE_A_CHAINS)
def test_omega(alt, literal, andre, simsun):
    t = tree_from_literal(literal)
    assert bijections.omega(t) == P(andre)
    assert type(bijections.omega(t)) is Permutation
    assert bijections.omega_inv(P(andre)) == t

def test_omega_running_tree(running_tree):
    assert str(bijections.omega(running_tree)) == '684512937'
    assert bijections.omega_inv(Permutation('684512937')) == running_tree

def test_omega_inv_chain():
    assert bijections.omega_inv(Permutation('1234')).to_literal() == '1(2(3(4)))'
    assert bijections.omega_inv(Permutation('1')).to_literal() == '1'

@pytest.mark.parametrize('text', ['4321', '2143', ''])
def test_omega_inv_precondition(text):
    with pytest.raises(PreconditionError):
        bijections.omega_inv(P(text))

def test_omega_signed(signed_running_tree):
    andre = bijections.omega_signed(signed_running_tree)
    assert andre == P('57-12-8-49-36')
    assert andre.last == signed_running_tree.pleaf
    assert bijections.omega_inv(andre) == signed_running_tree

@pytest.mark.parametrize('n', range(1, 7))
def test_omega_roundtrip(n):
    for t in families.iter_trees(n):
        p = bijections.omega(t)
        assert families.is_andre(p)
        assert p.last == t.pleaf
        assert bijections.omega_inv(p) == t


### phi ###
@pytest.mark.parametrize('alt,literal,andre,simsun', TYPE_A_CHAINS)
def test_phi(alt, literal, andre, simsun):
    assert bijections.phi(P(andre)) == P(simsun)
    assert bijections.phi_inv(P(simsun)) == P(andre)

def test_phi_examples():
    assert str(bijections.phi(Permutation('684512937'))) == '57341286'
    assert bijections.phi(Permutation('1')) == Permutation(())
    assert bijections.phi_inv(Permutation(())) == Permutation('1')

def gen_phi_errors():
    yield bijections.phi, '2143'
    yield bijections.phi, ''
    yield bijections.phi_inv, '321'
    yield bijections.phi_signed, '-1234'
    yield bijections.phi_signed, ''
    yield bijections.phi_signed_inv, '-123'

@pytest.mark.parametrize('func,text', gen_phi_errors())
def test_phi_precondition(func, text):
    with pytest.raises(PreconditionError):
        func(P(text))

@pytest.mark.parametrize('n', range(1, 7))
def test_phi_bijective(n):
    andre = families.enumerate_family('andre', n)
    images = [bijections.phi(p) for p in andre]
    assert sorted(images) == families.enumerate_family('simsun', n - 1)
    for p, s in zip(andre, images):
        assert s.last == p.last - 1 or n == 1
        assert bijections.phi_inv(s) == p

@pytest.mark.parametrize('andre,simsun', HETYEI_PAIRS)
def test_phi_signed(andre, simsun):
    assert bijections.phi_signed(P(andre)) == P(simsun)
    assert bijections.phi_signed_inv(P(simsun)) == P(andre)

@pytest.mark.parametrize('n', range(1, 5))
def test_phi_signed_bijective(n):
    hetyei = families.enumerate_family('andre-h', n)
    images = sorted(bijections.phi_signed(p) for p in hetyei)
    assert images == families.enumerate_family('simsun-b', n - 1)


### psi ###
@pytest.mark.parametrize('alt,literal,andre,simsun', TYPE_A_CHAINS)
def test_psi(alt, literal, andre, simsun):
    t = bijections.psi(P(alt))
    assert t.to_literal() == literal
    assert bijections.psi_inv(t) == P(alt)

def test_psi_running_tree(running_tree):
    assert bijections.psi(Permutation('739154826')) == running_tree
    assert bijections.psi(Permutation('21')).to_literal() == '1(2)'
    assert bijections.psi(Permutation('1')).to_literal() == '1'

@pytest.mark.parametrize('text', ['1234', '12', ''])
def test_psi_precondition(text):
    with pytest.raises(PreconditionError):
        bijections.psi(P(text))

@pytest.mark.parametrize('n', range(1, 8))
def test_psi_pleaf(n):
    trees = set()
    for p in families.iter_family('alt', n):
        t = bijections.psi(p)
        assert t.pleaf == p.first
        trees.add(t)
    assert len(trees) == families.count_family('tree', n)

def test_psi_inv_guard(monkeypatch):
    basic._psi_table.cache_clear()
    monkeypatch.setattr(families, 'MAX_N_TYPE_A', 3)
    t = tree_from_literal('1(2,3(4))')
    with pytest.raises(GuardExceeded):
        bijections.psi_inv(t)
    assert bijections.psi_inv(t, force=True) == Permutation('2143')
    basic._psi_table.cache_clear()

@pytest.mark.parametrize('obj', [tree_from_literal('-2(1,3)'), Permutation('2143'), None])
def test_psi_inv_precondition(obj):
    with pytest.raises(PreconditionError):
        bijections.psi_inv(obj)

@pytest.mark.parametrize('alt,literal,andre', TYPE_B_CHAINS)
def test_psi_signed(alt, literal, andre):
    t = bijections.psi_signed(P(alt))
    assert t.to_literal() == literal
    assert t.pleaf == P(alt).first
    assert bijections.omega_signed(t) == P(andre)

def test_psi_signed_running_tree(signed_running_tree):
    p = SignedPermutation('6-39-82-17-45')
    assert bijections.psi_signed(p) == signed_running_tree

@pytest.mark.parametrize('text', ['123', '-1-2-3', ''])
def test_psi_signed_precondition(text):
    with pytest.raises(PreconditionError):
        bijections.psi_signed(P(text))

@pytest.mark.parametrize('n', range(1, 4))
def test_psi_signed_onto_trees(n):
    images = set(bijections.psi_signed(p) for p in families.iter_family('alt-b', n))
    assert images == set(families.iter_signed_trees(n))


### Chain ###
def test_entringer_chain():
    chain = bijections.entringer_chain(Permutation('2143'))
    assert chain.alternating == Permutation('2143')
    assert chain.tree.to_literal() == '1(2,3(4))'
    assert chain.andre == Permutation('3412')
    assert chain.simsun == Permutation('231')
    assert chain.tree.pleaf == chain.andre.last == chain.simsun.last + 1

def test_maps():
    assert set(bijections.MAPS) == {'omega', 'omega-inv', 'phi', 'phi-inv',
        'psi', 'psi-b', 'psi-inv', 'psi-signed', 'omega-signed', 'phi-signed',
        'phi-signed-inv', 'chuang-phi', 'chain'}
    assert bijections.MAPS['phi'] is bijections.phi

def test_docstring_examples():
    result = doctest.testmod(basic)
    assert result.attempted >= 4
    assert result.failed == 0
