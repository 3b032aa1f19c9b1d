#!/usr/bin/env python
#-*- coding:utf-8 -*-

from .algorithms import AlgoCStep, AlgoCTrace, psi_c, psi_b, chuang_phi
from .basic import (omega, omega_inv, omega_signed, phi, phi_inv, phi_signed,
    phi_signed_inv, psi, psi_inv, psi_signed, EntringerChain, entringer_chain)

__all__ = ['AlgoCStep', 'AlgoCTrace', 'psi_c', 'psi_b', 'chuang_phi', 'omega',
    'omega_inv', 'omega_signed', 'phi', 'phi_inv', 'phi_signed',
    'phi_signed_inv', 'psi', 'psi_inv', 'psi_signed', 'EntringerChain',
    'entringer_chain', 'MAPS']


# Command line names of the maps
MAPS = {
    'omega': omega,
    'omega-inv': omega_inv,
    'phi': phi,
    'phi-inv': phi_inv,
    'psi': psi,
    'psi-b': psi_b,
    'psi-inv': psi_inv,
    'psi-signed': psi_signed,
    'omega-signed': omega_signed,
    'phi-signed': phi_signed,
    'phi-signed-inv': phi_signed_inv,
    'chuang-phi': chuang_phi,
    'chain': entringer_chain,
}
