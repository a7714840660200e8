#!/usr/bin/env python3
# Copyright 2026 The SCM Authors.
# SPDX-License-Identifier: Apache-2.0
"""Regenerate the FCIDUMP fixtures under data/.

Computes STO-3G integrals (McMurchie-Davidson scheme), runs a
symmetry-blocked RHF for the diatomics, folds the frozen core into
effective one-electron integrals, and writes FCIDUMP files in chemists'
notation with 8-fold-unique two-electron entries.

ORBSYM codes (D2h and subgroups), 1-based:
    Ag=1, B1g=2, B2g=3, B3g=4, Au=5, B1u=6, B2u=7, B3u=8
so that (code-1) composes under bitwise XOR.

Outputs:
    data/h2_sto3g.fcidump
    data/f2_sto3g_frozencore_<R>.fcidump   for R on the bond-length grid
    data/rand3_test.fcidump                small synthetic fixture
    data/reference_energies.json           RHF/FCI energies per file

Usage: python3 scripts/make_fixtures.py [outdir]
"""

import itertools
import json
import math
import os
import sys

import numpy as np
import scipy.linalg as sla
from scipy.special import hyp1f1

ANGSTROM_TO_BOHR = 1.0 / 0.529177210903

# ---------------------------------------------------------------------------
# STO-3G shell data (exponents, contraction coefficients)
# ---------------------------------------------------------------------------

STO3G = {
    "H": [
        ("S", [3.42525091, 0.62391373, 0.16885540],
              [0.15432897, 0.53532814, 0.44463454]),
    ],
    "F": [
        ("S", [166.67913400, 30.36081230, 8.21682070],
              [0.15432897, 0.53532814, 0.44463454]),
        ("SP", [6.46480320, 1.50228120, 0.48858850],
               [-0.09996723, 0.39951283, 0.70011547],
               [0.15591627, 0.60768372, 0.39195739]),
    ],
}

CHARGE = {"H": 1.0, "F": 9.0}

IRREP_CODE = {"Ag": 1, "B1g": 2, "B2g": 3, "B3g": 4,
              "Au": 5, "B1u": 6, "B2u": 7, "B3u": 8}


# ---------------------------------------------------------------------------
# Primitive Gaussian integrals (McMurchie-Davidson)
# ---------------------------------------------------------------------------

def hermite_E(i, j, t, Qx, a, b):
    """Hermite expansion coefficient E_t^{ij} for a 1D Gaussian product."""
    p = a + b
    q = a * b / p
    if t < 0 or t > i + j:
        return 0.0
    if i == j == t == 0:
        return math.exp(-q * Qx * Qx)
    if j == 0:
        return (hermite_E(i - 1, j, t - 1, Qx, a, b) / (2 * p)
                - (q * Qx / a) * hermite_E(i - 1, j, t, Qx, a, b)
                + (t + 1) * hermite_E(i - 1, j, t + 1, Qx, a, b))
    return (hermite_E(i, j - 1, t - 1, Qx, a, b) / (2 * p)
            + (q * Qx / b) * hermite_E(i, j - 1, t, Qx, a, b)
            + (t + 1) * hermite_E(i, j - 1, t + 1, Qx, a, b))


def boys(n, x):
    return hyp1f1(n + 0.5, n + 1.5, -x) / (2.0 * n + 1.0)


def hermite_R(t, u, v, n, p, PC):
    """Hermite Coulomb repulsion tensor R^n_{tuv}."""
    if t < 0 or u < 0 or v < 0:
        return 0.0
    if t == u == v == 0:
        return (-2.0 * p) ** n * boys(n, p * float(np.dot(PC, PC)))
    if t > 0:
        return ((t - 1) * hermite_R(t - 2, u, v, n + 1, p, PC)
                + PC[0] * hermite_R(t - 1, u, v, n + 1, p, PC))
    if u > 0:
        return ((u - 1) * hermite_R(t, u - 2, v, n + 1, p, PC)
                + PC[1] * hermite_R(t, u - 1, v, n + 1, p, PC))
    return ((v - 1) * hermite_R(t, u, v - 2, n + 1, p, PC)
            + PC[2] * hermite_R(t, u, v - 1, n + 1, p, PC))


def prim_overlap(a, lmn1, A, b, lmn2, B):
    s = 1.0
    for d in range(3):
        s *= hermite_E(lmn1[d], lmn2[d], 0, A[d] - B[d], a, b)
    return s * (math.pi / (a + b)) ** 1.5


def prim_kinetic(a, lmn1, A, b, lmn2, B):
    l2, m2, n2 = lmn2
    term0 = b * (2 * (l2 + m2 + n2) + 3) * prim_overlap(a, lmn1, A, b, lmn2, B)
    term1 = -2.0 * b * b * (
        prim_overlap(a, lmn1, A, b, (l2 + 2, m2, n2), B)
        + prim_overlap(a, lmn1, A, b, (l2, m2 + 2, n2), B)
        + prim_overlap(a, lmn1, A, b, (l2, m2, n2 + 2), B))
    term2 = -0.5 * (
        l2 * (l2 - 1) * prim_overlap(a, lmn1, A, b, (l2 - 2, m2, n2), B)
        + m2 * (m2 - 1) * prim_overlap(a, lmn1, A, b, (l2, m2 - 2, n2), B)
        + n2 * (n2 - 1) * prim_overlap(a, lmn1, A, b, (l2, m2, n2 - 2), B))
    return term0 + term1 + term2


def prim_nuclear(a, lmn1, A, b, lmn2, B, C):
    p = a + b
    P = (a * np.asarray(A) + b * np.asarray(B)) / p
    PC = P - np.asarray(C)
    val = 0.0
    for t in range(lmn1[0] + lmn2[0] + 1):
        Ex = hermite_E(lmn1[0], lmn2[0], t, A[0] - B[0], a, b)
        for u in range(lmn1[1] + lmn2[1] + 1):
            Ey = hermite_E(lmn1[1], lmn2[1], u, A[1] - B[1], a, b)
            for v in range(lmn1[2] + lmn2[2] + 1):
                Ez = hermite_E(lmn1[2], lmn2[2], v, A[2] - B[2], a, b)
                val += Ex * Ey * Ez * hermite_R(t, u, v, 0, p, PC)
    return val * 2.0 * math.pi / p


def prim_eri(a, lmn1, A, b, lmn2, B, c, lmn3, C, d, lmn4, D):
    p = a + b
    q = c + d
    alpha = p * q / (p + q)
    P = (a * np.asarray(A) + b * np.asarray(B)) / p
    Q = (c * np.asarray(C) + d * np.asarray(D)) / q
    PQ = P - Q
    E1 = [[hermite_E(lmn1[d_], lmn2[d_], t, A[d_] - B[d_], a, b)
           for t in range(lmn1[d_] + lmn2[d_] + 1)] for d_ in range(3)]
    E2 = [[hermite_E(lmn3[d_], lmn4[d_], t, C[d_] - D[d_], c, d)
           for t in range(lmn3[d_] + lmn4[d_] + 1)] for d_ in range(3)]
    val = 0.0
    for t in range(len(E1[0])):
        for u in range(len(E1[1])):
            for v in range(len(E1[2])):
                e1 = E1[0][t] * E1[1][u] * E1[2][v]
                if e1 == 0.0:
                    continue
                for tau in range(len(E2[0])):
                    for nu in range(len(E2[1])):
                        for phi in range(len(E2[2])):
                            e2 = E2[0][tau] * E2[1][nu] * E2[2][phi]
                            if e2 == 0.0:
                                continue
                            sign = (-1.0) ** (tau + nu + phi)
                            val += e1 * e2 * sign * hermite_R(
                                t + tau, u + nu, v + phi, 0, alpha, PQ)
    return val * 2.0 * math.pi ** 2.5 / (p * q * math.sqrt(p + q))


def prim_norm(a, lmn):
    l, m, n = lmn
    df = lambda k: math.prod(range(2 * k - 1, 0, -2)) if k > 0 else 1
    return math.sqrt((2 * a / math.pi) ** 1.5 * (4 * a) ** (l + m + n)
                     / (df(l) * df(m) * df(n)))


# ---------------------------------------------------------------------------
# Contracted basis construction
# ---------------------------------------------------------------------------

class BasisFunction:
    def __init__(self, center, lmn, exps, coefs):
        self.center = np.asarray(center, dtype=float)
        self.lmn = lmn
        self.exps = list(exps)
        norms = [prim_norm(a, lmn) for a in exps]
        self.coefs = [c * n for c, n in zip(coefs, norms)]
        s = 0.0
        for ca, aa in zip(self.coefs, self.exps):
            for cb, ab in zip(self.coefs, self.exps):
                s += ca * cb * prim_overlap(aa, lmn, self.center, ab, lmn, self.center)
        self.coefs = [c / math.sqrt(s) for c in self.coefs]


def build_basis(atoms):
    """atoms: list of (symbol, xyz). Returns basis function list (s then p per shell)."""
    basis = []
    for sym, xyz in atoms:
        for shell in STO3G[sym]:
            if shell[0] == "S":
                basis.append(BasisFunction(xyz, (0, 0, 0), shell[1], shell[2]))
            elif shell[0] == "SP":
                basis.append(BasisFunction(xyz, (0, 0, 0), shell[1], shell[2]))
                for lmn in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]:
                    basis.append(BasisFunction(xyz, lmn, shell[1], shell[3]))
    return basis


def contracted(f, g1, g2, *rest):
    val = 0.0
    for c1, a1 in zip(g1.coefs, g1.exps):
        for c2, a2 in zip(g2.coefs, g2.exps):
            if not rest:
                val += c1 * c2 * f(a1, g1.lmn, g1.center, a2, g2.lmn, g2.center)
            elif len(rest) == 1:
                val += c1 * c2 * f(a1, g1.lmn, g1.center, a2, g2.lmn, g2.center, rest[0])
            else:
                g3, g4 = rest
                for c3, a3 in zip(g3.coefs, g3.exps):
                    for c4, a4 in zip(g4.coefs, g4.exps):
                        val += c1 * c2 * c3 * c4 * f(
                            a1, g1.lmn, g1.center, a2, g2.lmn, g2.center,
                            a3, g3.lmn, g3.center, a4, g4.lmn, g4.center)
    return val


def ao_integrals(atoms):
    basis = build_basis(atoms)
    n = len(basis)
    S = np.zeros((n, n))
    T = np.zeros((n, n))
    V = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1):
            S[i, j] = S[j, i] = contracted(prim_overlap, basis[i], basis[j])
            T[i, j] = T[j, i] = contracted(prim_kinetic, basis[i], basis[j])
            v = 0.0
            for sym, xyz in atoms:
                v -= CHARGE[sym] * contracted(prim_nuclear, basis[i], basis[j],
                                              np.asarray(xyz, dtype=float))
            V[i, j] = V[j, i] = v
    eri = np.zeros((n, n, n, n))
    # unique (ij|kl) under 8-fold permutation symmetry
    pairs = [(i, j) for i in range(n) for j in range(i + 1)]
    for pi, (i, j) in enumerate(pairs):
        for (k, l) in pairs[:pi + 1]:
            val = contracted(prim_eri, basis[i], basis[j], basis[k], basis[l])
            for (a, b) in ((i, j), (j, i)):
                for (c, d) in ((k, l), (l, k)):
                    eri[a, b, c, d] = val
                    eri[c, d, a, b] = val
    enuc = 0.0
    for (s1, x1), (s2, x2) in itertools.combinations(atoms, 2):
        enuc += CHARGE[s1] * CHARGE[s2] / np.linalg.norm(np.asarray(x1) - np.asarray(x2))
    return S, T, V, eri, enuc


# ---------------------------------------------------------------------------
# Symmetry-blocked RHF for a homonuclear diatomic on the z axis
# ---------------------------------------------------------------------------

def diatomic_salcs(n_ao):
    """SALC columns and irrep labels for F2 (10 AOs: 1s,2s,2px,2py,2pz per atom)."""
    assert n_ao == 10
    cols, labels = [], []

    def add(label, vec):
        cols.append(vec)
        labels.append(label)

    def unit(*pairs):
        v = np.zeros(10)
        for idx, c in pairs:
            v[idx] = c
        return v

    # atom A AOs 0..4, atom B AOs 5..9; order 1s,2s,px,py,pz
    add("Ag", unit((0, 1), (5, 1)))     # 1s g
    add("Ag", unit((1, 1), (6, 1)))     # 2s g
    add("Ag", unit((4, 1), (9, -1)))    # pz sigma-g
    add("B1u", unit((0, 1), (5, -1)))   # 1s u
    add("B1u", unit((1, 1), (6, -1)))   # 2s u
    add("B1u", unit((4, 1), (9, 1)))    # pz sigma-u
    add("B3u", unit((2, 1), (7, 1)))    # px pi-u
    add("B2g", unit((2, 1), (7, -1)))   # px pi-g
    add("B2u", unit((3, 1), (8, 1)))    # py pi-u
    add("B3g", unit((3, 1), (8, -1)))   # py pi-g
    return np.array(cols).T, labels


def rhf_blocked(S, T, V, eri, enuc, n_elec, salc, salc_labels,
                max_iter=200, tol=1e-11):
    """RHF solving each symmetry block separately; returns (E, C, eps, labels)."""
    hcore = T + V
    n = S.shape[0]
    blocks = {}
    for i, lab in enumerate(salc_labels):
        blocks.setdefault(lab, []).append(i)

    def solve_fock(F):
        # per-block generalized eigenproblem in the SALC basis
        eps_all, C_cols, labs = [], [], []
        Fs = salc.T @ F @ salc
        Ss = salc.T @ S @ salc
        for lab, idx in blocks.items():
            idx = np.asarray(idx)
            fb = Fs[np.ix_(idx, idx)]
            sb = Ss[np.ix_(idx, idx)]
            w, v = sla.eigh(fb, sb)
            for k in range(len(w)):
                eps_all.append(w[k])
                C_cols.append(salc[:, idx] @ v[:, k])
                labs.append(lab)
        order = np.argsort(np.array(eps_all), kind="stable")
        eps = np.array(eps_all)[order]
        C = np.array(C_cols).T[:, order]
        labs = [labs[o] for o in order]
        return eps, C, labs

    n_occ = n_elec // 2
    eps, C, labs = solve_fock(hcore)
    D = 2.0 * C[:, :n_occ] @ C[:, :n_occ].T
    E_old = 0.0
    diis_F, diis_e = [], []
    for it in range(max_iter):
        J = np.einsum("pqrs,rs->pq", eri, D)
        K = np.einsum("prqs,rs->pq", eri, D)
        F = hcore + J - 0.5 * K
        E = 0.5 * np.sum(D * (hcore + F)) + enuc
        err = F @ D @ S - S @ D @ F
        diis_F.append(F.copy())
        diis_e.append(err.copy())
        if len(diis_F) > 8:
            diis_F.pop(0)
            diis_e.pop(0)
        if len(diis_F) > 1:
            m = len(diis_F)
            B = -np.ones((m + 1, m + 1))
            B[m, m] = 0.0
            for a in range(m):
                for b in range(m):
                    B[a, b] = np.sum(diis_e[a] * diis_e[b])
            rhs = np.zeros(m + 1)
            rhs[m] = -1.0
            try:
                w = np.linalg.solve(B, rhs)[:m]
                F = sum(wi * Fi for wi, Fi in zip(w, diis_F))
            except np.linalg.LinAlgError:
                pass
        eps, C, labs = solve_fock(F)
        D = 2.0 * C[:, :n_occ] @ C[:, :n_occ].T
        if abs(E - E_old) < tol and np.max(np.abs(err)) < 1e-8:
            return E, C, eps, labs
        E_old = E
    raise RuntimeError(f"SCF not converged: dE={E - E_old:.2e}")


# ---------------------------------------------------------------------------
# MO transform, frozen core, FCIDUMP writer
# ---------------------------------------------------------------------------

def mo_transform(hcore, eri, C):
    h_mo = C.T @ hcore @ C
    g = np.einsum("pqrs,pi->iqrs", eri, C, optimize=True)
    g = np.einsum("iqrs,qj->ijrs", g, C, optimize=True)
    g = np.einsum("ijrs,rk->ijks", g, C, optimize=True)
    g = np.einsum("ijks,sl->ijkl", g, C, optimize=True)
    return h_mo, g


def freeze_core(h_mo, g_mo, enuc, core_idx, active_idx):
    e_core = enuc
    for i in core_idx:
        e_core += 2.0 * h_mo[i, i]
        for j in core_idx:
            e_core += 2.0 * g_mo[i, i, j, j] - g_mo[i, j, j, i]
    na = len(active_idx)
    h_eff = np.zeros((na, na))
    for p_, p in enumerate(active_idx):
        for q_, q in enumerate(active_idx):
            v = h_mo[p, q]
            for i in core_idx:
                v += 2.0 * g_mo[p, q, i, i] - g_mo[p, i, i, q]
            h_eff[p_, q_] = v
    g_act = g_mo[np.ix_(active_idx, active_idx, active_idx, active_idx)]
    return h_eff, g_act, e_core


def clean_symmetry(h, g, codes, thresh=1e-10):
    """Zero out symmetry-forbidden integrals (they are numerical noise)."""
    xor = [c - 1 for c in codes]
    n = len(codes)
    for p in range(n):
        for q in range(n):
            if xor[p] ^ xor[q]:
                assert abs(h[p, q]) < thresh, (p, q, h[p, q])
                h[p, q] = 0.0
    for p in range(n):
        for q in range(n):
            for r in range(n):
                for s in range(n):
                    if xor[p] ^ xor[q] ^ xor[r] ^ xor[s]:
                        assert abs(g[p, q, r, s]) < thresh
                        g[p, q, r, s] = 0.0


def write_fcidump(path, h, g, e_const, n_elec, ms2, codes, thresh=1e-16):
    n = len(codes)
    lines = []
    orbsym = ",".join(str(c) for c in codes)
    lines.append(f"&FCI NORB={n},NELEC={n_elec},MS2={ms2},ORBSYM={orbsym},ISYM=1 &END")

    def idx2(p, q):
        return (p * (p + 1)) // 2 + q if p >= q else (q * (q + 1)) // 2 + p

    seen = set()
    for p in range(n):
        for q in range(p + 1):
            for r in range(n):
                for s in range(r + 1):
                    if idx2(p, q) < idx2(r, s):
                        continue
                    key = (idx2(p, q), idx2(r, s))
                    if key in seen:
                        continue
                    seen.add(key)
                    v = g[p, q, r, s]
                    if abs(v) > thresh:
                        lines.append(f"{v:23.16e} {p+1:3d} {q+1:3d} {r+1:3d} {s+1:3d}")
    for p in range(n):
        for q in range(p + 1):
            if abs(h[p, q]) > thresh:
                lines.append(f"{h[p,q]:23.16e} {p+1:3d} {q+1:3d}   0   0")
    lines.append(f"{e_const:23.16e}   0   0   0   0")
    with open(path, "w") as f:
        f.write("\n".join(lines) + "\n")


# ---------------------------------------------------------------------------
# Determinant FCI (validation oracle for the generated integrals)
# ---------------------------------------------------------------------------

def _occ(mask, norb):
    return [i for i in range(norb) if mask >> i & 1]


def _sign_ann(mask, i):
    return (-1) ** bin(mask & ((1 << i) - 1)).count("1")


def sc_element(h, g, e_const, det1, det2, norb):
    """<det1|H|det2> by the Slater-Condon rules (chemists' notation)."""
    a1, b1 = det1
    a2, b2 = det2
    da, db = a1 ^ a2, b1 ^ b2
    nex = bin(da).count("1") + bin(db).count("1")
    if nex > 4:
        return 0.0
    if nex == 0:
        v = e_const
        oa, ob = _occ(a1, norb), _occ(b1, norb)
        for i in oa:
            v += h[i, i]
        for i in ob:
            v += h[i, i]
        allocc = [(i, 0) for i in oa] + [(i, 1) for i in ob]
        for (i, si) in allocc:
            for (j, sj) in allocc:
                v += 0.5 * g[i, i, j, j]
                if si == sj:
                    v -= 0.5 * g[i, j, j, i]
        return v
    if nex == 2:
        if da:
            m1, m2, same, other = a1, a2, _occ(a1, norb), _occ(b1, norb)
        else:
            m1, m2, same, other = b1, b2, _occ(b1, norb), _occ(a1, norb)
        i = (m1 & ~m2).bit_length() - 1
        a = (m2 & ~m1).bit_length() - 1
        sgn = _sign_ann(m1, i) * _sign_ann(m2, a)
        v = h[i, a]
        for j in same:
            if j != i:
                v += g[i, a, j, j] - g[i, j, j, a]
        for j in other:
            v += g[i, a, j, j]
        return sgn * v
    if da and db:  # opposite-spin double
        i = (a1 & ~a2).bit_length() - 1
        a = (a2 & ~a1).bit_length() - 1
        j = (b1 & ~b2).bit_length() - 1
        b = (b2 & ~b1).bit_length() - 1
        sgn = (_sign_ann(a1, i) * _sign_ann(a2, a)
               * _sign_ann(b1, j) * _sign_ann(b2, b))
        return sgn * g[i, a, j, b]
    # same-spin double
    m1, m2 = (a1, a2) if da else (b1, b2)
    rem = m1 & ~m2
    add = m2 & ~m1
    i = (rem & -rem).bit_length() - 1
    j = (rem & (rem - 1)).bit_length() - 1
    a = (add & -add).bit_length() - 1
    b = (add & (add - 1)).bit_length() - 1
    sgn = (_sign_ann(m1, i) * _sign_ann(m1 & ~(1 << i), j)
           * _sign_ann(m2, a) * _sign_ann(m2 & ~(1 << a), b))
    return sgn * (g[i, a, j, b] - g[i, b, j, a])


def _sc_matrix(h, g, e_const, dets, norb):
    dim = len(dets)
    H = np.zeros((dim, dim))
    for I in range(dim):
        for J in range(I + 1):
            H[I, J] = H[J, I] = sc_element(h, g, e_const, dets[I], dets[J], norb)
    return H


def fci_ground(h, g, e_const, n_elec, norb):
    """Dense FCI on the Sz=0 (or Sz=1/2) block; returns lowest eigenvalue."""
    n_alpha = (n_elec + (n_elec % 2)) // 2
    n_beta = n_elec - n_alpha
    masks_a = [m for m in range(1 << norb) if bin(m).count("1") == n_alpha]
    masks_b = [m for m in range(1 << norb) if bin(m).count("1") == n_beta]
    dets = [(a, b) for a in masks_a for b in masks_b]
    w = np.linalg.eigvalsh(_sc_matrix(h, g, e_const, dets, norb))
    return float(w[0])


def fock_space_check(h, g, e_const, n_elec, norb):
    """Validate the Slater-Condon elements against a dense second-quantized
    Hamiltonian on the full 2^(2*norb) Fock space (small systems only)."""
    nso = 2 * norb
    dim = 1 << nso

    def a_dag(k):
        m = np.zeros((dim, dim))
        for f in range(dim):
            if not (f >> k) & 1:
                sgn = (-1) ** bin(f & ((1 << k) - 1)).count("1")
                m[f | (1 << k), f] = sgn
        return m

    cre = [a_dag(k) for k in range(nso)]
    ann = [m.T for m in cre]
    H = e_const * np.eye(dim)
    for p in range(norb):
        for q in range(norb):
            if h[p, q] == 0.0:
                continue
            for s in (0, 1):
                H += h[p, q] * cre[p + s * norb] @ ann[q + s * norb]
    for p in range(norb):
        for q in range(norb):
            for r in range(norb):
                for s_ in range(norb):
                    v = g[p, q, r, s_]
                    if v == 0.0:
                        continue
                    for s1 in (0, 1):
                        for s2 in (0, 1):
                            H += 0.5 * v * (cre[p + s1 * norb] @ cre[r + s2 * norb]
                                            @ ann[s_ + s2 * norb] @ ann[q + s1 * norb])

    n_alpha = (n_elec + (n_elec % 2)) // 2
    n_beta = n_elec - n_alpha
    masks_a = [m for m in range(1 << norb) if bin(m).count("1") == n_alpha]
    masks_b = [m for m in range(1 << norb) if bin(m).count("1") == n_beta]
    dets = [(a, b) for a in masks_a for b in masks_b]

    # re-run the Slater-Condon element code from fci_ground via a tiny shim
    sc = _sc_matrix(h, g, e_const, dets, norb)
    for I, (a1, b1) in enumerate(dets):
        fi = a1 | (b1 << norb)
        for J, (a2, b2) in enumerate(dets):
            fj = a2 | (b2 << norb)
            if abs(sc[I, J] - H[fi, fj]) > 1e-10:
                raise AssertionError(
                    f"Slater-Condon mismatch at {dets[I]},{dets[J]}: "
                    f"{sc[I, J]} vs {H[fi, fj]}")
    print(f"  fock-space check OK ({len(dets)} dets)")


# ---------------------------------------------------------------------------
# Drivers
# ---------------------------------------------------------------------------

def make_h2(outdir, refs):
    r_bohr = 0.735 * ANGSTROM_TO_BOHR
    atoms = [("H", (0.0, 0.0, -r_bohr / 2)), ("H", (0.0, 0.0, r_bohr / 2))]
    S, T, V, eri, enuc = ao_integrals(atoms)
    salc = np.array([[1, 1], [1, -1]], dtype=float).T  # columns: g, u
    # columns of salc: [:,0]=(1,1) sigma-g, [:,1]=(1,-1) sigma-u
    E, C, eps, labs = rhf_blocked(S, T, V, eri, enuc, 2,
                                  salc, ["Ag", "B1u"])
    h_mo, g_mo = mo_transform(T + V, eri, C)
    codes = [IRREP_CODE[l] for l in labs]
    clean_symmetry(h_mo, g_mo, codes)
    path = os.path.join(outdir, "h2_sto3g.fcidump")
    write_fcidump(path, h_mo, g_mo, enuc, 2, 0, codes)
    fock_space_check(h_mo, g_mo, enuc, 2, 2)
    e_fci = fci_ground(h_mo, g_mo, enuc, 2, 2)
    refs["h2_sto3g.fcidump"] = {"rhf": E, "fci": e_fci, "bond_angstrom": 0.735}
    print(f"H2  R=0.735  E_RHF={E:.10f}  E_FCI={e_fci:.10f}")


def make_f2(outdir, refs, grid):
    for r_ang in grid:
        r_bohr = r_ang * ANGSTROM_TO_BOHR
        atoms = [("F", (0.0, 0.0, -r_bohr / 2)), ("F", (0.0, 0.0, r_bohr / 2))]
        S, T, V, eri, enuc = ao_integrals(atoms)
        salc, labels = diatomic_salcs(10)
        E, C, eps, labs = rhf_blocked(S, T, V, eri, enuc, 18, salc, labels)
        order = sorted(range(10), key=lambda k: eps[k])
        C = C[:, order]
        labs = [labs[o] for o in order]
        h_mo, g_mo = mo_transform(T + V, eri, C)
        core = [0, 1]
        # fixed valence layout: 2sg, 2su, 3sg, pi-u(x,y), pi-g(x,y), 3su
        by_irrep = {}
        for k in range(2, 10):
            by_irrep.setdefault(labs[k], []).append(k)
        active = [by_irrep["Ag"][0], by_irrep["B1u"][0], by_irrep["Ag"][1],
                  by_irrep["B3u"][0], by_irrep["B2u"][0],
                  by_irrep["B2g"][0], by_irrep["B3g"][0], by_irrep["B1u"][1]]
        h_eff, g_act, e_core = freeze_core(h_mo, g_mo, enuc, core, active)
        codes = [IRREP_CODE[labs[a]] for a in active]
        clean_symmetry(h_eff, g_act, codes)
        name = f"f2_sto3g_frozencore_{r_ang:.2f}.fcidump"
        write_fcidump(os.path.join(outdir, name), h_eff, g_act, e_core, 14, 0, codes)
        e_fci = fci_ground(h_eff, g_act, e_core, 14, 8)
        refs[name] = {"rhf": E, "fci": e_fci, "bond_angstrom": r_ang,
                      "orbsym": codes}
        print(f"F2  R={r_ang:.2f}  E_RHF={E:.10f}  E_FCI={e_fci:.10f}  "
              f"irreps={[labs[a] for a in active]}")


def make_rand3(outdir, refs):
    rng = np.random.default_rng(20260810)
    codes = [1, 3, 3]  # A1, B1, B1 in C2v coding
    xor = [c - 1 for c in codes]
    n = 3
    h = rng.uniform(-1, 1, (n, n))
    h = 0.5 * (h + h.T)
    g = rng.uniform(-1, 1, (n, n, n, n))
    # impose 8-fold permutation symmetry
    gs = np.zeros_like(g)
    for p in range(n):
        for q in range(n):
            for r in range(n):
                for s in range(n):
                    gs[p, q, r, s] = (g[p, q, r, s] + g[q, p, r, s]
                                      + g[p, q, s, r] + g[q, p, s, r]
                                      + g[r, s, p, q] + g[s, r, p, q]
                                      + g[r, s, q, p] + g[s, r, q, p]) / 8.0
    for p in range(n):
        for q in range(n):
            if xor[p] ^ xor[q]:
                h[p, q] = 0.0
            for r in range(n):
                for s in range(n):
                    if xor[p] ^ xor[q] ^ xor[r] ^ xor[s]:
                        gs[p, q, r, s] = 0.0
    path = os.path.join(outdir, "rand3_test.fcidump")
    write_fcidump(path, h, gs, 0.25, 2, 0, codes)
    fock_space_check(h, gs, 0.25, 2, 3)
    e_fci = fci_ground(h, gs, 0.25, 2, 3)
    refs["rand3_test.fcidump"] = {"fci": e_fci}
    print(f"rand3  E_FCI={e_fci:.10f}")


def main():
    outdir = sys.argv[1] if len(sys.argv) > 1 else "data"
    os.makedirs(outdir, exist_ok=True)
    refs = {}
    make_h2(outdir, refs)
    grid = [round(1.0 + 0.1 * k, 2) for k in range(15)]  # 1.0 .. 2.4
    make_f2(outdir, refs, grid)
    make_rand3(outdir, refs)
    with open(os.path.join(outdir, "reference_energies.json"), "w") as f:
        json.dump(refs, f, indent=2, sort_keys=True)
    print("wrote", os.path.join(outdir, "reference_energies.json"))


if __name__ == "__main__":
    main()
