"""numba-compiled kernels. Same signatures and results as ``_numpy``."""

import numba as nb
import numpy as np


@nb.njit(cache=True)
def necklace_scan(lam):
    # canonical = max among rotations; the max always has the top bit set
    full = (np.int64(1) << lam) - 1
    top = np.int64(1) << (lam - 1)
    cap = top
    masks = np.empty(cap, dtype=np.int64)
    weights = np.empty(cap, dtype=np.int64)
    mults = np.empty(cap, dtype=np.int64)
    count = 0
    for x in range(top, full + 1):
        mult = 1
        canonical = True
        for r in range(1, lam):
            rot = ((x << r) | (x >> (lam - r))) & full
            if rot > x:
                canonical = False
                break
            if rot == x:
                mult += 1
        if not canonical:
            continue
        w = 0
        y = x
        while y:
            y &= y - 1
            w += 1
        masks[count] = x
        weights[count] = w
        mults[count] = mult
        count += 1
    return masks[:count], weights[:count], mults[:count]


@nb.njit(cache=True, nogil=True)
def centralizer_indicator(ok, parts, run_start, run_len, run_perms, run_perm_offset,
                          run_perm_count, run_perm_sign, modulus, whole_sign):
    j = parts.shape[0]
    nruns = run_start.shape[0]
    half = modulus // 2
    step = np.empty(j, dtype=np.int64)
    for i in range(j):
        step[i] = modulus // parts[i]
    perm_idx = np.zeros(nruns, dtype=np.int64)
    k = np.zeros(j, dtype=np.int64)
    target = np.empty(j, dtype=np.int64)
    stab = 0
    trivial = 1
    while True:
        # block targets and the N-part of zeta for this block permutation
        base = 0
        for r in range(nruns):
            row = run_perm_offset[r] + perm_idx[r] * run_len[r]
            for t in range(run_len[r]):
                target[run_start[r] + t] = run_start[r] + run_perms[row + t]
            if run_perm_sign[r, perm_idx[r]] < 0:
                lam = parts[run_start[r]]
                if lam % 2 == 0:
                    base += half  # alpha(nu)
                if whole_sign and lam % 2 == 1:
                    base += half  # sign of a block swap of odd blocks
        # odometer over C_lambda exponents
        for i in range(j):
            k[i] = 0
        while True:
            fixes = True
            for i in range(j):
                if not ok[i, target[i], k[i]]:
                    fixes = False
                    break
            if fixes:
                stab += 1
                val = base
                for i in range(j):
                    val += k[i] * step[i]
                    if parts[i] % 2 == 0 and k[i] % 2 == 1:
                        val += half  # sign of g_i^k
                if val % modulus != 0:
                    trivial = 0
            i = j - 1
            while i >= 0:
                k[i] += 1
                if k[i] < parts[i]:
                    break
                k[i] = 0
                i -= 1
            if i < 0:
                break
        r = nruns - 1
        while r >= 0:
            perm_idx[r] += 1
            if perm_idx[r] < run_perm_count[r]:
                break
            perm_idx[r] = 0
            r -= 1
        if r < 0:
            break
    return trivial, stab
