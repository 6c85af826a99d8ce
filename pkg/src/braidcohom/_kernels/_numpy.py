"""Pure-numpy kernels, vectorized in chunks. Same signatures as ``_numba``."""

import numpy as np

CHUNK = 1 << 20


def necklace_scan(lam):
    full = (1 << lam) - 1
    top = 1 << (lam - 1)
    out_m, out_w, out_k = [], [], []
    for lo in range(top, full + 1, CHUNK):
        x = np.arange(lo, min(lo + CHUNK, full + 1), dtype=np.int64)
        canonical = np.ones(x.shape, dtype=bool)
        mult = np.ones(x.shape, dtype=np.int64)
        for r in range(1, lam):
            rot = ((x << r) | (x >> (lam - r))) & full
            canonical &= rot <= x
            mult += rot == x
        x = x[canonical]
        out_m.append(x)
        out_w.append(np.bitwise_count(x).astype(np.int64))
        out_k.append(mult[canonical])
    return np.concatenate(out_m), np.concatenate(out_w), np.concatenate(out_k)


def _product_rows(a, b):
    # cartesian product of row tables: every row of a followed by every row of b
    na, nb_ = a.shape[0], b.shape[0]
    return np.concatenate([np.repeat(a, nb_, axis=0), np.tile(b, (na, 1))], axis=1)


def centralizer_indicator(ok, parts, run_start, run_len, run_perms, run_perm_offset,
                          run_perm_count, run_perm_sign, modulus, whole_sign):
    j = parts.shape[0]
    half = modulus // 2
    step = modulus // parts

    # N_lambda: block targets plus the N-part of zeta, one row per element
    targets = np.zeros((1, 0), dtype=np.int64)
    nu_val = np.zeros((1, 1), dtype=np.int64)
    for r in range(run_start.shape[0]):
        m, cnt, s0 = run_len[r], run_perm_count[r], run_start[r]
        table = run_perms[run_perm_offset[r]:run_perm_offset[r] + cnt * m].reshape(cnt, m) + s0
        odd_sign = run_perm_sign[r, :cnt] < 0
        lam = parts[s0]
        contrib = np.zeros(cnt, dtype=np.int64)
        if lam % 2 == 0:
            contrib += np.where(odd_sign, half, 0)
        elif whole_sign:
            contrib += np.where(odd_sign, half, 0)
        targets = _product_rows(targets, table)
        nu_val = (_product_rows(nu_val, contrib[:, None]).sum(axis=1) % modulus)[:, None]
    nu_val = nu_val[:, 0]

    # C_lambda: all exponent vectors
    exps = np.zeros((1, 0), dtype=np.int64)
    for i in range(j):
        exps = _product_rows(exps, np.arange(parts[i], dtype=np.int64)[:, None])
    c_val = (exps * step).sum(axis=1)
    c_val += half * ((exps % 2 == 1) & (parts % 2 == 0)[None, :]).sum(axis=1)
    c_val %= modulus

    blocks = np.arange(j)
    stab = 0
    trivial = 1
    rows_per_chunk = max(1, CHUNK // max(1, exps.shape[0]))
    for lo in range(0, targets.shape[0], rows_per_chunk):
        tg = targets[lo:lo + rows_per_chunk]
        fixes = np.ones((tg.shape[0], exps.shape[0]), dtype=bool)
        for i in blocks:
            fixes &= ok[i][tg[:, i][:, None], exps[:, i][None, :]]
        val = (nu_val[lo:lo + rows_per_chunk][:, None] + c_val[None, :]) % modulus
        stab += int(fixes.sum())
        if np.any(fixes & (val != 0)):
            trivial = 0
    return trivial, stab
