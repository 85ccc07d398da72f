"""JIT-compiled inner loop for skip-gram training with negative sampling.

One call runs a full worker: ``epochs`` passes over its document shard,
updating the shared parameter matrices in place. Multiple workers may run
concurrently on the same matrices (``nogil``); updates are intentionally
unsynchronized. A single worker with a fixed seed is bit-reproducible: the
only randomness is the local multiplicative congruential generator seeded per
worker.
"""

from __future__ import annotations

import numpy as np
from numba import njit

_MUL = np.uint64(6364136223846793005)
_INC = np.uint64(1442695040888963407)
_INV53 = 1.0 / 9007199254740992.0  # 2**-53


@njit(cache=True, nogil=True)
def train_worker(
    syn0,  # (n, dim) float32, input vectors, shared
    syn1neg,  # (n, dim) float32, output vectors, shared
    flat,  # int32, this worker's in-vocab token stream
    starts,  # int64, sentence boundaries into flat (len = n_sentences + 1)
    keep_prob,  # float64 per word, subsampling keep probability
    neg_cum,  # float64 cumulative unigram^0.75 mass for negative draws
    window,  # int64, max context radius
    negatives,  # int64, negative samples per position
    alpha0,  # float64, initial learning rate
    epochs,  # int64
    seed,  # uint64, worker RNG seed
    work_buf,  # int32 scratch, >= longest sentence
):
    dim = syn0.shape[1]
    total_positions = flat.shape[0] * epochs
    if total_positions == 0:
        return
    state = seed
    if state == np.uint64(0):
        state = np.uint64(0x9E3779B97F4A7C15)
    wu = np.uint64(window)
    cum_total = neg_cum[neg_cum.shape[0] - 1]
    n_words = neg_cum.shape[0]
    neu1e = np.zeros(dim, dtype=np.float32)
    alpha = np.float32(alpha0)
    processed = 0

    for _ in range(epochs):
        for s in range(starts.shape[0] - 1):
            beg = starts[s]
            end = starts[s + 1]
            if end > beg:
                frac = 1.0 - processed / total_positions
                if frac < 1e-4:
                    frac = 1e-4
                alpha = np.float32(alpha0 * frac)
                processed += end - beg

            kept = 0
            for p in range(beg, end):
                w = flat[p]
                state = state * _MUL + _INC
                if keep_prob[w] >= 1.0:
                    work_buf[kept] = w
                    kept += 1
                elif (state >> np.uint64(11)) * _INV53 < keep_prob[w]:
                    work_buf[kept] = w
                    kept += 1

            for pos in range(kept):
                center = work_buf[pos]
                state = state * _MUL + _INC
                radius = 1 + np.int64((state >> np.uint64(33)) % wu)
                lo = pos - radius
                if lo < 0:
                    lo = 0
                hi = pos + radius + 1
                if hi > kept:
                    hi = kept
                for pos2 in range(lo, hi):
                    if pos2 == pos:
                        continue
                    inp = work_buf[pos2]
                    for j in range(dim):
                        neu1e[j] = np.float32(0.0)
                    for d in range(negatives + 1):
                        if d == 0:
                            target = np.int64(center)
                            label = np.float32(1.0)
                        else:
                            state = state * _MUL + _INC
                            x = (state >> np.uint64(11)) * _INV53 * cum_total
                            lo_i = 0
                            hi_i = n_words
                            while lo_i < hi_i:
                                mid = (lo_i + hi_i) >> 1
                                if neg_cum[mid] <= x:
                                    lo_i = mid + 1
                                else:
                                    hi_i = mid
                            target = np.int64(lo_i)
                            if target >= n_words:
                                target = n_words - 1
                            if target == center:
                                continue
                            label = np.float32(0.0)
                        f = np.float32(0.0)
                        for j in range(dim):
                            f += syn0[inp, j] * syn1neg[target, j]
                        if f > np.float32(6.0):
                            sig = np.float32(1.0)
                        elif f < np.float32(-6.0):
                            sig = np.float32(0.0)
                        else:
                            sig = np.float32(1.0) / (np.float32(1.0) + np.exp(-f))
                        g = (label - sig) * alpha
                        for j in range(dim):
                            tmp = syn1neg[target, j]
                            neu1e[j] += g * tmp
                            syn1neg[target, j] = tmp + g * syn0[inp, j]
                    for j in range(dim):
                        syn0[inp, j] += neu1e[j]
