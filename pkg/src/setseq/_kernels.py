"""Hot inner loops of the exhaustive solvers.

Two kernels live here, both written against flat numpy arrays so they can
be compiled with numba's @njit:

  - search_step: resumable backtracking over vertex labels in a fixed
    search order, claiming forced edge labels in a shared availability
    table.  The driver calls it in chunks to enforce node/time budgets.
  - naive_exists: the independent cross-check oracle.  Plain vertex-index
    order, no availability table, no symmetry reduction; distinctness is
    checked by rescanning the assigned labels.

Set SETSEQ_PURE=1 to skip numba and run the pure-Python fallbacks
(same functions, uncompiled).  The benchmark script compares both.
"""

from __future__ import annotations

import os

import numpy as np

PURE_REQUESTED = os.environ.get("SETSEQ_PURE", "") not in ("", "0")

if PURE_REQUESTED:
    _njit = None
else:
    try:
        from numba import njit as _njit
    except ImportError:  # pragma: no cover - numba is a declared dependency
        _njit = None

USING_NUMBA = _njit is not None

STATUS_BUDGET = 0
STATUS_FOUND = 1
STATUS_EXHAUSTED = 2


def _search_step_impl(be_ptr, be_idx, labels, cand, cand_start, cand_end, used, state, budget):
    """Advance the backtracking search by at most `budget` label attempts.

    state[0] = current depth, state[1] = attempts consumed by this call.
    Returns STATUS_FOUND / STATUS_EXHAUSTED / STATUS_BUDGET (resumable).
    """
    n = labels.shape[0]
    depth = state[0]
    nodes = 0
    while True:
        if depth == n:
            state[0] = depth
            state[1] = nodes
            return STATUS_FOUND
        x = cand[depth]
        end = cand_end[depth]
        advanced = False
        while x < end:
            if nodes >= budget:
                cand[depth] = x
                state[0] = depth
                state[1] = nodes
                return STATUS_BUDGET
            nodes += 1
            if used[x] == 0:
                used[x] = 1
                ok = True
                claimed = be_ptr[depth] - 1
                for t in range(be_ptr[depth], be_ptr[depth + 1]):
                    e = x ^ labels[be_idx[t]]
                    if e == 0 or used[e] == 1:
                        ok = False
                        break
                    used[e] = 1
                    claimed = t
                if ok:
                    labels[depth] = x
                    cand[depth] = x
                    depth += 1
                    if depth < n:
                        cand[depth] = cand_start[depth]
                    advanced = True
                    break
                for t in range(be_ptr[depth], claimed + 1):
                    used[x ^ labels[be_idx[t]]] = 0
                used[x] = 0
            x += 1
        if advanced:
            continue
        depth -= 1
        if depth < 0:
            state[0] = 0
            state[1] = nodes
            return STATUS_EXHAUSTED
        x = labels[depth]
        used[x] = 0
        for t in range(be_ptr[depth], be_ptr[depth + 1]):
            used[x ^ labels[be_idx[t]]] = 0
        cand[depth] = x + 1


def _naive_exists_impl(n, num_labels, edge_u, edge_v, max_nodes):
    """Existence check by enumerating injective assignments in index order.

    Returns 1 (labeling exists), 0 (none exists), or -1 (node cap hit).
    """
    labels = np.zeros(n, dtype=np.int64)
    cand = np.ones(n, dtype=np.int64)
    m = edge_u.shape[0]
    evals = np.zeros(m, dtype=np.int64)
    depth = 0
    nodes = 0
    while True:
        if depth == n:
            return 1
        x = cand[depth]
        advanced = False
        while x <= num_labels:
            nodes += 1
            if nodes > max_nodes:
                return -1
            good = True
            for j in range(depth):
                if labels[j] == x:
                    good = False
                    break
            if good:
                labels[depth] = x
                cnt = 0
                for t in range(m):
                    if edge_u[t] <= depth and edge_v[t] <= depth:
                        e = labels[edge_u[t]] ^ labels[edge_v[t]]
                        if e == 0:
                            good = False
                            break
                        for j in range(depth + 1):
                            if labels[j] == e:
                                good = False
                                break
                        if not good:
                            break
                        for j in range(cnt):
                            if evals[j] == e:
                                good = False
                                break
                        if not good:
                            break
                        evals[cnt] = e
                        cnt += 1
                if good:
                    cand[depth] = x
                    depth += 1
                    if depth < n:
                        cand[depth] = 1
                    advanced = True
                    break
            x += 1
        if advanced:
            continue
        depth -= 1
        if depth < 0:
            return 0
        cand[depth] = cand[depth] + 1


search_step_py = _search_step_impl
naive_exists_py = _naive_exists_impl

if USING_NUMBA:
    search_step = _njit(cache=True)(_search_step_impl)
    naive_exists = _njit(cache=True)(_naive_exists_impl)
else:
    search_step = _search_step_impl
    naive_exists = _naive_exists_impl
