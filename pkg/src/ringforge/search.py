"""Index-level search machinery behind the exhaustive checkers.

Polynomials over a finite structure are tuples of element indices with
trailing zeros stripped.  The central routine, :meth:`ConvSystem.solutions`,
enumerates in canonical order every right polynomial b with
``sum_i T[a_i][tw_i[b_{k-i}]] = 0`` for all k, for one or several left
polynomials a at once.  Position k of b is fixed by the k-th constraint
once b_0..b_{k-1} are chosen, so candidates are filtered by bitmask lookups
instead of a blind loop over pairs.
"""

from __future__ import annotations

import itertools
import os
import threading
from concurrent.futures import ThreadPoolExecutor

from .errors import BoundTooLarge

DEFAULT_CEILING = 10 ** 8


def search_ceiling(override=None):
    if override is not None:
        return int(override)
    env = os.environ.get("RINGFORGE_CEILING")
    return int(env) if env else DEFAULT_CEILING


def check_budget(count, ceiling, what):
    limit = search_ceiling(ceiling)
    if count > limit:
        raise BoundTooLarge(f"{what}: {count:.3g} candidates exceed the search ceiling {limit:.3g}")


def enumerate_index_polys(n, degree):
    """Zero, then polynomials of each degree <= ``degree`` in lex order from c0."""
    yield ()
    for deg in range(degree + 1):
        for low in itertools.product(range(n), repeat=deg):
            for lead in range(1, n):
                yield low + (lead,)


def count_polys(n, degree):
    return n ** (degree + 1)


def iter_bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class ConvSystem:
    """Convolution constraints over a pairing ``T: L x R -> G``.

    ``gadd``/``gneg`` are the group tables of G (index 0 is zero) and
    ``n_right`` the size of R.
    """

    def __init__(self, T, gadd, gneg, n_right):
        self.T = T
        self.gadd = gadd
        self.gneg = gneg
        self.n = n_right
        self.full = (1 << n_right) - 1
        self._masks = {}

    def masks(self, left, tw):
        """masks[g] = bitmask of right indices c with T[left][tw[c]] == g."""
        key = (left, id(tw))
        cached = self._masks.get(key)
        if cached is None:
            row = self.T[left]
            cached = {}
            for c in range(self.n):
                g = row[tw[c]]
                cached[g] = cached.get(g, 0) | (1 << c)
            self._masks[key] = (cached, tw)
            return cached
        return cached[0]

    def product(self, a, b, twists):
        """Coefficient list of sum_i T[a_i][tw_i[b_j]] x^(i+j) (unstripped)."""
        if not a or not b:
            return []
        gadd, T = self.gadd, self.T
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            row, tw = T[ai], twists[i]
            for j, bj in enumerate(b):
                out[i + j] = gadd[out[i + j]][row[tw[bj]]]
        return out

    def solutions(self, constraints, max_degree, min_degree=0):
        """Yield nonzero b (deg <= max_degree) with every constraint's product zero.

        ``constraints`` is a list of ``(a, twists)`` where ``twists[i]`` is
        the index table applied to b before pairing with ``a[i]``.
        """
        prepared = []
        for a, twists in constraints:
            if not a:
                continue
            shift = next(i for i, x in enumerate(a) if x != 0)
            prepared.append((a, twists, shift))
        for e in range(min_degree, max_degree + 1):
            yield from self._dfs(prepared, e, [])

    def _dfs(self, prepared, e, b):
        k = len(b)
        gadd, gneg, T = self.gadd, self.gneg, self.T
        mask = self.full if k < e else self.full & ~1
        for a, twists, s in prepared:
            idx = k + s
            rest = 0
            for i in range(s + 1, min(len(a), idx + 1)):
                ai = a[i]
                if ai:
                    rest = gadd[rest][T[ai][twists[i][b[idx - i]]]]
            mask &= self.masks(a[s], twists[s]).get(gneg[rest], 0)
            if not mask:
                return
        for c in iter_bits(mask):
            b.append(c)
            if k == e:
                if self._tail_ok(prepared, b):
                    yield tuple(b)
            else:
                yield from self._dfs(prepared, e, b)
            b.pop()

    def _tail_ok(self, prepared, b):
        e = len(b) - 1
        gadd, T = self.gadd, self.T
        for a, twists, s in prepared:
            for idx in range(e + s + 1, e + len(a)):
                acc = 0
                for i in range(idx - e, min(len(a), idx + 1)):
                    ai = a[i]
                    if ai:
                        acc = gadd[acc][T[ai][twists[i][b[idx - i]]]]
                if acc:
                    return False
        return True

    def first_solution(self, constraints, max_degree):
        return next(self.solutions(constraints, max_degree), None)


def first_hit(items, fn, threads=1, chunk=32):
    """Return ``(position, result)`` for the earliest item where ``fn`` is not None.

    With ``threads > 1`` contiguous chunks are scanned concurrently; workers
    abandon positions beyond the best hit so far, and the reduction keeps
    the smallest position, so the answer never depends on scheduling.
    """
    if threads <= 1 or len(items) <= chunk:
        for pos, item in enumerate(items):
            res = fn(item)
            if res is not None:
                return pos, res
        return None
    best = [None]
    lock = threading.Lock()

    def work(start):
        for pos in range(start, min(start + chunk, len(items))):
            found = best[0]
            if found is not None and pos > found[0]:
                return
            res = fn(items[pos])
            if res is not None:
                with lock:
                    if best[0] is None or pos < best[0][0]:
                        best[0] = (pos, res)
                return

    with ThreadPoolExecutor(max_workers=threads) as pool:
        list(pool.map(work, range(0, len(items), chunk)))
    return best[0]
