"""
Indicator-subpower closure engine.

Closes a set of generator tuples in A_1 x ... x A_m under the shared basic
operations. Rounds are semi-naive: each application uses at least one tuple
found in the previous round. Candidate tuples are computed with numpy
broadcasting over the operation tables, chunked to bound memory.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from math import prod
from typing import Optional, Sequence

import numpy as np

from ..config import settings
from ..exceptions import InputError
from ..models import FiniteAlgebra, OperationTable, Term

logger = logging.getLogger(__name__)

_CHUNK_ELEMENTS = 4_000_000
_DTYPE = np.int32


@lru_cache(maxsize=4096)
def table_array(op: OperationTable) -> np.ndarray:
    """The table of op as a k-dimensional array."""
    return np.asarray(op.table, dtype=_DTYPE).reshape((op.size,) * op.arity)


def _row_keys(rows: np.ndarray) -> np.ndarray:
    rows = np.ascontiguousarray(rows)
    return rows.view(np.dtype((np.void, rows.dtype.itemsize * rows.shape[1]))).ravel()


@dataclass
class ClosureResult:
    """Elements of a closure in discovery order, with parent links for witnesses."""

    rows: np.ndarray
    parents: list
    generator_rows: list[int]
    found: dict[int, int] = field(default_factory=dict)
    cap: Optional[str] = None
    stopped_early: bool = False

    @property
    def size(self) -> int:
        return len(self.rows)

    @property
    def complete(self) -> bool:
        return self.cap is None and not self.stopped_early

    def members(self) -> set[tuple[int, ...]]:
        return {tuple(int(v) for v in row) for row in self.rows}

    def derivation(self, row: int) -> Term:
        """Term deriving a row from the generators (generator j is variable x_j)."""
        var_of: dict[int, int] = {}
        for j, r in enumerate(self.generator_rows):
            var_of.setdefault(r, j)
        memo: dict[int, Term] = {}

        def build(r: int) -> Term:
            if r in memo:
                return memo[r]
            if r in var_of:
                term = Term.var(var_of[r])
            else:
                name, args = self.parents[r]
                term = Term.apply(name, [build(a) for a in args])
            memo[r] = term
            return term

        return build(row)


class ClosureEngine:
    """Capped closure of tuples under coordinate-wise basic operations."""

    def __init__(self, size_cap: Optional[int] = None, work_cap: Optional[int] = None):
        self.size_cap = size_cap or settings.closure_cap
        self.work_cap = work_cap or settings.closure_work_cap

    def close(
        self,
        algebras: Sequence[FiniteAlgebra],
        generators: Sequence[Sequence[int]],
        targets: Sequence[Sequence[int]] = (),
        stop_on_targets: bool = True,
    ) -> ClosureResult:
        """
        Close generators inside the product of algebras (one algebra per column).

        Stops early once every target is found if stop_on_targets is set.
        """
        algebras = list(algebras)
        m = len(algebras)
        generators = [tuple(g) for g in generators]
        if not generators:
            raise InputError("closure needs at least one generator")
        if m == 0:
            return ClosureResult(rows=np.zeros((1, 0), dtype=_DTYPE), parents=[None],
                                 generator_rows=[0] * len(generators), found={i: 0 for i in range(len(targets))})
        signature = algebras[0].signature
        for alg in algebras[1:]:
            if alg.signature != signature:
                raise InputError(f"dissimilar algebras {algebras[0].name} and {alg.name}")
        for g in generators:
            if len(g) != m or any(not 0 <= v < alg.size for v, alg in zip(g, algebras)):
                raise InputError(f"generator {g} out of range")

        state = _ClosureState(m, self.size_cap)
        state.set_targets(targets)
        generator_rows = [state.add(np.asarray(g, dtype=_DTYPE), None) for g in generators]
        groups = self._column_groups(algebras, m)

        old, end, work = 0, state.count, 0
        rounds = 0
        while old < end and state.cap is None:
            if stop_on_targets and state.all_found():
                state.stopped_early = True
                break
            rounds += 1
            for name, k in signature:
                for p in range(k):
                    sizes = [old] * p + [end - old] + [end] * (k - 1 - p)
                    starts = [0] * p + [old] + [0] * (k - 1 - p)
                    if 0 in sizes:
                        continue
                    work += prod(sizes)
                    if work > self.work_cap:
                        state.cap = "work"
                        break
                    self._apply_chunked(state, groups, name, k, starts, sizes, m, stop_on_targets)
                    if state.cap or (stop_on_targets and state.all_found()):
                        break
                if state.cap or (stop_on_targets and state.all_found()):
                    break
            old, end = end, state.count
        if stop_on_targets and state.all_found() and old < end:
            state.stopped_early = True
        if state.cap:
            logger.warning(f"Closure hit the {state.cap} cap after {state.count} elements in {rounds} rounds")
        else:
            logger.debug(f"Closure of {len(generators)} generators in {m} columns: {state.count} elements, {rounds} rounds")
        return ClosureResult(
            rows=state.rows(),
            parents=state.parents,
            generator_rows=generator_rows,
            found=dict(state.found),
            cap=state.cap,
            stopped_early=state.stopped_early,
        )

    @staticmethod
    def _column_groups(algebras: list[FiniteAlgebra], m: int) -> list[tuple[FiniteAlgebra, object]]:
        by_alg: dict[FiniteAlgebra, list[int]] = {}
        for j, alg in enumerate(algebras):
            by_alg.setdefault(alg, []).append(j)
        if len(by_alg) == 1:
            return [(algebras[0], slice(None))]
        return [(alg, np.asarray(cols)) for alg, cols in by_alg.items()]

    def _apply_chunked(self, state, groups, name, k, starts, sizes, m, stop_on_targets):
        rest = prod(sizes[1:]) * m
        chunk = max(1, _CHUNK_ELEMENTS // max(1, rest))
        for c0 in range(0, sizes[0], chunk):
            c1 = min(sizes[0], c0 + chunk)
            blk_sizes = [c1 - c0] + sizes[1:]
            blk_starts = [starts[0] + c0] + starts[1:]
            out = self._apply(state.buf, groups, name, k, blk_starts, blk_sizes, m)
            state.absorb(out, name, blk_starts, blk_sizes)
            if state.cap or (stop_on_targets and state.all_found()):
                return

    @staticmethod
    def _apply(buf, groups, name, k, starts, sizes, m) -> np.ndarray:
        out = np.empty(tuple(sizes) + (m,), dtype=_DTYPE)
        for alg, cols in groups:
            tab = table_array(alg.op(name))
            width = m if isinstance(cols, slice) else len(cols)
            idx = []
            for i in range(k):
                block = buf[starts[i]:starts[i] + sizes[i]][:, cols]
                shape = [1] * k + [width]
                shape[i] = sizes[i]
                idx.append(block.reshape(shape))
            out[..., cols] = tab[tuple(idx)]
        return out.reshape(-1, m)


class _ClosureState:
    """Growing row buffer plus the key index of a running closure."""

    def __init__(self, m: int, size_cap: int):
        self.m = m
        self.size_cap = size_cap
        self.buf = np.empty((64, m), dtype=_DTYPE)
        self.count = 0
        self.index: dict[bytes, int] = {}
        self.parents: list = []
        self.targets: dict[bytes, list[int]] = {}
        self.found: dict[int, int] = {}
        self.n_targets = 0
        self.cap: Optional[str] = None
        self.stopped_early = False

    def set_targets(self, targets) -> None:
        self.n_targets = len(targets)
        for i, t in enumerate(targets):
            key = np.asarray(t, dtype=_DTYPE).tobytes()
            self.targets.setdefault(key, []).append(i)

    def all_found(self) -> bool:
        return self.n_targets > 0 and len(self.found) == self.n_targets

    def rows(self) -> np.ndarray:
        return self.buf[:self.count].copy()

    def add(self, row: np.ndarray, parent) -> int:
        key = row.tobytes()
        if key in self.index:
            return self.index[key]
        if self.count == len(self.buf):
            grown = np.empty((2 * len(self.buf), self.m), dtype=_DTYPE)
            grown[:self.count] = self.buf[:self.count]
            self.buf = grown
        self.buf[self.count] = row
        self.index[key] = self.count
        self.parents.append(parent)
        for i in self.targets.get(key, ()):
            self.found.setdefault(i, self.count)
        self.count += 1
        if self.count > self.size_cap:
            self.cap = "size"
        return self.count - 1

    def absorb(self, out: np.ndarray, name: str, starts: list[int], sizes: list[int]) -> None:
        keys = _row_keys(out)
        _, first = np.unique(keys, return_index=True)
        first.sort()
        for pos in first:
            key = keys[pos].tobytes()
            if key in self.index:
                continue
            local = np.unravel_index(int(pos), sizes)
            args = tuple(int(s + l) for s, l in zip(starts, local))
            self.add(out[pos], (name, args))
            if self.cap:
                return
