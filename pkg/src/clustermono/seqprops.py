"""Log-concavity, unimodality and internal-zero checks on coefficient arrays.

Arrays are dense numpy ``object`` arrays of Python ints, so coefficients of
any size are compared exactly.  Every check returns a :class:`CheckReport`;
a failing report carries the lexicographically least witness, which makes
the output independent of iteration order.

Cells outside the bounding box count as zero for log-concavity.  For
unimodality only the nonzero cells of a fiber take part in the chain, so an
all-zero fiber accepts every peak position.  Internal zeros are a separate
predicate.
"""
from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

import numpy as np

from .errors import DomainError, PreconditionError

__all__ = [
    "CoefficientArray",
    "Witness",
    "CheckReport",
    "is_log_concave",
    "has_internal_zeros",
    "is_unimodal",
    "valid_peaks",
    "convolve",
    "check_shifted_products",
]


@dataclass(frozen=True, eq=False)
class CoefficientArray:
    """Nonnegative integer coefficients over a box of exponents.

    ``data[i_1 - l_1, ..., i_m - l_m]`` holds the coefficient of
    ``x_1^{i_1} ... x_m^{i_m}``; ``offsets`` stores the lower corner ``l``.
    """

    data: np.ndarray
    offsets: tuple = field(default=None)

    def __post_init__(self):
        arr = np.array(self.data, dtype=object)
        if arr.ndim == 0:
            arr = arr.reshape(1)
        flat = arr.reshape(-1)
        for i, v in enumerate(flat):
            if isinstance(v, (bool, np.bool_)) or int(v) != v:
                raise DomainError(f"non-integer coefficient {v!r}")
            v = int(v)
            if v < 0:
                raise DomainError(f"negative coefficient {v} in coefficient array")
            flat[i] = v
        arr = flat.reshape(arr.shape)
        arr.flags.writeable = False
        offsets = self.offsets
        if offsets is None:
            offsets = (0,) * arr.ndim
        offsets = tuple(int(o) for o in offsets)
        if len(offsets) != arr.ndim:
            raise DomainError("offsets must have one entry per axis")
        object.__setattr__(self, "data", arr)
        object.__setattr__(self, "offsets", offsets)

    @classmethod
    def from_sequence(cls, seq: Sequence[int], offset: int = 0) -> "CoefficientArray":
        return cls(np.array(list(seq) or [0], dtype=object), (offset,))

    @property
    def dims(self) -> int:
        return self.data.ndim

    @property
    def shape(self) -> tuple:
        return self.data.shape

    def __getitem__(self, exponents) -> int:
        """Coefficient at absolute exponent tuple; zero outside the box."""
        if isinstance(exponents, int):
            exponents = (exponents,)
        idx = tuple(e - o for e, o in zip(exponents, self.offsets))
        if any(i < 0 or i >= s for i, s in zip(idx, self.shape)):
            return 0
        return self.data[idx]

    def to_terms(self) -> dict:
        """Sparse ``{exponent tuple: coefficient}`` view of the nonzero cells."""
        out = {}
        for idx in zip(*np.nonzero(self.data != 0)):
            idx = tuple(int(i) for i in idx)
            out[tuple(i + o for i, o in zip(idx, self.offsets))] = self.data[idx]
        return out

    def fibers(self, axis: int) -> Iterator[tuple[tuple, list]]:
        """Yield ``(base_cell, values)`` for each 1-D fiber along ``axis``.

        ``base_cell`` is the absolute exponent tuple of the fiber's first cell.
        Fibers come out in lexicographic order of their base cells.
        """
        other = [range(s) for k, s in enumerate(self.shape) if k != axis]
        for comp in np.ndindex(*[len(r) for r in other]):
            idx = list(comp)
            idx.insert(axis, slice(None))
            values = list(self.data[tuple(idx)])
            base = list(comp)
            base.insert(axis, 0)
            yield tuple(b + o for b, o in zip(base, self.offsets)), values

    def __eq__(self, other):
        if not isinstance(other, CoefficientArray):
            return NotImplemented
        return (self.offsets == other.offsets and self.shape == other.shape
                and bool(np.all(self.data == other.data)))

    def __repr__(self):
        return f"CoefficientArray(offsets={self.offsets}, data={self.data.tolist()!r})"


@dataclass(frozen=True)
class Witness:
    """Where a check broke: axis, absolute cell, the offending values."""

    axis: int
    index: tuple
    values: tuple
    note: str = ""

    def to_record(self) -> str:
        idx = ",".join(str(i) for i in self.index)
        vals = ",".join(str(v) for v in self.values)
        text = f"axis=x{self.axis + 1} index=({idx}) values=({vals})"
        if self.note:
            text += f" note={self.note}"
        return text


@dataclass(frozen=True)
class CheckReport:
    name: str
    passed: bool
    witness: Optional[Witness] = None
    examined: int = 0

    def __post_init__(self):
        if self.passed and self.witness is not None:
            raise ValueError("a passing report cannot carry a witness")
        if not self.passed and self.witness is None:
            raise ValueError("a failing report needs a witness")

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def __bool__(self):
        return self.passed

    def to_record(self) -> str:
        text = f"check={self.name} verdict={self.verdict} examined={self.examined}"
        if self.witness is not None:
            text += " " + self.witness.to_record()
        return text


def _as_array(arr) -> CoefficientArray:
    if isinstance(arr, CoefficientArray):
        return arr
    return CoefficientArray(np.array(arr, dtype=object))


def _absolute(arr: CoefficientArray, idx) -> tuple:
    return tuple(int(i) + o for i, o in zip(idx, arr.offsets))


def is_log_concave(arr) -> CheckReport:
    """``a[i]^2 >= a[i-1] * a[i+1]`` along every axis, zero outside the box."""
    arr = _as_array(arr)
    data = arr.data
    examined = 0
    worst = None
    for axis in range(arr.dims):
        moved = np.moveaxis(data, axis, -1)
        pad = [(0, 0)] * (moved.ndim - 1) + [(1, 1)]
        padded = np.pad(moved, pad, constant_values=0)
        left, mid, right = padded[..., :-2], padded[..., 1:-1], padded[..., 2:]
        bad = (mid * mid < left * right).astype(bool)
        examined += mid.size
        for pos in np.argwhere(bad):
            pos = tuple(int(p) for p in pos)
            orig = list(pos[:-1])
            orig.insert(axis, pos[-1])
            cand = (axis, _absolute(arr, orig),
                    (left[pos], mid[pos], right[pos]))
            if worst is None or cand[:2] < worst[:2]:
                worst = cand
        if worst is not None:
            break
    if worst is None:
        return CheckReport("log_concave", True, examined=examined)
    return CheckReport("log_concave", False, Witness(*worst), examined)


def has_internal_zeros(arr) -> CheckReport:
    """Report passes when no fiber has a zero strictly between two nonzeros."""
    arr = _as_array(arr)
    examined = 0
    for axis in range(arr.dims):
        for base, values in arr.fibers(axis):
            examined += len(values)
            nz = [i for i, v in enumerate(values) if v]
            if not nz:
                continue
            for q in range(nz[0] + 1, nz[-1]):
                if values[q] == 0:
                    p = max(i for i in nz if i < q)
                    r = min(i for i in nz if i > q)
                    cell = list(base)
                    cell[axis] += q
                    w = Witness(axis, tuple(cell), (values[p], 0, values[r]))
                    return CheckReport("no_internal_zeros", False, w, examined)
    return CheckReport("no_internal_zeros", True, examined=examined)


def _peak_bounds(seq) -> tuple[int, int] | None:
    """Valid peaks of ``seq`` as an inclusive interval, or None if empty."""
    peaks = valid_peaks(seq)
    if not peaks:
        return None
    return min(peaks), max(peaks)


def valid_peaks(seq: Sequence[int]) -> set[int]:
    """Indices ``k`` at which ``seq`` rises (weakly) to ``k`` then falls.

    Only nonzero entries take part in the chain, so ``valid_peaks([0, 0])``
    is ``{0, 1}`` and ``valid_peaks([1, 0, 0])`` is ``{0, 1, 2}``.
    """
    n = len(seq)
    pos = [i for i, v in enumerate(seq) if v]
    vals = [seq[i] for i in pos]
    m = len(vals)
    if m == 0:
        return set(range(n))
    rise = 0
    while rise + 1 < m and vals[rise] <= vals[rise + 1]:
        rise += 1
    fall = m - 1
    while fall > 0 and vals[fall - 1] >= vals[fall]:
        fall -= 1
    out = set()
    for k in range(n):
        if bisect_right(pos, k) - 1 <= rise and bisect_left(pos, k) >= fall:
            out.add(k)
    return out


def _valley(values, base, axis) -> Witness:
    pos = [i for i, v in enumerate(values) if v]
    vals = [values[i] for i in pos]
    s = next(i for i in range(len(vals) - 1) if vals[i] > vals[i + 1])
    t = next(i for i in range(s + 1, len(vals) - 1) if vals[i] < vals[i + 1])
    cell = list(base)
    cell[axis] += pos[t]
    return Witness(axis, tuple(cell), (vals[s], vals[t], vals[t + 1]), "valley")


def is_unimodal(arr, uniform: bool = True) -> CheckReport:
    """Unimodality along every axis.

    With ``uniform=True`` one peak index per axis must serve every fiber
    along that axis (intersection of the fibers' peak sets).  With
    ``uniform=False`` each fiber may choose its own peak.
    """
    arr = _as_array(arr)
    name = "unimodal_uniform" if uniform else "unimodal_fiberwise"
    examined = 0
    for axis in range(arr.dims):
        lo_best = hi_best = None  # (bound, base) of the binding fibers
        for base, values in arr.fibers(axis):
            examined += len(values)
            bounds = _peak_bounds(values)
            if bounds is None:
                return CheckReport(name, False, _valley(values, base, axis), examined)
            if not uniform:
                continue
            lo, hi = bounds
            if lo_best is None or lo > lo_best[0]:
                lo_best = (lo, base, values)
            if hi_best is None or hi < hi_best[0]:
                hi_best = (hi, base, values)
            if lo_best[0] > hi_best[0]:
                lo_k, lo_base, lo_vals = lo_best
                hi_k, hi_base, hi_vals = hi_best
                cell = list(lo_base)
                cell[axis] += lo_k
                other = list(hi_base)
                other[axis] += hi_k
                note = (f"peak>={lo_k + arr.offsets[axis]} here but "
                        f"peak<={hi_k + arr.offsets[axis]} at "
                        f"({','.join(str(c) for c in other)})")
                w = Witness(axis, tuple(cell), (lo_vals[lo_k], hi_vals[hi_k]), note)
                return CheckReport(name, False, w, examined)
    return CheckReport(name, True, examined=examined)


def convolve(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Cauchy product of two nonempty sequences."""
    if not len(a) or not len(b):
        raise DomainError("convolution needs nonempty sequences")
    out = np.convolve(np.array(list(a), dtype=object), np.array(list(b), dtype=object))
    return [int(v) for v in out]


def check_shifted_products(a: Sequence[int]) -> CheckReport:
    """``a[i] * a[j] >= a[i-r] * a[j+r]`` for all ``i <= j`` and ``r >= 0``.

    Requires a nonnegative log-concave sequence without internal zeros;
    otherwise :class:`PreconditionError` is raised with the failing report.
    """
    arr = CoefficientArray.from_sequence(a)
    for pre in (is_log_concave(arr), has_internal_zeros(arr)):
        if not pre.passed:
            raise PreconditionError(f"precondition {pre.name} failed", pre)
    a = [int(v) for v in a]
    n = len(a)
    examined = 0
    for i in range(n):
        for j in range(i, n):
            for r in range(1, min(i, n - 1 - j) + 1):
                examined += 1
                if a[i] * a[j] < a[i - r] * a[j + r]:
                    w = Witness(0, (i, j), (a[i] * a[j], a[i - r] * a[j + r]), f"r={r}")
                    return CheckReport("shifted_products", False, w, examined)
    return CheckReport("shifted_products", True, examined=examined)
