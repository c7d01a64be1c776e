"""Hot kernels: truncated convolution and budgeted partition histograms.

Both kernels ship in two interchangeable implementations: a numba-jitted
version and a pure numpy/Python fallback. Set PARTBIJ_NO_NUMBA=1 to force
the fallbacks; results are bit-identical either way.
"""

import os

import numpy as np

_FORCED_OFF = os.environ.get("PARTBIJ_NO_NUMBA", "") not in ("", "0")

try:
    if _FORCED_OFF:
        raise ImportError("numba disabled by PARTBIJ_NO_NUMBA")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and not _FORCED_OFF

AXIS_FIRST = 0
AXIS_SIZE = 1
AXIS_LENGTH = 2
AXIS_WEIGHT = 3
AXIS_ANTI = 4

_AXIS_CODES = {
    "first": AXIS_FIRST,
    "size": AXIS_SIZE,
    "length": AXIS_LENGTH,
    "weight": AXIS_WEIGHT,
    "anti": AXIS_ANTI,
}


# ---------------------------------------------------------------------------
# kernel 1: truncated multivariate convolution
# ---------------------------------------------------------------------------

def _convolve_numpy(a, b):
    """Shift-and-add over the nonzeros of the sparser operand."""
    if np.count_nonzero(a) > np.count_nonzero(b):
        a, b = b, a
    out = np.zeros(a.shape, dtype=np.int64)
    for idx in np.argwhere(a):
        src = tuple(slice(0, dim - e) for e, dim in zip(idx, a.shape))
        dst = tuple(slice(e, dim) for e, dim in zip(idx, a.shape))
        out[dst] += a[tuple(idx)] * b[src]
    return out


def _conv_pairs_py(aexp, aval, bexp, bval, bounds, strides, out_flat):
    nvars = bounds.shape[0]
    for i in range(aexp.shape[0]):
        for j in range(bexp.shape[0]):
            flat = 0
            ok = True
            for v in range(nvars):
                e = aexp[i, v] + bexp[j, v]
                if e > bounds[v]:
                    ok = False
                    break
                flat += e * strides[v]
            if ok:
                out_flat[flat] += aval[i] * bval[j]


if USE_NUMBA:
    _conv_pairs = njit(cache=True)(_conv_pairs_py)
else:
    _conv_pairs = _conv_pairs_py


def _convolve_pairs(a, b):
    """Nonzero-pair loop suited to jit compilation."""
    aidx = np.argwhere(a)
    bidx = np.argwhere(b)
    aval = a[tuple(aidx.T)] if aidx.size else np.zeros(0, np.int64)
    bval = b[tuple(bidx.T)] if bidx.size else np.zeros(0, np.int64)
    bounds = np.array(a.shape, dtype=np.int64) - 1
    out = np.zeros(a.shape, dtype=np.int64)
    strides = np.array(out.strides, dtype=np.int64) // out.itemsize
    _conv_pairs(
        np.ascontiguousarray(aidx, dtype=np.int64),
        np.ascontiguousarray(aval, dtype=np.int64),
        np.ascontiguousarray(bidx, dtype=np.int64),
        np.ascontiguousarray(bval, dtype=np.int64),
        bounds,
        strides,
        out.reshape(-1),
    )
    return out


def convolve(a, b):
    """Truncated product of two identically shaped int64 coefficient arrays.

    Exponent vectors add; results falling outside the array are dropped.
    """
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    if USE_NUMBA:
        return _convolve_pairs(a, b)
    return _convolve_numpy(a, b)


# ---------------------------------------------------------------------------
# kernel 2: budgeted partition histogram
# ---------------------------------------------------------------------------

def _hist_py(t, r, max_part, max_len, distinct, mod, mask,
             kinds, bounds, strides, out_flat):
    nax = kinds.shape[0]
    vals = np.zeros(max_len + 2, dtype=np.int64)
    cands = np.zeros(max_len + 2, dtype=np.int64)

    size = 0
    weight = 0
    first = 0

    # emit the empty partition
    if mod == 0 or (mask >> (0 % mod)) & 1:
        out_flat[0] += 1

    if max_len < 1 or max_part < 1:
        return

    pos = 1
    cands[1] = max_part
    while pos >= 1:
        v = cands[pos]
        if v < 1:
            pos -= 1
            if pos >= 1:
                u = vals[pos]
                size -= u
                if pos >= r and (pos - r) % t == 0:
                    weight -= u
                if pos == 1:
                    first = 0
                cands[pos] = u - 1
            continue
        counted = pos >= r and (pos - r) % t == 0
        # largest part value the axis bounds still admit at this position;
        # every axis statistic grows with the value, so smaller values stay
        # admissible and larger ones never recover
        vcap = v
        for k in range(nax):
            kind = kinds[k]
            if kind == AXIS_FIRST:
                if pos == 1 and bounds[k] < vcap:
                    vcap = bounds[k]
            elif kind == AXIS_SIZE:
                room = bounds[k] - size
                if room < vcap:
                    vcap = room
            elif kind == AXIS_WEIGHT:
                if counted:
                    room = bounds[k] - weight
                    if room < vcap:
                        vcap = room
            elif kind == AXIS_ANTI:
                if not counted:
                    room = bounds[k] - (size - weight)
                    if room < vcap:
                        vcap = room
            # length never varies with the value; it is folded into max_len
        if vcap < v:
            cands[pos] = vcap
            continue
        nsize = size + v
        nweight = weight + (v if counted else 0)
        nfirst = v if pos == 1 else first
        vals[pos] = v
        size = nsize
        weight = nweight
        first = nfirst
        if mod == 0 or (mask >> (pos % mod)) & 1:
            flat = 0
            for k in range(nax):
                kind = kinds[k]
                if kind == AXIS_FIRST:
                    stat = first
                elif kind == AXIS_SIZE:
                    stat = size
                elif kind == AXIS_LENGTH:
                    stat = pos
                elif kind == AXIS_WEIGHT:
                    stat = weight
                else:
                    stat = size - weight
                flat += stat * strides[k]
            out_flat[flat] += 1
        if pos < max_len:
            pos += 1
            cands[pos] = v - 1 if distinct else v
        else:
            size -= v
            if counted:
                weight -= v
            if pos == 1:
                first = 0
            cands[pos] = v - 1


if USE_NUMBA:
    _hist = njit(cache=True)(_hist_py)
else:
    _hist = _hist_py


def partition_histogram(axes, bounds, *, t=1, r=1, max_part, max_len,
                        distinct=False, length_mod=None):
    """Histogram of all partitions within the given caps and axis bounds.

    Counts every partition (the empty one included) with parts <= max_part,
    length <= max_len, and every axis statistic within its bound; each lands
    in the output cell indexed by its axis values. Axes are statistic names
    from {"first", "size", "length", "weight", "anti"}; "weight" is the sum
    of parts at indices r, t+r, 2t+r, ... and "anti" the rest of the size.
    length_mod=(m, residues) keeps only partitions whose length is congruent
    to one of the residues mod m (pruning is unaffected).

    Every statistic is nondecreasing as parts are appended, so a prefix that
    exceeds any axis bound has no qualifying extensions; the search prunes
    on that, which makes the enumeration complete for the returned box.
    """
    if not axes:
        raise ValueError("at least one axis is required")
    if len(axes) != len(bounds):
        raise ValueError("axes and bounds must pair up")
    kinds = np.array([_AXIS_CODES[a] for a in axes], dtype=np.int64)
    bnd = np.array(bounds, dtype=np.int64)
    if np.any(bnd < 0):
        raise ValueError("axis bounds must be nonnegative")
    max_len = int(max_len)
    for a, b in zip(axes, bounds):
        if a == "length":
            max_len = min(max_len, int(b))
    shape = tuple(int(b) + 1 for b in bounds)
    out = np.zeros(shape, dtype=np.int64)
    strides = np.array(out.strides, dtype=np.int64) // out.itemsize
    mod, mask = 0, 0
    if length_mod is not None:
        mod, residues = length_mod
        mod = int(mod)
        if mod < 1:
            raise ValueError("length modulus must be positive")
        for res in residues:
            mask |= 1 << (res % mod)
    _hist(int(t), int(r), int(max_part), max_len,
          1 if distinct else 0, mod, mask,
          kinds, bnd, strides, out.reshape(-1))
    return out
