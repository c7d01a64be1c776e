"""Exact-integer multivariate power series truncated to a per-variable box.

A series lives on a fixed, canonically ordered variable tuple with an
inclusive maximum exponent per variable; coefficients sit in a dense int64
array indexed by exponent vectors. All arithmetic is exact. A series is
"box-exact" when every stored coefficient equals the coefficient of the
formal series it stands for; sums and products of box-exact series are
box-exact because exponents only ever add.
"""

import math
import re

import numpy as np

from . import _accel

INFINITY = math.inf

_ZNUM = re.compile(r"^z([1-9][0-9]*)$")


class SeriesError(ValueError):
    """Base class for series failures."""


class BoxMismatch(SeriesError):
    """Operands live on different variables or boxes."""


class NonUnitConstantTerm(SeriesError):
    """Inversion needs a constant coefficient of +1 or -1."""


class DivergentInfiniteProduct(SeriesError):
    """Infinite Pochhammer with a constant ratio never leaves the box."""


class BoxTooSmall(SeriesError):
    """The box cannot hold the full polynomial."""


class OutOfBox(SeriesError):
    """Requested exponent vector lies outside the box."""


class CoefficientOverflow(SeriesError):
    """A product could exceed the int64 coefficient range."""


def _var_key(name):
    if name == "q":
        return (0, 0, "")
    if name == "z":
        return (1, 0, "")
    if name == "s":
        return (2, 0, "")
    m = _ZNUM.match(name)
    if m:
        return (3, int(m.group(1)), "")
    return (4, 0, name)


def _canon_box(box):
    """Split a {name: bound} dict into aligned variable and bound tuples."""
    variables = tuple(sorted(box, key=_var_key))
    bounds = []
    for v in variables:
        b = int(box[v])
        if b < 0:
            raise SeriesError(f"negative bound for {v}: {b}")
        bounds.append(b)
    return variables, tuple(bounds)


_GUARD = 2**62


def _l1(coeffs):
    return int(np.abs(coeffs).astype(object).sum())


class TruncatedSeries:
    """Dense truncated series. Build via zero / constant / monomial / from_terms."""

    __slots__ = ("variables", "box", "coeffs")

    def __init__(self, variables, box, coeffs):
        self.variables = variables
        self.box = box
        self.coeffs = coeffs

    @classmethod
    def zero(cls, box):
        variables, bounds = _canon_box(box)
        shape = tuple(b + 1 for b in bounds)
        return cls(variables, bounds, np.zeros(shape, dtype=np.int64))

    @classmethod
    def constant(cls, box, value):
        f = cls.zero(box)
        f.coeffs[(0,) * len(f.variables)] = value
        return f

    @classmethod
    def monomial(cls, box, exponents, coeff=1):
        """Single term; exponents maps variable name to exponent, zeros may be omitted."""
        f = cls.zero(box)
        idx = f._index(exponents)
        f.coeffs[idx] = coeff
        return f

    @classmethod
    def from_terms(cls, box, terms):
        """Accumulate (exponents, coeff) pairs; terms outside the box are dropped."""
        f = cls.zero(box)
        for exponents, coeff in terms:
            try:
                idx = f._index(exponents)
            except OutOfBox:
                continue
            f.coeffs[idx] += coeff
        return f

    def _index(self, exponents):
        idx = [0] * len(self.variables)
        pos = {v: i for i, v in enumerate(self.variables)}
        for name, e in exponents.items():
            e = int(e)
            if e == 0:
                continue
            if e < 0 or name not in pos or e > self.box[pos[name]]:
                raise OutOfBox(f"{name}^{e} outside box")
            idx[pos[name]] = e
        return tuple(idx)

    def box_dict(self):
        return dict(zip(self.variables, self.box))

    def copy(self):
        return TruncatedSeries(self.variables, self.box, self.coeffs.copy())

    def _check_aligned(self, other):
        if self.variables != other.variables or self.box != other.box:
            raise BoxMismatch(
                f"{self.variables}/{self.box} vs {other.variables}/{other.box}")

    def __add__(self, other):
        if isinstance(other, int):
            other = TruncatedSeries.constant(self.box_dict(), other)
        self._check_aligned(other)
        return TruncatedSeries(self.variables, self.box,
                               self.coeffs + other.coeffs)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = TruncatedSeries.constant(self.box_dict(), other)
        self._check_aligned(other)
        return TruncatedSeries(self.variables, self.box,
                               self.coeffs - other.coeffs)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return TruncatedSeries(self.variables, self.box, -self.coeffs)

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries(self.variables, self.box,
                                   self.coeffs * np.int64(other))
        self._check_aligned(other)
        if _l1(self.coeffs) * _l1(other.coeffs) > _GUARD:
            raise CoefficientOverflow("product may exceed int64 range")
        return TruncatedSeries(self.variables, self.box,
                               _accel.convolve(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.variables == other.variables and self.box == other.box
                and bool(np.array_equal(self.coeffs, other.coeffs)))

    __hash__ = None

    def is_zero(self):
        return not self.coeffs.any()

    def coefficient(self, exponents):
        """Exact coefficient at the exponent vector; OutOfBox beyond the box."""
        return int(self.coeffs[self._index(exponents)])

    def terms(self):
        """Yield (exponents, coeff) in graded-lexicographic order, zeros omitted."""
        idxs = np.argwhere(self.coeffs)
        order = sorted(map(tuple, idxs), key=lambda t: (sum(t), t))
        for idx in order:
            exps = {v: int(e) for v, e in zip(self.variables, idx) if e}
            yield exps, int(self.coeffs[idx])

    def text(self):
        """Plain rendering, e.g. '1 + q*z + 2*q^2*z^2'."""
        parts = []
        for exps, coeff in self.terms():
            factors = []
            for v in self.variables:
                e = exps.get(v, 0)
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(parts) if parts else "0"

    def to_json(self):
        return {
            "box": {v: b for v, b in zip(self.variables, self.box)},
            "terms": [[exps, coeff] for exps, coeff in self.terms()],
        }

    @classmethod
    def from_json(cls, data):
        f = cls.zero(data["box"])
        for exps, coeff in data["terms"]:
            f.coeffs[f._index(exps)] += coeff
        return f

    def __repr__(self):
        nnz = int(np.count_nonzero(self.coeffs))
        if nnz <= 8:
            return f"TruncatedSeries({self.text()!r}, box={self.box_dict()})"
        return f"TruncatedSeries(<{nnz} terms>, box={self.box_dict()})"


def add(f, g):
    return f + g


def mul(f, g):
    return f * g


def invert(f):
    """Multiplicative inverse in the box, by geometric expansion.

    Write f = c(1 - h) with c = +-1 and h free of constant term; then
    1/f = c(1 + h + h^2 + ...). Each power of h raises the minimum total
    degree, so the expansion stops after at most sum(box)+1 rounds.
    """
    c = int(f.coeffs[(0,) * len(f.variables)])
    if c not in (1, -1):
        raise NonUnitConstantTerm(f"constant term is {c}")
    h = (c * f).copy()
    h.coeffs[(0,) * len(h.variables)] = 0
    h = -h  # now c*f = 1 - h
    acc = TruncatedSeries.constant(f.box_dict(), 1)
    term = TruncatedSeries.constant(f.box_dict(), 1)
    for _ in range(sum(f.box) + 1):
        term = term * h
        if term.is_zero():
            break
        acc = acc + term
    return c * acc


def _monomial_exponents(variables, m):
    exps = [0] * len(variables)
    pos = {v: i for i, v in enumerate(variables)}
    for name, e in m.items():
        e = int(e)
        if e < 0:
            raise SeriesError(f"negative exponent {name}^{e}")
        if e == 0:
            continue
        if name not in pos:
            raise SeriesError(f"variable {name} not in box")
        exps[pos[name]] = e
    return exps


def pochhammer(base, ratio, n, box):
    """Product of (1 - base*ratio^k) for k = 0..n-1, truncated to the box.

    base and ratio are exponent maps. n may be INFINITY when ratio is not
    the constant monomial; factors whose monomial leaves the box are
    identically 1 there, and exponents only grow with k, so the loop stops
    at the first such factor.
    """
    variables, bounds = _canon_box(box)
    b = _monomial_exponents(variables, base)
    r = _monomial_exponents(variables, ratio)
    if n is INFINITY:
        if not any(r):
            raise DivergentInfiniteProduct("constant ratio")
        n = None
    else:
        n = int(n)
        if n < 0:
            raise SeriesError(f"negative factor count {n}")
    acc = TruncatedSeries.constant(box, 1)
    cur = list(b)
    k = 0
    while n is None or k < n:
        if any(e > bound for e, bound in zip(cur, bounds)):
            break
        factor = TruncatedSeries.constant(box, 1)
        factor.coeffs[tuple(cur)] -= 1
        acc = acc * factor
        cur = [e + d for e, d in zip(cur, r)]
        k += 1
    return acc


def q_binomial(n, k, variable, box):
    """Gaussian binomial coefficient as an exact polynomial in one variable.

    Computed in a working box of exactly degree k(n-k) as the quotient of
    Pochhammer products, checked residue-free, then embedded in the target
    box. BoxTooSmall if the target cannot hold degree k(n-k).
    """
    if not 0 <= k <= n:
        raise SeriesError(f"need 0 <= k <= n, got n={n} k={k}")
    deg = k * (n - k)
    variables, bounds = _canon_box(box)
    if variable not in variables:
        raise BoxTooSmall(f"variable {variable} not in box")
    axis = variables.index(variable)
    if bounds[axis] < deg:
        raise BoxTooSmall(
            f"degree {deg} exceeds box bound {bounds[axis]} for {variable}")
    work_box = {variable: deg}
    num = pochhammer({variable: n - k + 1}, {variable: 1}, k, work_box)
    den = pochhammer({variable: 1}, {variable: 1}, k, work_box)
    quot = num * invert(den)
    if quot * den != num:
        raise SeriesError("q-binomial division left a residue")
    if int(quot.coeffs[deg]) != 1:
        raise SeriesError("q-binomial top coefficient is not 1")
    out = TruncatedSeries.zero(box)
    idx = [0] * len(variables)
    for e in range(deg + 1):
        idx[axis] = e
        out.coeffs[tuple(idx)] = quot.coeffs[e]
    return out


def substitute(f, variable, m, box=None):
    """Replace a variable by a monomial; terms leaving the box are dropped.

    The result is exact on the target box only when f was exact on a box
    large enough to cover every preimage; the caller supplies that larger
    source and, when needed, a different target box.
    """
    if box is None:
        box = f.box_dict()
    out = TruncatedSeries.zero(box)
    pos = {v: i for i, v in enumerate(out.variables)}
    for name in f.variables:
        if name != variable and name not in pos:
            raise SeriesError(f"variable {name} not in target box")
    for name in m:
        if int(m[name]) and name not in pos:
            raise SeriesError(f"variable {name} not in target box")
    sub = [(pos[name], int(e)) for name, e in m.items() if int(e)]
    for exps, coeff in f.terms():
        e = exps.pop(variable, 0)
        idx = [0] * len(out.variables)
        for name, val in exps.items():
            idx[pos[name]] = val
        for axis, step in sub:
            idx[axis] += e * step
        if all(v <= b for v, b in zip(idx, out.box)):
            out.coeffs[tuple(idx)] += coeff
    return out


def coefficient(f, exponents):
    return f.coefficient(exponents)


def first_mismatch(f, g):
    """First differing monomial in graded-lex order, or None if equal in box.

    Returns (exponents, f_coeff, g_coeff).
    """
    f._check_aligned(g)
    diff = f.coeffs != g.coeffs
    if not diff.any():
        return None
    idx = min(map(tuple, np.argwhere(diff)), key=lambda t: (sum(t), t))
    exps = {v: int(e) for v, e in zip(f.variables, idx) if e}
    return exps, int(f.coeffs[idx]), int(g.coeffs[idx])


def equal_in_box(f, g):
    return first_mismatch(f, g) is None
