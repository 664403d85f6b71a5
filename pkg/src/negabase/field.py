"""Exact arithmetic in Q(beta) for a real algebraic base beta > 1.

A base is described by an integer polynomial together with a rational
isolating interval that brackets exactly one real root greater than 1.
Elements are rational coefficient vectors reduced modulo that polynomial,
so equality, sign, floor and ceiling are all decidable without any
floating point.  Sign determination refines the isolating interval by
bisection and keeps every intermediate bracket cached on the context,
which makes repeated comparisons cheap.

Non-integer rational bases are admitted as degree-one contexts whose
arithmetic collapses to plain rationals.
"""

import threading
from fractions import Fraction

from . import _polys as P


class FieldError(ValueError):
    """Invalid base description (bad bracket, wrong root, integer base)."""


class ContextMismatchError(ValueError):
    """Operands belong to different field contexts."""


PHI_MIN_POLY = (-1, -1, 1)            # x^2 - x - 1
TRIBONACCI_MIN_POLY = (-1, -1, -1, 1)  # x^3 - x^2 - x - 1

_SIGN_ITERATION_CAP = 100_000


def _as_fraction(v):
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"expected an exact rational, got {type(v).__name__}")


class FieldContext:
    """The base beta: minimal polynomial plus a refinable isolating bracket.

    Instances are immutable apart from the internal refinement cache,
    which only ever tightens the bracket and is guarded by a lock, so a
    context can be shared freely between threads.
    """

    __slots__ = (
        "min_poly", "_modulus", "_initial_bracket", "_refinements",
        "_exact_root", "_certified", "_mod_sign_lo", "_lock",
        "_power_table", "_floor_beta", "__weakref__",
    )

    def __init__(self, min_poly, modulus, bracket, exact_root, certified):
        self.min_poly = tuple(int(c) for c in min_poly)
        self._modulus = modulus              # monic Fraction tuple, vanishes at beta
        self._initial_bracket = bracket
        self._refinements = [bracket]
        self._exact_root = exact_root
        self._certified = certified
        self._mod_sign_lo = _rational_sign(P.eval_poly(modulus, bracket[0]))
        self._lock = threading.Lock()
        self._floor_beta = None
        d = self.degree
        table = {}
        if d > 1:
            # beta^k for k in [d, 2d-2], reduced; used to fold products
            xk = tuple(Fraction(0) if i < d else Fraction(1) for i in range(d + 1))
            for k in range(d, 2 * d - 1):
                table[k] = tuple(P.divmod_poly(_x_power(k), modulus)[1] + (Fraction(0),) * d)[:d]
        self._power_table = table
        fb = self._compute_floor()
        if fb < 1:
            raise FieldError("base must be greater than 1")
        self._floor_beta = fb

    # -- identity ---------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, FieldContext):
            return NotImplemented
        return self.min_poly == other.min_poly and self._initial_bracket == other._initial_bracket

    def __hash__(self):
        return hash((self.min_poly, self._initial_bracket))

    def __repr__(self):
        lo, hi = self._initial_bracket
        return f"FieldContext(min_poly={list(self.min_poly)}, bracket=({lo}, {hi}))"

    @property
    def degree(self):
        """Length of element coefficient vectors (degree of the modulus)."""
        return len(self._modulus) - 1

    @property
    def isolating_interval(self):
        return self._initial_bracket

    @property
    def floor_beta(self):
        return self._floor_beta

    # -- bracket refinement -------------------------------------------------

    def bracket(self, level=None):
        refs = self._refinements
        if level is None:
            return refs[-1]
        if level < len(refs):
            # the refinement list is append-only, so reads are safe unlocked
            return refs[level]
        with self._lock:
            while len(self._refinements) <= level:
                self._refine_locked()
            return self._refinements[level]

    def refinement_count(self):
        with self._lock:
            return len(self._refinements)

    def refine(self):
        """Tighten the bracket once; the width halves and the root stays inside."""
        with self._lock:
            self._refine_locked()
            return self._refinements[-1]

    def _refine_locked(self):
        lo, hi = self._refinements[-1]
        if self._exact_root is not None:
            rho = self._exact_root
            self._refinements.append(((lo + rho) / 2, (rho + hi) / 2))
            return
        mid = (lo + hi) / 2
        s = _rational_sign(P.eval_poly(self._modulus, mid))
        if s == 0:
            # the midpoint is the root itself; beta turned out rational
            self._exact_root = mid
            self._refinements.append(((lo + mid) / 2, (mid + hi) / 2))
        elif s == self._mod_sign_lo:
            self._refinements.append((mid, hi))
        else:
            self._refinements.append((lo, mid))

    # -- element constructors ----------------------------------------------

    def from_coeffs(self, coeffs):
        """Element from a rational coefficient vector of any length."""
        cs = [_as_fraction(c) for c in coeffs]
        d = self.degree
        if len(cs) > d:
            rem = P.divmod_poly(tuple(cs), self._modulus)[1]
            cs = list(rem)
        cs += [Fraction(0)] * (d - len(cs))
        return ExactReal(self, tuple(cs))

    def element(self, value):
        """The rational number `value` as an element of Q(beta)."""
        return self.from_coeffs([_as_fraction(value)])

    def zero(self):
        return self.element(0)

    def one(self):
        return self.element(1)

    def beta(self):
        if self.degree == 1:
            # modulus x - rho
            return self.element(-self._modulus[0])
        return self.from_coeffs([0, 1])

    def frac_beta(self):
        """The fractional part beta - floor(beta)."""
        return self.beta() - self._floor_beta

    def _compute_floor(self):
        if self._exact_root is not None:
            return self._exact_root.numerator // self._exact_root.denominator
        return self.beta().floor()


def _x_power(k):
    return tuple(Fraction(0) for _ in range(k)) + (Fraction(1),)


def _rational_sign(q):
    return (q > 0) - (q < 0)


class ExactReal:
    """An element of Q(beta): value = sum coeffs[i] * beta^i, all exact."""

    __slots__ = ("context", "coeffs")

    def __init__(self, context, coeffs):
        self.context = context
        self.coeffs = coeffs

    # -- housekeeping -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, ExactReal):
            if other.context != self.context:
                raise ContextMismatchError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.context.element(other)
        return None

    def __repr__(self):
        return f"ExactReal({self.as_text()})"

    def as_text(self, var="b"):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                head = "" if c == 1 else "-" if c == -1 else f"{c}*"
                terms.append(f"{head}{var}" + (f"^{i}" if i > 1 else ""))
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out

    def __hash__(self):
        return hash((self.context, self.coeffs))

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.coeffs == o.coeffs:
            return True
        if self.context._certified:
            return False
        return (self - o).is_zero()

    # -- ring operations ------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExactReal(self.context, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExactReal(self.context, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return ExactReal(self.context, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            k = _as_fraction(other)
            return ExactReal(self.context, tuple(a * k for a in self.coeffs))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        ctx = self.context
        d = ctx.degree
        if d == 1:
            return ExactReal(ctx, (self.coeffs[0] * o.coeffs[0],))
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        prod[i + j] += a * b
        out = list(prod[:d])
        table = ctx._power_table
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if c:
                red = table[k]
                for i in range(d):
                    out[i] += c * red[i]
        return ExactReal(ctx, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        result = self.context.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        ctx = self.context
        if ctx.degree == 1:
            return ExactReal(ctx, (1 / self.coeffs[0],))
        g = P.trim(self.coeffs)
        m = ctx._modulus
        gg, u, _ = P.xgcd_poly(g, m)
        if P.degree(gg) > 0:
            # the modulus is reducible; invert modulo the factor that
            # still vanishes at beta
            m = P.divmod_poly(m, gg)[0]
            _, u, _ = P.xgcd_poly(g, m)
        return ctx.from_coeffs(u)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            k = _as_fraction(other)
            if k == 0:
                raise ZeroDivisionError("division by zero")
            return self * (Fraction(1) / k)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    # -- decision procedures ---------------------------------------------------

    def is_zero(self):
        if all(c == 0 for c in self.coeffs):
            return True
        ctx = self.context
        if ctx._certified or ctx.degree == 1:
            return False
        g = P.gcd_poly(P.trim(self.coeffs), ctx._modulus)
        if P.degree(g) < 1:
            return False
        lo, hi = ctx.bracket(0)
        return _rational_sign(P.eval_poly(g, lo)) != _rational_sign(P.eval_poly(g, hi))

    def is_rational(self):
        return all(c == 0 for c in self.coeffs[1:])

    def as_fraction(self):
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coeffs[0]

    def sign(self):
        """Exact sign in {-1, 0, +1}; terminates for every element."""
        cs = self.coeffs
        k = len(cs) - 1
        while k >= 0 and not cs[k]:
            k -= 1
        if k < 0:
            return 0
        if k == 0:
            c = cs[0]
            return (c > 0) - (c < 0)
        ctx = self.context
        if not ctx._certified and self.is_zero():
            return 0
        p = cs[:k + 1]
        eval_interval = P.eval_interval
        level = 0
        for _ in range(_SIGN_ITERATION_CAP):
            lo, hi = ctx.bracket(level)
            a, b = eval_interval(p, lo, hi)
            if a > 0:
                return 1
            if b < 0:
                return -1
            level += 1
        raise RuntimeError("sign refinement did not converge")  # pragma: no cover

    def floor(self):
        """Greatest integer <= value, by bracketing plus one exact comparison."""
        if self.context.degree == 1:
            q = self.coeffs[0]
            return q.numerator // q.denominator
        p = P.trim(self.coeffs)
        if not p:
            return 0
        level = 0
        while True:
            lo, hi = self.context.bracket(level)
            a, b = P.eval_interval(p, lo, hi)
            if b - a < Fraction(1, 2):
                break
            level += 1
        k = a.numerator // a.denominator
        return k + 1 if (self - (k + 1)).sign() >= 0 else k

    def ceil(self):
        return -((-self).floor())

    def approximate(self, eps=Fraction(1, 10**12)):
        """A rational within eps of the value (for display only)."""
        eps = _as_fraction(eps)
        p = P.trim(self.coeffs)
        if len(p) <= 1:
            return p[0] if p else Fraction(0)
        level = 0
        while True:
            lo, hi = self.context.bracket(level)
            a, b = P.eval_interval(p, lo, hi)
            if b - a < eps:
                return (a + b) / 2
            level += 1

    # -- comparisons ------------------------------------------------------------

    def __lt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __le__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() <= 0

    def __gt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() > 0

    def __ge__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() >= 0


def field_from_poly(coeffs, lo, hi):
    """Build a context for the single real root > 1 of the polynomial in (lo, hi).

    Coefficients are integers in ascending degree order.  The bracket must
    show a sign change and contain exactly one real root; roots that are
    at most 1 or are integers (integer bases) are rejected.
    """
    cs = []
    for c in coeffs:
        f = _as_fraction(c)
        if f.denominator != 1:
            raise FieldError("minimal polynomial must have integer coefficients")
        cs.append(f)
    p = P.trim(cs)
    if P.degree(p) < 1:
        raise FieldError("polynomial must be nonconstant")
    lo, hi = _as_fraction(lo), _as_fraction(hi)
    if not lo < hi:
        raise FieldError("empty isolating interval")
    v_lo, v_hi = P.eval_poly(p, lo), P.eval_poly(p, hi)
    if v_lo == 0 or v_hi == 0:
        raise FieldError("bracket endpoint is a root; shrink the interval")
    if _rational_sign(v_lo) == _rational_sign(v_hi):
        raise FieldError("no sign change on the isolating interval")
    sq = P.squarefree_part(p)
    n = P.sturm_root_count(sq, lo, hi)
    if n != 1:
        raise FieldError(f"isolating interval contains {n} roots, expected exactly 1")
    if hi <= 1:
        raise FieldError("bracketed root is not greater than 1")
    if lo < 1:
        if P.eval_poly(sq, 1) == 0:
            raise FieldError("bracketed root is not greater than 1")
        if P.sturm_root_count(sq, Fraction(1), hi) == 1:
            lo = Fraction(1)
        else:
            raise FieldError("bracketed root is not greater than 1")
    k = lo.numerator // lo.denominator + 1
    while k < hi:
        if lo < k and P.eval_poly(sq, Fraction(k)) == 0:
            raise FieldError(f"base {k} is an integer; integer bases are not supported")
        k += 1

    modulus = sq
    exact_root = None
    roots = P.rational_roots(sq)
    if roots is not None:
        for rho in roots:
            if lo < rho < hi:
                exact_root = rho
                modulus = (-rho, Fraction(1))
                break
            modulus = P.divmod_poly(modulus, (-rho, Fraction(1)))[0]
    certified = P.degree(modulus) == 1 or (roots is not None and P.degree(modulus) in (2, 3))
    return FieldContext(tuple(int(c) for c in P.to_integer_primitive(p)), modulus,
                        (lo, hi), exact_root, certified)


def rational_field(value):
    """A degree-one context for a non-integer rational base > 1."""
    q = _as_fraction(value)
    if q.denominator == 1:
        raise FieldError(f"base {q} is an integer; integer bases are not supported")
    if q <= 1:
        raise FieldError("base must be greater than 1")
    fb = q.numerator // q.denominator
    return field_from_poly((-q.numerator, q.denominator), fb, fb + 1)


_PRESETS = {}
_preset_lock = threading.Lock()


def phi_field():
    """The golden ratio: root of x^2 - x - 1 in (1, 2)."""
    return _preset("phi", PHI_MIN_POLY, 1, 2)


def tribonacci_field():
    """The Tribonacci constant: root of x^3 - x^2 - x - 1 in (1, 2)."""
    return _preset("tribonacci", TRIBONACCI_MIN_POLY, 1, 2)


def _preset(name, poly, lo, hi):
    with _preset_lock:
        ctx = _PRESETS.get(name)
        if ctx is None:
            ctx = field_from_poly(poly, lo, hi)
            _PRESETS[name] = ctx
        return ctx
