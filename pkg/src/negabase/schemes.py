"""Digit maps and transformations for negative-base expansions.

Covers the representable interval I and its digit subintervals, the two
one-step digit choices (smallest and largest feasible digit), the
alternating algorithm that produces greedy and lazy digit strings in
base -beta, the equivalent squared-base schemes over the pair-digit
alphabet, the Ito-Sadahiro scheme, a minimal positive-base scheme, and
exact evaluation of eventually periodic digit strings.

Infinite expansions are produced in period-detection mode: the exact
orbit of remainders is hashed and the first repeat closes the period.
Orbits of points with large denominators need not repeat within the
budget; those come back as finite prefixes with an explicit status.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .field import ExactReal
from .words import DigitString, PairDigit, pair_sort_key

DEFAULT_ORBIT_BUDGET = 10_000

STATUS_OK = "ok"
STATUS_PERIOD_NOT_FOUND = "period-not-found"


class DomainError(ValueError):
    """Input outside the domain interval of the operation."""


@dataclass(frozen=True)
class Interval:
    """Interval with exact endpoints and explicit endpoint membership."""

    lo: ExactReal
    hi: ExactReal
    lo_closed: bool = True
    hi_closed: bool = True

    def contains(self, x):
        s = (x - self.lo).sign()
        if s < 0 or (s == 0 and not self.lo_closed):
            return False
        s = (self.hi - x).sign()
        if s < 0 or (s == 0 and not self.hi_closed):
            return False
        return True

    def __str__(self):
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        return f"{left}{self.lo.as_text()}, {self.hi.as_text()}{right}"


def _subset(inner, outer):
    s = (inner.lo - outer.lo).sign()
    if s < 0 or (s == 0 and inner.lo_closed and not outer.lo_closed):
        return False
    s = (outer.hi - inner.hi).sign()
    if s < 0 or (s == 0 and inner.hi_closed and not outer.hi_closed):
        return False
    return True


@lru_cache(maxsize=None)
def interval_I(ctx):
    """The interval of representable numbers [l, r] for base -beta."""
    beta = ctx.beta()
    fb = ctx.floor_beta
    inv = (beta * beta - 1).inverse()
    l = -(beta * fb) * inv
    r = ctx.element(fb) * inv
    return Interval(l, r, True, True)


def digit_subinterval(ctx, a):
    """I_a: the numbers whose representation can start with digit a."""
    if not 0 <= a <= ctx.floor_beta:
        raise ValueError(f"digit {a} outside the alphabet")
    I = interval_I(ctx)
    minus_binv = -ctx.beta().inverse()
    return Interval((ctx.element(a) + I.hi) * minus_binv,
                    (ctx.element(a) + I.lo) * minus_binv, True, True)


def feasible_digits(x):
    """Digits a with -beta*x - a still representable."""
    ctx = x.context
    I = interval_I(ctx)
    y = -(ctx.beta() * x)
    out = []
    for a in range(ctx.floor_beta + 1):
        if I.contains(y - a):
            out.append(a)
    return out


def _require_in(I, x, what="x"):
    if not I.contains(x):
        raise DomainError(f"{what} = {x.as_text()} outside {I}")


def step_min_digit(x):
    """Smallest feasible digit and the matching remainder -beta*x - a.

    This is the digit choice that is greatest in the alternate order on
    single digits; the alternating greedy algorithm starts with it.
    """
    _require_in(interval_I(x.context), x)
    a = feasible_digits(x)[0]
    return a, -(x.context.beta() * x) - a


def step_max_digit(x):
    """Largest feasible digit and the matching remainder."""
    _require_in(interval_I(x.context), x)
    a = feasible_digits(x)[-1]
    return a, -(x.context.beta() * x) - a


@dataclass(frozen=True)
class Expansion:
    """A produced digit string plus how it was obtained."""

    word: DigitString
    status: str = STATUS_OK
    endpoint: Optional[str] = None

    @property
    def ok(self):
        return self.status == STATUS_OK


def _endpoint_flag(I, x):
    if (x - I.lo).sign() == 0:
        return "l"
    if (I.hi - x).sign() == 0:
        return "r"
    return None


def _alternating_expansion(x, start_with_min, depth, orbit_budget):
    ctx = x.context
    I = interval_I(ctx)
    _require_in(I, x)
    endpoint = _endpoint_flag(I, x)
    beta = ctx.beta()
    fb = ctx.floor_beta
    l, r = I.lo, I.hi

    def one_step(y, use_min):
        z = -(beta * y)
        if use_min:
            for a in range(fb + 1):
                w = z - a
                if (w - l).sign() >= 0 and (r - w).sign() >= 0:
                    return a, w
        else:
            for a in range(fb, -1, -1):
                w = z - a
                if (w - l).sign() >= 0 and (r - w).sign() >= 0:
                    return a, w
        raise DomainError(f"no feasible digit at {y.as_text()}")  # pragma: no cover

    digits = []
    state = x
    use_min = start_with_min
    if depth is not None:
        if depth < 1:
            raise ValueError("depth must be at least 1")
        for _ in range(depth):
            d, state = one_step(state, use_min)
            digits.append(d)
            use_min = not use_min
        return Expansion(DigitString.finite(digits), STATUS_OK, endpoint)

    seen = {(use_min, state.coeffs): 0}
    for _ in range(orbit_budget):
        d, state = one_step(state, use_min)
        digits.append(d)
        use_min = not use_min
        key = (use_min, state.coeffs)
        if key in seen:
            i = seen[key]
            return Expansion(DigitString.periodic(digits[:i], digits[i:]),
                             STATUS_OK, endpoint)
        seen[key] = len(digits)
    return Expansion(DigitString.finite(digits), STATUS_PERIOD_NOT_FOUND, endpoint)


def greedy_neg_beta(x, depth=None, orbit_budget=DEFAULT_ORBIT_BUDGET):
    """Greedy digits of x in base -beta: the alternate-order maximum of
    all representations.  depth=None detects the eventual period."""
    return _alternating_expansion(x, True, depth, orbit_budget)


def lazy_neg_beta(x, depth=None, orbit_budget=DEFAULT_ORBIT_BUDGET):
    """Lazy digits of x in base -beta: the alternate-order minimum."""
    return _alternating_expansion(x, False, depth, orbit_budget)


def symmetric_partner(x):
    """The point -floor(beta)/(beta+1) - x; its lazy digits are the
    digitwise complement of the greedy digits of x."""
    ctx = x.context
    return -(ctx.element(ctx.floor_beta) * (ctx.beta() + 1).inverse()) - x


# -- squared-base schemes ---------------------------------------------------------

@lru_cache(maxsize=None)
def all_pair_digits(ctx):
    """The pair alphabet, sorted increasingly by value -b*beta + a."""
    fb = ctx.floor_beta
    pairs = [PairDigit(b, a) for b in range(fb + 1) for a in range(fb + 1)]
    pairs.sort(key=pair_sort_key)
    return tuple(pairs)


def pair_value(ctx, p):
    return ctx.element(p[1]) - ctx.beta() * p[0]


def pair_successor(ctx, p):
    pairs = all_pair_digits(ctx)
    i = pairs.index(p)
    if i + 1 == len(pairs):
        raise ValueError("the maximal pair digit has no successor")
    return pairs[i + 1]


def pair_predecessor(ctx, p):
    pairs = all_pair_digits(ctx)
    i = pairs.index(p)
    if i == 0:
        raise ValueError("the minimal pair digit has no predecessor")
    return pairs[i - 1]


@lru_cache(maxsize=None)
def _beta2_tables(ctx):
    pairs = all_pair_digits(ctx)
    I = interval_I(ctx)
    b2inv = (ctx.beta() * ctx.beta()).inverse()
    values = tuple(pair_value(ctx, p) for p in pairs)
    gammas = tuple((v + I.lo) * b2inv for v in values)
    deltas = tuple((v + I.hi) * b2inv for v in values)
    return pairs, values, gammas, deltas


def greedy_breakpoint(ctx, p):
    """Left endpoint of the squared-base greedy cell of pair digit p."""
    pairs, _, gammas, _ = _beta2_tables(ctx)
    return gammas[pairs.index(p)]


def lazy_breakpoint(ctx, p):
    """Right endpoint of the squared-base lazy cell of pair digit p."""
    pairs, _, _, deltas = _beta2_tables(ctx)
    return deltas[pairs.index(p)]


@dataclass(frozen=True)
class SchemeCell:
    interval: Interval
    digit: object
    value: ExactReal


@dataclass(frozen=True)
class Scheme:
    """A (base, domain, digit map) triple with T(x) = base*x - D(x).

    The digit map is piecewise constant over the cells; construction via
    validate() checks exactly that every cell image lands inside the
    domain again.  Schemes whose cells tile the domain left to right may
    set `contiguous`, which unlocks a cheaper digit lookup.
    """

    base: ExactReal
    domain: Interval
    cells: tuple
    contiguous: bool = False

    def validate(self):
        up = self.base.sign() > 0
        for cell in self.cells:
            iv = cell.interval
            if not _subset(iv, self.domain):
                raise ValueError(f"cell {iv} escapes the domain {self.domain}")
            lo_img = self.base * iv.lo - cell.value
            hi_img = self.base * iv.hi - cell.value
            if up:
                image = Interval(lo_img, hi_img, iv.lo_closed, iv.hi_closed)
            else:
                image = Interval(hi_img, lo_img, iv.hi_closed, iv.lo_closed)
            if not _subset(image, self.domain):
                raise ValueError(
                    f"cell {iv}: image {image} escapes the domain {self.domain}")
        if self.contiguous:
            cells = self.cells
            if (cells[0].interval.lo - self.domain.lo).sign() != 0 \
                    or (cells[-1].interval.hi - self.domain.hi).sign() != 0:
                raise ValueError("contiguous cells must span the domain")
            for a, b in zip(cells, cells[1:]):
                if (a.interval.hi - b.interval.lo).sign() != 0 \
                        or a.interval.hi_closed == b.interval.lo_closed:
                    raise ValueError("cells do not tile the domain")
        return self

    def locate(self, x):
        if self.contiguous:
            if not self.domain.contains(x):
                raise DomainError(f"x = {x.as_text()} outside {self.domain}")
            for cell in self.cells[:-1]:
                iv = cell.interval
                s = (iv.hi - x).sign()
                if s > 0 or (s == 0 and iv.hi_closed):
                    return cell
            return self.cells[-1]
        for cell in self.cells:
            if cell.interval.contains(x):
                return cell
        raise DomainError(f"x = {x.as_text()} outside {self.domain}")

    def step(self, x):
        cell = self.locate(x)
        return cell.digit, self.base * x - cell.value

    def _step_inside(self, x):
        # domain membership is an invariant of the orbit; skip re-checking
        if self.contiguous:
            for cell in self.cells[:-1]:
                iv = cell.interval
                s = (iv.hi - x).sign()
                if s > 0 or (s == 0 and iv.hi_closed):
                    return cell.digit, self.base * x - cell.value
            cell = self.cells[-1]
            return cell.digit, self.base * x - cell.value
        return self.step(x)


def build_beta2_scheme(ctx, kind):
    """The squared-base scheme whose digit string maps under the pair
    morphism to the greedy (resp. lazy) digits in base -beta."""
    pairs, values, gammas, deltas = _beta2_tables(ctx)
    I = interval_I(ctx)
    base = ctx.beta() * ctx.beta()
    cells = []
    last = len(pairs) - 1
    if kind == "greedy":
        for i, p in enumerate(pairs):
            hi = I.hi if i == last else gammas[i + 1]
            cells.append(SchemeCell(Interval(gammas[i], hi, True, i == last),
                                    p, values[i]))
    elif kind == "lazy":
        for i, p in enumerate(pairs):
            lo = I.lo if i == 0 else deltas[i - 1]
            cells.append(SchemeCell(Interval(lo, deltas[i], i == 0, True),
                                    p, values[i]))
    else:
        raise ValueError("kind must be 'greedy' or 'lazy'")
    return Scheme(base, I, tuple(cells), contiguous=True).validate()


def build_ito_sadahiro_scheme(ctx):
    """The classical Ito-Sadahiro system: D(x) = floor(-beta*x + beta/(beta+1))
    on [-beta/(beta+1), 1/(beta+1))."""
    beta = ctx.beta()
    fb = ctx.floor_beta
    inv = (beta + 1).inverse()
    lo = -(beta * inv)
    hi = inv
    domain = Interval(lo, hi, True, False)
    binv = beta.inverse()

    def cut(k):
        # right end of the digit-k cell: the x with -beta*x + beta/(beta+1) = k
        return (beta * inv - k) * binv

    cells = []
    upper = cut(fb)
    cells.append(SchemeCell(Interval(lo, upper, True, True), fb, ctx.element(fb)))
    for k in range(fb - 1, 0, -1):
        nxt = cut(k)
        cells.append(SchemeCell(Interval(upper, nxt, False, True), k, ctx.element(k)))
        upper = nxt
    cells.append(SchemeCell(Interval(upper, hi, False, False), 0, ctx.element(0)))
    return Scheme(-beta, domain, tuple(cells), contiguous=True).validate()


def build_positive_greedy_scheme(ctx):
    """The classical positive-base greedy scheme D(x) = floor(beta*x) on
    [0, 1); used for order-preservation checks against the negative case."""
    beta = ctx.beta()
    fb = ctx.floor_beta
    binv = beta.inverse()
    domain = Interval(ctx.element(0), ctx.element(1), True, False)
    cells = []
    for k in range(fb + 1):
        lo = ctx.element(k) * binv
        if k == fb:
            cells.append(SchemeCell(Interval(lo, ctx.element(1), True, False),
                                    k, ctx.element(k)))
        else:
            hi = ctx.element(k + 1) * binv
            cells.append(SchemeCell(Interval(lo, hi, True, False), k, ctx.element(k)))
    return Scheme(beta, domain, tuple(cells), contiguous=True).validate()


def run_scheme(scheme, x, depth=None, orbit_budget=DEFAULT_ORBIT_BUDGET):
    """Iterate the scheme from x, collecting digits; period-detect when
    depth is None."""
    _require_in(scheme.domain, x)
    endpoint = _endpoint_flag(scheme.domain, x)
    digits = []
    state = x
    if depth is not None:
        if depth < 1:
            raise ValueError("depth must be at least 1")
        for _ in range(depth):
            d, state = scheme._step_inside(state)
            digits.append(d)
        return Expansion(DigitString.finite(digits), STATUS_OK, endpoint)
    seen = {state.coeffs: 0}
    for _ in range(orbit_budget):
        d, state = scheme._step_inside(state)
        digits.append(d)
        key = state.coeffs
        if key in seen:
            i = seen[key]
            return Expansion(DigitString.periodic(digits[:i], digits[i:]),
                             STATUS_OK, endpoint)
        seen[key] = len(digits)
    return Expansion(DigitString.finite(digits), STATUS_PERIOD_NOT_FOUND, endpoint)


# -- evaluation ------------------------------------------------------------------

def eval_digits(word, base, digit_value=None):
    """Exact value sum digit_i * base^(-i) of a finite or eventually
    periodic digit string; the periodic tail is summed in closed form."""
    ctx = base.context
    if digit_value is None:
        value = ctx.element
    elif isinstance(digit_value, dict):
        value = digit_value.__getitem__
    else:
        value = digit_value
    binv = base.inverse()

    def weighted_prefix(part):
        acc = ctx.zero()
        for d in reversed(part):
            acc = (acc + value(d)) * binv
        return acc

    total = weighted_prefix(word.preperiod)
    if word.period:
        q = len(word.period)
        acc = ctx.zero()
        for d in word.period:
            acc = acc * base + value(d)
        tail = acc * ((base ** q) - 1).inverse()
        total = total + tail * (binv ** len(word.preperiod))
    return total


def eval_neg_beta(ctx, word):
    """Value of an int-digit string in base -beta."""
    return eval_digits(word, -ctx.beta())


def eval_beta2_pairs(ctx, word):
    """Value of a pair-digit string in base beta^2."""
    return eval_digits(word, ctx.beta() * ctx.beta(),
                       lambda p: pair_value(ctx, p))


def eval_pos_beta(ctx, word):
    """Value of an int-digit string in base +beta."""
    return eval_digits(word, ctx.beta())
