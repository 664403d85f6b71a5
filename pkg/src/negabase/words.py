"""Digit strings, the lexicographic and alternate orders, and the pair morphism.

A DigitString is either a finite word (empty period) or an eventually
periodic infinite word u v^omega, stored canonically: the period is
primitive and the preperiod is as short as possible, so two strings
compare equal exactly when they denote the same digit sequence.

Digits are plain ints for words over {0, ..., floor(beta)} and PairDigit
tuples (b, a), standing for the value -b*beta + a, for words over the
two-digit-at-a-time alphabet of the squared-base system.
"""

from dataclasses import dataclass
from math import lcm
from typing import NamedTuple

LT, EQ, GT = -1, 0, 1


class PairDigit(NamedTuple):
    """One squared-base digit -b*beta + a, printed as the two-letter word 'b a'."""

    b: int
    a: int

    def letters(self):
        return (self.b, self.a)

    def text(self):
        return f"{self.b}:{self.a}"


def pair_sort_key(p):
    """Sort key realizing the value order -b*beta + a (equally, the
    alternate order on the two-letter words 'ba')."""
    return (-p[0], p[1])


def _primitive_period(per):
    n = len(per)
    for d in range(1, n + 1):
        if n % d == 0 and per[:d] * (n // d) == per:
            return per[:d]
    return per


@dataclass(frozen=True)
class DigitString:
    """Canonical finite or eventually periodic word: preperiod + period."""

    preperiod: tuple = ()
    period: tuple = ()

    def __post_init__(self):
        pre = tuple(self.preperiod)
        per = tuple(self.period)
        if per:
            per = _primitive_period(per)
            while pre and pre[-1] == per[-1]:
                pre = pre[:-1]
                per = (per[-1],) + per[:-1]
        object.__setattr__(self, "preperiod", pre)
        object.__setattr__(self, "period", per)

    @classmethod
    def finite(cls, digits):
        return cls(tuple(digits), ())

    @classmethod
    def periodic(cls, preperiod, period):
        if not tuple(period):
            raise ValueError("periodic word needs a nonempty period")
        return cls(tuple(preperiod), tuple(period))

    @property
    def is_finite(self):
        return not self.period

    def __bool__(self):
        return True

    def __len__(self):
        if not self.is_finite:
            raise ValueError("infinite word has no length")
        return len(self.preperiod)

    def digit_at(self, i):
        """Digit at 0-based position i."""
        if i < len(self.preperiod):
            return self.preperiod[i]
        if not self.period:
            raise IndexError(i)
        return self.period[(i - len(self.preperiod)) % len(self.period)]

    def prefix(self, n):
        """First n digits as a tuple (raises for a too-short finite word)."""
        if self.is_finite:
            if n > len(self.preperiod):
                raise IndexError("prefix longer than the finite word")
            return self.preperiod[:n]
        out = list(self.preperiod[:n])
        i = len(out)
        while len(out) < n:
            out.append(self.period[(i - len(self.preperiod)) % len(self.period)])
            i += 1
        return tuple(out)

    def shift(self, k):
        """The word with its first k digits removed."""
        pre, per = self.preperiod, self.period
        if k <= len(pre):
            return DigitString(pre[k:], per)
        if not per:
            raise IndexError("shift past the end of a finite word")
        j = (k - len(pre)) % len(per)
        return DigitString((), per[j:] + per[:j])

    def map_digits(self, f):
        return DigitString(tuple(f(d) for d in self.preperiod),
                           tuple(f(d) for d in self.period))

    def __str__(self):
        return format_word(self)


def _compare(u, v, key, alternate):
    if not isinstance(u, DigitString) or not isinstance(v, DigitString):
        raise TypeError("compare expects DigitString operands")
    if u.is_finite != v.is_finite:
        raise ValueError("cannot compare a finite word with an infinite one")
    if u.is_finite:
        horizon = len(u)
        if horizon != len(v):
            raise ValueError("finite words of different lengths are incomparable")
    else:
        horizon = (len(u.preperiod) + len(v.preperiod)
                   + lcm(len(u.period), len(v.period)))
    for i in range(horizon):
        a, b = u.digit_at(i), v.digit_at(i)
        if a == b:
            continue
        ka, kb = (key(a), key(b)) if key else (a, b)
        less = ka < kb
        if alternate and i % 2 == 0:
            # odd 1-based position: the order on this digit is reversed
            less = not less
        return LT if less else GT
    return EQ


def lex_compare(u, v, key=None):
    """Lexicographic comparison; finite words must have equal length."""
    return _compare(u, v, key, alternate=False)


def alt_compare(u, v, key=None):
    """Alternate-order comparison: the digit at 1-based position k counts
    with sign (-1)^k, so odd positions compare reversed."""
    return _compare(u, v, key, alternate=True)


def alt_sort_key(word):
    """Key tuple whose lexicographic order equals the alternate order on
    equal-length finite int-digit words."""
    return tuple(-d if i % 2 == 0 else d for i, d in enumerate(word))


def complement_digits(word, floor_beta):
    """Digitwise map d -> floor(beta) - d on an int-digit string."""
    m = floor_beta
    for d in word.preperiod + word.period:
        if not 0 <= d <= m:
            raise ValueError(f"digit {d} outside 0..{m}")
    return word.map_digits(lambda d: m - d)


def complement_pairs(word, floor_beta):
    """Digitwise complement on pair digits: (b, a) -> (m - b, m - a)."""
    m = floor_beta
    for p in word.preperiod + word.period:
        if not (0 <= p[0] <= m and 0 <= p[1] <= m):
            raise ValueError(f"pair digit {p} outside the alphabet")
    return word.map_digits(lambda p: PairDigit(m - p[0], m - p[1]))


# -- the pair morphism -------------------------------------------------------

def psi_expand(word):
    """Expand each pair digit (b, a) into the two letters b, a."""
    def flat(part):
        out = []
        for p in part:
            out.extend((p[0], p[1]))
        return tuple(out)

    return DigitString(flat(word.preperiod), flat(word.period))


def psi_inverse(word):
    """Group an int-digit string into pair digits; finite words must have
    even length, periodic words are realigned as needed."""
    pre, per = word.preperiod, word.period
    if not per:
        if len(pre) % 2:
            raise ValueError("cannot pair up a finite word of odd length")
    else:
        if len(pre) % 2:
            pre = pre + (per[0],)
            per = per[1:] + per[:1]
        if len(per) % 2:
            per = per + per

    def pairs(part):
        return tuple(PairDigit(part[i], part[i + 1]) for i in range(0, len(part), 2))

    return DigitString(pairs(pre), pairs(per))


# -- text format ---------------------------------------------------------------

def _format_run(digits, pair, wide):
    if pair:
        return ".".join(p.text() if isinstance(p, PairDigit) else f"{p[0]}:{p[1]}"
                        for p in digits)
    if wide:
        return ",".join(str(d) for d in digits)
    return "".join(str(d) for d in digits)


def format_word(word, pair=None):
    """Render `pre(per)` meaning pre followed by per repeated forever.

    Int digits print as contiguous characters while every digit of the
    word fits in one character, else comma-separated throughout.
    """
    sample = (word.preperiod + word.period)
    if pair is None:
        pair = bool(sample) and isinstance(sample[0], (PairDigit, tuple))
    wide = not pair and any(d > 9 for d in sample)
    pre = _format_run(word.preperiod, pair, wide)
    if word.is_finite:
        return pre
    return f"{pre}({_format_run(word.period, pair, wide)})"


class WordFormatError(ValueError):
    pass


def _parse_run(text, pair):
    text = text.strip()
    if not text:
        return ()
    if pair:
        out = []
        for tok in text.split("."):
            parts = tok.split(":")
            if len(parts) != 2:
                raise WordFormatError(f"bad pair token {tok!r}; expected b:a")
            try:
                out.append(PairDigit(int(parts[0]), int(parts[1])))
            except ValueError:
                raise WordFormatError(f"bad pair token {tok!r}") from None
        return tuple(out)
    if "," in text:
        toks = text.split(",")
    else:
        toks = list(text)
    try:
        digits = tuple(int(t) for t in toks)
    except ValueError:
        raise WordFormatError(f"bad digit in {text!r}") from None
    if any(d < 0 for d in digits):
        raise WordFormatError("digits must be nonnegative")
    return digits


def parse_word(text, pair=False):
    """Parse the `pre(per)` digit word format (int digits or b:a pairs)."""
    text = text.strip()
    if text.count("(") != text.count(")") or text.count("(") > 1:
        raise WordFormatError(f"malformed word {text!r}")
    if "(" in text:
        head, rest = text.split("(", 1)
        if not rest.endswith(")"):
            raise WordFormatError(f"malformed word {text!r}")
        body = rest[:-1]
        head = head.rstrip(".,")
        per = _parse_run(body, pair)
        if not per:
            raise WordFormatError("empty period")
        return DigitString(_parse_run(head, pair), per)
    return DigitString(_parse_run(text, pair), ())
