"""Brute-force ground truth for negative-base representations.

Enumerates every digit prefix of a point that can be extended to a full
representation.  A digit a is usable at remainder y exactly when
-beta*y - a lands back in the representable interval, and because that
interval is precisely the set of representable numbers, staying inside
it certifies extendability.  This turns the infinite-future question
into a one-step test and makes the enumeration an independent oracle
for the greedy/lazy algorithms and for uniqueness experiments.
"""

import random
from dataclasses import dataclass

from .field import ExactReal, FieldError
from .schemes import DomainError, eval_neg_beta, interval_I
from .words import DigitString, PairDigit, alt_sort_key, psi_expand

DEFAULT_NODE_BUDGET = 500_000


class BranchBudgetError(RuntimeError):
    """The enumeration tree grew past the configured node budget."""


def enumerate_prefixes(x, depth, node_budget=DEFAULT_NODE_BUDGET):
    """All length-`depth` digit prefixes of representations of x, sorted
    by the alternate order."""
    ctx = x.context
    I = interval_I(ctx)
    if not I.contains(x):
        raise DomainError(f"x = {x.as_text()} outside {I}")
    if depth < 1:
        raise ValueError("depth must be at least 1")
    beta = ctx.beta()
    fb = ctx.floor_beta
    l, r = I.lo, I.hi
    level = [((), x)]
    nodes = 0
    for _ in range(depth):
        nxt = []
        for prefix, y in level:
            z = -(beta * y)
            for a in range(fb + 1):
                w = z - a
                if (w - l).sign() >= 0 and (r - w).sign() >= 0:
                    nxt.append((prefix + (a,), w))
                    nodes += 1
                    if nodes > node_budget:
                        raise BranchBudgetError(
                            f"more than {node_budget} branch nodes at depth {depth}")
        level = nxt
    return sorted((p for p, _ in level), key=alt_sort_key)


def count_representation_branches(x, depth, node_budget=DEFAULT_NODE_BUDGET):
    """Number of extendable depth-`depth` prefixes; 1 is (necessary)
    evidence that x is uniquely representable."""
    ctx = x.context
    I = interval_I(ctx)
    if not I.contains(x):
        raise DomainError(f"x = {x.as_text()} outside {I}")
    if depth < 1:
        raise ValueError("depth must be at least 1")
    beta = ctx.beta()
    fb = ctx.floor_beta
    l, r = I.lo, I.hi
    level = [x]
    nodes = 0
    for _ in range(depth):
        nxt = []
        for y in level:
            z = -(beta * y)
            for a in range(fb + 1):
                w = z - a
                if (w - l).sign() >= 0 and (r - w).sign() >= 0:
                    nxt.append(w)
                    nodes += 1
                    if nodes > node_budget:
                        raise BranchBudgetError(
                            f"more than {node_budget} branch nodes at depth {depth}")
        level = nxt
    return len(level)


def extremal_prefix(x, depth, which="max", node_budget=DEFAULT_NODE_BUDGET):
    """The alternate-order maximal (or minimal) extendable prefix; the
    maximum matches the greedy digits, the minimum the lazy ones."""
    prefixes = enumerate_prefixes(x, depth, node_budget)
    if which == "max":
        return prefixes[-1]
    if which == "min":
        return prefixes[0]
    raise ValueError("which must be 'max' or 'min'")


@dataclass(frozen=True)
class UniqueSample:
    """One candidate uniquely-representable number: its periodic digit
    word, exact value, and the branch count observed at the probe depth."""

    word: DigitString
    value: ExactReal
    branch_count: int

    @property
    def unique_at_depth(self):
        return self.branch_count == 1


def sample_unique_numbers(ctx, word_length=6, samples=10, depth=10,
                          seed=20260401, node_budget=DEFAULT_NODE_BUDGET):
    """Deterministic sample of numbers with (evidence of) a unique
    representation, for bases beyond the square-root-of-three threshold.

    For floor(beta) >= 3 the words avoid the digits 0 and floor(beta);
    for smaller such bases they are built from the three middle pair
    digits -beta, -beta+1, -beta+2 of the squared-base alphabet.  Every
    returned value is checked by brute-force branch counting.
    """
    if (ctx.beta() * ctx.beta() - 2 * ctx.beta() - 2).sign() <= 0:
        raise FieldError("unique-representation sampling needs beta > 1 + sqrt(3)")
    fb = ctx.floor_beta
    rng = random.Random(seed)
    out = []
    for _ in range(samples):
        if fb >= 3:
            digits = tuple(rng.randint(1, fb - 1) for _ in range(word_length))
            word = DigitString.periodic((), digits)
        else:
            pair_word = DigitString.periodic(
                (), tuple(PairDigit(1, rng.randint(0, 2)) for _ in range(word_length)))
            word = psi_expand(pair_word)
        value = eval_neg_beta(ctx, word)
        count = count_representation_branches(value, depth, node_budget)
        out.append(UniqueSample(word, value, count))
    return out
