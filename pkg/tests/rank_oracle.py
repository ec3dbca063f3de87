"""Independent rank search used as an oracle against the stratification.

The minimal number of rank-1 terms summing to a target is found by bounded
depth-first search with iterative deepening over the 3**n rank-1 codes,
applying each semiring's addition and rejection rule directly.  Nothing is
shared with the level-closure implementation except the outer-product
primitive itself.

Branching is complete in every case: some term of any sum must cover the
lowest set bit of the running residual (exclusive-or of an all-zero column
cannot produce a 1; inclusive-or can never produce a 1 from zeros either),
so only terms containing that bit are tried at each step.  For the Boolean
and integer cases a term that sticks out of the target can never appear in
a decomposition, which prunes the candidate lists further.
"""

import itertools

from bitcube import NONZERO_VECS, Shape, outer_product


def rank_one_set(n):
    shape = Shape(n)
    return sorted(
        {
            outer_product(factors, shape).code
            for factors in itertools.product(NONZERO_VECS, repeat=n)
        }
    )


class RankSearch:
    """Per-(dimension, semiring) search state with shared failure memo."""

    def __init__(self, n, semiring_tag):
        if semiring_tag not in ("gf2", "bool", "nat"):
            raise ValueError(semiring_tag)
        self.n = n
        self.m = 1 << n
        self.tag = semiring_tag
        terms = rank_one_set(n)
        self.by_bit = {
            b: [t for t in terms if (t >> b) & 1] for b in range(self.m)
        }
        self._fail = set()

    def rank(self, target):
        for depth in range(self.m + 1):
            if self._reachable(target, depth):
                return depth
        raise AssertionError(f"no decomposition found for {target}")

    def _reachable(self, residual, depth):
        if self.tag == "gf2":
            return self._reach_xor(residual, depth)
        return self._reach_cover(residual, residual, depth)

    def _reach_xor(self, residual, depth):
        if residual == 0:
            return True
        if depth == 0:
            return False
        key = (residual, depth)
        if key in self._fail:
            return False
        low = (residual & -residual).bit_length() - 1
        for term in self.by_bit[low]:
            if self._reach_xor(residual ^ term, depth - 1):
                return True
        self._fail.add(key)
        return False

    def _reach_cover(self, uncovered, target, depth):
        if uncovered == 0:
            return True
        if depth == 0:
            return False
        key = (uncovered, target, depth)
        if key in self._fail:
            return False
        low = (uncovered & -uncovered).bit_length() - 1
        for term in self.by_bit[low]:
            if term & ~target:
                continue
            if self.tag == "nat" and term & ~uncovered:
                continue
            if self._reach_cover(uncovered & ~term, target, depth - 1):
                return True
        self._fail.add(key)
        return False
