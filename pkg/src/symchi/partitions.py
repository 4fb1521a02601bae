"""Integer partition combinatorics and the complexity-bound evaluators.

A partition of k is a nonincreasing tuple of positive parts summing to k.
Block-symmetric inputs use multi-partitions: one partition per variable
block, indexing the coincidence strata of the group action.
"""

from __future__ import annotations

from itertools import product
from math import comb, factorial


def enumerate_partitions(k, max_len):
    """Partitions of k with at most max_len parts, reverse-lexicographic."""
    assert k >= 0 and max_len >= 0
    out = []

    def rec(rem, bound, prefix):
        if rem == 0:
            out.append(tuple(prefix))
            return
        if len(prefix) == max_len:
            return
        for part in range(min(rem, bound), 0, -1):
            prefix.append(part)
            rec(rem - part, part, prefix)
            prefix.pop()

    rec(k, k, [])
    return out


def partitions_exact(k, length):
    """Partitions of k with exactly the given number of parts."""
    return [p for p in enumerate_partitions(k, length) if len(p) == length]


def p_count(k, length):
    """Number of partitions of k with exactly `length` parts; p(0,0)=1."""
    if k == 0 and length == 0:
        return 1
    if k <= 0 or length <= 0 or length > k:
        return 0
    # p(k,l) = p(k-1,l-1) + p(k-l,l)
    row = [0] * (length + 1)
    row[0] = 1
    table = [row]
    for n in range(1, k + 1):
        prev = table[-1]
        cur = [1 if n == 0 else 0] + [0] * length
        cur[0] = 0
        for l in range(1, min(n, length) + 1):
            cur[l] = table[n - 1][l - 1] + (table[n - l][l] if n - l >= 0 else 0)
        table.append(cur)
    return table[k][length]


def multinomial(k, pi):
    """k! / (pi_1! * ... * pi_l!) for a partition pi of k."""
    assert sum(pi) == k, "partition must sum to k"
    n = factorial(k)
    for part in pi:
        n //= factorial(part)
    return n


def orbit_weight(blocks, mp):
    """Size of the orbit of a point whose coincidence pattern is mp."""
    assert len(blocks) == len(mp)
    w = 1
    for k, pi in zip(blocks, mp):
        w *= multinomial(k, pi)
    return w


def multi_partitions(blocks, caps):
    """All multi-partitions with length(pi_i) <= caps[i], outer product in
    reverse-lexicographic per-block order."""
    assert len(blocks) == len(caps)
    pools = [enumerate_partitions(k, min(k, c)) for k, c in zip(blocks, caps)]
    return [mp for mp in product(*pools)]


def bound_f(blocks, d):
    """F(k,d): sum over per-block length vectors l with 1 <= l_i <= min(2d,k_i)
    of p(k,l) * d * (2d-1)^(|l|+1)."""
    assert d >= 1
    ranges = [range(1, min(2 * d, k) + 1) for k in blocks]
    total = 0
    for lv in product(*ranges):
        pk = 1
        for k, l in zip(blocks, lv):
            pk *= p_count(k, l)
        total += pk * d * (2 * d - 1) ** (sum(lv) + 1)
    return total


def cap_d(blocks, d):
    """D = sum of min(k_i, 5d), the stratum-count cap in the closed bound."""
    return sum(min(k, 5 * d) for k in blocks)


def bound_closed_sa(blocks, d, s):
    """Bound for closed semi-algebraic sets defined by s symmetric polynomials
    of degree at most d: double sum of C(2s,j) 6^j F(k,2d)."""
    assert d >= 1 and s >= 1
    D = cap_d(blocks, d)
    F = bound_f(blocks, 2 * d)
    total = 0
    for i in range(D):
        for j in range(1, D - i + 1):
            total += comb(2 * s, j) * 6 ** j * F
    return total


def is_prime(n):
    """Trial division; inputs here stay tiny."""
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def select_even_prime_degree(d):
    """Smallest even d' >= d with d'-1 prime; lands in [d,2d] for d >= 2
    (Bertrand), and 4 for d=1 where the window is empty."""
    assert d >= 1
    c = max(d, 4)
    if c % 2:
        c += 1
    while not is_prime(c - 1):
        c += 2
    return c
