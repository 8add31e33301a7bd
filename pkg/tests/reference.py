"""Naive brute-force reference implementations used as independent oracles.

Everything here works on plain tuples and frozensets, with no shared code
with the library under test.  Keep these dumb and obviously correct; they
are only ever run on small inputs.
"""

from itertools import combinations, product as cartesian


def divides(u, v):
    """Componentwise u <= v."""
    return all(ui <= vi for ui, vi in zip(u, v))


def mul(u, v):
    return tuple(ui + vi for ui, vi in zip(u, v))


def minimal_generators(gens):
    """Divisibility-minimal subset of a set of exponent tuples."""
    gens = set(map(tuple, gens))
    return frozenset(
        u for u in gens
        if not any(v != u and divides(v, u) for v in gens)
    )


def ideal_product(a_gens, b_gens):
    return minimal_generators(mul(u, v) for u in a_gens for v in b_gens)


def ideal_power(gens, k):
    if k == 0:
        n = len(next(iter(gens)))
        return frozenset({(0,) * n})
    result = minimal_generators(gens)
    for _ in range(k - 1):
        result = ideal_product(result, gens)
    return result


def ideal_sum(a_gens, b_gens):
    return minimal_generators(set(map(tuple, a_gens)) | set(map(tuple, b_gens)))


def external_product(a_gens, b_gens, na, nb):
    return frozenset(
        tuple(u) + tuple(v) for u in a_gens for v in b_gens
    ) or frozenset()


def pure_power_gens(n, e):
    return frozenset(
        tuple(e if j == i else 0 for j in range(n)) for i in range(n)
    )


def max_ideal_power_gens(n, c):
    """All monomials of total degree c in n variables (stars and bars)."""
    if c == 0:
        return frozenset({(0,) * n})
    gens = set()
    for bars in combinations(range(c + n - 1), n - 1):
        cuts = (-1,) + bars + (c + n - 1,)
        gens.add(tuple(cuts[i + 1] - cuts[i] - 1 for i in range(n)))
    return frozenset(gens)


def contains(gens, u):
    """Monomial membership: some generator divides u."""
    return any(divides(g, u) for g in gens)


def is_artinian(gens, n):
    covered = set()
    for g in gens:
        positive = [i for i, e in enumerate(g) if e > 0]
        if len(positive) == 1:
            covered.add(positive[0])
    return covered == set(range(n))


def socle_degree(gens, n):
    """Max degree of a monomial outside the ideal, by full box enumeration."""
    assert is_artinian(gens, n)
    bounds = []
    for i in range(n):
        bounds.append(min(g[i] for g in gens
                          if g[i] > 0 and sum(g) == g[i]) - 1)
    best = -1
    for point in cartesian(*(range(b + 1) for b in bounds)):
        if not contains(gens, point):
            best = max(best, sum(point))
    assert best >= 0
    return best
