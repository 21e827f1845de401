"""Brute-force reference implementations, written straight from the definitions.

Nothing here shares code with the package beyond reading a Lattice's size
and covers, so agreement is real evidence.
"""

import itertools


def leq_matrix(size, covers):
    leq = [[i == j for j in range(size)] for i in range(size)]
    for a, b in covers:
        leq[a][b] = True
    for k in range(size):
        for i in range(size):
            if leq[i][k]:
                for j in range(size):
                    if leq[k][j]:
                        leq[i][j] = True
    return leq


def join(leq, x, y):
    n = len(leq)
    ubs = [z for z in range(n) if leq[x][z] and leq[y][z]]
    least = [z for z in ubs if all(leq[z][w] for w in ubs)]
    assert len(least) == 1
    return least[0]


def meet(leq, x, y):
    n = len(leq)
    lbs = [z for z in range(n) if leq[z][x] and leq[z][y]]
    greatest = [z for z in lbs if all(leq[w][z] for w in lbs)]
    assert len(greatest) == 1
    return greatest[0]


def covers_of(leq):
    n = len(leq)
    return sorted(
        (x, y) for x in range(n) for y in range(n)
        if x != y and leq[x][y] and not any(z not in (x, y) and leq[x][z] and leq[z][y] for z in range(n))
    )


def join_irreducibles(leq):
    cov = covers_of(leq)
    return sorted(y for y in range(len(leq)) if sum(1 for a, b in cov if b == y) == 1)


def label(leq, x, y):
    """min { t : x v t = y }, or None when there is no minimum."""
    cands = [t for t in range(len(leq)) if join(leq, x, t) == y]
    minimum = [t for t in cands if all(leq[t][s] for s in cands)]
    return minimum[0] if minimum else None


def semidistributive(leq):
    n = len(leq)
    for u, x, y in itertools.product(range(n), repeat=3):
        if join(leq, u, x) == join(leq, u, y) and join(leq, u, meet(leq, x, y)) != join(leq, u, x):
            return False
        if meet(leq, u, x) == meet(leq, u, y) and meet(leq, u, join(leq, x, y)) != meet(leq, u, x):
            return False
    return True


def set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def is_congruence(leq, partition):
    block = {}
    for k, cls in enumerate(partition):
        for v in cls:
            block[v] = k
    n = len(leq)
    for x in range(n):
        for y in range(n):
            if block[x] != block[y]:
                continue
            for z in range(n):
                if block[join(leq, x, z)] != block[join(leq, y, z)]:
                    return False
                if block[meet(leq, x, z)] != block[meet(leq, y, z)]:
                    return False
    return True


def all_congruences(leq):
    return [p for p in set_partitions(range(len(leq))) if is_congruence(leq, p)]


def normalize(partition):
    return sorted(sorted(c) for c in partition)


def smallest_congruence(leq, pairs):
    """The finest congruence identifying every given pair."""
    best = None
    for p in all_congruences(leq):
        block = {v: k for k, c in enumerate(p) for v in c}
        if all(block[a] == block[b] for a, b in pairs):
            if best is None or len(p) > len(best):
                best = p
    return normalize(best)


def join_intervals(leq):
    n = len(leq)
    cov = covers_of(leq)
    out = []
    for b in range(n):
        for t in range(n):
            if not leq[b][t]:
                continue
            acc = b
            for a, c in cov:
                if a == b and leq[c][t]:
                    acc = join(leq, acc, c)
            if acc == t:
                out.append((b, t))
    return out


def interval_labels(leq, iv):
    b, t = iv
    return frozenset(
        label(leq, x, y) for x, y in covers_of(leq)
        if leq[b][x] and leq[y][t]
    )


def isomorphic(leq1, leq2):
    n = len(leq1)
    if n != len(leq2):
        return False
    for perm in itertools.permutations(range(n)):
        if all(leq1[i][j] == leq2[perm[i]][perm[j]] for i in range(n) for j in range(n)):
            return True
    return False
