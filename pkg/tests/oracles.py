"""Independent brute-force oracles used to cross-check the library.

Everything here is written directly from the defining conditions, without
going through the library's checkers or fixpoint machinery.
"""

from itertools import combinations


def thick_by_definition(p, s):
    """Direct check of the thick-submodule conditions on a candidate set."""
    if p.zero not in s:
        return False
    for a in range(p.base.n_objects):
        for m in s:
            if p.action[a][m] not in s:
                return False
    for m in range(p.n_objects):
        for m2 in range(p.n_objects):
            both = m in s and m2 in s
            if (p.sum[m][m2] in s) != both:
                return False
    for t in p.triangles:
        flags = [v in s for v in t]
        if sum(flags) == 2:
            return False
    return True


def brute_thick_sets(p):
    n = p.n_objects
    out = []
    for mask in range(1 << n):
        s = frozenset(i for i in range(n) if mask >> i & 1)
        if thick_by_definition(p, s):
            out.append(s)
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def minimal_thick_superset(p, X):
    """Intersection of every thick superset of X (the full set always is one)."""
    supersets = [s for s in brute_thick_sets(p) if X <= s]
    return frozenset.intersection(*supersets)


def radical_scan(p, ideal):
    """Direct power scan: a is in the radical iff some tensor power lies in
    the ideal; powers walked until the orbit repeats."""
    out = set()
    for a in range(p.n_objects):
        x = a
        seen = set()
        while x not in seen:
            seen.add(x)
            if x in ideal:
                out.add(a)
                break
            x = p.base.tensor[x][a]
    return frozenset(out)


def division_scan(p, S, ideal):
    return frozenset(a for a in range(p.n_objects)
                     if any(p.base.tensor[a][s] in ideal for s in S))


def mult_closed_sets(p):
    """Every nonempty subset of objects closed under the tensor product."""
    n = p.n_objects
    out = []
    for mask in range(1, 1 << n):
        s = frozenset(i for i in range(n) if mask >> i & 1)
        if all(p.base.tensor[a][b] in s for a in s for b in s):
            out.append(s)
    return out


def all_subsets(items):
    items = list(items)
    for mask in range(1 << len(items)):
        yield frozenset(x for i, x in enumerate(items) if mask >> i & 1)


def iterate_operator(c, N):
    """Plain iteration of an operator to its fixpoint."""
    N = frozenset(N)
    while True:
        nxt = c.apply(N)
        if nxt == N:
            return N
        N = nxt
