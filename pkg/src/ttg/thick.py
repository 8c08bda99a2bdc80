"""Thick K-submodules: membership checking, generation fixpoint, witnesses.

Submodules are plain frozensets of object ids over a fixed
ModulePresentation.  The generation fixpoint alternates a summand-of-orbit
step (bar) and a triangle-completion step (delta) and records a provenance
certificate from which finite witness sets are extracted.
"""

from dataclasses import dataclass

from .presentation import summands


class GenerationError(Exception):
    pass


@dataclass(frozen=True)
class ThickCheck:
    ok: bool
    condition: str = ""
    witness: tuple = ()

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class Provenance:
    """How an object entered the generated submodule.

    kind "seed": stage-0 member.
    kind "bar": data = (a, m, cofactor) with self + cofactor = a * m, m earlier.
    kind "delta": data = (triangle, pred1, pred2), both predecessors earlier.

    ``stage`` is the fixpoint iteration at which the object became a member;
    ``order`` is a global discovery counter, strictly increasing along
    provenance edges (bar and delta discoveries inside one iteration tie on
    stage, so strictness lives on order).
    """
    kind: str
    stage: int
    order: int
    data: tuple


@dataclass
class GenerationCertificate:
    seed: frozenset
    records: dict  # object id -> Provenance


def is_thick(p, s):
    """Decide the four thick-submodule conditions, with a violation witness."""
    s = frozenset(s)
    for x in s:
        p.check_object(x)
    if p.zero not in s:
        return ThickCheck(False, "zero", (p.zero,))
    for a in range(p.base.n_objects):
        for m in sorted(s):
            if p.action[a][m] not in s:
                return ThickCheck(False, "action", (a, m, p.action[a][m]))
    for m in range(p.n_objects):
        for m2 in range(p.n_objects):
            if p.sum[m][m2] in s and not (m in s and m2 in s):
                return ThickCheck(False, "summand", (m, m2, p.sum[m][m2]))
    for t in sorted(p.triangles):
        inside = sum(1 for v in t if v in s)  # counts positions, not values
        if inside == 2:
            missing = next(v for v in t if v not in s)
            return ThickCheck(False, "triangle", (t, missing))
    for m in range(p.n_objects):
        for m2 in range(p.n_objects):
            if m in s and m2 in s and p.sum[m][m2] not in s:
                return ThickCheck(False, "sum", (m, m2, p.sum[m][m2]))
    return ThickCheck(True)


def bar(p, X):
    """Summands of all a * m with m in X: one application of the closure step."""
    out = set()
    for m in X:
        p.check_object(m)
    for m in X:
        for a in range(p.base.n_objects):
            out |= summands(p, p.action[a][m])
    return frozenset(out)


def delta(p, X):
    """Objects completing a stored triangle whose other two entries lie in X."""
    X = frozenset(X)
    for m in X:
        p.check_object(m)
    out = set()
    for t in p.triangles:
        for k in range(3):
            if t[(k + 1) % 3] in X and t[(k + 2) % 3] in X:
                out.add(t[k])
    return frozenset(out)


def _cofactor(p, n, target):
    for n2 in range(p.n_objects):
        if p.sum[n][n2] == target:
            return n2
    raise GenerationError("no cofactor for %d in %d" % (n, target))


def generate(p, X):
    """Smallest thick submodule containing X, with a provenance certificate.

    Iterates X_{i+1} = delta(bar(X_i)) from X_0 = X united with {zero}; the
    zero seed makes delta monotone from stage 0.  Stabilizes within
    |objects| iterations since membership only grows.
    """
    X = frozenset(X)
    for m in X:
        p.check_object(m)
    members = set(X) | {p.zero}
    records = {}
    order = 0
    for m in sorted(members):
        records[m] = Provenance("seed", 0, order, ())
        order += 1
    stage = 0
    while True:
        stage += 1
        before = frozenset(members)
        # bar pass over X_i
        for m in sorted(before):
            for a in range(p.base.n_objects):
                target = p.action[a][m]
                for n in sorted(summands(p, target)):
                    if n not in members:
                        members.add(n)
                        records[n] = Provenance(
                            "bar", stage, order, (a, m, _cofactor(p, n, target)))
                        order += 1
        bar_set = frozenset(members)
        # delta pass over bar(X_i)
        for t in sorted(p.triangles):
            for k in range(3):
                m_new = t[k]
                if (m_new not in members
                        and t[(k + 1) % 3] in bar_set and t[(k + 2) % 3] in bar_set):
                    members.add(m_new)
                    records[m_new] = Provenance(
                        "delta", stage, order, (t, t[(k + 1) % 3], t[(k + 2) % 3]))
                    order += 1
        if frozenset(members) == before:
            break
    return frozenset(members), GenerationCertificate(seed=X, records=records)


def principal(p, m):
    """K(m): the smallest thick submodule containing the single object m."""
    p.check_object(m)
    members, _ = generate(p, frozenset([m]))
    return members


def witnesses(cert, m, X):
    """Finite witness set: provenance-tree leaves of m intersected with X.

    Returns W with m in generate(p, W); minimal along the recorded tree,
    not globally minimal.
    """
    X = frozenset(X)
    if m not in cert.records:
        raise GenerationError("object %r is not in the generated submodule" % (m,))
    leaves = set()
    seen = set()
    stack = [m]
    while stack:
        o = stack.pop()
        if o in seen:
            continue
        seen.add(o)
        rec = cert.records[o]
        if rec.kind == "seed":
            if o in X:
                leaves.add(o)
        elif rec.kind == "bar":
            stack.append(rec.data[1])
        else:
            stack.extend(rec.data[1:])
    return frozenset(leaves)


def add(p, N, N2):
    """N + N': the smallest thick submodule containing both."""
    members, _ = generate(p, frozenset(N) | frozenset(N2))
    return members


def all_submodules(p):
    """Every thick submodule, as deduplicated principals.

    Complete because each thick N equals the principal submodule of the sum
    of its members (summand biconditional plus finiteness); cross-checked
    against brute-force subset filtering in the tests.
    """
    subs = {principal(p, m) for m in range(p.n_objects)}
    return tuple(sorted(subs, key=lambda s: (len(s), sorted(s))))
