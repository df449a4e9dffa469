"""Reference (pure-Python/numpy) versions of the hot loops.

Every function here has a compiled twin in ``_kernels.pyx`` with the same
signature and results.
"""

import numpy as np


def transitive_closure(m):
    r = np.array(m, dtype=bool, copy=True)
    for k in range(r.shape[0]):
        r |= r[:, k, None] & r[None, k, :]
    return r


def leq_g_matrix(leq, perms, mult, identity):
    """``out[x, y]`` iff the identity lies in the semigroup generated by
    ``{g : leq[x, g(y)]}``."""
    leq = np.asarray(leq, dtype=bool)
    perms = np.asarray(perms)
    mult = np.asarray(mult)
    n = leq.shape[0]
    out = np.zeros((n, n), dtype=bool)
    for x in range(n):
        row = leq[x]
        for y in range(n):
            hs = np.flatnonzero(row[perms[:, y]]).tolist()
            if not hs:
                continue
            seen = set(hs)
            stack = list(hs)
            while stack and identity not in seen:
                a = stack.pop()
                for h in hs:
                    b = int(mult[a, h])
                    if b not in seen:
                        seen.add(b)
                        stack.append(b)
            out[x, y] = identity in seen
    return out


def invariance_violation(m, gens):
    m = np.asarray(m, dtype=bool)
    n = m.shape[0]
    gens = np.asarray(gens, dtype=np.int64).reshape(-1, n)
    for k, g in enumerate(gens):
        bad = np.argwhere(m != m[np.ix_(g, g)])
        if len(bad):
            x, y = bad[0]
            return (k, int(x), int(y))
    return None
