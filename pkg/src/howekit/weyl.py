"""Weyl groups of types A_{m-1} and C_m as signed permutations.

Type A is realized gl-style in Z^m: the group is S_m with all signs +1,
positive roots eps_i - eps_j (i < j), and rho = (m-1, ..., 0).  Type C_m is
the full group of signed permutations, positive roots eps_i - eps_j and
eps_i + eps_j (i < j) together with 2 eps_i, and rho = (m, ..., 1).

Both dot actions used by the straightening theorems live here:
w o lam = w(lam + rho) - rho, and the type C variant shifted by
delta = (-n-1, ..., -n-m).
"""

import itertools
from functools import lru_cache

from .errors import LimitExceeded
from .partitions import check_weight

FAMILIES = ("A", "C")

# enumeration caps: |W(C_8)| = 2^8 * 8!, |W(A at m=10)| = 10!
MAX_RANK = {"A": 10, "C": 8}


def check_id(id):
    """Validate a root system id (family, m) and return it normalized."""
    family, m = id
    family = str(family).upper()
    if family not in FAMILIES:
        raise ValueError("family must be A or C, got %r" % (family,))
    m = int(m)
    if m < 1:
        raise ValueError("rank parameter must be >= 1")
    return family, m


class WeylElement:
    """A signed permutation.

    perm is one-line notation on {1,...,m}: position i of the output takes
    coordinate perm[i-1] of the input, then signs[i-1] is applied.  Type A
    elements carry all signs +1.
    """

    __slots__ = ("perm", "signs")

    def __init__(self, perm, signs=None):
        perm = tuple(int(x) for x in perm)
        m = len(perm)
        if sorted(perm) != list(range(1, m + 1)):
            raise ValueError("perm must be a permutation of 1..m: %r" % (perm,))
        if signs is None:
            signs = (1,) * m
        signs = tuple(int(s) for s in signs)
        if len(signs) != m or any(s not in (1, -1) for s in signs):
            raise ValueError("signs must be a tuple of +-1 of length %d" % m)
        object.__setattr__(self, "perm", perm)
        object.__setattr__(self, "signs", signs)

    def __setattr__(self, *a):
        raise AttributeError("WeylElement is immutable")

    def __eq__(self, other):
        if isinstance(other, WeylElement):
            return self.perm == other.perm and self.signs == other.signs
        return NotImplemented

    def __hash__(self):
        return hash((self.perm, self.signs))

    def __repr__(self):
        return "WeylElement(perm=%r, signs=%r)" % (list(self.perm), list(self.signs))

    def __len__(self):
        return len(self.perm)

    def compose(self, other):
        """self * other: apply other first, then self."""
        if len(self) != len(other):
            raise ValueError("rank mismatch")
        perm = tuple(other.perm[p - 1] for p in self.perm)
        signs = tuple(self.signs[i] * other.signs[self.perm[i] - 1]
                      for i in range(len(self)))
        return WeylElement(perm, signs)

    def inverse(self):
        m = len(self)
        perm = [0] * m
        signs = [1] * m
        for i in range(m):
            perm[self.perm[i] - 1] = i + 1
            signs[self.perm[i] - 1] = self.signs[i]
        return WeylElement(tuple(perm), tuple(signs))


def identity(m):
    return WeylElement(tuple(range(1, m + 1)))


def transposition(i, m):
    """The simple reflection s_i swapping coordinates i and i+1 (1-based)."""
    perm = list(range(1, m + 1))
    perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return WeylElement(tuple(perm))


def sign_flip(m):
    """The type C generator s_m changing the sign of the last coordinate."""
    return WeylElement(tuple(range(1, m + 1)), (1,) * (m - 1) + (-1,))


def _perm_sign(perm):
    perm = list(perm)
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        cycle = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j] - 1
            cycle += 1
        if cycle % 2 == 0:
            sign = -sign
    return sign


def sign(w):
    """eps(w) = (sign of the permutation) * (product of the signs)."""
    s = _perm_sign(w.perm)
    for x in w.signs:
        s *= x
    return s


def act(w, v):
    """Apply the signed permutation to a weight vector."""
    v = check_weight(v, len(w))
    return tuple(w.signs[i] * v[w.perm[i] - 1] for i in range(len(w)))


@lru_cache(maxsize=None)
def enumerate_weyl(id):
    """All elements of the Weyl group, deterministically ordered."""
    family, m = check_id(id)
    if m > MAX_RANK[family]:
        raise LimitExceeded("rank %d above enumeration cap for type %s" % (m, family))
    perms = itertools.permutations(range(1, m + 1))
    if family == "A":
        return tuple(WeylElement(p) for p in perms)
    out = []
    for p in perms:
        for signs in itertools.product((1, -1), repeat=m):
            out.append(WeylElement(p, signs))
    return tuple(out)


def rho(id):
    family, m = check_id(id)
    if family == "C":
        return tuple(range(m, 0, -1))
    return tuple(range(m - 1, -1, -1))


def dot_rho(w, lam, id):
    """w o lam = w(lam + rho) - rho."""
    r = rho(id)
    lam = check_weight(lam, len(r))
    shifted = act(w, tuple(a + b for a, b in zip(lam, r)))
    return tuple(a - b for a, b in zip(shifted, r))


def delta_shift(n, m):
    """delta = (-n-1, -n-2, ..., -n-m)."""
    return tuple(-n - i for i in range(1, m + 1))


def dot_delta_C(w, beta, n, m):
    """w o beta = w(beta + delta) - delta with delta = (-n-1,...,-n-m)."""
    d = delta_shift(n, m)
    beta = check_weight(beta, m)
    shifted = act(w, tuple(a + b for a, b in zip(beta, d)))
    return tuple(a - b for a, b in zip(shifted, d))


@lru_cache(maxsize=None)
def positive_roots(id):
    """The positive roots as vectors in Z^m."""
    family, m = check_id(id)
    roots = []
    for i in range(m):
        for j in range(i + 1, m):
            r = [0] * m
            r[i], r[j] = 1, -1
            roots.append(tuple(r))
    if family == "C":
        for i in range(m):
            for j in range(i + 1, m):
                r = [0] * m
                r[i], r[j] = 1, 1
                roots.append(tuple(r))
        for i in range(m):
            r = [0] * m
            r[i] = 2
            roots.append(tuple(r))
    return tuple(roots)
