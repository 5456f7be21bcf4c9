"""Star duality between column Fock spaces, and King tableaux.

The dual alphabet is 1 < 1bar < 2 < 2bar < ... < m < mbar.  Entries are
(value, barred) pairs with total-order key 2j-1 for an unbarred j and 2j
for a barred one.  A King tableau is a semistandard filling on this
alphabet whose row-j entries are all >= j (i.e. have key >= 2j-1), and
its weight is (a_m, ..., a_1) with a_j counting unbarred j minus barred j.

The duality sends a tensor product of m type-C_n columns to a tensor
product of n columns on the dual alphabet: first each column c_j expands
into the pair of type-A columns

    ctilde_j    = {1 <= x <= n : xbar not in c_j}
    ctilde_jbar = {1, ..., n} cap c_j

and then column i of the image collects every dual letter x with
i in ctilde_x.  This is a bijection between the two Fock spaces; on
highest weight vertices it produces King tableaux, with shape and weight
given by the rectangle complement maps.
"""

from math import comb, prod

from .crystals import TensorElement, is_highest_weight, weight_of
from .errors import HowekitError, LimitExceeded, MalformedTableau
from .limits import get_cap
from .partitions import Partition, hat


class KingEntry:
    """A letter of the dual alphabet.

    >>> KingEntry(2, True) < KingEntry(3, False)
    True
    >>> str(KingEntry(3, True)), str(KingEntry(3, False))
    ('3b', '3')
    """

    __slots__ = ("value", "barred")

    def __init__(self, value, barred=False):
        value = int(value)
        if value < 1:
            raise HowekitError("entry value must be >= 1, got %r" % (value,))
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "barred", bool(barred))

    def __setattr__(self, *a):
        raise AttributeError("KingEntry is immutable")

    def key(self):
        """Position in the total order 1 < 1b < 2 < 2b < ..."""
        return 2 * self.value - (0 if self.barred else 1)

    @classmethod
    def from_key(cls, k):
        k = int(k)
        if k < 1:
            raise HowekitError("order key must be >= 1, got %r" % (k,))
        return cls((k + 1) // 2, k % 2 == 0)

    @classmethod
    def from_str(cls, s):
        s = s.strip()
        if s.endswith("b"):
            return cls(int(s[:-1]), True)
        return cls(int(s), False)

    def __str__(self):
        return "%d%s" % (self.value, "b" if self.barred else "")

    def __repr__(self):
        return "KingEntry(%d, %r)" % (self.value, self.barred)

    def __eq__(self, other):
        if not isinstance(other, KingEntry):
            return NotImplemented
        return self.value == other.value and self.barred == other.barred

    def __hash__(self):
        return hash((self.value, self.barred))

    def __lt__(self, other):
        return self.key() < other.key()

    def __le__(self, other):
        return self.key() <= other.key()


def check_king_column(entries, m):
    col = tuple(e if isinstance(e, KingEntry) else KingEntry(*e) for e in entries)
    for e in col:
        if e.value > m:
            raise HowekitError("entry %s outside the dual alphabet of rank %d"
                               % (e, m))
    for a, b in zip(col, col[1:]):
        if not a < b:
            raise HowekitError("column %r is not strictly increasing"
                               % ([str(e) for e in col],))
    return col


class KingElement:
    """A tensor product of columns on the dual alphabet, empties kept.

    >>> t = KingElement([[(1, False), (2, True)], []], 2)
    >>> t.heights()
    (2, 0)
    """

    __slots__ = ("columns", "m")

    def __init__(self, columns, m):
        m = int(m)
        if m < 1:
            raise HowekitError("alphabet rank must be positive")
        cols = tuple(check_king_column(c, m) for c in columns)
        object.__setattr__(self, "columns", cols)
        object.__setattr__(self, "m", m)

    def __setattr__(self, *a):
        raise AttributeError("KingElement is immutable")

    def heights(self):
        return tuple(len(c) for c in self.columns)

    def shape(self):
        """Conjugate of the column heights, as a partition."""
        heights = sorted(self.heights(), reverse=True)
        return Partition(tuple(sum(1 for h in heights if h > r)
                               for r in range(heights[0]))
                         if heights and heights[0] else ())

    def replace(self, i, column):
        cols = list(self.columns)
        cols[i] = column
        return KingElement(cols, self.m)

    def __eq__(self, other):
        if not isinstance(other, KingElement):
            return NotImplemented
        return self.m == other.m and self.columns == other.columns

    def __hash__(self):
        return hash((self.columns, self.m))

    def __repr__(self):
        return "KingElement(%r, %d)" % (self.to_json_obj(), self.m)

    def to_json_obj(self):
        return [[str(e) for e in c] for c in self.columns]

    @classmethod
    def from_json_obj(cls, obj, m):
        return cls([[KingEntry.from_str(s) for s in c] for c in obj], m)


def tilde_expand(b):
    """The 2m type-A columns (ctilde_1, ctilde_1bar, ..., ctilde_mbar).

    >>> tilde_expand(TensorElement([(-3, -2, 4, 5)], 5))
    ((1, 4, 5), (4, 5))
    """
    n = b.n
    out = []
    for c in b.columns:
        barred = {-x for x in c if x < 0}
        unbarred = {x for x in c if x > 0}
        out.append(tuple(x for x in range(1, n + 1) if x not in barred))
        out.append(tuple(x for x in range(1, n + 1) if x in unbarred))
    return tuple(out)


def star(b):
    """The dual element: column i collects the x with i in ctilde_x."""
    tilde = tilde_expand(b)
    cols = []
    for i in range(1, b.n + 1):
        col = []
        for j in range(1, len(b.columns) + 1):
            if i in tilde[2 * j - 2]:
                col.append(KingEntry(j, False))
            if i in tilde[2 * j - 1]:
                col.append(KingEntry(j, True))
        cols.append(col)
    return KingElement(cols, len(b.columns) or 1)


def star_inverse(t, n=None, m=None):
    """Recover b from b*: barred part of c_j is the complement of
    ctilde_j, unbarred part is ctilde_jbar."""
    if n is None:
        n = len(t.columns)
    if m is None:
        m = t.m
    if len(t.columns) != n:
        raise HowekitError("expected %d columns, got %d" % (n, len(t.columns)))
    cols = []
    for j in range(1, m + 1):
        tilde_j = {i for i in range(1, n + 1)
                   for e in t.columns[i - 1]
                   if e.value == j and not e.barred}
        tilde_jbar = {i for i in range(1, n + 1)
                      for e in t.columns[i - 1]
                      if e.value == j and e.barred}
        barred = [-x for x in range(1, n + 1) if x not in tilde_j]
        cols.append(tuple(sorted(barred)) + tuple(sorted(tilde_jbar)))
    return TensorElement(cols, n)


def king_weight(t):
    """The weight (a_m, ..., a_1), a_j = #(unbarred j) - #(barred j)."""
    a = [0] * (t.m + 1)
    for c in t.columns:
        for e in c:
            a[e.value] += -1 if e.barred else 1
    return tuple(a[t.m - k] for k in range(t.m))


def _rows(columns):
    if not columns:
        return []
    depth = max(len(c) for c in columns)
    return [[c[r] for c in columns if len(c) > r] for r in range(depth)]


def is_semistandard(t):
    """Rows weakly increasing across the columns taken in tensor order."""
    heights = t.heights()
    if any(a < b for a, b in zip(heights, heights[1:])):
        return False
    for row in _rows(t.columns):
        for a, b in zip(row, row[1:]):
            if not a <= b:
                return False
    return True


def is_king_tableau(t):
    """Semistandard with every row-j entry >= j (key at least 2j - 1).

    Raises MalformedTableau when the columns do not assemble into a
    tableau, i.e. the heights are not weakly decreasing.

    >>> t = KingElement([[(1, False)], [(1, False), (2, False)]], 2)
    >>> is_king_tableau(t)
    Traceback (most recent call last):
        ...
    howekit.errors.MalformedTableau: column heights (1, 2) not weakly decreasing
    """
    assembled = sorted(t.columns, key=len, reverse=True)
    if tuple(len(c) for c in assembled) != t.heights():
        raise MalformedTableau("column heights %r not weakly decreasing"
                               % (t.heights(),))
    for r, row in enumerate(_rows(assembled), start=1):
        for e in row:
            if e.key() < 2 * r - 1:
                return False
        for a, b in zip(row, row[1:]):
            if not a <= b:
                return False
    return True


def enumerate_king_tableaux(shape, weight, m, n=None):
    """All King tableaux of the given shape and weight, as elements with
    n columns (defaulting to the shape width).

    >>> len(enumerate_king_tableaux(Partition([1]), (1,), 1))
    1
    """
    shape = Partition(shape)
    if len(shape.stripped()) > m:
        raise HowekitError("shape %r has more than %d rows" % (shape, m))
    heights = shape.conjugate().stripped()
    width = len(heights)
    if n is None:
        n = width
    if width > n:
        raise HowekitError("shape %r is wider than %d columns" % (shape, n))
    target = tuple(int(x) for x in weight)
    if len(target) != m:
        raise HowekitError("weight %r does not have %d coordinates" % (weight, m))
    guard = prod(comb(2 * m, h) for h in heights)
    if guard > get_cap("enum_cap"):
        raise LimitExceeded("King enumeration size %d exceeds cap" % guard)

    from itertools import combinations

    alphabet = [KingEntry.from_key(k) for k in range(1, 2 * m + 1)]
    columns_by_height = {}
    for h in set(heights):
        cands = []
        for combo in combinations(alphabet, h):
            if all(combo[r].key() >= 2 * r + 1 for r in range(h)):
                cands.append(combo)
        columns_by_height[h] = cands

    out = []

    def rec(i, acc):
        if i == width:
            t = KingElement(list(acc) + [()] * (n - width), m)
            if king_weight(t) == target:
                out.append(t)
            return
        for col in columns_by_height[heights[i]]:
            if acc:
                prev = acc[-1]
                if any(not prev[r] <= col[r] for r in range(len(col))):
                    continue
            rec(i + 1, acc + [col])

    rec(0, [])
    return out


def verify_combinatorial_howe(n, m, mu_prime, lam):
    """Check that star maps B^hw_{mu',lam} bijectively onto the King
    tableaux of shape hat(lam) and weight hat(mu).

    Returns a report dict with the explicit pairing; on failure the
    offending element is recorded under "failure".
    """
    from .crystals import highest_weight_vertices

    mu_prime = tuple(int(h) for h in mu_prime)
    lam = Partition(lam)
    if not lam.fits_in(n, len(mu_prime)):
        raise HowekitError("weight %r outside P_{%d,%d}" % (lam, n, len(mu_prime)))
    lam_hat = hat(lam, n, len(mu_prime))
    # mu_hat coordinates may be negative when a column is taller than n;
    # King tableau weights are honest weight vectors, not partitions
    mu_hat = tuple(n - h for h in reversed(mu_prime))

    vertices = highest_weight_vertices(mu_prime, lam.padded(n), n)
    pairs = []
    images = set()
    for b in vertices:
        t = star(b)
        if star_inverse(t, n, m) != b:
            return {"ok": False, "failure": {"element": b.to_json_obj(),
                                             "reason": "star not invertible"}}
        if t.shape() != lam_hat:
            return {"ok": False, "failure": {"element": b.to_json_obj(),
                                             "reason": "shape mismatch"}}
        if king_weight(t) != mu_hat:
            return {"ok": False, "failure": {"element": b.to_json_obj(),
                                             "reason": "weight mismatch"}}
        if not is_king_tableau(t):
            return {"ok": False, "failure": {"element": b.to_json_obj(),
                                             "reason": "image not King"}}
        images.add(t)
        pairs.append((b, t))
    expected = enumerate_king_tableaux(lam_hat, mu_hat, m, n)
    if images != set(expected):
        missing = [t.to_json_obj() for t in expected if t not in images]
        return {"ok": False, "failure": {"reason": "image set mismatch",
                                         "missing": missing}}
    if len(images) != len(vertices):
        return {"ok": False, "failure": {"reason": "star not injective"}}
    return {"ok": True, "pairs": pairs}
