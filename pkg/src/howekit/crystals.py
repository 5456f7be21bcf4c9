"""Kashiwara-Nakashima crystal combinatorics for type C_n columns.

Letters live in the ordered alphabet nbar < ... < 1bar < 1 < ... < n and
are encoded as nonzero integers in [-n, n], barred letters negative, so
the alphabet order is the integer order with zero skipped.  A column is a
strictly increasing tuple of letters (a subset, drawn top to bottom), and
a tensor element is a tuple of columns read first from left to right and
next from top to bottom.

The operators f_i, e_i for i = 0, ..., n-1 act through the usual
bracketing rule on the reading word.  For i >= 1 the letters -(i+1) and i
contribute a plus, the letters -i and i+1 a minus; f sends
-(i+1) -> -i and i -> i+1 at the leftmost unbracketed plus, e undoes the
rightmost unbracketed minus.  For i = 0 the letter -1 is a plus, 1 is a
minus, and f sends -1 -> 1: this is the orientation of the 0-arrows in
the vector crystal nbar -> ... -> 1bar -> 1 -> ... -> n.
"""

import json
from math import comb, prod

from .errors import HowekitError, LimitExceeded
from .limits import get_cap


def check_column(entries, n):
    """Validate and normalize a column over the rank-n alphabet.

    >>> check_column([-3, -2, 4], 4)
    (-3, -2, 4)
    """
    col = tuple(int(x) for x in entries)
    for x in col:
        if x == 0 or not -n <= x <= n:
            raise HowekitError("letter %r outside the rank-%d alphabet" % (x, n))
    for a, b in zip(col, col[1:]):
        if a >= b:
            raise HowekitError("column %r is not strictly increasing" % (col,))
    return col


class TensorElement:
    """A tensor product of columns, the basic Fock-space vertex.

    >>> b = TensorElement([(-4, -3), (-2, -1, 1), (-4,)], 4)
    >>> b.word()
    (-4, -3, -2, -1, 1, -4)
    >>> weight_of(b)
    (2, 1, 1, 0)
    """

    __slots__ = ("columns", "n")

    def __init__(self, columns, n):
        n = int(n)
        if n < 1:
            raise HowekitError("rank must be positive")
        cols = tuple(check_column(c, n) for c in columns)
        object.__setattr__(self, "columns", cols)
        object.__setattr__(self, "n", n)

    def __setattr__(self, *a):
        raise AttributeError("TensorElement is immutable")

    def word(self):
        """The reading word: columns left to right, each top to bottom."""
        out = []
        for c in self.columns:
            out.extend(c)
        return tuple(out)

    def heights(self):
        return tuple(len(c) for c in self.columns)

    def replace(self, j, column):
        """A copy with column j replaced (used by the operators)."""
        cols = list(self.columns)
        cols[j] = column
        return TensorElement(cols, self.n)

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.n == other.n and self.columns == other.columns

    def __hash__(self):
        return hash((self.columns, self.n))

    def __repr__(self):
        return "TensorElement(%r, %d)" % (list(map(list, self.columns)), self.n)

    def to_json_obj(self):
        return [list(c) for c in self.columns]


def _signature(i, n):
    # plus letters are those on which f_i acts, minus letters those on
    # which e_i acts
    if i == 0:
        return {-1}, {1}
    if not 1 <= i <= n - 1:
        raise HowekitError("operator index %d outside 0..%d" % (i, n - 1))
    return {-(i + 1), i}, {-i, i + 1}


def _f_letter(i, x):
    if i == 0:
        return 1
    return -i if x == -(i + 1) else i + 1


def _e_letter(i, x):
    if i == 0:
        return -1
    return -(i + 1) if x == -i else i


def _bracket(b, i):
    """Positions of the unbracketed plus and minus symbols of the word.

    Returns (plus_positions, minus_positions), each as (column, letter)
    pairs in word order, after recursively cancelling +- pairs.
    """
    plus, minus = _signature(i, b.n)
    stack = []
    open_minus = []
    for j, c in enumerate(b.columns):
        for x in c:
            if x in plus:
                stack.append((j, x))
            elif x in minus:
                if stack:
                    stack.pop()
                else:
                    open_minus.append((j, x))
    return stack, open_minus


def _apply_at(b, j, old, new):
    col = b.columns[j]
    entries = sorted(set(col) - {old} | {new})
    if len(entries) != len(col):
        raise HowekitError("operator collision in column %r" % (col,))
    return b.replace(j, tuple(entries))


def crystal_f(i, b):
    """Kashiwara lowering operator f_i, or None when it vanishes.

    >>> b = TensorElement([(-1,), (2,), (-2, 1), (2,), (2,), (1,), (-1,), (-2,)], 2)
    >>> crystal_f(1, b).word()
    (-1, 2, -2, 1, 2, 2, 1, -1, -1)
    """
    stack, _ = _bracket(b, i)
    if not stack:
        return None
    j, x = stack[0]
    return _apply_at(b, j, x, _f_letter(i, x))


def crystal_e(i, b):
    """Kashiwara raising operator e_i, or None when it vanishes.

    >>> b = TensorElement([(-1,), (2,), (-2, 1), (2,), (2,), (1,), (-1,), (-2,)], 2)
    >>> crystal_e(1, b).word()
    (-1, 1, -2, 1, 2, 2, 1, -1, -2)
    """
    _, open_minus = _bracket(b, i)
    if not open_minus:
        return None
    j, x = open_minus[-1]
    return _apply_at(b, j, x, _e_letter(i, x))


def weight_of(b):
    """The weight (a_n, ..., a_1), a_i = #(letters -i) - #(letters i)."""
    a = [0] * (b.n + 1)
    for x in b.word():
        if x < 0:
            a[-x] += 1
        else:
            a[x] -= 1
    return tuple(a[b.n - k] for k in range(b.n))


def _is_partition_vector(a):
    for u, v in zip(a, a[1:]):
        if u < v:
            return False
    return a[-1] >= 0 if a else True


def is_highest_weight(b):
    """Whether every prefix of the reading word has partition weight.

    Equivalent to e_i(b) = None for all i = 0, ..., n-1.

    >>> is_highest_weight(TensorElement([(-4, -3), (-2, -1, 1), (-4,)], 4))
    True
    >>> is_highest_weight(TensorElement([(1,)], 2))
    False
    """
    n = b.n
    a = [0] * (n + 1)
    for x in b.word():
        if x < 0:
            a[-x] += 1
        else:
            a[x] -= 1
        prefix = [a[n - k] for k in range(n)]
        if not _is_partition_vector(prefix):
            return False
    return True


def is_admissible(c, n):
    """N_i(c) = #{x in c : x <= -i or x >= i} <= n - i + 1 for all i.

    >>> is_admissible((-2, -1, 1, 3), 3)
    False
    >>> is_admissible((-2, -1, 1, 3), 4)
    True
    """
    col = check_column(c, n)
    for i in range(1, n + 1):
        if sum(1 for x in col if x <= -i or x >= i) > n - i + 1:
            return False
    return True


def is_coadmissible(c, n):
    """M_i(c) = #{x in c : -i <= x <= i} <= i for all i."""
    col = check_column(c, n)
    for i in range(1, n + 1):
        if sum(1 for x in col if abs(x) <= i) > i:
            return False
    return True


def _columns_of_height(h, n):
    from itertools import combinations

    alphabet = [x for x in range(-n, n + 1) if x != 0]
    return list(combinations(alphabet, h))


def enumerate_B(mu_prime, n):
    """All tensor elements with column heights mu_prime, lex order.

    >>> len(list(enumerate_B((1,), 2)))
    4
    """
    heights = tuple(int(h) for h in mu_prime)
    for h in heights:
        if not 0 <= h <= 2 * n:
            raise HowekitError("column height %d outside 0..%d" % (h, 2 * n))
    total = prod(comb(2 * n, h) for h in heights)
    if total > get_cap("enum_cap"):
        raise LimitExceeded("B_{mu'} has %d elements, cap is %d"
                            % (total, get_cap("enum_cap")))

    def rec(j, acc):
        if j == len(heights):
            yield TensorElement(acc, n)
            return
        for col in _columns_of_height(heights[j], n):
            yield from rec(j + 1, acc + [col])

    yield from rec(0, [])


def highest_weight_vertices(mu_prime, lam, n):
    """The set B^hw_{mu', lam}: highest weight vertices of a given weight."""
    target = tuple(int(x) for x in lam)
    if len(target) < n:
        target = target + (0,) * (n - len(target))
    if len(target) != n:
        raise HowekitError("weight %r does not have %d coordinates" % (lam, n))
    out = []
    for b in enumerate_B(mu_prime, n):
        if weight_of(b) == target and is_highest_weight(b):
            out.append(b)
    return out


def highest_weight_seed(lam, n, m=None):
    """The standard highest weight element of weight lam.

    Column j is the top lam'_j letters -n, ..., -(n - lam'_j + 1); the
    connected component of this vertex realizes the crystal B(lam).
    """
    from .partitions import Partition

    lam = Partition(lam)
    heights = lam.conjugate().stripped()
    if any(h > n for h in heights):
        raise HowekitError("weight %r is not dominant for rank %d" % (lam, n))
    if m is None:
        m = len(heights)
    if len(heights) > m:
        raise HowekitError("weight %r needs more than %d columns" % (lam, m))
    cols = [tuple(range(-n, -n + h)) for h in heights]
    cols += [()] * (m - len(heights))
    return TensorElement(cols, n)


class CrystalGraph:
    """A finite crystal graph: vertices in BFS order, labeled edges."""

    __slots__ = ("vertices", "edges", "n")

    def __init__(self, vertices, edges, n):
        object.__setattr__(self, "vertices", tuple(vertices))
        object.__setattr__(self, "edges", tuple(edges))
        object.__setattr__(self, "n", int(n))

    def __setattr__(self, *a):
        raise AttributeError("CrystalGraph is immutable")

    def __len__(self):
        return len(self.vertices)

    def weights(self):
        """The weight multiset of the vertex set, as a sorted list."""
        return sorted(weight_of(b) for b in self.vertices)

    def to_dot(self):
        lines = ["digraph crystal {", "  rankdir=TB;"]
        for k, b in enumerate(self.vertices):
            label = json.dumps(b.to_json_obj(), separators=(",", ":"))
            lines.append('  v%d [label="%s"];' % (k, label.replace('"', '\\"')))
        for src, i, dst in self.edges:
            lines.append('  v%d -> v%d [label="%d"];' % (src, dst, i))
        lines.append("}")
        return "\n".join(lines)

    def to_json_obj(self):
        return {
            "n": self.n,
            "vertices": [b.to_json_obj() for b in self.vertices],
            "edges": [[src, i, dst] for src, i, dst in self.edges],
        }


def generate_crystal_graph(seed, ops=None):
    """Close a seed vertex under the f_i, i in ops, by BFS.

    >>> g = generate_crystal_graph(TensorElement([(-3, -2)], 3))
    >>> len(g)
    14
    """
    if ops is None:
        ops = range(seed.n)
    ops = sorted(set(int(i) for i in ops))
    cap = get_cap("vertex_cap")
    index = {seed: 0}
    vertices = [seed]
    edges = []
    queue = [seed]
    while queue:
        b = queue.pop(0)
        src = index[b]
        for i in ops:
            c = crystal_f(i, b)
            if c is None:
                continue
            if c not in index:
                if len(vertices) >= cap:
                    raise LimitExceeded("crystal graph exceeds vertex cap %d" % cap)
                index[c] = len(vertices)
                vertices.append(c)
                queue.append(c)
            edges.append((src, i, index[c]))
    return CrystalGraph(vertices, edges, seed.n)
