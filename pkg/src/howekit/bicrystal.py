"""Crystal operators on the dual Fock space and the charge statistics.

The dual space of n columns on 1 < 1bar < ... < m < mbar carries a type
A_{2m-1} crystal whose word reads the columns first from right to left
and next from top to bottom.  Operator indices are encoded as signed
integers: +j is the unbarred operator (plus on letters j, minus on jbar,
f sends j -> jbar) and -j is the barred operator (plus on jbar, minus on
j+1, f sends jbar -> j+1).

Transporting the unbarred raising operators through the star duality
contracts a column, i.e. removes one pair (kbar, k); transporting the
barred ones performs a jeu de taquin slide on the bar complement

    cbar_j    = {nbar, ..., 1bar} cap c_j
    cbar_jbar = {xbar : x not in c_j}

between columns jbar and j+1 (taken in reversed order, so the box slides
from column jbar into column j+1).  The charge of a weight-zero King
tableau and the matching statistic D on the symplectic side are computed
from the string lengths of the lowest weight vertex, or equivalently
from contraction counts delta_j and slide counts gamma_j.
"""

from math import ceil

from .crystals import TensorElement, is_admissible
from .duality import KingElement, KingEntry, king_weight, star, star_inverse
from .errors import HowekitError


def _king_signature(idx, m):
    j = abs(int(idx))
    if idx > 0:
        if not 1 <= j <= m:
            raise HowekitError("unbarred index %d outside 1..%d" % (j, m))
        plus = KingEntry(j, False)
        minus = KingEntry(j, True)
    elif idx < 0:
        if not 1 <= j <= m - 1:
            raise HowekitError("barred index %d outside 1..%d" % (j, m - 1))
        plus = KingEntry(j, True)
        minus = KingEntry(j + 1, False)
    else:
        raise HowekitError("operator index must be nonzero")
    return plus, minus


def _king_bracket(idx, t):
    plus, minus = _king_signature(idx, t.m)
    stack = []
    open_minus = []
    # reading: columns right to left, each top to bottom
    for i in range(len(t.columns) - 1, -1, -1):
        for e in t.columns[i]:
            if e == plus:
                stack.append((i, e))
            elif e == minus:
                if stack:
                    stack.pop()
                else:
                    open_minus.append((i, e))
    return stack, open_minus


def _king_apply(t, i, old, new):
    col = t.columns[i]
    entries = sorted((set(col) - {old}) | {new}, key=KingEntry.key)
    if len(entries) != len(col):
        raise HowekitError("operator collision in column %r"
                           % ([str(e) for e in col],))
    return t.replace(i, tuple(entries))


def king_f(idx, t):
    """Lowering operator on the dual space, None when it vanishes.

    >>> t = KingElement([[(1, True), (2, False)], [(1, False), (1, True), (2, True)],
    ...                  [(1, False), (2, False)]], 2)
    >>> king_f(-1, t).to_json_obj()
    [['1b', '2'], ['1', '2', '2b'], ['1', '2']]
    >>> king_f(2, t).to_json_obj()
    [['1b', '2b'], ['1', '1b', '2b'], ['1', '2']]
    """
    stack, _ = _king_bracket(idx, t)
    if not stack:
        return None
    i, e = stack[0]
    plus, minus = _king_signature(idx, t.m)
    return _king_apply(t, i, plus, minus)


def king_e(idx, t):
    """Raising operator on the dual space, None when it vanishes.

    >>> t = KingElement([[(1, True), (2, False)], [(1, False), (1, True), (2, True)],
    ...                  [(1, False), (2, False)]], 2)
    >>> king_e(-1, t).to_json_obj()
    [['1b', '2'], ['1', '1b', '2b'], ['1', '1b']]
    >>> king_e(1, t) is None and king_e(2, t) is None and king_f(1, t) is None
    True
    """
    _, open_minus = _king_bracket(idx, t)
    if not open_minus:
        return None
    i, e = open_minus[-1]
    plus, minus = _king_signature(idx, t.m)
    return _king_apply(t, i, minus, plus)


def kappa(j, b):
    """The operator transported from the dual raising operator: the
    contraction of column j for j > 0, the jeu de taquin move for j < 0.

    >>> kappa(1, TensorElement([(-4, -3, -2, 3)], 4))
    TensorElement([[-4, -2]], 4)
    """
    t = king_e(j, star(b))
    if t is None:
        return None
    return star_inverse(t, b.n, len(b.columns))


def dilate(j, b):
    """Inverse of contraction on column j, via the dual lowering operator."""
    t = king_f(j, star(b))
    if t is None:
        return None
    return star_inverse(t, b.n, len(b.columns))


class BarComplement:
    """The 2m barred columns (cbar_1, cbar_1bar, ..., cbar_m, cbar_mbar)."""

    __slots__ = ("columns", "n")

    def __init__(self, columns, n):
        n = int(n)
        cols = []
        for c in columns:
            col = tuple(int(x) for x in c)
            for x in col:
                if not -n <= x <= -1:
                    raise HowekitError("entry %d is not a barred letter" % (x,))
            for a, b in zip(col, col[1:]):
                if a >= b:
                    raise HowekitError("column %r is not strictly increasing"
                                       % (col,))
            cols.append(col)
        if len(cols) % 2:
            raise HowekitError("expected an even number of columns")
        object.__setattr__(self, "columns", tuple(cols))
        object.__setattr__(self, "n", n)

    def __setattr__(self, *a):
        raise AttributeError("BarComplement is immutable")

    def __eq__(self, other):
        if not isinstance(other, BarComplement):
            return NotImplemented
        return self.n == other.n and self.columns == other.columns

    def __hash__(self):
        return hash((self.columns, self.n))

    def __repr__(self):
        return "BarComplement(%r, %d)" % (list(map(list, self.columns)), self.n)

    def to_json_obj(self):
        return [list(c) for c in self.columns]


def bar_complement(b):
    """The barred-part/complement expansion of each column.

    >>> bar_complement(TensorElement([(-3, 1, 5), (-5, -1, 2, 4, 5)], 5)).to_json_obj()
    [[-3], [-4, -3, -2], [-5, -1], [-3, -1]]
    """
    n = b.n
    out = []
    for c in b.columns:
        barred = tuple(x for x in c if x < 0)
        unbarred = {x for x in c if x > 0}
        out.append(barred)
        out.append(tuple(-x for x in range(n, 0, -1) if x not in unbarred))
    return BarComplement(out, n)


def from_bar_complement(bc):
    """Rebuild the tensor element: column j has barred part cbar_j and
    unbarred part the complement of cbar_jbar."""
    n = bc.n
    cols = []
    for j in range(0, len(bc.columns), 2):
        barred = bc.columns[j]
        missing = {-x for x in bc.columns[j + 1]}
        unbarred = tuple(x for x in range(1, n + 1) if x not in missing)
        cols.append(barred + unbarred)
    return TensorElement(cols, n)


def _min_offset(left, right):
    """Minimal l so that right (rows 1..q) and left (rows l+1..l+p) form
    a skew tableau of shape nu/(1^l), rows weakly increasing."""
    p, q = len(left), len(right)
    l = max(0, q - p)
    while True:
        ok = True
        for r in range(l + 1, min(l + p, q) + 1):
            if left[r - l - 1] > right[r - 1]:
                ok = False
                break
        if ok:
            return l
        l += 1


def jdt_bar(j, b):
    """One jeu de taquin slide on the bar complement, between columns
    jbar and j+1, or None when the pair is already straight.

    >>> b = TensorElement([(-3, 1, 5), (-5, -1, 2, 4, 5)], 5)
    >>> bar_complement(jdt_bar(1, b)).to_json_obj()
    [[-3], [-4, -3], [-5, -2, -1], [-3, -1]]
    """
    m = len(b.columns)
    if not 1 <= j <= m - 1:
        raise HowekitError("jdt index %d outside 1..%d" % (j, m - 1))
    bc = bar_complement(b)
    right = list(bc.columns[2 * j - 1])   # cbar_jbar, the source column
    left = list(bc.columns[2 * j])        # cbar_{j+1}, the target column
    l = _min_offset(left, right)
    if l == 0:
        return None
    # grid[r][0] = left entry at row r, grid[r][1] = right entry; rows 1-based
    grid = {}
    for r, x in enumerate(left, start=l + 1):
        grid[(r, 0)] = x
    for r, x in enumerate(right, start=1):
        grid[(r, 1)] = x
    hole = (l, 0)
    while True:
        below = (hole[0] + 1, hole[1])
        rightn = (hole[0], 1) if hole[1] == 0 else None
        has_below = below in grid
        has_right = rightn in grid if rightn else False
        if has_below and has_right and grid[below] <= grid[rightn]:
            grid[hole] = grid.pop(below)
            hole = below
        elif has_right:
            grid[hole] = grid.pop(rightn)
            hole = rightn
        elif has_below:
            grid[hole] = grid.pop(below)
            hole = below
        else:
            break
    new_left = [grid[k] for k in sorted(k for k in grid if k[1] == 0)]
    new_right = [grid[k] for k in sorted(k for k in grid if k[1] == 1)]
    cols = list(bc.columns)
    cols[2 * j - 1] = tuple(new_right)
    cols[2 * j] = tuple(new_left)
    return from_bar_complement(BarComplement(cols, b.n))


def epsilon_string(idx, t):
    """Length of the raising string through t for the given operator."""
    k = 0
    while True:
        u = king_e(idx, t)
        if u is None:
            return k
        t = u
        k += 1


def to_lowest(t):
    """Exhaust the unbarred lowering operators (they commute)."""
    changed = True
    while changed:
        changed = False
        for j in range(1, t.m + 1):
            u = king_f(j, t)
            if u is not None:
                t = u
                changed = True
    return t


def delta_count(j, b):
    """Contractions needed to make column j admissible, n - height.

    The column must be full (height n): this is the charge context.
    """
    col = b.columns[j - 1]
    n = b.n
    if len(col) != n:
        raise HowekitError("column %d has height %d, expected %d"
                           % (j, len(col), n))
    cur = TensorElement([col], n)
    while True:
        nxt = kappa(1, cur)
        if nxt is None:
            break
        cur = nxt
    h = len(cur.columns[0])
    if not is_admissible(cur.columns[0], n):
        raise HowekitError("contraction did not reach an admissible column")
    return n - h


def dilate_fully(b):
    """Dilate every column recursively as much as possible."""
    for j in range(1, len(b.columns) + 1):
        while True:
            nxt = dilate(j, b)
            if nxt is None:
                break
            b = nxt
    return b


def gamma_count(j, b_dil):
    """Number of slides available between columns jbar and j+1 of the
    dilated element: the offset of the minimal skew pair."""
    m = len(b_dil.columns)
    if not 1 <= j <= m - 1:
        raise HowekitError("index %d outside 1..%d" % (j, m - 1))
    bc = bar_complement(b_dil)
    return _min_offset(list(bc.columns[2 * j]), list(bc.columns[2 * j - 1]))


def charge_king(t):
    """The charge of a weight-zero King tableau, via its lowest weight
    vertex in the unbarred string crystal."""
    m = t.m
    if king_weight(t) != (0,) * m:
        raise HowekitError("charge needs weight zero, got %r" % (king_weight(t),))
    low = to_lowest(t)
    total = 0
    for j in range(1, m + 1):
        eps = epsilon_string(j, low)
        if eps % 2:
            raise HowekitError("odd unbarred string length %d" % eps)
        total += (2 * (m - j) + 1) * (eps // 2)
    for j in range(1, m):
        total += 2 * (m - j) * ceil(epsilon_string(-j, low) / 2)
    return total


def D_statistic(b):
    """The symplectic charge: computed from contraction counts delta_j
    and slide counts gamma_j of the dilated element; equals the charge
    of star(b) on weight-zero highest weight elements."""
    m = len(b.columns)
    n = b.n
    if any(len(c) != n for c in b.columns):
        raise HowekitError("D needs every column of height %d (weight zero)" % n)
    deltas = [delta_count(j, b) for j in range(1, m + 1)]
    b_dil = dilate_fully(b)
    gammas = [gamma_count(j, b_dil) for j in range(1, m)]
    total = 0
    for j, d in enumerate(deltas, start=1):
        if d % 2:
            raise HowekitError("odd contraction count %d" % d)
        total += (2 * (m - j) + 1) * (d // 2)
    for j, g in enumerate(gammas, start=1):
        total += 2 * (m - j) * ceil(g / 2)
    return total


def statistics(b):
    """The JSON-friendly bundle: charge, D and the underlying counts."""
    m = len(b.columns)
    deltas = [delta_count(j, b) for j in range(1, m + 1)]
    b_dil = dilate_fully(b)
    gammas = [gamma_count(j, b_dil) for j in range(1, m)]
    return {
        "charge": charge_king(star(b)),
        "D": D_statistic(b),
        "delta": deltas,
        "gamma": gammas,
    }
