"""Determinantal characters: elementary symmetric blocks, Jacobi-Trudi
determinants for gl_n and sp_2n, straightening, Weyl characters and their
decomposition.

Two variable conventions coexist.  Family "A" works with x_1, ..., x_n.
Family "C" works with the same n variables but its elementary symmetric
polynomials are those of the 2n values x_1, ..., x_n, 1/x_1, ..., 1/x_n;
they vanish outside degrees 0..2n and satisfy e_{n+k} = e_{n-k}.

The E map sends a monomial x^beta in m variables to the product
e_{beta_1} ... e_{beta_m} of those blocks; applied to Delta_m * x^beta it
produces the same determinant as the Jacobi-Trudi matrix.
"""

from functools import lru_cache
from itertools import combinations

from . import limits, weyl
from .errors import HowekitError, NotACharacter
from .laurent import LaurentPolynomial
from .partitions import MultiPartition, Partition, check_weight, conjugate, \
    reduce_column_full


@lru_cache(maxsize=None)
def elem_sym(k, family, n):
    """e_k of the n (family A) or 2n folded (family C) variable values."""
    family = str(family).upper()
    k = int(k)
    n = int(n)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if family == "A":
        if k < 0 or k > n:
            return LaurentPolynomial.zero(n)
        terms = {}
        for subset in combinations(range(n), k):
            exp = [0] * n
            for i in subset:
                exp[i] = 1
            terms[tuple(exp)] = 1
        return LaurentPolynomial(n, terms)
    if family == "C":
        if k < 0 or k > 2 * n:
            return LaurentPolynomial.zero(n)
        terms = {}
        for subset in combinations(range(2 * n), k):
            exp = [0] * n
            for s in subset:
                if s < n:
                    exp[s] += 1
                else:
                    exp[s - n] -= 1
            key = tuple(exp)
            terms[key] = terms.get(key, 0) + 1
        return LaurentPolynomial(n, terms)
    raise ValueError("family must be A or C, got %r" % (family,))


def E_map(p, family, n):
    """Linear extension of x^beta -> e_{beta_1}*...*e_{beta_m}."""
    out = LaurentPolynomial.zero(n)
    for exp, coef in sorted(p.terms.items()):
        prod = LaurentPolynomial.one(n)
        for b in exp:
            prod = prod * elem_sym(b, family, n)
            if prod.is_zero():
                break
        out = out + prod.scale(coef)
    return out


def delta_product(family, m):
    """Delta^A_m = prod_{i<j} (1 - x_i/x_j); Delta^C_m has the extra
    factors prod_{i<=j} (1 - 1/(x_i x_j))."""
    family = str(family).upper()
    if family not in ("A", "C"):
        raise ValueError("family must be A or C")
    out = LaurentPolynomial.one(m)
    for i in range(m):
        for j in range(i + 1, m):
            exp = [0] * m
            exp[i], exp[j] = 1, -1
            out = out * (LaurentPolynomial.one(m) - LaurentPolynomial.monomial(exp))
    if family == "C":
        for i in range(m):
            for j in range(i, m):
                exp = [0] * m
                exp[i] -= 1
                exp[j] -= 1
                out = out * (LaurentPolynomial.one(m) - LaurentPolynomial.monomial(exp))
    return out


def _det(matrix):
    """Determinant of a square matrix of polynomials, by minor expansion
    memoized on (row, chosen column subset)."""
    size = len(matrix)
    if size == 0:
        raise ValueError("empty matrix")
    nvars = matrix[0][0].nvars
    memo = {}

    def minor(row, cols):
        if row == size:
            return LaurentPolynomial.one(nvars)
        got = memo.get((row, cols))
        if got is not None:
            return got
        total = LaurentPolynomial.zero(nvars)
        s = 1
        for pos, col in enumerate(cols):
            entry = matrix[row][col]
            if not entry.is_zero():
                sub = minor(row + 1, cols[:pos] + cols[pos + 1:])
                total = total + (entry * sub).scale(s)
            s = -s
        memo[(row, cols)] = total
        return total

    return minor(0, tuple(range(size)))


def jt_determinant(beta, family, n, m):
    """The Jacobi-Trudi determinant v_beta.

    Family A entries are e_{beta_i + j - i} over n variables; family C
    entries are e_{beta_i - i + j} - e_{beta_i - i - j} over the folded
    values.  For partitions, v_{lambda'} equals the Weyl character of
    lambda (exactly in type C; in type A each dropped full column
    contributes one factor e_n = x_1...x_n).
    """
    family = str(family).upper()
    beta = check_weight(beta, m)
    if m < 1:
        raise ValueError("m must be >= 1")
    matrix = []
    for i in range(1, m + 1):
        row = []
        for j in range(1, m + 1):
            if family == "A":
                row.append(elem_sym(beta[i - 1] + j - i, "A", n))
            else:
                row.append(elem_sym(beta[i - 1] - i + j, "C", n)
                           - elem_sym(beta[i - 1] - i - j, "C", n))
        matrix.append(row)
    return _det(matrix)


def straighten(beta, family, n, m):
    """Bring beta to the dominant chamber of the relevant dot action.

    Returns None when v_beta = 0 (beta + shift on a wall, or the dominant
    representative has a vanishing row), else (sign, gamma) with
    v_beta = sign * v_gamma and gamma a partition; type A additionally
    drops the parts equal to n (each dropped part is one e_n factor).
    """
    family = str(family).upper()
    beta = check_weight(beta, m)
    if family == "C":
        d = weyl.delta_shift(n, m)
        y = tuple(a + b for a, b in zip(beta, d))
        if 0 in y or len({abs(v) for v in y}) < m:
            return None
        order = sorted(range(m), key=lambda j: abs(y[j]))
        perm = tuple(j + 1 for j in order)
        signs = tuple(-1 if y[j] > 0 else 1 for j in order)
        w = weyl.WeylElement(perm, signs)
        gamma = tuple(a - b for a, b in zip(weyl.act(w, y), d))
        if gamma[-1] < 0:
            return None
        return weyl.sign(w), Partition(gamma)
    if family == "A":
        r = weyl.rho(("A", m))
        y = tuple(a + b for a, b in zip(beta, r))
        if len(set(y)) < m:
            return None
        order = sorted(range(m), key=lambda j: -y[j])
        perm = tuple(j + 1 for j in order)
        w = weyl.WeylElement(perm)
        gamma = tuple(a - b for a, b in zip(weyl.act(w, y), r))
        if gamma[0] > n or gamma[-1] < 0:
            return None
        return weyl.sign(w), reduce_column_full(Partition(gamma), n)
    raise ValueError("family must be A or C")


def _check_dominant_for_character(lam, family, rank):
    if isinstance(lam, Partition):
        v = lam.padded(rank)
    else:
        v = check_weight(lam, rank)
    for a, b in zip(v, v[1:]):
        if a < b:
            raise ValueError("weight %r not dominant" % (v,))
    if family == "C" and v[-1] < 0:
        raise ValueError("weight %r not dominant for type C" % (v,))
    return v


@lru_cache(maxsize=None)
def _weyl_character_cached(lam, family, rank):
    id = (family, rank)
    r = weyl.rho(id)
    numer_exp = tuple(a + b for a, b in zip(lam, r))
    numer = {}
    denom = {}
    for w in weyl.enumerate_weyl(id):
        s = weyl.sign(w)
        e1 = weyl.act(w, numer_exp)
        numer[e1] = numer.get(e1, 0) + s
        e2 = weyl.act(w, r)
        denom[e2] = denom.get(e2, 0) + s
    a_top = LaurentPolynomial(rank, numer)
    a_rho = LaurentPolynomial(rank, denom)
    return a_top.exact_div(a_rho)


def weyl_character(lam, family, rank):
    """The irreducible character as an alternant quotient.

    Family C gives the sp_{2 rank} character in rank variables; family A
    gives the gl_rank Schur polynomial.
    """
    family = str(family).upper()
    if family not in ("A", "C"):
        raise ValueError("family must be A or C")
    v = _check_dominant_for_character(lam, family, rank)
    return _weyl_character_cached(v, family, rank)


class CharacterDecomposition:
    """Multiplicities of irreducible characters in a W-invariant polynomial."""

    __slots__ = ("mults",)

    def __init__(self, mults):
        clean = {}
        for lam, c in mults.items():
            lam = Partition(lam)
            c = int(c)
            if c:
                clean[lam] = c
        object.__setattr__(self, "mults", clean)

    def __setattr__(self, *a):
        raise AttributeError("CharacterDecomposition is immutable")

    def __getitem__(self, lam):
        return self.mults.get(Partition(lam), 0)

    def __eq__(self, other):
        if isinstance(other, CharacterDecomposition):
            return self.mults == other.mults
        return NotImplemented

    def __iter__(self):
        return iter(sorted(self.mults, key=lambda p: p.stripped()))

    def __len__(self):
        return len(self.mults)

    def items(self):
        return [(p, self.mults[p]) for p in self]

    def __repr__(self):
        return "CharacterDecomposition(%r)" % {
            p.stripped(): c for p, c in self.items()}

    def to_json_obj(self):
        return [{"lam": list(p.stripped()), "mult": c} for p, c in self.items()]


def _is_invariant(p, family, rank):
    for i in range(rank - 1):
        moved = {}
        for exp, coef in p.terms.items():
            e = list(exp)
            e[i], e[i + 1] = e[i + 1], e[i]
            moved[tuple(e)] = coef
        if moved != p.terms:
            return False
    if family == "C" and rank >= 1:
        moved = {}
        for exp, coef in p.terms.items():
            e = list(exp)
            e[-1] = -e[-1]
            moved[tuple(e)] = coef
        if moved != p.terms:
            return False
    return True


def decompose(p, family, rank):
    """Write a W-invariant polynomial as a sum of irreducible characters.

    Repeatedly peels the lexicographically greatest exponent, which for an
    invariant polynomial is dominant.  Raises NotACharacter when the input
    is not invariant or a negative multiplicity shows up.
    """
    family = str(family).upper()
    if p.nvars != rank:
        raise ValueError("polynomial arity %d does not match rank %d"
                         % (p.nvars, rank))
    if not _is_invariant(p, family, rank):
        raise NotACharacter("input is not Weyl invariant")
    cap = limits.get_cap("decompose_cap")
    mults = {}
    q = p
    steps = 0
    while not q.is_zero():
        steps += 1
        if steps > cap:
            raise HowekitError("decompose exceeded %d peeling steps" % cap)
        top = q.lex_max()
        coef = q.terms[top]
        if coef < 0:
            raise NotACharacter("negative multiplicity %d at %r" % (coef, top))
        if any(a < b for a, b in zip(top, top[1:])) or top[-1] < 0:
            raise NotACharacter("leading exponent %r is not a partition" % (top,))
        lam = Partition(top)
        mults[lam] = mults.get(lam, 0) + coef
        q = q - weyl_character(lam, family, rank).scale(coef)
    return CharacterDecomposition(mults)


def schur_folded(delta, n):
    """The 2n-variable Schur polynomial s_delta specialized at
    (x_1,...,x_n,1/x_1,...,1/x_n), via the dual Jacobi-Trudi determinant
    over the folded elementary symmetric polynomials."""
    delta = Partition(delta)
    s = delta.stripped()
    if len(s) > 2 * n:
        raise ValueError("partition %r has more than %d parts" % (s, 2 * n))
    if not s:
        return LaurentPolynomial.one(n)
    width = s[0]
    cols = conjugate(delta).padded(width)
    matrix = []
    for i in range(1, width + 1):
        row = []
        for j in range(1, width + 1):
            row.append(elem_sym(cols[i - 1] - i + j, "C", n))
        matrix.append(row)
    return _det(matrix)


def char_product(mu, spec, n):
    """prod_j s^{X_j}_{mu^(j)} in n variables.

    spec is the X-sequence with block sizes (the tensor-side order); C
    factors are sp_2n characters, A factors are 2n-variable Schur
    polynomials folded at (x, 1/x).  Component j must fit in the
    n x (size_j) rectangle.
    """
    if len(mu) != len(spec.symbols):
        raise ValueError("multipartition has %d components, spec has %d blocks"
                         % (len(mu), len(spec.symbols)))
    out = LaurentPolynomial.one(n)
    for comp, sym, size in zip(mu.components, spec.symbols, spec.sizes):
        if not comp.fits_in(n, size):
            raise ValueError("component %r does not fit in %d x %d"
                             % (comp.stripped(), n, size))
        if sym == "C":
            factor = weyl_character(comp, "C", n)
        else:
            factor = schur_folded(comp, n)
        out = out * factor
    return out
