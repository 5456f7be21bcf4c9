"""Theorem-level verification sweeps.

Every identity in the package is checked by computing both sides through
independent routes: character products against Kostant-type counts, star
transport against direct combinatorics, and so on.  Each sweep returns a
report dict {"cells": N, "failures": [...], "runtime_ms": T}; an empty
failure list means the identity held on every cell.  The injectivity scan
is a falsification harness rather than a proof: it searches for distinct
dominant weights with identical branching vectors and reports whatever it
finds (expected: nothing).

Sweeps are embarrassingly parallel over cells.  Pass threads > 1 to run
cells through a thread pool; the merge is ordered by cell key, so reports
do not depend on the thread count.
"""

import itertools
import time

from . import limits
from .bicrystal import jdt_bar, kappa
from .characters import char_product, decompose, elem_sym
from .crystals import crystal_e, enumerate_B, is_highest_weight, weight_of
from .duality import (enumerate_king_tableaux, is_king_tableau, king_weight,
                      star, star_inverse)
from .errors import HowekitError, LimitExceeded
from .laurent import LaurentPolynomial
from .partfn import DiagramSpec, branching_coefficient, weight_multiplicity
from .partitions import (MultiPartition, Partition, conjugate,
                         enumerate_rectangle, hat, hat_multi)


def _pooled(keys, worker, threads):
    """Map worker over keys, optionally through a thread pool.

    Results come back in key order either way, so callers merge
    deterministically.
    """
    if threads is not None and threads > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(worker, keys))
    return [worker(k) for k in keys]


def _report(cells, failures, t0):
    return {
        "cells": cells,
        "failures": failures,
        "runtime_ms": int((time.perf_counter() - t0) * 1000),
    }


def _merge(results, t0):
    cells = 0
    failures = []
    for c, fails in results:
        cells += c
        failures.extend(fails)
    return _report(cells, failures, t0)


def _coerce_multi(mu, sizes):
    if isinstance(mu, MultiPartition):
        if mu.blocks != tuple(int(k) for k in sizes):
            raise ValueError("multipartition blocks %r do not match sizes %r"
                             % (mu.blocks, tuple(sizes)))
        return mu
    return MultiPartition(mu, sizes)


def multiplicity_char_route(lam, symbols, sizes, mu, n):
    """Multiplicity of V(lam) in the tensor product of sp_2n-restricted
    factors described by (symbols, sizes, mu), read off the character.

    >>> multiplicity_char_route([2, 1], "C", [2], [[2, 1]], 2)
    1
    >>> multiplicity_char_route([1, 1], "C", [2], [[2, 1]], 2)
    0
    >>> multiplicity_char_route([2], "AA", [1, 1], [[1], [1]], 2)
    1
    """
    spec = DiagramSpec(symbols, sizes)
    mu = _coerce_multi(mu, spec.sizes)
    dec = decompose(char_product(mu, spec, n), "C", n)
    return dec[Partition(lam)]


def multiplicity_branch_route(lam, symbols, sizes, mu, n):
    """The same multiplicity computed on the dual side, as the branching
    coefficient of the block subalgebra weight hat(mu) inside the sp_2m
    module V(hat(lam)), m = sum of sizes.

    >>> multiplicity_branch_route([2, 1], "C", [2], [[2, 1]], 2)
    1
    >>> multiplicity_branch_route([2], "AA", [1, 1], [[1], [1]], 2)
    1
    """
    spec = DiagramSpec(symbols, sizes)
    mu = _coerce_multi(mu, spec.sizes)
    m = spec.total()
    kappa_w = hat(Partition(lam), n, m)
    return branching_coefficient(kappa_w, spec.reversed(), hat_multi(mu, n))


def verify_schur_duality(n, m, threads=None):
    """Sweep the type A duality over every mu in the n x m rectangle.

    For each mu, the gl_n expansion of e_{mu'_1}...e_{mu'_m} is compared
    with gl_m Kostant weight multiplicities at (lam', mu'), for every lam
    in the rectangle of the same size.  Exact equality on each cell.
    """
    t0 = time.perf_counter()
    lams = list(enumerate_rectangle(n, m))

    def cell(mu):
        fails = []
        mu_p = conjugate(mu).padded(m)
        p = LaurentPolynomial.one(n)
        for k in mu_p:
            p = p * elem_sym(k, "A", n)
        dec = decompose(p, "A", n)
        valid = set(lam for lam in lams if lam.size() == mu.size())
        for q in dec:
            if q not in valid:
                fails.append({"mu": list(mu.stripped()),
                              "lam": list(q.stripped()),
                              "reason": "unexpected constituent"})
        count = 0
        for lam in lams:
            if lam.size() != mu.size():
                continue
            count += 1
            left = dec[lam]
            right = weight_multiplicity(("A", m), conjugate(lam).padded(m),
                                        mu_p)
            if left != right:
                fails.append({"mu": list(mu.stripped()),
                              "lam": list(lam.stripped()),
                              "char_route": left, "weight_mult": right})
        return count, fails

    return _merge(_pooled(lams, cell, threads), t0)


def verify_howe_duality(n, m, threads=None):
    """Sweep the type C duality over every mu in the n x m rectangle.

    The sp_2n expansion of the product of folded e_{mu'_j} is compared
    with sp_2m weight multiplicities at (hat(lam), hat(mu)) for every lam
    in the rectangle; constituents outside the rectangle are failures.
    """
    t0 = time.perf_counter()
    lams = list(enumerate_rectangle(n, m))
    rect = set(lams)

    def cell(mu):
        fails = []
        mu_p = conjugate(mu).padded(m)
        p = LaurentPolynomial.one(n)
        for k in mu_p:
            p = p * elem_sym(k, "C", n)
        dec = decompose(p, "C", n)
        for q in dec:
            if q not in rect:
                fails.append({"mu": list(mu.stripped()),
                              "lam": list(q.stripped()),
                              "reason": "unexpected constituent"})
        mu_hat = hat(mu, n, m).padded(m)
        count = 0
        for lam in lams:
            count += 1
            left = dec[lam]
            right = weight_multiplicity(("C", m), hat(lam, n, m), mu_hat)
            if left != right:
                fails.append({"mu": list(mu.stripped()),
                              "lam": list(lam.stripped()),
                              "char_route": left, "weight_mult": right})
        return count, fails

    return _merge(_pooled(lams, cell, threads), t0)


def _specs_up_to(r_max, size_bound):
    out = []
    for r in range(1, r_max + 1):
        for symbols in itertools.product("AC", repeat=r):
            for sizes in itertools.product(range(1, size_bound + 1),
                                           repeat=r):
                out.append(DiagramSpec(symbols, sizes))
    return out


def verify_generalized_duality(n, r_max, size_bound, threads=None):
    """Cross-check the two multiplicity routes on every block shape.

    Sweeps all symbol sequences in {A,C}^r for r <= r_max, all block sizes
    up to size_bound, and all multipartitions with component j inside the
    n x size_j rectangle; each cell compares one (spec, mu, lam) triple.
    """
    t0 = time.perf_counter()
    specs = _specs_up_to(r_max, size_bound)

    def cell(spec):
        fails = []
        count = 0
        m = spec.total()
        lams = list(enumerate_rectangle(n, m))
        rect = set(lams)
        rspec = spec.reversed()
        spec_tag = ["".join(spec.symbols), list(spec.sizes)]
        pools = [list(enumerate_rectangle(n, k)) for k in spec.sizes]
        for comps in itertools.product(*pools):
            mu = MultiPartition(comps, spec.sizes)
            dec = decompose(char_product(mu, spec, n), "C", n)
            nu_hat = hat_multi(mu, n)
            mu_tag = [list(c.stripped()) for c in comps]
            for q in dec:
                if q not in rect:
                    fails.append({"spec": spec_tag, "mu": mu_tag,
                                  "lam": list(q.stripped()),
                                  "reason": "unexpected constituent"})
            for lam in lams:
                count += 1
                left = dec[lam]
                right = branching_coefficient(hat(lam, n, m), rspec, nu_hat)
                if left != right:
                    fails.append({"spec": spec_tag, "mu": mu_tag,
                                  "lam": list(lam.stripped()),
                                  "char_route": left, "branch_route": right})
        return count, fails

    return _merge(_pooled(specs, cell, threads), t0)


def _compositions(m, bound):
    return list(itertools.product(range(bound + 1), repeat=m))


def verify_bijection(n, m, threads=None):
    """Check that star pairs highest weight vertices with King tableaux.

    For every column-height vector mu' with entries <= 2n and every lam in
    the n x m rectangle, the highest weight vertices of weight lam must map
    bijectively onto the King tableaux of shape hat(lam) and weight
    hat(mu), with star_inverse undoing the map.
    """
    t0 = time.perf_counter()
    lams = list(enumerate_rectangle(n, m))
    rect = set(lams)

    def cell(mu_prime):
        fails = []
        mu_tag = list(mu_prime)
        mu_hat = tuple(n - h for h in reversed(mu_prime))
        buckets = {}
        for b in enumerate_B(mu_prime, n):
            if is_highest_weight(b):
                buckets.setdefault(weight_of(b), []).append(b)
        for w in buckets:
            if Partition(w) not in rect:
                fails.append({"mu_prime": mu_tag, "weight": list(w),
                              "reason": "weight outside rectangle"})
        count = 0
        for lam in lams:
            count += 1
            vertices = buckets.get(tuple(lam.padded(n)), [])
            lam_hat = hat(lam, n, m)
            images = set()
            broken = False
            for b in vertices:
                t = star(b)
                if (star_inverse(t, n, m) != b or t.shape() != lam_hat
                        or king_weight(t) != mu_hat
                        or not is_king_tableau(t)):
                    fails.append({"mu_prime": mu_tag,
                                  "lam": list(lam.stripped()),
                                  "element": b.to_json_obj(),
                                  "reason": "pairing broken"})
                    broken = True
                    break
                images.add(t)
            if broken:
                continue
            expected = set(enumerate_king_tableaux(lam_hat, mu_hat, m, n))
            if len(images) != len(vertices) or images != expected:
                fails.append({"mu_prime": mu_tag,
                              "lam": list(lam.stripped()),
                              "crystal_count": len(vertices),
                              "king_count": len(expected)})
        return count, fails

    keys = _compositions(m, 2 * n)
    return _merge(_pooled(keys, cell, threads), t0)


def _removed_pair(before, after, j):
    """The letters dropped from column j, or None on any other change."""
    for i, (x, y) in enumerate(zip(before.columns, after.columns)):
        if i != j - 1 and x != y:
            return None
    old, new = set(before.columns[j - 1]), set(after.columns[j - 1])
    if not new <= old:
        return None
    gone = sorted(old - new)
    if len(gone) != 2 or gone[0] != -gone[1]:
        return None
    return gone


def verify_contraction(n, m, threads=None):
    """Check that kappa_j removes one (bar k, k) pair and commutes with
    every crystal operator e_i, 0 <= i <= n-1, as partial maps."""
    t0 = time.perf_counter()

    def cell(mu_prime):
        fails = []
        count = 0
        mu_tag = list(mu_prime)
        for b in enumerate_B(mu_prime, n):
            for j in range(1, m + 1):
                kb = kappa(j, b)
                if kb is not None and _removed_pair(b, kb, j) is None:
                    fails.append({"mu_prime": mu_tag,
                                  "element": b.to_json_obj(), "j": j,
                                  "reason": "not a pair removal"})
                for i in range(n):
                    count += 1
                    eb = crystal_e(i, b)
                    left = kappa(j, eb) if eb is not None else None
                    right = crystal_e(i, kb) if kb is not None else None
                    if left != right:
                        fails.append({"mu_prime": mu_tag,
                                      "element": b.to_json_obj(),
                                      "j": j, "i": i,
                                      "reason": "commutation broken"})
        return count, fails

    keys = _compositions(m, 2 * n)
    return _merge(_pooled(keys, cell, threads), t0)


def verify_jdt(n, m, threads=None):
    """Check that the jeu de taquin slides agree with the transported
    barred raising operators on every vertex, as partial maps."""
    t0 = time.perf_counter()

    def cell(mu_prime):
        fails = []
        count = 0
        for b in enumerate_B(mu_prime, n):
            for j in range(1, m):
                count += 1
                left = jdt_bar(j, b)
                right = kappa(-j, b)
                if left != right:
                    fails.append({"mu_prime": list(mu_prime),
                                  "element": b.to_json_obj(), "j": j,
                                  "reason": "slide disagrees with transport"})
        return count, fails

    keys = _compositions(m, 2 * n)
    return _merge(_pooled(keys, cell, threads), t0)


def _position_classes(spec, parabolic):
    """Sets of block positions that permitted permutations may mix."""
    byshape = {}
    for pos, key in enumerate(zip(spec.symbols, spec.sizes)):
        byshape.setdefault(key, []).append(pos)
    classes = [v for _, v in sorted(byshape.items())]
    if parabolic:
        # the distinguished last block stays put
        last = len(spec.sizes) - 1
        classes = [[p for p in cls if p != last] for cls in classes]
        classes = [cls for cls in classes if cls]
        classes.append([last])
    return classes


def injectivity_scan(spec, part_bound, n_bound):
    """Search for distinct branching data with identical coefficient
    vectors over all dominant weights in the m x n_bound rectangle.

    spec describes the tensor side: either all C blocks or a C block
    followed by A blocks (the parabolic case).  Weight tuples related by a
    permutation of same-type-same-size blocks induce equal vectors and are
    treated as one cell; in the parabolic case the last dual-side block is
    pinned.  Any two inequivalent tuples sharing a vector are reported.
    """
    t0 = time.perf_counter()
    if not isinstance(spec, DiagramSpec):
        spec = DiagramSpec(*spec)
    all_c = all(s == "C" for s in spec.symbols)
    parabolic = (len(spec.symbols) > 1 and spec.symbols[0] == "C"
                 and all(s == "A" for s in spec.symbols[1:]))
    if not (all_c or parabolic):
        raise HowekitError(
            "scan needs all C blocks or one leading C block, got %r"
            % (spec.symbols,))
    hspec = spec.reversed()
    m = hspec.total()
    kappas = list(enumerate_rectangle(m, n_bound))
    pools = [list(enumerate_rectangle(k, part_bound)) for k in hspec.sizes]
    total = len(kappas)
    for p in pools:
        total *= len(p)
    if total > limits.get_cap("enum_cap"):
        raise LimitExceeded("injectivity scan size %d exceeds enum_cap" % total)

    classes = _position_classes(hspec, parabolic)
    reps = {}
    for comps in itertools.product(*pools):
        key = tuple(tuple(sorted(tuple(comps[p].stripped()) for p in cls))
                    for cls in classes)
        reps.setdefault(key, comps)

    groups = {}
    for key in sorted(reps):
        comps = reps[key]
        nu = MultiPartition(comps, hspec.sizes)
        vec = tuple(branching_coefficient(kap, hspec, nu) for kap in kappas)
        groups.setdefault(vec, []).append(comps)

    failures = []
    for vec in sorted(groups):
        members = groups[vec]
        if len(members) < 2:
            continue
        first = members[0]
        for other in members[1:]:
            failures.append({
                "mu_hat": [list(c.stripped()) for c in first],
                "nu_hat": [list(c.stripped()) for c in other],
            })
    return _report(len(reps), failures, t0)
