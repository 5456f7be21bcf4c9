"""Command line front end.

Every operation of the library is a subcommand; structured results are
printed as compact JSON with stable ordering, so identical inputs give
identical bytes (the one exception is the runtime_ms field of sweep
reports, which is a wall-clock measurement).  crystal-graph can emit DOT
instead of JSON.

Exit codes: 0 on success, 1 when a verification sweep reports failures
(the JSON report is still printed), 2 on malformed input, unknown flags,
or exceeded caps.

Element syntax on the command line: partitions and weight vectors are
comma-separated integers; multipartitions separate components with ";";
crystal elements list columns separated by ";" with barred letters as
negative integers (an empty column is an empty string); King tableau
entries use the "3b" suffix form for barred values.  Wherever a textual
element is accepted, the JSON form produced by the corresponding
subcommand is accepted too.
"""

import argparse
import json
import os
import re
import sys

from . import limits, verify, weyl
from .bicrystal import charge_king, jdt_bar, kappa, statistics
from .characters import char_product, decompose, weyl_character
from .crystals import TensorElement, generate_crystal_graph
from .duality import (KingElement, KingEntry, is_king_tableau, king_weight,
                      star, star_inverse)
from .errors import HowekitError
from .laurent import LaurentPolynomial
from .partfn import (DiagramSpec, branching_coefficient, kostant_partition,
                     twisted_partition_C, weight_multiplicity)
from .partitions import MultiPartition, Partition, conjugate, hat


def _emit(obj):
    print(json.dumps(obj, separators=(",", ":"), sort_keys=True))


def _parse_ints(text):
    """Comma-separated integers; the empty string is the empty tuple.

    Zeros are kept, so "0" is the length-one zero vector (as a partition
    it still normalizes to the empty one).
    """
    text = text.strip()
    if not text:
        return ()
    return tuple(int(x) for x in text.split(","))


def _parse_multi(text):
    return [_parse_ints(c) for c in text.split(";")]


def _parse_symbols(text):
    return tuple(text.replace(",", "").strip().upper())


def _parse_element(text, n):
    text = text.strip()
    if text.startswith("["):
        cols = json.loads(text)
    else:
        cols = [_parse_ints(c) for c in text.split(";")]
    return TensorElement(cols, n)


def _parse_king(text, m):
    text = text.strip()
    if text.startswith("["):
        return KingElement.from_json_obj(json.loads(text), m)
    cols = []
    for c in text.split(";"):
        c = c.strip()
        cols.append([KingEntry.from_str(s) for s in c.split(",")] if c else [])
    return KingElement(cols, m)


def _apply_config(path):
    with open(path) as f:
        for line in f:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError("config line without '=': %r" % line)
            key, value = (s.strip() for s in line.split("=", 1))
            limits.set_cap(key, int(value))


def _family(ns):
    fam = ns.family.upper()
    if fam not in ("A", "C"):
        raise ValueError("family must be A or C, got %r" % ns.family)
    return fam


# -- handlers ---------------------------------------------------------------


def _cmd_hat(ns):
    _emit(list(hat(Partition(_parse_ints(ns.partition)), ns.n, ns.m)
               .padded(ns.m)))
    return 0


def _cmd_conjugate(ns):
    _emit(list(conjugate(Partition(_parse_ints(ns.partition))).stripped()))
    return 0


def _cmd_kostant(ns):
    fam = _family(ns)
    beta = _parse_ints(ns.beta)
    if ns.twisted:
        if fam != "C":
            raise ValueError("--twisted needs family C")
        _emit(twisted_partition_C(beta, ns.m))
    else:
        _emit(kostant_partition(weyl.positive_roots((fam, ns.m)), beta))
    return 0


def _cmd_weight_mult(ns):
    _emit(weight_multiplicity((_family(ns), ns.m),
                              Partition(_parse_ints(ns.lam)),
                              _parse_ints(ns.mu)))
    return 0


def _cmd_branch(ns):
    symbols = _parse_symbols(ns.symbols)
    sizes = _parse_ints(ns.sizes)
    spec = DiagramSpec(symbols, sizes)
    nu = MultiPartition(_parse_multi(ns.nu), sizes)
    _emit(branching_coefficient(Partition(_parse_ints(ns.kappa)), spec, nu))
    return 0


def _cmd_character(ns):
    p = weyl_character(Partition(_parse_ints(ns.lam)), _family(ns), ns.n)
    _emit(p.to_json_obj())
    return 0


def _cmd_decompose(ns):
    if ns.input == "-":
        obj = json.load(sys.stdin)
    else:
        with open(ns.input) as f:
            obj = json.load(f)
    p = LaurentPolynomial.from_json_obj(obj, ns.n)
    _emit(decompose(p, _family(ns), ns.n).to_json_obj())
    return 0


def _cmd_product(ns):
    symbols = _parse_symbols(ns.symbols)
    sizes = _parse_ints(ns.sizes)
    spec = DiagramSpec(symbols, sizes)
    mu = MultiPartition(_parse_multi(ns.mu), sizes)
    _emit(char_product(mu, spec, ns.n).to_json_obj())
    return 0


def _cmd_crystal_graph(ns):
    seed = _parse_element(ns.seed, ns.n)
    ops = tuple(_parse_ints(ns.ops)) if ns.ops is not None else None
    graph = generate_crystal_graph(seed, ops)
    if ns.dot:
        print(graph.to_dot())
    else:
        _emit(graph.to_json_obj())
    return 0


def _cmd_star(ns):
    if ns.inverse:
        if ns.m is None:
            raise ValueError("star --inverse needs --m")
        t = _parse_king(ns.element, ns.m)
        _emit(star_inverse(t, ns.n, ns.m).to_json_obj())
    else:
        _emit(star(_parse_element(ns.element, ns.n)).to_json_obj())
    return 0


def _cmd_king_check(ns):
    t = _parse_king(ns.element, ns.m)
    _emit({"king": is_king_tableau(t),
           "shape": list(t.shape().stripped()),
           "weight": list(king_weight(t))})
    return 0


def _cmd_kappa(ns):
    b = _parse_element(ns.element, ns.n)
    result = kappa(ns.j, b)
    _emit(None if result is None else result.to_json_obj())
    return 0


def _cmd_jdt(ns):
    b = _parse_element(ns.element, ns.n)
    result = jdt_bar(ns.j, b)
    _emit(None if result is None else result.to_json_obj())
    return 0


def _cmd_charge(ns):
    if (ns.king is None) == (ns.element is None):
        raise ValueError("charge needs exactly one of --king or --element")
    if ns.king is not None:
        if ns.m is None:
            raise ValueError("charge --king needs --m")
        _emit({"charge": charge_king(_parse_king(ns.king, ns.m))})
    else:
        if ns.n is None:
            raise ValueError("charge --element needs --n")
        _emit(statistics(_parse_element(ns.element, ns.n)))
    return 0


def _sweep(ns, rep):
    _emit(rep)
    return 1 if rep["failures"] else 0


def _threads(ns):
    return ns.threads if ns.threads is not None else os.cpu_count()


def _cmd_verify_schur(ns):
    return _sweep(ns, verify.verify_schur_duality(ns.n, ns.m, _threads(ns)))


def _cmd_verify_howe(ns):
    return _sweep(ns, verify.verify_howe_duality(ns.n, ns.m, _threads(ns)))


def _cmd_verify_bijection(ns):
    return _sweep(ns, verify.verify_bijection(ns.n, ns.m, _threads(ns)))


def _cmd_verify_contraction(ns):
    return _sweep(ns, verify.verify_contraction(ns.n, ns.m, _threads(ns)))


def _cmd_verify_jdt(ns):
    return _sweep(ns, verify.verify_jdt(ns.n, ns.m, _threads(ns)))


def _cmd_verify_generalized(ns):
    return _sweep(ns, verify.verify_generalized_duality(
        ns.n, ns.r, ns.size_bound, _threads(ns)))


def _cmd_injectivity(ns):
    spec = DiagramSpec(_parse_symbols(ns.symbols), _parse_ints(ns.sizes))
    return _sweep(ns, verify.injectivity_scan(spec, ns.part_bound,
                                              ns.n_bound))


# -- parser -----------------------------------------------------------------


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="force machine-readable output (the default "
                             "for every subcommand except crystal-graph "
                             "--dot)")
    common.add_argument("--threads", type=int, default=None,
                        help="worker threads for sweeps (default: all "
                             "cores); results do not depend on this")
    common.add_argument("--config", default=None,
                        help="key=value file overriding size caps")

    parser = argparse.ArgumentParser(
        prog="howekit",
        description="exact duality checks for symplectic characters, "
                    "crystals and King tableaux")
    sub = parser.add_subparsers(dest="command", required=True,
                                metavar="SUBCOMMAND")

    def add(name, handler, help_text, **args):
        p = sub.add_parser(name, parents=[common], help=help_text)
        for flag, kw in args.items():
            p.add_argument("--" + flag.replace("_", "-"), **kw)
        p.set_defaults(handler=handler)
        return p

    req_int = {"type": int, "required": True}
    req_str = {"required": True}

    add("hat", _cmd_hat, "conjugate of the rectangle complement, as a "
        "length-m weight vector",
        partition=req_str, n=req_int, m=req_int)
    add("conjugate", _cmd_conjugate, "transpose a partition",
        partition=req_str)
    add("kostant", _cmd_kostant, "Kostant partition count of a weight "
        "vector",
        family=req_str, m=req_int, beta=req_str,
        twisted={"action": "store_true",
                 "help": "type C count twisted by the sign of the long "
                         "roots"})
    add("weight-mult", _cmd_weight_mult, "weight multiplicity by the "
        "Kostant alternating sum",
        family=req_str, m=req_int, lam=req_str, mu=req_str)
    add("branch", _cmd_branch, "branching coefficient of a block-diagonal "
        "subalgebra",
        kappa=req_str, symbols=req_str, sizes=req_str, nu=req_str)
    add("character", _cmd_character, "irreducible character as a Laurent "
        "polynomial",
        family=req_str, n=req_int, lam=req_str)
    add("decompose", _cmd_decompose, "expand a Weyl-invariant polynomial "
        "into irreducible characters",
        family=req_str, n=req_int,
        input={"default": "-",
               "help": "polynomial JSON file, '-' for stdin (default)"})
    add("product", _cmd_product, "character of a tensor product of "
        "restricted factors",
        symbols=req_str, sizes=req_str, mu=req_str, n=req_int)
    add("crystal-graph", _cmd_crystal_graph, "generate the crystal graph "
        "from a seed element",
        seed=req_str, n=req_int,
        ops={"default": None, "help": "operator indices (default: all)"},
        dot={"action": "store_true", "help": "emit DOT instead of JSON"})
    add("star", _cmd_star, "star-dual King columns of an element (or the "
        "inverse map)",
        element=req_str, n=req_int,
        m={"type": int, "default": None},
        inverse={"action": "store_true"})
    add("king-check", _cmd_king_check, "test the King tableau property",
        element=req_str, m=req_int)
    add("kappa", _cmd_kappa, "contraction of column j (j < 0 for the "
        "barred transported operator)",
        element=req_str, n=req_int, j=req_int)
    add("jdt", _cmd_jdt, "jeu de taquin slide on the bar complement",
        element=req_str, n=req_int, j=req_int)
    add("charge", _cmd_charge, "charge of a King tableau, or the D "
        "statistics of an element",
        king={"default": None}, m={"type": int, "default": None},
        element={"default": None}, n={"type": int, "default": None})
    add("verify-schur", _cmd_verify_schur, "sweep the type A duality",
        n=req_int, m=req_int)
    add("verify-howe", _cmd_verify_howe, "sweep the type C duality",
        n=req_int, m=req_int)
    add("verify-bijection", _cmd_verify_bijection, "sweep the star "
        "bijection against King tableaux",
        n=req_int, m=req_int)
    add("verify-contraction", _cmd_verify_contraction, "sweep commutation "
        "of contraction with the crystal operators",
        n=req_int, m=req_int)
    add("verify-jdt", _cmd_verify_jdt, "sweep jeu de taquin against the "
        "transported operators",
        n=req_int, m=req_int)
    add("verify-generalized", _cmd_verify_generalized, "sweep the two "
        "multiplicity routes over block shapes",
        n=req_int, r=req_int,
        size_bound={"type": int, "default": 2})
    add("injectivity", _cmd_injectivity, "scan for distinct weights with "
        "equal branching vectors",
        symbols=req_str, sizes=req_str, part_bound=req_int, n_bound=req_int)
    return parser


def _glue_negative_values(argv):
    """Join "--flag -3,-2" into "--flag=-3,-2" so barred letters parse."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if (tok.startswith("--") and "=" not in tok and i + 1 < len(argv)
                and re.match(r"-\d", argv[i + 1])):
            out.append(tok + "=" + argv[i + 1])
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def dispatch(argv):
    parser = _build_parser()
    try:
        ns = parser.parse_args(_glue_negative_values(list(argv)))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        if ns.config:
            _apply_config(ns.config)
        return ns.handler(ns)
    except (HowekitError, ValueError, KeyError, OSError,
            json.JSONDecodeError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


def main():
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
