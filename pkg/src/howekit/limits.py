"""Size caps for the exact-arithmetic engines.

All caps are process-wide and may be overridden programmatically (set_cap),
through a key=value config file (see cli), or, for the polynomial term cap,
through the environment variable HOWEKIT_TERM_CAP.
"""

import os

_DEFAULTS = {
    # maximum number of monomials a polynomial product may produce
    "term_cap": 10_000_000,
    # maximum number of vertices generate_crystal_graph will visit
    "vertex_cap": 1_000_000,
    # maximum number of elements an enumeration (crystal spaces, tableaux) may yield
    "enum_cap": 10_000_000,
    # maximum number of peeling steps in decompose()
    "decompose_cap": 1_000_000,
}

_overrides: dict = {}


def get_cap(name):
    if name not in _DEFAULTS:
        raise KeyError("unknown cap %r" % name)
    if name in _overrides:
        return _overrides[name]
    if name == "term_cap":
        env = os.environ.get("HOWEKIT_TERM_CAP")
        if env is not None:
            return int(env)
    return _DEFAULTS[name]


def set_cap(name, value):
    """Override a cap for this process.  value=None restores the default."""
    if name not in _DEFAULTS:
        raise KeyError("unknown cap %r" % name)
    if value is None:
        _overrides.pop(name, None)
    else:
        _overrides[name] = int(value)
