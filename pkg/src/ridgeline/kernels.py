"""Kernel selection: the compiled GF(2) core when available, else pure Python.

``COMPILED`` records which one is active; the benchmark script and the test
suite use it to report and to cross-check the two implementations.
"""

try:
    from . import _gf2core as _impl

    COMPILED = True
except ImportError:  # no compiled extension in this install
    from . import _gf2fallback as _impl

    COMPILED = False

ranks_of_facet_complex = _impl.ranks_of_facet_complex
ranks_of_nonface_complex = _impl.ranks_of_nonface_complex
