"""Selects the word-combinatorics kernel at import time.

The compiled extension is preferred when present; setting the environment
variable QPERM_PURE_PYTHON=1 forces the pure Python twin (used by the
benchmark and the parity tests).
"""

import os

if os.environ.get("QPERM_PURE_PYTHON", "0") not in ("", "0"):
    from . import _wordkernel_py as _impl

    COMPILED = False
else:
    try:
        from . import _wordkernel as _impl  # type: ignore[no-redef]

        COMPILED = True
    except ImportError:
        from . import _wordkernel_py as _impl  # type: ignore[no-redef]

        COMPILED = False

IMPLEMENTATION = "cython" if COMPILED else "python"

reduce_letters = _impl.reduce_letters
expand_legs = _impl.expand_legs
reduced_words_exact = _impl.reduced_words_exact
