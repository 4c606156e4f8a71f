"""Bethe-ansatz solver and SUSY partner builder for QES potentials."""

try:
    from ._qes import case_ids, case_info, solve, susy, verify, QesError
except ImportError:  # in-tree builds put _qes next to the package
    from _qes import case_ids, case_info, solve, susy, verify, QesError

__all__ = ["case_ids", "case_info", "solve", "susy", "verify", "QesError"]
