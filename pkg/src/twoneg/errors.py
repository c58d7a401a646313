"""Shared exception types. Every error carries a stable `kind` string plus a witness."""

from __future__ import annotations


class WorkbenchError(Exception):
    """Base class; `kind` is a stable machine-readable tag, `witness` names the culprit."""

    def __init__(self, kind: str, witness: object = None, detail: str = ""):
        self.kind = kind
        self.witness = witness
        self.detail = detail
        msg = kind
        if witness is not None:
            msg += f" at {witness!r}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class FormulaSyntaxError(WorkbenchError):
    def __init__(self, offset: int, expected: frozenset[str], detail: str = ""):
        self.offset = offset
        self.expected = expected
        super().__init__("syntax-error", offset, detail or f"expected one of {sorted(expected)}")


class LatticeError(WorkbenchError):
    """Raised when declared order data does not describe a valid bounded (distributive) lattice."""


class AlgebraError(WorkbenchError):
    """Raised on bad algebra construction or evaluation (dne-violation, unbound-atom, ...)."""


class FrameError(WorkbenchError):
    """Raised on frame condition violations (condition name + witness tuple)."""


class FileFormatError(WorkbenchError):
    """Malformed .alg/.frm/.prf input."""


class VerificationError(WorkbenchError):
    """An embedding/duality re-check failed; indicates an implementation bug."""


class BoundGuardError(WorkbenchError):
    """A search bound guard tripped; override with force=True (CLI: --force)."""

    def __init__(self, what: str, limit: object, actual: object):
        super().__init__("bound-guard", what, f"limit {limit}, requested {actual}")
