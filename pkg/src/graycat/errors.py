"""Exception types shared across the kernel, rewriter and front ends."""


class GraycatError(Exception):
    """Base class; carries a stable machine-readable code."""

    code = "error"

    def __init__(self, message, **info):
        super().__init__(message)
        self.message = message
        self.info = info

    def as_diagnostic(self):
        return {"severity": "error", "code": self.code, "message": self.message, **self.info}


class DuplicateName(GraycatError):
    code = "duplicate-name"


class UnknownReference(GraycatError):
    code = "unknown-reference"


class BoundaryMismatch(GraycatError):
    code = "boundary-mismatch"


class FlagDependencyViolation(GraycatError):
    code = "flag-dependency"


class EndpointMismatch(GraycatError):
    code = "endpoint-mismatch"


class IllTyped(GraycatError):
    code = "ill-typed"

    def __init__(self, message, position=(), **info):
        super().__init__(message, position=list(position), **info)
        self.position = tuple(position)


class StructureUnavailable(GraycatError):
    code = "structure-unavailable"


class NoMatch(GraycatError):
    code = "no-match"


class GuardFailed(GraycatError):
    code = "guard-failed"


class NotComparable(GraycatError):
    code = "not-comparable"


class RuleBoundaryMismatch(GraycatError):
    """Bug guard: a shipped rule whose sides have unequal boundaries."""

    code = "rule-boundary-mismatch"


class StepNoMatch(GraycatError):
    code = "step-no-match"

    def __init__(self, message, step_index, **info):
        super().__init__(message, step=step_index, **info)
        self.step_index = step_index


class ClaimMismatch(GraycatError):
    code = "claim-mismatch"


class ParseError(GraycatError):
    code = "syntax-error"

    def __init__(self, message, line, col, expected=None):
        super().__init__(message, line=line, col=col, expected=expected)
        self.line = line
        self.col = col
        self.expected = expected


class ResolveError(GraycatError):
    code = "resolve-error"
