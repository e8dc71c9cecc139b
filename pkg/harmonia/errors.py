class HarmoniaError(Exception):
    """Base error; carries a human readable detail and the process exit code."""

    exit_code = 1

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class PreconditionError(HarmoniaError, ValueError):
    pass


class DifferentiationError(HarmoniaError):
    pass


class PathDisagreementError(HarmoniaError):
    pass


class TransportError(HarmoniaError):
    pass


class UsageError(HarmoniaError):
    exit_code = 2
