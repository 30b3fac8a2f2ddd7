from ._pyamalg import (
    AmalgError,
    Report,
    Session,
    classify,
    parse,
    verify_paper,
)

__all__ = ["AmalgError", "Report", "Session", "classify", "parse", "verify_paper"]
