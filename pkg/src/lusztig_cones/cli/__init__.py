from .main import build_parser, main
from .suites import SUITES, VerifyReport

__all__ = ["SUITES", "VerifyReport", "build_parser", "main"]
