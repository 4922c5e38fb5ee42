"""
Exception hierarchy for hallsearch

All exceptions inherit from HallSearchException so the CLI can catch one type
and map it to a process exit code. Each carries an error code and a context
dict with the offending integers (always in full decimal).
"""

from enum import Enum, IntEnum
from typing import Any, Dict, Optional


class ErrorCode(str, Enum):
    """Standard error codes"""

    # Arithmetic errors (1xxx)
    ARITHMETIC_ERROR = "ARITH_1000"
    NOT_INVERTIBLE = "ARITH_1001"
    NOT_COPRIME = "ARITH_1002"
    INEXACT_DIVISION = "ARITH_1003"

    # Candidate pipeline errors (2xxx)
    PIPELINE_ERROR = "PIPE_2000"
    INVALID_CELL = "PIPE_2001"
    CONGRUENCE_VIOLATED = "PIPE_2002"

    # Verification errors (3xxx)
    VERIFICATION_ERROR = "VERIFY_3000"
    EQUATION_MISMATCH = "VERIFY_3001"
    TABLE_MISMATCH = "VERIFY_3002"

    # Parametric family errors (4xxx)
    FAMILY_ERROR = "FAMILY_4000"
    BAD_FAMILY_PARAMETER = "FAMILY_4001"
    NON_INTEGRAL_FAMILY = "FAMILY_4002"

    # Configuration errors (5xxx)
    CONFIG_ERROR = "CONFIG_5000"
    INVALID_CONFIG = "CONFIG_5001"
    FINGERPRINT_MISMATCH = "CONFIG_5002"

    # Storage errors (6xxx)
    IO_ERROR = "IO_6000"
    CHECKPOINT_CORRUPT = "IO_6001"
    OUTPUT_WRITE = "IO_6002"

    # Validation errors (7xxx)
    VALIDATION_ERROR = "VALID_7000"
    INVALID_INPUT = "VALID_7001"

    # System errors (9xxx)
    SYSTEM_ERROR = "SYSTEM_9000"


class ExitCode(IntEnum):
    """Process exit codes used by the CLI"""

    OK = 0
    VERIFICATION_FAILED = 1
    BAD_CONFIG = 2
    IO_FAILURE = 3
    INTERNAL = 4


class HallSearchException(Exception):
    """
    Base exception for all hallsearch errors

    Attributes:
        message: Human-readable error message
        error_code: Standardized error code
        context: Additional context information
        exit_code: Exit code the CLI reports for this failure
    """

    def __init__(
        self,
        message: str,
        error_code: ErrorCode = ErrorCode.SYSTEM_ERROR,
        context: Optional[Dict[str, Any]] = None,
        exit_code: ExitCode = ExitCode.INTERNAL,
    ):
        super().__init__(message)
        self.message = message
        self.error_code = error_code
        self.context = context or {}
        self.exit_code = exit_code

    def to_dict(self) -> Dict[str, Any]:
        """Convert exception to dictionary for structured logs"""
        return {
            "error": self.error_code.value,
            "message": self.message,
            "context": {key: str(value) for key, value in self.context.items()},
        }


# Arithmetic exceptions
class ArithmeticDomainError(HallSearchException):
    """Base class for violated arithmetic preconditions"""

    def __init__(
        self,
        message: str,
        error_code: ErrorCode = ErrorCode.ARITHMETIC_ERROR,
        context: Optional[Dict[str, Any]] = None,
    ):
        super().__init__(message, error_code, context, exit_code=ExitCode.BAD_CONFIG)


class NotInvertibleError(ArithmeticDomainError):
    """Raised when a modular inverse does not exist"""

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(message, ErrorCode.NOT_INVERTIBLE, context)


class NotCoprimeError(ArithmeticDomainError):
    """Raised when a root extraction is asked for a value sharing a factor with the modulus"""

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(message, ErrorCode.NOT_COPRIME, context)


class InexactDivisionError(ArithmeticDomainError):
    """Raised when a division required to be exact leaves a remainder"""

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(message, ErrorCode.INEXACT_DIVISION, context)


# Pipeline exceptions
class PipelineError(HallSearchException):
    """Base class for candidate pipeline errors"""

    def __init__(
        self,
        message: str,
        error_code: ErrorCode = ErrorCode.PIPELINE_ERROR,
        context: Optional[Dict[str, Any]] = None,
    ):
        super().__init__(message, error_code, context, exit_code=ExitCode.INTERNAL)


class InvalidCellError(PipelineError):
    """Raised when a (b, C2) cell violates gcd or parity constraints"""

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(message, ErrorCode.INVALID_CELL, context)
        self.exit_code = ExitCode.BAD_CONFIG


class CongruenceViolationError(PipelineError):
    """Raised when a generated candidate fails its defining congruence"""

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(message, ErrorCode.CONGRUENCE_VIOLATED, context)


# Verification exceptions
class VerificationError(HallSearchException):
    """Base class for failed re-verification"""

    def __init__(
        self,
        message: str,
        error_code: ErrorCode = ErrorCode.VERIFICATION_ERROR,
        context: Optional[Dict[str, Any]] = None,
    ):
        super().__init__(message, error_code, context, exit_code=ExitCode.VERIFICATION_FAILED)


class EquationMismatchError(VerificationError):
    """Raised when x^3 - y^2 does not reproduce the recorded k"""

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(message, ErrorCode.EQUATION_MISMATCH, context)


class TableMismatchError(VerificationError):
    """Raised when bundled known-hit rows do not recompute to their printed values"""

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(message, ErrorCode.TABLE_MISMATCH, context)


# Family exceptions
class FamilyError(HallSearchException):
    """Base class for parametric family errors"""

    def __init__(
        self,
        message: str,
        error_code: ErrorCode = ErrorCode.FAMILY_ERROR,
        context: Optional[Dict[str, Any]] = None,
    ):
        super().__init__(message, error_code, context, exit_code=ExitCode.BAD_CONFIG)


class FamilyParameterError(FamilyError):
    """Raised when a family parameter is outside its admissible class"""

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(message, ErrorCode.BAD_FAMILY_PARAMETER, context)


class NonIntegralFamilyError(FamilyError):
    """Raised when a family formula produces a non-integer"""

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(message, ErrorCode.NON_INTEGRAL_FAMILY, context)
        self.exit_code = ExitCode.VERIFICATION_FAILED


# Configuration exceptions
class ConfigurationError(HallSearchException):
    """Base class for configuration errors"""

    def __init__(
        self,
        message: str,
        error_code: ErrorCode = ErrorCode.CONFIG_ERROR,
        context: Optional[Dict[str, Any]] = None,
    ):
        super().__init__(message, error_code, context, exit_code=ExitCode.BAD_CONFIG)


class FingerprintMismatchError(ConfigurationError):
    """Raised when a checkpoint belongs to a different search configuration"""

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(message, ErrorCode.FINGERPRINT_MISMATCH, context)


# Storage exceptions
class StorageError(HallSearchException):
    """Base class for output and checkpoint I/O errors"""

    def __init__(
        self,
        message: str,
        error_code: ErrorCode = ErrorCode.IO_ERROR,
        context: Optional[Dict[str, Any]] = None,
    ):
        super().__init__(message, error_code, context, exit_code=ExitCode.IO_FAILURE)


class CheckpointCorruptError(StorageError):
    """Raised when a checkpoint file cannot be parsed"""

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(message, ErrorCode.CHECKPOINT_CORRUPT, context)


class OutputWriteError(StorageError):
    """Raised when hits cannot be appended to the output file"""

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(message, ErrorCode.OUTPUT_WRITE, context)


# Validation exceptions
class InvalidInputError(HallSearchException):
    """Raised when an argument is outside an operation's domain"""

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(message, ErrorCode.INVALID_INPUT, context, exit_code=ExitCode.BAD_CONFIG)
