"""Exception hierarchy.

Every error carries a short ``code`` string so the command line can print a
stable diagnostic.
"""


class ZpdError(Exception):
    code = "error"


class InputError(ZpdError, ValueError):
    code = "input"


class FieldMismatchError(InputError):
    code = "field-mismatch"


class DimensionError(InputError):
    code = "dimension"


class InvalidAlgebraError(InputError):
    code = "invalid-algebra"


class InvalidModuleError(InputError):
    code = "invalid-module"


class NotAnIdealError(InputError):
    code = "not-an-ideal"


class NotASubalgebraError(InputError):
    code = "not-a-subalgebra"


class UnknownBuiltinError(InputError):
    code = "unknown-builtin"


class UnsupportedFieldError(InputError):
    code = "unsupported-field"


class BudgetExceededError(ZpdError):
    code = "budget-exceeded"


class FamilyInvalidError(ZpdError):
    code = "family-invalid"


class PairVerificationError(ZpdError):
    """A generated pair failed exact re-verification; never skipped."""

    code = "pair-invalid"


class MalformedDocumentError(InputError):
    code = "malformed-json"
