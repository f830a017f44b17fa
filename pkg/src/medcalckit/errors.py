"""Exception hierarchy shared by all medcalckit subsystems.

Every error a caller can act on has its own class so CLI exit codes and
harness outcome mapping stay mechanical.
"""


class MedCalcKitError(Exception):
    """Base class for all package errors."""


# --- units -------------------------------------------------------------------

class UnknownUnitError(MedCalcKitError):
    def __init__(self, symbol: str):
        super().__init__(f"unknown unit: {symbol!r}")
        self.symbol = symbol


class DimensionMismatchError(MedCalcKitError):
    def __init__(self, src: str, dst: str, detail: str = ""):
        msg = f"no conversion path from {src!r} to {dst!r}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
        self.src = src
        self.dst = dst


class ConflictingRuleError(MedCalcKitError):
    pass


# --- calculator engine -------------------------------------------------------

class UnknownCalculatorError(MedCalcKitError):
    def __init__(self, calculator_id: str):
        super().__init__(f"unknown calculator: {calculator_id!r}")
        self.calculator_id = calculator_id


class MissingParameterError(MedCalcKitError):
    """A required parameter is absent. Harness callers map this to answer 'N/A'."""

    def __init__(self, name: str, calculator_id: str = ""):
        where = f" for {calculator_id}" if calculator_id else ""
        super().__init__(f"missing required parameter {name!r}{where}")
        self.name = name
        self.calculator_id = calculator_id


class UnknownParameterError(MedCalcKitError):
    def __init__(self, name: str, calculator_id: str = ""):
        where = f" for {calculator_id}" if calculator_id else ""
        super().__init__(f"parameter {name!r} is not declared{where}")
        self.name = name


class OutOfRangeError(MedCalcKitError):
    def __init__(self, name: str, detail: str = ""):
        msg = f"parameter {name!r} out of range"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)
        self.name = name


class UnknownBugError(MedCalcKitError):
    def __init__(self, bug_id: str):
        super().__init__(f"unknown legacy bug identifier: {bug_id!r}")
        self.bug_id = bug_id


class CalculatorUnavailableError(MedCalcKitError):
    """Raised by legacy modes that reproduce calculators broken at load time."""


class UnknownDrugError(MedCalcKitError):
    def __init__(self, drug: str):
        super().__init__(f"no opioid conversion factor registered for {drug!r}")
        self.drug = drug


# --- specbook ---------------------------------------------------------------

class InvalidSpecError(MedCalcKitError):
    pass


class SpecParseError(MedCalcKitError):
    def __init__(self, location: str, detail: str):
        super().__init__(f"{location}: {detail}")
        self.location = location
        self.detail = detail


# --- dataset ------------------------------------------------------------------

class SchemaError(MedCalcKitError):
    pass


class RowError(MedCalcKitError):
    def __init__(self, row_number: int, detail: str):
        super().__init__(f"row {row_number}: {detail}")
        self.row_number = row_number


class MissingEntitiesError(MedCalcKitError):
    def __init__(self, row_id: str):
        super().__init__(f"row {row_id} has no reference parameters to regenerate from")
        self.row_id = row_id


class InsufficientRowsError(MedCalcKitError):
    pass


# --- scoring ------------------------------------------------------------------

class EmptyRunError(MedCalcKitError):
    pass


class InconsistentCountsError(MedCalcKitError):
    pass


# --- harness ------------------------------------------------------------------

class MissingSpecError(MedCalcKitError):
    pass


class EndpointError(MedCalcKitError):
    pass


class ConfigError(MedCalcKitError):
    pass
