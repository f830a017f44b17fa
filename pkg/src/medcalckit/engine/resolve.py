"""Boundary between caller-supplied patient parameters and calculator math.

All unit conversion happens here, once, into each parameter's canonical
unit; calculator bodies only ever see canonical floats, bools, and
normalized category labels.
"""

from __future__ import annotations

import math

from ..errors import (MissingParameterError, OutOfRangeError,
                      UnknownParameterError)
from ..units import Quantity, UnitRegistry
from .types import (BOOLEAN, CATEGORICAL, NUMERIC, CalculatorDef, EngineMode,
                    ParameterSpec)

_TRUE_WORDS = {"true", "yes", "y", "1", "present"}
_FALSE_WORDS = {"false", "no", "n", "0", "absent"}


def normalize_label(text: str) -> str:
    return " ".join(str(text).split()).casefold()


def coerce_boolean(name: str, raw) -> bool:
    if isinstance(raw, bool):
        return raw
    if isinstance(raw, (int, float)) and raw in (0, 1):
        return bool(raw)
    if isinstance(raw, str):
        word = normalize_label(raw)
        if word in _TRUE_WORDS:
            return True
        if word in _FALSE_WORDS:
            return False
    raise OutOfRangeError(name, f"cannot interpret {raw!r} as a boolean")


class Resolved:
    """Validated, canonical-unit view of one calculator's inputs."""

    def __init__(self, calc: CalculatorDef, values: dict, mode: EngineMode,
                 raw: dict | None = None):
        self.calc = calc
        self.mode = mode
        self._values = values
        self._raw = raw or {}

    def raw(self, name: str):
        """Caller-supplied value before unit conversion (legacy bug reproduction)."""
        return self._raw.get(name)

    def has(self, name: str) -> bool:
        return self._values.get(name) is not None

    def get(self, name: str, default=None):
        v = self._values.get(name)
        return default if v is None else v

    def require(self, name: str):
        v = self._values.get(name)
        if v is None:
            raise MissingParameterError(name, self.calc.id)
        return v

    def require_any(self, *names: str):
        """First present value among ``names``; raises naming the first choice."""
        for name in names:
            if self.has(name):
                return name, self._values[name]
        raise MissingParameterError(names[0], self.calc.id)


def resolve_params(calc: CalculatorDef, raw: dict, registry: UnitRegistry,
                   mode: EngineMode) -> Resolved:
    declared = {p.name: p for p in calc.params}
    for key in raw:
        if key not in declared:
            raise UnknownParameterError(key, calc.id)

    values: dict = {}
    for spec in calc.params:
        supplied = raw.get(spec.name)
        if supplied is None:
            if spec.required:
                raise MissingParameterError(spec.name, calc.id)
            values[spec.name] = spec.default
            continue
        values[spec.name] = _coerce(spec, supplied, registry)
    return Resolved(calc, values, mode, raw)


def _coerce(spec: ParameterSpec, raw, registry: UnitRegistry):
    if spec.kind == BOOLEAN:
        return coerce_boolean(spec.name, raw)
    if spec.kind == CATEGORICAL:
        return _coerce_categorical(spec, raw)
    return _coerce_numeric(spec, raw, registry)


def _coerce_categorical(spec: ParameterSpec, raw) -> str:
    if isinstance(raw, bool):
        raise OutOfRangeError(spec.name, "expected a category label")
    if isinstance(raw, (int, float)) and float(raw) == int(raw):
        candidate = str(int(raw))
    else:
        candidate = str(raw)
    wanted = normalize_label(candidate)
    if spec.categories:
        for cat in spec.categories:
            if normalize_label(cat) == wanted:
                return cat
        raise OutOfRangeError(
            spec.name, f"{candidate!r} not one of {list(spec.categories)}")
    return wanted


def _coerce_numeric(spec: ParameterSpec, raw, registry: UnitRegistry) -> float:
    if isinstance(raw, bool):
        raise OutOfRangeError(spec.name, "expected a number")
    if isinstance(raw, Quantity):
        value = _convert(spec, raw, registry)
    elif isinstance(raw, dict):
        try:
            q = Quantity(float(raw["value"]), str(raw.get("unit") or spec.canonical_unit))
        except (KeyError, TypeError, ValueError) as exc:
            raise OutOfRangeError(spec.name, f"bad quantity object {raw!r}") from exc
        value = _convert(spec, q, registry)
    elif isinstance(raw, (int, float)):
        value = float(raw)
    elif isinstance(raw, str):
        try:
            value = float(raw)
        except ValueError as exc:
            raise OutOfRangeError(spec.name, f"cannot parse number {raw!r}") from exc
    else:
        raise OutOfRangeError(spec.name, f"unsupported value {raw!r}")

    if not math.isfinite(value):
        raise OutOfRangeError(spec.name, "value must be finite")
    if spec.valid_range is not None:
        lo, hi = spec.valid_range
        if not (lo <= value <= hi):
            raise OutOfRangeError(
                spec.name,
                f"{value:g} {spec.canonical_unit or ''} outside [{lo:g}, {hi:g}]")
    return value


def _convert(spec: ParameterSpec, q: Quantity, registry: UnitRegistry) -> float:
    if spec.canonical_unit is None:
        return q.value
    return registry.convert_value(q.value, q.unit, spec.canonical_unit, spec.analyte)
