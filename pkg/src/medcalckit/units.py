"""Clinical unit registry and conversion engine.

Covers exactly the conversion graph the calculator suite needs: linear
factors (mass, length, pressure, ...), one affine group (temperature), and
molar bridges between mass concentration (mg/dL) and molar concentration
(µmol/L) keyed by analyte molecular weight. Deliberately not a general
dimensional-analysis system: no compound unit synthesis.

Conventions baked into the graph:
  * mg/dL = µmol/L × MW / 10000  (equivalently mmol/L × MW / 10)
  * mEq/L is treated as mmol/L (monovalent ions: Na, K, Cl, HCO3). Divalent
    species must use mmol/L or the molar bridge directly.
  * BUN uses the conventional urea-nitrogen factor 2.8 (mg/dL per mmol/L),
    stored as an effective molecular weight of 28.0 g/mol.
"""

from __future__ import annotations

import math
import unicodedata
from dataclasses import dataclass, field

from .errors import ConflictingRuleError, DimensionMismatchError, UnknownUnitError

LINEAR = "linear"
AFFINE = "affine"
MOLAR = "molar"

# Dimension groups that the molar bridge connects.
MASS_CONC = "mass_concentration"
MOLAR_CONC = "molar_concentration"

ROUND_TRIP_REL_TOL = 1e-9


@dataclass(frozen=True)
class Unit:
    symbol: str
    dimension: str


@dataclass(frozen=True)
class Quantity:
    """A finite real value bound to a registered unit symbol."""

    value: float
    unit: str

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise ValueError(f"quantity value must be finite, got {self.value!r}")

    def __str__(self):
        return f"{self.value} {self.unit}"


@dataclass(frozen=True)
class ConversionRule:
    """Conversion from ``src`` to ``dst``.

    linear: dst = src × factor
    affine: dst = (src + offset) × factor      (offset applied before scaling)
    molar:  dst(mg/dL) = src(µmol/L) × MW/10000, keyed by analyte
    """

    src: str
    dst: str
    kind: str
    factor: float = 1.0
    offset: float = 0.0
    analyte: str | None = None
    source: str = ""

    def apply(self, value: float) -> float:
        return (value + self.offset) * self.factor

    def invert(self, value: float) -> float:
        return value / self.factor - self.offset


# Aliases normalize the ASCII spellings models and CSV exports tend to emit.
_ALIASES = {
    "umol/L": "µmol/L",
    "umol/l": "µmol/L",
    "µmol/l": "µmol/L",
    "mmol/l": "mmol/L",
    "nmol/l": "nmol/L",
    "meq/L": "mEq/L",
    "meq/l": "mEq/L",
    "mEq/l": "mEq/L",
    "mg/dl": "mg/dL",
    "g/dl": "g/dL",
    "g/l": "g/L",
    "mg/l": "mg/L",
    "ug/mL": "µg/mL",
    "ug/ml": "µg/mL",
    "ng/ml": "ng/mL",
    "uIU/mL": "µIU/mL",
    "uiu/ml": "µIU/mL",
    "mIU/l": "mIU/L",
    "ug/hr": "µg/hr",
    "ug/h": "µg/hr",
    "µg/h": "µg/hr",
    "ug/day": "µg/day",
    "mcg/hr": "µg/hr",
    "mcg/day": "µg/day",
    "degC": "°C",
    "degF": "°F",
    "C": "°C",
    "F": "°F",
    "celsius": "°C",
    "fahrenheit": "°F",
    "10^9/L": "×10⁹/L",
    "10^9/l": "×10⁹/L",
    "x10^9/L": "×10⁹/L",
    "10*9/L": "×10⁹/L",
    "10^3/uL": "×10³/µL",
    "10^3/µL": "×10³/µL",
    "x10^3/uL": "×10³/µL",
    "K/uL": "×10³/µL",
    "/ul": "/µL",
    "/uL": "/µL",
    "cells/uL": "/µL",
    "cells/µL": "/µL",
    "/mm3": "/mm³",
    "/mm^3": "/mm³",
    "percent": "%",
    "inches": "in",
    "inch": "in",
    "lbs": "lb",
    "pounds": "lb",
    "meters": "m",
    "u/l": "U/L",
    "IU/L": "U/L",
    "beats/min": "bpm",
    "breaths/min": "/min",
    "sec": "s",
    "seconds": "s",
    "msec": "ms",
    "years": "yr",
    "year": "yr",
}


def _normalize_symbol(symbol: str) -> str:
    s = unicodedata.normalize("NFC", symbol.strip())
    s = s.replace("μ", "µ")  # Greek mu -> micro sign
    return _ALIASES.get(s, s)


class UnitRegistry:
    """Conversion graph over clinical units.

    Each unit stores one rule to its dimension anchor; conversion composes
    src→anchor→dst so registered inverses are exact by construction. Molar
    bridges connect the mg/dL and µmol/L anchors per analyte.
    """

    def __init__(self):
        self._units: dict[str, Unit] = {}
        self._anchors: dict[str, str] = {}
        self._to_anchor: dict[str, ConversionRule] = {}
        self._molecular_weights: dict[str, tuple[float, str]] = {}
        self._frozen = False

    # -- registration ----------------------------------------------------

    def register_anchor(self, symbol: str, dimension: str, source: str = "") -> None:
        self._check_mutable()
        symbol = _normalize_symbol(symbol)
        if symbol in self._units:
            raise ConflictingRuleError(f"unit {symbol!r} already registered")
        if dimension in self._anchors:
            raise ConflictingRuleError(f"dimension {dimension!r} already has an anchor")
        self._units[symbol] = Unit(symbol, dimension)
        self._anchors[dimension] = symbol
        self._to_anchor[symbol] = ConversionRule(symbol, symbol, LINEAR, 1.0, source=source)

    def register_rule(self, rule: ConversionRule) -> None:
        """Register ``rule`` and make its exact inverse queryable.

        ``rule.dst`` must already be registered; ``rule.src`` joins its
        dimension group. Re-registering an identical rule is a no-op;
        a different factor/offset for the same pair conflicts.
        """
        self._check_mutable()
        if rule.kind == MOLAR:
            self._register_molar(rule)
            return
        if rule.kind not in (LINEAR, AFFINE):
            raise ConflictingRuleError(f"unknown rule kind {rule.kind!r}")
        src = _normalize_symbol(rule.src)
        dst = _normalize_symbol(rule.dst)
        if dst not in self._units:
            raise UnknownUnitError(dst)
        dst_rule = self._to_anchor[dst]
        # compose src -> dst -> anchor into a single affine map
        factor = rule.factor * dst_rule.factor
        offset = rule.offset + dst_rule.offset / rule.factor
        dim = self._units[dst].dimension
        composed = ConversionRule(src, self._anchors[dim], rule.kind, factor, offset,
                                  source=rule.source)
        existing = self._to_anchor.get(src)
        if existing is not None:
            same = (math.isclose(existing.factor, composed.factor, rel_tol=1e-12)
                    and math.isclose(existing.offset, composed.offset,
                                     rel_tol=1e-12, abs_tol=1e-12)
                    and self._units[src].dimension == dim)
            if same:
                return
            raise ConflictingRuleError(
                f"conversion for {src!r} already registered with a different rule")
        self._units[src] = Unit(src, dim)
        self._to_anchor[src] = composed

    def register_molecular_weight(self, analyte: str, grams_per_mol: float,
                                  source: str = "") -> None:
        self._check_mutable()
        if grams_per_mol <= 0:
            raise ConflictingRuleError("molecular weight must be positive")
        existing = self._molecular_weights.get(analyte)
        if existing is not None and not math.isclose(existing[0], grams_per_mol):
            raise ConflictingRuleError(
                f"molecular weight for {analyte!r} already registered as {existing[0]}")
        self._molecular_weights[analyte] = (grams_per_mol, source)

    def _register_molar(self, rule: ConversionRule) -> None:
        if rule.analyte is None:
            raise ConflictingRuleError("molar rules require an analyte")
        if rule.factor <= 0:
            raise ConflictingRuleError("molar rules require a positive molecular weight")
        self.register_molecular_weight(rule.analyte, rule.factor, rule.source)

    def freeze(self) -> None:
        self._frozen = True

    def _check_mutable(self):
        if self._frozen:
            raise ConflictingRuleError("registry is frozen; build a new one to extend it")

    # -- queries -----------------------------------------------------------

    def has_unit(self, symbol: str) -> bool:
        return _normalize_symbol(symbol) in self._units

    def unit(self, symbol: str) -> Unit:
        key = _normalize_symbol(symbol)
        if key not in self._units:
            raise UnknownUnitError(symbol)
        return self._units[key]

    def dimension(self, symbol: str) -> str:
        return self.unit(symbol).dimension

    def molecular_weight(self, analyte: str) -> float:
        if analyte not in self._molecular_weights:
            raise DimensionMismatchError(MOLAR_CONC, MASS_CONC,
                                         f"no molecular weight for analyte {analyte!r}")
        return self._molecular_weights[analyte][0]

    def units_in_dimension(self, dimension: str) -> list[str]:
        return sorted(u.symbol for u in self._units.values() if u.dimension == dimension)

    def dimensions(self) -> list[str]:
        return sorted(self._anchors)

    # -- conversion ----------------------------------------------------------

    def convert_value(self, value: float, src: str, dst: str,
                      analyte: str | None = None) -> float:
        src_u = self.unit(src)
        dst_u = self.unit(dst)
        if src_u.symbol == dst_u.symbol:
            return value
        if src_u.dimension == dst_u.dimension:
            anchored = self._to_anchor[src_u.symbol].apply(value)
            return self._to_anchor[dst_u.symbol].invert(anchored)

        bridge = {src_u.dimension, dst_u.dimension}
        if bridge != {MASS_CONC, MOLAR_CONC}:
            raise DimensionMismatchError(src_u.symbol, dst_u.symbol,
                                         f"{src_u.dimension} vs {dst_u.dimension}")
        if analyte is None:
            raise DimensionMismatchError(
                src_u.symbol, dst_u.symbol,
                "mass/molar conversion requires an analyte with a known molecular weight")
        mw = self.molecular_weight(analyte)
        anchored = self._to_anchor[src_u.symbol].apply(value)
        if src_u.dimension == MOLAR_CONC:
            anchored = anchored * mw / 10000.0  # µmol/L -> mg/dL
        else:
            anchored = anchored * 10000.0 / mw  # mg/dL -> µmol/L
        return self._to_anchor[dst_u.symbol].invert(anchored)

    def convert(self, q: Quantity, dst: str, analyte: str | None = None) -> Quantity:
        return Quantity(self.convert_value(q.value, q.unit, dst, analyte),
                        self.unit(dst).symbol)

    # -- auditing ------------------------------------------------------------

    def table(self) -> list[dict]:
        """Human-auditable registry dump: one record per unit plus one per analyte."""
        rows = []
        for symbol in sorted(self._units):
            unit = self._units[symbol]
            rule = self._to_anchor[symbol]
            anchor = self._anchors[unit.dimension]
            if symbol == anchor:
                desc = "anchor"
            elif rule.kind == AFFINE:
                desc = f"{anchor} = ({symbol} + {rule.offset:g}) × {rule.factor:.10g}"
            else:
                desc = f"{anchor} = {symbol} × {rule.factor:.10g}"
            rows.append({"symbol": symbol, "dimension": unit.dimension,
                         "rule": desc, "source": rule.source})
        for analyte in sorted(self._molecular_weights):
            mw, source = self._molecular_weights[analyte]
            rows.append({"symbol": f"[{analyte}]", "dimension": "molar bridge",
                         "rule": f"mg/dL = µmol/L × {mw:g}/10000", "source": source})
        return rows


def build_default_registry() -> UnitRegistry:
    """The clinical conversion graph used by every calculator."""
    r = UnitRegistry()
    exact = "SI definition"

    r.register_anchor("kg", "mass", exact)
    r.register_rule(ConversionRule("g", "kg", LINEAR, 1e-3, source=exact))
    r.register_rule(ConversionRule("mg", "g", LINEAR, 1e-3, source=exact))
    r.register_rule(ConversionRule("µg", "mg", LINEAR, 1e-3, source=exact))
    r.register_rule(ConversionRule("lb", "kg", LINEAR, 0.45359237,
                                   source="NIST avoirdupois pound"))

    r.register_anchor("cm", "length", exact)
    r.register_rule(ConversionRule("m", "cm", LINEAR, 100.0, source=exact))
    r.register_rule(ConversionRule("mm", "cm", LINEAR, 0.1, source=exact))
    r.register_rule(ConversionRule("in", "cm", LINEAR, 2.54, source="NIST international inch"))
    r.register_rule(ConversionRule("ft", "in", LINEAR, 12.0, source=exact))

    # Temperature is the only affine group.
    r.register_anchor("°C", "temperature", exact)
    r.register_rule(ConversionRule("°F", "°C", AFFINE, 5.0 / 9.0, offset=-32.0,
                                   source="exact definition"))

    r.register_anchor("mmHg", "pressure", "clinical standard")
    r.register_rule(ConversionRule("kPa", "mmHg", LINEAR, 7.50062, source="1 kPa = 7.50062 mmHg"))

    r.register_anchor("s", "duration", exact)
    r.register_rule(ConversionRule("ms", "s", LINEAR, 1e-3, source=exact))
    r.register_rule(ConversionRule("min", "s", LINEAR, 60.0, source=exact))

    r.register_anchor("mg/dL", MASS_CONC, "clinical standard")
    r.register_rule(ConversionRule("g/dL", "mg/dL", LINEAR, 1000.0, source=exact))
    r.register_rule(ConversionRule("g/L", "mg/dL", LINEAR, 100.0, source=exact))
    r.register_rule(ConversionRule("mg/L", "mg/dL", LINEAR, 0.1, source=exact))
    r.register_rule(ConversionRule("µg/mL", "mg/L", LINEAR, 1.0, source=exact))
    r.register_rule(ConversionRule("ng/mL", "µg/mL", LINEAR, 1e-3, source=exact))
    r.register_rule(ConversionRule("µg/dL", "mg/dL", LINEAR, 1e-3, source=exact))

    r.register_anchor("µmol/L", MOLAR_CONC, "clinical standard")
    r.register_rule(ConversionRule("mmol/L", "µmol/L", LINEAR, 1000.0, source=exact))
    r.register_rule(ConversionRule("nmol/L", "µmol/L", LINEAR, 1e-3, source=exact))
    r.register_rule(ConversionRule("mEq/L", "mmol/L", LINEAR, 1.0,
                                   source="monovalent ion convention"))

    r.register_anchor("×10⁹/L", "cell_concentration", "clinical standard")
    r.register_rule(ConversionRule("×10³/µL", "×10⁹/L", LINEAR, 1.0, source=exact))
    r.register_rule(ConversionRule("/µL", "×10³/µL", LINEAR, 1e-3, source=exact))
    r.register_rule(ConversionRule("/mm³", "/µL", LINEAR, 1.0, source=exact))

    r.register_anchor("fraction", "fraction", exact)
    r.register_rule(ConversionRule("%", "fraction", LINEAR, 0.01, source=exact))

    r.register_anchor("U/L", "enzyme_activity", "clinical standard")

    r.register_anchor("µIU/mL", "insulin_concentration", "clinical standard")
    r.register_rule(ConversionRule("mIU/L", "µIU/mL", LINEAR, 1.0, source=exact))

    r.register_anchor("mg/day", "dose_rate", "clinical standard")
    r.register_rule(ConversionRule("g/day", "mg/day", LINEAR, 1000.0, source=exact))
    r.register_rule(ConversionRule("µg/day", "mg/day", LINEAR, 1e-3, source=exact))
    r.register_rule(ConversionRule("mg/hr", "mg/day", LINEAR, 24.0, source=exact))
    r.register_rule(ConversionRule("µg/hr", "mg/day", LINEAR, 0.024, source=exact))

    r.register_anchor("mL/hr", "fluid_rate", "clinical standard")
    r.register_anchor("mL/day", "urine_output_rate", "clinical standard")
    r.register_rule(ConversionRule("L/day", "mL/day", LINEAR, 1000.0, source=exact))
    r.register_rule(ConversionRule("mL/min", "mL/day", LINEAR, 1440.0, source=exact))

    r.register_anchor("µg/kg/min", "weight_dose_rate", "clinical standard")
    r.register_anchor("/min", "per_minute", "clinical standard")
    r.register_rule(ConversionRule("bpm", "/min", LINEAR, 1.0, source=exact))
    r.register_anchor("yr", "age", "clinical standard")
    r.register_anchor("mL/min", "flow", "clinical standard")
    r.register_anchor("mL/min/1.73m²", "indexed_flow", "clinical standard")
    r.register_anchor("kg/m²", "body_mass_index", "clinical standard")
    r.register_anchor("m²", "body_surface_area", "clinical standard")
    r.register_anchor("mOsm/kg", "osmolality", "clinical standard")
    r.register_anchor("L", "volume", exact)
    r.register_rule(ConversionRule("mL", "L", LINEAR, 1e-3, source=exact))
    r.register_anchor("MME/day", "morphine_equivalent_rate", "CDC 2022 convention")

    # Analyte molecular weights for mass <-> molar bridges.
    r.register_molecular_weight("bilirubin", 584.66, "bilirubin C33H36N4O6")
    r.register_molecular_weight("creatinine", 113.12, "creatinine C4H7N3O")
    r.register_molecular_weight("glucose", 180.16, "glucose C6H12O6 (factor 18.016 per mmol/L)")
    r.register_molecular_weight("urea_nitrogen", 28.0,
                                "BUN convention: mg/dL = mmol/L × 2.8")
    r.register_molecular_weight("cholesterol", 386.65, "cholesterol (factor 38.67 per mmol/L)")
    r.register_molecular_weight("triglycerides", 885.7,
                                "triglyceride average (factor 88.57 per mmol/L)")
    r.register_molecular_weight("calcium", 40.08, "elemental calcium")

    r.freeze()
    return r


DEFAULT_REGISTRY = build_default_registry()


def convert(q: Quantity, dst: str, analyte: str | None = None) -> Quantity:
    """Convert ``q`` to ``dst`` using the default clinical registry."""
    return DEFAULT_REGISTRY.convert(q, dst, analyte)


def parse_quantity(text: str) -> Quantity:
    """Parse strings like ``"2.0 mg/dL"`` or ``"49kg"`` into a Quantity.

    The longest numeric prefix is the value; the remainder is the unit symbol.
    """
    s = text.strip()
    i = 0
    seen_digit = False
    while i < len(s):
        c = s[i]
        if c.isdigit():
            seen_digit = True
            i += 1
        elif c in "+-.eE" and (i == 0 or c in ".eE" or s[i - 1] in "eE"):
            # sign only leads or follows an exponent marker
            i += 1
        else:
            break
    if not seen_digit:
        raise ValueError(f"no numeric value in {text!r}")
    # backtrack a trailing exponent marker that belongs to the unit (e.g. "2 mEq/L")
    while i > 0 and s[i - 1] in "+-.eE":
        i -= 1
    value = float(s[:i])
    unit = s[i:].strip()
    if not unit:
        raise ValueError(f"no unit in {text!r}")
    return Quantity(value, DEFAULT_REGISTRY.unit(unit).symbol)
