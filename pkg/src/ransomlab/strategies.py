"""Catalog of VirLock recovery strategies and profile-aware ranking.

Ships the five stock strategies (ransom payment, the 64-zeros decryption
flaw, shadow volume copies, plain antivirus removal, and antivirus plus a
dedicated cleaner) with their step lists, 0-10 complexities, effectiveness
and reinfection-risk levels. The default catalog lives both as a built-in
constant and as the packaged ``data/default_catalog.json``; the file wins
when present so deployments can patch the data without code changes.

Ranking scores each strategy 0-100 for a concrete trait profile as a
weighted blend of effectiveness, complexity (discounted by up to half for a
fully literate user), reinfection risk, and the disinfection payoff of the
scenario itself.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources

from .errors import ValidationError
from .scoring import TraitProfile, disinfection_payoff, severity

__all__ = [
    "Level",
    "Step",
    "Strategy",
    "StrategyCatalog",
    "default_catalog",
    "rank_strategies",
    "catalog_to_dict",
    "catalog_from_dict",
    "EFFECTIVENESS_VALUES",
    "RISK_VALUES",
]


class Level(Enum):
    """Ordinal three-point scale used for effectiveness and reinfection risk."""

    LOW = "Low"
    MEDIUM = "Medium"
    HIGH = "High"


# Numeric interpretations of the ordinal levels for ranking purposes only.
# These are tool-defined mappings, not measured values.
EFFECTIVENESS_VALUES = {Level.LOW: 25.0, Level.MEDIUM: 60.0, Level.HIGH: 90.0}
RISK_VALUES = {Level.LOW: 10.0, Level.MEDIUM: 50.0, Level.HIGH: 90.0}


def _check_complexity(value: float, what: str) -> None:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValidationError(f"{what} complexity must be a number, got {value!r}")
    if not 0 <= value <= 10:
        raise ValidationError(f"{what} complexity must be in [0, 10], got {value}")


@dataclass(frozen=True)
class Step:
    """One action within a recovery strategy."""

    description: str
    complexity: float
    note: str | None = None

    def __post_init__(self) -> None:
        _check_complexity(self.complexity, f"step '{self.description}'")


@dataclass(frozen=True)
class Strategy:
    """A named recovery strategy with its steps and overall ratings."""

    name: str
    steps: tuple[Step, ...]
    overall_complexity: float
    effectiveness: Level
    reinfection_risk: Level
    note: str | None = None

    def __post_init__(self) -> None:
        _check_complexity(self.overall_complexity, f"strategy '{self.name}'")
        if not isinstance(self.effectiveness, Level) or not isinstance(self.reinfection_risk, Level):
            raise ValidationError(f"strategy '{self.name}' levels must be Low/Medium/High")


@dataclass(frozen=True)
class StrategyCatalog:
    """An ordered collection of uniquely named strategies."""

    strategies: tuple[Strategy, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        names = [s.name for s in self.strategies]
        if len(names) != len(set(names)):
            dupes = sorted({n for n in names if names.count(n) > 1})
            raise ValidationError(f"duplicate strategy names: {dupes}")


_BUILTIN_STRATEGIES = (
    Strategy(
        name="Ransom payment",
        steps=(),
        overall_complexity=1,
        effectiveness=Level.LOW,
        reinfection_risk=Level.HIGH,
    ),
    Strategy(
        name="Decrypt taking advantage of VirLock's flaw",
        steps=(
            Step("Enter 64 zeros in the decryption key field", 1),
            Step(
                "Click in every file of the computer",
                8,
                note="depends since it is more time consuming than complex",
            ),
        ),
        overall_complexity=5,
        effectiveness=Level.MEDIUM,
        reinfection_risk=Level.HIGH,
    ),
    Strategy(
        name="Recover using shadow volume copies",
        steps=(
            Step("Have shadow volume copies enabled and available beforehand", 2),
            Step("Boot into the Windows OS in safe mode", 4),
            Step("Recover to a previous shadow copy", 4),
        ),
        overall_complexity=4,
        effectiveness=Level.HIGH,
        reinfection_risk=Level.MEDIUM,
        note="effectiveness depends on shadow copies existing and being recent",
    ),
    Strategy(
        name="Malware removal with antivirus",
        steps=(
            Step("Boot into the Windows OS in safe mode", 4),
            Step("Install an antivirus using an external device", 4, note="not always necessary"),
            Step("Scan the device for malware", 2),
        ),
        overall_complexity=6,
        effectiveness=Level.HIGH,
        reinfection_risk=Level.LOW,
    ),
    Strategy(
        name="Recover using antivirus + cleaner",
        steps=(
            Step("Boot into the Windows OS in safe mode", 4),
            Step("Install an antivirus using an external device", 4, note="not always necessary"),
            Step("Install a VirLock cleaner using an external device", 4, note="not always necessary"),
            Step(
                "Run the cleaner",
                5,
                note="requires several steps and might result in deleting files that are not infected",
            ),
            Step("Scan the device for malware", 2),
        ),
        overall_complexity=8,
        effectiveness=Level.HIGH,
        reinfection_risk=Level.LOW,
    ),
)

_BUILTIN_CATALOG = StrategyCatalog(strategies=_BUILTIN_STRATEGIES)


def default_catalog() -> StrategyCatalog:
    """The shipped five-strategy catalog.

    Reads the packaged ``data/default_catalog.json`` when present (so the
    file overrides the built-in constant) and falls back to the constant
    otherwise.
    """
    try:
        resource = resources.files(__package__).joinpath("data/default_catalog.json")
        if resource.is_file():
            return catalog_from_dict(json.loads(resource.read_text(encoding="utf-8")))
    except OSError:
        pass
    return _BUILTIN_CATALOG


def rank_strategies(
    cat: StrategyCatalog,
    p: TraitProfile,
    weights: tuple[float, float, float, float] = (0.25, 0.25, 0.25, 0.25),
) -> list[tuple[Strategy, float]]:
    """Score and order the catalog for one trait profile, best first.

    Each strategy scores ``w . (effectiveness, ease, safety, payoff)`` where
    effectiveness and reinfection risk map Low/Medium/High onto fixed numeric
    anchors, ease is ``100 - 10*complexity`` with the complexity discounted by
    up to half as user literacy (A) approaches 100, and payoff is the
    scenario's disinfection payoff. Weights must be nonnegative and sum to 1.
    Ties break by ascending complexity, then name.
    """
    weights = tuple(weights)
    if len(weights) != 4:
        raise ValidationError(f"expected 4 ranking weights, got {len(weights)}")
    if any(isinstance(w, bool) or not isinstance(w, (int, float)) or w < 0 for w in weights):
        raise ValidationError("ranking weights must be nonnegative numbers")
    if abs(sum(weights) - 1.0) > 1e-9:
        raise ValidationError(f"ranking weights must sum to 1, got {sum(weights)}")

    payoff = disinfection_payoff(p.c, severity(p))
    literacy_discount = 1.0 - (p.a / 100.0) * 0.5
    scored: list[tuple[Strategy, float]] = []
    for s in cat.strategies:
        ease = 100.0 - 10.0 * s.overall_complexity * literacy_discount
        safety = 100.0 - RISK_VALUES[s.reinfection_risk]
        score = (
            weights[0] * EFFECTIVENESS_VALUES[s.effectiveness]
            + weights[1] * ease
            + weights[2] * safety
            + weights[3] * payoff
        )
        scored.append((s, score))
    scored.sort(key=lambda item: (-item[1], item[0].overall_complexity, item[0].name))
    return scored


def catalog_to_dict(cat: StrategyCatalog) -> dict:
    """JSON-ready document for a catalog."""
    strategies = []
    for s in cat.strategies:
        entry: dict = {
            "name": s.name,
            "overall_complexity": s.overall_complexity,
            "effectiveness": s.effectiveness.value,
            "reinfection_risk": s.reinfection_risk.value,
            "steps": [],
        }
        if s.note is not None:
            entry["note"] = s.note
        for st in s.steps:
            step_entry: dict = {"description": st.description, "complexity": st.complexity}
            if st.note is not None:
                step_entry["note"] = st.note
            entry["steps"].append(step_entry)
        strategies.append(entry)
    return {"strategies": strategies}


def _parse_level(value: object, what: str) -> Level:
    try:
        return Level(value)
    except ValueError:
        raise ValidationError(f"{what} must be one of Low/Medium/High, got {value!r}") from None


def catalog_from_dict(data: dict) -> StrategyCatalog:
    """Parse and validate a catalog document produced by :func:`catalog_to_dict`."""
    if not isinstance(data, dict):
        raise ValidationError("catalog document must be a JSON object")
    if "strategies" not in data:
        raise ValidationError("catalog document missing key 'strategies'")
    extra = set(data) - {"strategies"}
    if extra:
        raise ValidationError(f"catalog document has unknown keys: {sorted(extra)}")
    if not isinstance(data["strategies"], list):
        raise ValidationError("'strategies' must be a list")

    strategies: list[Strategy] = []
    for idx, entry in enumerate(data["strategies"]):
        if not isinstance(entry, dict):
            raise ValidationError(f"strategy {idx} must be a JSON object")
        allowed = {"name", "overall_complexity", "effectiveness", "reinfection_risk", "steps", "note"}
        missing = allowed - {"note"} - set(entry)
        if missing:
            raise ValidationError(f"strategy {idx} missing keys: {sorted(missing)}")
        extra = set(entry) - allowed
        if extra:
            raise ValidationError(f"strategy {idx} has unknown keys: {sorted(extra)}")
        if not isinstance(entry["name"], str):
            raise ValidationError(f"strategy {idx} name must be a string")
        if not isinstance(entry["steps"], list):
            raise ValidationError(f"strategy '{entry['name']}' steps must be a list")
        steps: list[Step] = []
        for sidx, step_entry in enumerate(entry["steps"]):
            if not isinstance(step_entry, dict):
                raise ValidationError(f"strategy '{entry['name']}' step {sidx} must be a JSON object")
            step_allowed = {"description", "complexity", "note"}
            step_missing = {"description", "complexity"} - set(step_entry)
            if step_missing:
                raise ValidationError(
                    f"strategy '{entry['name']}' step {sidx} missing keys: {sorted(step_missing)}"
                )
            step_extra = set(step_entry) - step_allowed
            if step_extra:
                raise ValidationError(
                    f"strategy '{entry['name']}' step {sidx} has unknown keys: {sorted(step_extra)}"
                )
            if not isinstance(step_entry["description"], str):
                raise ValidationError(f"strategy '{entry['name']}' step {sidx} description must be a string")
            note = step_entry.get("note")
            if note is not None and not isinstance(note, str):
                raise ValidationError(f"strategy '{entry['name']}' step {sidx} note must be a string")
            steps.append(Step(step_entry["description"], step_entry["complexity"], note))
        note = entry.get("note")
        if note is not None and not isinstance(note, str):
            raise ValidationError(f"strategy '{entry['name']}' note must be a string")
        strategies.append(
            Strategy(
                name=entry["name"],
                steps=tuple(steps),
                overall_complexity=entry["overall_complexity"],
                effectiveness=_parse_level(entry["effectiveness"], f"strategy '{entry['name']}' effectiveness"),
                reinfection_risk=_parse_level(
                    entry["reinfection_risk"], f"strategy '{entry['name']}' reinfection_risk"
                ),
                note=note,
            )
        )
    return StrategyCatalog(strategies=tuple(strategies))
