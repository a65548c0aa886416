"""
Value objects for region tables and scenario results.
"""
from dataclasses import dataclass
from typing import Optional, Tuple

from apps.diagnostics.domain import DiagnosticReport, TestProfile
from apps.sequential.domain import OperatingCharacteristics, SimulationReport

from .validators import RegionValidator


@dataclass(frozen=True)
class RegionRecord:
    """Adult prevalence of one region."""

    region: str
    prevalence: float

    def __post_init__(self) -> None:
        RegionValidator.validate_name(self.region)
        RegionValidator.validate_prevalence(self.prevalence)


@dataclass(frozen=True)
class TableRow:
    region: str
    prevalence: float
    # ppvs[k] is the PPV after k + 1 positive results
    ppvs: Tuple[float, ...]


@dataclass(frozen=True)
class TableReport:
    """Probability of disease per region after 1..max_positives positive tests."""

    rows: Tuple[TableRow, ...]
    profile: TestProfile
    max_positives: int
    decimal_places: int = 4
    prevalence_places: int = 3


@dataclass(frozen=True)
class CheckOutcome:
    """One requested finite-space check and its exact answer."""

    check: str
    label: str
    value: str
    # (name, value) pairs shown below the headline value
    details: Tuple[Tuple[str, str], ...] = ()


@dataclass(frozen=True)
class ScenarioResult:
    """Outcome of running one scenario file."""

    name: str
    kind: str
    checks: Tuple[CheckOutcome, ...] = ()
    space_size: Optional[int] = None
    diagnostic: Optional[DiagnosticReport] = None
    simulation: Optional[SimulationReport] = None
    exact: Optional[OperatingCharacteristics] = None
