"""Ransomware incident modeling: trait scoring, games, ranking, and spread.

The package mirrors its submodules:

* :mod:`ransomlab.scoring` - the four 0-100 incident scores.
* :mod:`ransomlab.games` - bimatrix games and solution concepts.
* :mod:`ransomlab.strategies` - the recovery-strategy catalog and ranking.
* :mod:`ransomlab.simnet` - seeded spread simulation over cloud-linked hosts.
* :mod:`ransomlab.ingest` - strict JSON document loading.
* :mod:`ransomlab.report` - profile comparisons, sweeps, CSV/SVG rendering.
* :mod:`ransomlab.cli` - the ``ransomlab`` command.
"""

from .errors import ValidationError
from .games import BimatrixGame, Equilibrium
from .ingest import ProfileDocument, load_catalog, load_network, load_profile
from .report import SweepResult, SweepSpec, compare_profiles, sweep
from .scoring import (
    ScoreSet,
    TraitProfile,
    disinfection_payoff,
    disinfection_probability,
    score_all,
    severity,
    spreadability_score,
)
from .simnet import Host, CloudStore, Edge, Network, SimConfig, Trajectory
from .strategies import Strategy, StrategyCatalog, default_catalog, rank_strategies

__version__ = "0.1.0"

__all__ = [
    "ValidationError",
    "BimatrixGame",
    "Equilibrium",
    "ProfileDocument",
    "load_catalog",
    "load_network",
    "load_profile",
    "SweepResult",
    "SweepSpec",
    "compare_profiles",
    "sweep",
    "ScoreSet",
    "TraitProfile",
    "disinfection_payoff",
    "disinfection_probability",
    "score_all",
    "severity",
    "spreadability_score",
    "Host",
    "CloudStore",
    "Edge",
    "Network",
    "SimConfig",
    "Trajectory",
    "Strategy",
    "StrategyCatalog",
    "default_catalog",
    "rank_strategies",
    "__version__",
]
