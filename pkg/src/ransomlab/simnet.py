"""Discrete-time stochastic spread of an infection through cloud-linked hosts.

Hosts never infect each other directly: an infected host contaminates the
cloud stores it interacts with, and susceptible hosts pick the infection up
from contaminated clouds. Cloud contamination never clears during a run.

Every tick is synchronous (all three phases read the state at tick start)
and consumes the seeded RNG on a fixed, state-independent schedule so that
runs are bit-reproducible and probability dominance is testable per draw:

1. one uniform draw per edge, ascending (host id, cloud id): an infected
   host contaminates the cloud when the draw falls below the edge's
   interaction probability;
2. one uniform draw per edge, same order: an eligible host (susceptible, or
   cleaned when reinfection is allowed) on a cloud contaminated at tick
   start becomes infected when the draw falls below
   ``edge.prob * base_infection_prob * (1 - protection/100) * (1 - awareness/200)``;
3. one uniform draw per host, ascending id: a host infected at tick start
   becomes cleaned when the draw falls below ``clean_prob_per_tick``.

Draws are consumed for every edge and host even when the outcome cannot
apply (the threshold is then zero), which keeps the draw sequence aligned
across configurations that share a seed.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, replace

from .errors import ValidationError

__all__ = [
    "HostState",
    "Host",
    "CloudStore",
    "Edge",
    "Network",
    "SimConfig",
    "TickCounts",
    "Trajectory",
    "MonteCarloSummary",
    "step",
    "run",
    "monte_carlo_f",
    "trajectory_csv",
    "network_to_dict",
    "network_from_dict",
]

from enum import Enum


class HostState(Enum):
    SUSCEPTIBLE = "Susceptible"
    INFECTED = "Infected"
    CLEANED = "Cleaned"


def _check_unit_interval(value: float, what: str) -> None:
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not 0 <= value <= 1:
        raise ValidationError(f"{what} must be in [0, 1], got {value!r}")


def _check_score_range(value: float, what: str) -> None:
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not 0 <= value <= 100:
        raise ValidationError(f"{what} must be in [0, 100], got {value!r}")


@dataclass(frozen=True)
class Host:
    """A machine on the network; awareness and protection damp infection."""

    id: int
    state: HostState = HostState.SUSCEPTIBLE
    awareness: float = 0.0
    protection: float = 0.0

    def __post_init__(self) -> None:
        if not isinstance(self.state, HostState):
            raise ValidationError(f"host {self.id} state must be a HostState")
        _check_score_range(self.awareness, f"host {self.id} awareness")
        _check_score_range(self.protection, f"host {self.id} protection")


@dataclass(frozen=True)
class CloudStore:
    """A shared store; once contaminated it stays contaminated for the run."""

    id: int
    contaminated: bool = False


@dataclass(frozen=True)
class Edge:
    """A host-cloud interaction pair with a per-tick interaction probability."""

    host: int
    cloud: int
    prob: float

    def __post_init__(self) -> None:
        _check_unit_interval(self.prob, f"edge ({self.host}, {self.cloud}) prob")


@dataclass(frozen=True)
class Network:
    """Hosts, cloud stores, and the bipartite interaction edges between them."""

    hosts: tuple[Host, ...]
    clouds: tuple[CloudStore, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        host_ids = [h.id for h in self.hosts]
        cloud_ids = [c.id for c in self.clouds]
        if len(host_ids) != len(set(host_ids)):
            raise ValidationError("duplicate host ids")
        if len(cloud_ids) != len(set(cloud_ids)):
            raise ValidationError("duplicate cloud ids")
        host_set = set(host_ids)
        cloud_set = set(cloud_ids)
        seen: set[tuple[int, int]] = set()
        for e in self.edges:
            if e.host not in host_set:
                raise ValidationError(f"edge references unknown host id {e.host}")
            if e.cloud not in cloud_set:
                raise ValidationError(f"edge references unknown cloud id {e.cloud}")
            if (e.host, e.cloud) in seen:
                raise ValidationError(f"duplicate edge ({e.host}, {e.cloud})")
            seen.add((e.host, e.cloud))


@dataclass(frozen=True)
class SimConfig:
    """Run parameters. The seed is mandatory; there is no wall-clock default."""

    ticks: int
    base_infection_prob: float
    clean_prob_per_tick: float
    reinfection_allowed: bool
    seed: int

    def __post_init__(self) -> None:
        if not isinstance(self.ticks, int) or isinstance(self.ticks, bool) or self.ticks < 0:
            raise ValidationError(f"ticks must be a nonnegative integer, got {self.ticks!r}")
        _check_unit_interval(self.base_infection_prob, "base_infection_prob")
        _check_unit_interval(self.clean_prob_per_tick, "clean_prob_per_tick")
        if not isinstance(self.seed, int) or isinstance(self.seed, bool):
            raise ValidationError(f"seed must be an integer, got {self.seed!r}")


@dataclass(frozen=True)
class TickCounts:
    tick: int
    susceptible: int
    infected: int
    cleaned: int
    contaminated_clouds: int


@dataclass(frozen=True)
class Trajectory:
    """Per-tick population counts plus the final ever-infected percentage."""

    counts: tuple[TickCounts, ...]
    final_f: float


@dataclass(frozen=True)
class MonteCarloSummary:
    """Aggregate over independent runs of the same scenario."""

    mean_f: float
    stddev_f: float
    final_fs: tuple[float, ...]


def _sorted_edges(net: Network) -> list[Edge]:
    return sorted(net.edges, key=lambda e: (e.host, e.cloud))


def step(net: Network, cfg: SimConfig, rng: random.Random) -> Network:
    """Advance the network by one synchronous tick, consuming ``rng`` in place.

    See the module docstring for the three phases and the exact draw order.
    """
    states = {h.id: h.state for h in net.hosts}
    hosts_by_id = {h.id: h for h in net.hosts}
    contaminated_start = {c.id for c in net.clouds if c.contaminated}
    edges = _sorted_edges(net)

    contaminated_next = set(contaminated_start)
    for e in edges:
        u = rng.random()
        if states[e.host] is HostState.INFECTED and u < e.prob:
            contaminated_next.add(e.cloud)

    newly_infected: set[int] = set()
    for e in edges:
        u = rng.random()
        host = hosts_by_id[e.host]
        eligible = states[e.host] is HostState.SUSCEPTIBLE or (
            cfg.reinfection_allowed and states[e.host] is HostState.CLEANED
        )
        if eligible and e.cloud in contaminated_start:
            threshold = (
                e.prob
                * cfg.base_infection_prob
                * (1.0 - host.protection / 100.0)
                * (1.0 - 0.5 * host.awareness / 100.0)
            )
        else:
            threshold = 0.0
        if u < threshold:
            newly_infected.add(e.host)

    newly_cleaned: set[int] = set()
    for h in sorted(net.hosts, key=lambda h: h.id):
        u = rng.random()
        if states[h.id] is HostState.INFECTED and u < cfg.clean_prob_per_tick:
            newly_cleaned.add(h.id)

    new_hosts = []
    for h in net.hosts:
        if h.id in newly_infected:
            new_hosts.append(replace(h, state=HostState.INFECTED))
        elif h.id in newly_cleaned:
            new_hosts.append(replace(h, state=HostState.CLEANED))
        else:
            new_hosts.append(h)
    new_clouds = tuple(
        replace(c, contaminated=True) if c.id in contaminated_next else c for c in net.clouds
    )
    return Network(hosts=tuple(new_hosts), clouds=new_clouds, edges=net.edges)


def _counts(net: Network, tick: int) -> TickCounts:
    susceptible = sum(1 for h in net.hosts if h.state is HostState.SUSCEPTIBLE)
    infected = sum(1 for h in net.hosts if h.state is HostState.INFECTED)
    cleaned = sum(1 for h in net.hosts if h.state is HostState.CLEANED)
    return TickCounts(
        tick=tick,
        susceptible=susceptible,
        infected=infected,
        cleaned=cleaned,
        contaminated_clouds=sum(1 for c in net.clouds if c.contaminated),
    )


def run(net: Network, cfg: SimConfig) -> Trajectory:
    """Simulate ``cfg.ticks`` ticks from ``cfg.seed`` and record per-tick counts.

    The trajectory includes the initial state as tick 0, so it always holds
    ``cfg.ticks + 1`` entries. ``final_f`` is the percentage of hosts that
    were infected at any recorded tick (initially infected hosts included).
    """
    rng = random.Random(cfg.seed)
    ever_infected = {h.id for h in net.hosts if h.state is HostState.INFECTED}
    counts = [_counts(net, 0)]
    current = net
    for tick in range(1, cfg.ticks + 1):
        current = step(current, cfg, rng)
        ever_infected.update(h.id for h in current.hosts if h.state is HostState.INFECTED)
        counts.append(_counts(current, tick))
    total = len(net.hosts)
    final_f = 100.0 * len(ever_infected) / total if total else 0.0
    return Trajectory(counts=tuple(counts), final_f=final_f)


def monte_carlo_f(net: Network, cfg: SimConfig, runs: int) -> MonteCarloSummary:
    """Aggregate ``final_f`` over independent runs seeded ``cfg.seed + i``.

    Run ``i`` uses a fresh RNG seeded with ``cfg.seed + i``, so batches are
    reproducible and could be executed in any order or in parallel; the
    aggregation is a plain commutative sum. Reports the population standard
    deviation (zero for a single run).
    """
    if not isinstance(runs, int) or isinstance(runs, bool) or runs < 1:
        raise ValidationError(f"runs must be a positive integer, got {runs!r}")
    final_fs = tuple(run(net, replace(cfg, seed=cfg.seed + i)).final_f for i in range(runs))
    mean = sum(final_fs) / runs
    variance = sum((f - mean) ** 2 for f in final_fs) / runs
    return MonteCarloSummary(mean_f=mean, stddev_f=math.sqrt(variance), final_fs=final_fs)


def trajectory_csv(traj: Trajectory) -> str:
    """CSV export with header ``tick,susceptible,infected,cleaned,contaminated_clouds``."""
    lines = ["tick,susceptible,infected,cleaned,contaminated_clouds"]
    for c in traj.counts:
        lines.append(f"{c.tick},{c.susceptible},{c.infected},{c.cleaned},{c.contaminated_clouds}")
    return "\n".join(lines) + "\n"


def network_to_dict(net: Network) -> dict:
    """JSON-ready document for a network."""
    return {
        "hosts": [
            {"id": h.id, "state": h.state.value, "awareness": h.awareness, "protection": h.protection}
            for h in net.hosts
        ],
        "clouds": [{"id": c.id, "contaminated": c.contaminated} for c in net.clouds],
        "edges": [{"host": e.host, "cloud": e.cloud, "prob": e.prob} for e in net.edges],
    }


def _require_int(value: object, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError(f"{what} must be an integer, got {value!r}")
    return value


def network_from_dict(data: dict) -> Network:
    """Parse and validate a network document produced by :func:`network_to_dict`."""
    if not isinstance(data, dict):
        raise ValidationError("network document must be a JSON object")
    for key in ("hosts", "clouds", "edges"):
        if key not in data:
            raise ValidationError(f"network document missing key '{key}'")
    extra = set(data) - {"hosts", "clouds", "edges"}
    if extra:
        raise ValidationError(f"network document has unknown keys: {sorted(extra)}")
    for key in ("hosts", "clouds", "edges"):
        if not isinstance(data[key], list):
            raise ValidationError(f"'{key}' must be a list")

    hosts: list[Host] = []
    for idx, entry in enumerate(data["hosts"]):
        if not isinstance(entry, dict):
            raise ValidationError(f"host {idx} must be a JSON object")
        missing = {"id", "state", "awareness", "protection"} - set(entry)
        if missing:
            raise ValidationError(f"host {idx} missing keys: {sorted(missing)}")
        unknown = set(entry) - {"id", "state", "awareness", "protection"}
        if unknown:
            raise ValidationError(f"host {idx} has unknown keys: {sorted(unknown)}")
        try:
            state = HostState(entry["state"])
        except ValueError:
            raise ValidationError(
                f"host {idx} state must be one of Susceptible/Infected/Cleaned, got {entry['state']!r}"
            ) from None
        hosts.append(
            Host(
                id=_require_int(entry["id"], f"host {idx} id"),
                state=state,
                awareness=entry["awareness"],
                protection=entry["protection"],
            )
        )

    clouds: list[CloudStore] = []
    for idx, entry in enumerate(data["clouds"]):
        if not isinstance(entry, dict):
            raise ValidationError(f"cloud {idx} must be a JSON object")
        missing = {"id", "contaminated"} - set(entry)
        if missing:
            raise ValidationError(f"cloud {idx} missing keys: {sorted(missing)}")
        unknown = set(entry) - {"id", "contaminated"}
        if unknown:
            raise ValidationError(f"cloud {idx} has unknown keys: {sorted(unknown)}")
        if not isinstance(entry["contaminated"], bool):
            raise ValidationError(f"cloud {idx} contaminated must be a boolean")
        clouds.append(CloudStore(id=_require_int(entry["id"], f"cloud {idx} id"), contaminated=entry["contaminated"]))

    edges: list[Edge] = []
    for idx, entry in enumerate(data["edges"]):
        if not isinstance(entry, dict):
            raise ValidationError(f"edge {idx} must be a JSON object")
        missing = {"host", "cloud", "prob"} - set(entry)
        if missing:
            raise ValidationError(f"edge {idx} missing keys: {sorted(missing)}")
        unknown = set(entry) - {"host", "cloud", "prob"}
        if unknown:
            raise ValidationError(f"edge {idx} has unknown keys: {sorted(unknown)}")
        edges.append(
            Edge(
                host=_require_int(entry["host"], f"edge {idx} host"),
                cloud=_require_int(entry["cloud"], f"edge {idx} cloud"),
                prob=entry["prob"],
            )
        )

    return Network(hosts=tuple(hosts), clouds=tuple(clouds), edges=tuple(edges))
