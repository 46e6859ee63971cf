"""Python access to the cpnets experiments, trajectories and metrics."""

from ._cpnets import (
    ConfigError,
    Report,
    default_config,
    energy_spectrum,
    experiments,
    mae,
    read_trajectory,
    rmse_normalized,
    run,
)

__all__ = [
    "ConfigError",
    "Report",
    "default_config",
    "energy_spectrum",
    "experiments",
    "mae",
    "read_trajectory",
    "rmse_normalized",
    "run",
]
