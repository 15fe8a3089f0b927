__all__ = ["RunConfig", "flatten", "parse_coefficients"]


import re
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Tuple

import numpy as np
import toml

from geometry.differential import MAX_DEGREE
from geometry.grid import DiscGrid, make_grid
from tags.scenario import Scenario, SweepParameter
from tags.sign import Sign
from utils.errors import ConfigParseError, InvalidParameterError


COEFFICIENT = re.compile(r"^(\d+)(re|im)$")

POLYNOMIALS = (
    "base_point.mu",
    "base_point.phi",
    "deformation.nu_plus",
    "deformation.nu_minus",
    "deformation.nu_source",
)

SCALARS: Dict[str, type] = {
    "scenario": str,
    "output_path": str,
    "epsilons": list,
    "grid.n_r": int,
    "grid.n_theta": int,
    "grid.R": float,
    "tolerances.solver_tol": float,
    "tolerances.check_tol": float,
    "deformation.side": str,
    "basis.size": int,
    "sweep.parameter": str,
    "sweep.values": list,
    "convergence.levels": list,
}

DEFAULTS: Dict[str, Any] = {
    "output_path": "adsmax_report",
    "epsilons": [0.02, 0.01, 0.005],
    "grid.n_theta": 32,
    "tolerances.solver_tol": 1e-10,
    "tolerances.check_tol": 5e-3,
    "deformation.side": "+",
    "basis.size": 3,
    "convergence.levels": [12, 24, 48],
}


def flatten(mapping: Mapping[str, Any], prefix: str = "") -> Dict[str, Any]:
    """Flattens nested tables into dotted keys, e.g. ``{"grid": {"R": 0.9}}`` to ``{"grid.R": 0.9}``."""
    flat: Dict[str, Any] = dict()
    for key, value in mapping.items():
        name = f"{prefix}{key}"
        if isinstance(value, Mapping):
            flat.update(flatten(value, f"{name}."))
        else:
            flat[name] = value
    return flat


def parse_coefficients(flat: Mapping[str, Any], prefix: str) -> Optional[np.ndarray]:
    """
    Collects ``<prefix>.<k>re`` / ``<prefix>.<k>im`` entries into c_0..c_d.

    Returns:
        Optional[np.ndarray]: The coefficients, or None when no entry uses ``prefix``.

    Raises:
        ConfigParseError: On a malformed key, a degree above the limit or a non-numeric value.
    """
    entries: Dict[int, complex] = dict()
    for key, value in flat.items():
        if not key.startswith(f"{prefix}."):
            continue
        match = COEFFICIENT.match(key[len(prefix) + 1 :])
        if match is None:
            raise ConfigParseError(f"malformed coefficient key {key!r}, expected {prefix}.<k>re or {prefix}.<k>im")
        degree = int(match.group(1))
        if degree > MAX_DEGREE:
            raise ConfigParseError(f"{key}: degree {degree} exceeds {MAX_DEGREE}")
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigParseError(f"{key}: expected a number, got {value!r}")
        part = complex(value) if match.group(2) == "re" else 1j * float(value)
        entries[degree] = entries.get(degree, 0.0) + part
    if not entries:
        return None
    coeffs = np.zeros(max(entries) + 1, dtype=complex)
    for degree, value in entries.items():
        coeffs[degree] = value
    return coeffs


def _typed(flat: Mapping[str, Any], key: str) -> Any:
    value = flat.get(key, DEFAULTS.get(key))
    if value is None:
        raise ConfigParseError(f"missing required key {key!r}")
    expected = SCALARS[key]
    if expected is float and isinstance(value, int) and not isinstance(value, bool):
        value = float(value)
    if not isinstance(value, expected) or isinstance(value, bool):
        raise ConfigParseError(f"{key}: expected {expected.__name__}, got {value!r}")
    return value


def _positive_floats(key: str, values: list) -> Tuple[float, ...]:
    try:
        result = tuple(float(value) for value in values)
    except (TypeError, ValueError):
        raise ConfigParseError(f"{key}: expected a list of numbers, got {values!r}") from None
    if not result or any(value <= 0.0 for value in result):
        raise ConfigParseError(f"{key}: values must be positive, got {values!r}")
    return result


class RunConfig:
    """
    A validated run configuration.

    The TOML file uses nested tables which are flattened to dotted keys;
    every key is checked against the known set, so a typo fails loudly.

    Attributes:
        scenario (Scenario): The scenario to run.
        grid (DiscGrid): The source disc grid.
        mu_poly (np.ndarray): Coefficients of q for the base coefficient e^{-psi} conj(q).
        phi_poly (np.ndarray): Coefficients of the quadratic differential.
        solver_tol (float): Tolerance handed to every solver.
        check_tol (float): Pass threshold of the verification metrics.
        epsilons (Tuple[float, ...]): Finite-difference ladder.
        output_path (Path): Report path without extension.
    """

    def __init__(self, flat: Mapping[str, Any]) -> None:
        """Initializes the configuration from flattened keys.

        Raises:
            ConfigParseError: On an unknown key, a wrong type, an invalid tag or
                a non-positive tolerance.
        """
        flat = dict(flat)
        for key in flat:
            if key in SCALARS or any(key.startswith(f"{prefix}.") for prefix in POLYNOMIALS):
                continue
            raise ConfigParseError(f"unknown configuration key {key!r}")
        try:
            self.__scenario = Scenario.parse(_typed(flat, "scenario"))
            self.__side = Sign.parse(_typed(flat, "deformation.side"))
            self.__sweep_parameter = (
                SweepParameter.parse(_typed(flat, "sweep.parameter")) if "sweep.parameter" in flat else None
            )
        except ValueError as error:
            if isinstance(error, ConfigParseError):
                raise
            raise ConfigParseError(str(error)) from None
        try:
            self.__grid = make_grid(_typed(flat, "grid.n_r"), _typed(flat, "grid.n_theta"), _typed(flat, "grid.R"))
        except InvalidParameterError as error:
            raise ConfigParseError(f"grid: {error}") from None
        self.__solver_tol = _typed(flat, "tolerances.solver_tol")
        self.__check_tol = _typed(flat, "tolerances.check_tol")
        if self.__solver_tol <= 0.0 or self.__check_tol <= 0.0:
            raise ConfigParseError(
                f"tolerances must be positive, got ({self.__solver_tol!r}, {self.__check_tol!r})"
            )
        ladder = _positive_floats("epsilons", _typed(flat, "epsilons"))
        if len(ladder) < 2 or any(later >= earlier for earlier, later in zip(ladder, ladder[1:])):
            raise ConfigParseError(f"epsilons must be strictly decreasing with at least two entries, got {ladder}")
        self.__epsilons = ladder
        self.__output_path = Path(_typed(flat, "output_path"))
        self.__basis_size = _typed(flat, "basis.size")
        if not 1 <= self.__basis_size <= 5:
            raise ConfigParseError(f"basis.size must be in [1, 5], got {self.__basis_size}")
        self.__sweep_values = (
            _positive_floats("sweep.values", _typed(flat, "sweep.values")) if "sweep.values" in flat else ()
        )
        levels = _positive_floats("convergence.levels", _typed(flat, "convergence.levels"))
        if any(level != int(level) for level in levels):
            raise ConfigParseError(f"convergence.levels must be integers, got {levels}")
        self.__levels = tuple(int(level) for level in levels)
        zero = np.zeros(1, dtype=complex)
        polys = {prefix: parse_coefficients(flat, prefix) for prefix in POLYNOMIALS}
        self.__mu_poly = zero if polys["base_point.mu"] is None else polys["base_point.mu"]
        self.__phi_poly = zero if polys["base_point.phi"] is None else polys["base_point.phi"]
        self.__nu_plus = polys["deformation.nu_plus"]
        self.__nu_minus = polys["deformation.nu_minus"]
        self.__nu_source = polys["deformation.nu_source"]
        self.__flat = flat

    @classmethod
    def load(cls, path: Path, scenario: Optional[str] = None, output_path: Optional[str] = None) -> "RunConfig":
        """Parses a TOML file; the command line may override the scenario and the output path.

        Raises:
            ConfigParseError: If the file is missing, unreadable or invalid.
        """
        try:
            fields = toml.load(Path(path))
        except (OSError, toml.TomlDecodeError, TypeError) as error:
            raise ConfigParseError(f"cannot read {path}: {error}") from None
        flat = flatten(fields)
        if scenario is not None:
            flat["scenario"] = scenario
        if output_path is not None:
            flat["output_path"] = str(output_path)
        return cls(flat)

    @property
    def scenario(self) -> Scenario:
        """Returns the scenario tag."""
        return self.__scenario

    @property
    def grid(self) -> DiscGrid:
        """Returns the source grid."""
        return self.__grid

    @property
    def mu_poly(self) -> np.ndarray:
        """Returns the coefficients of the base tangent polynomial."""
        return self.__mu_poly.copy()

    @property
    def phi_poly(self) -> np.ndarray:
        """Returns the coefficients of Phi."""
        return self.__phi_poly.copy()

    @property
    def nu_plus(self) -> Optional[np.ndarray]:
        """Returns the polynomial of the + target direction, if any."""
        return self.__nu_plus

    @property
    def nu_minus(self) -> Optional[np.ndarray]:
        """Returns the polynomial of the - target direction, if any."""
        return self.__nu_minus

    @property
    def nu_source(self) -> Optional[np.ndarray]:
        """Returns the polynomial of the source direction, if any."""
        return self.__nu_source

    @property
    def side(self) -> Sign:
        """Returns the section used by one-sided scenarios."""
        return self.__side

    @property
    def solver_tol(self) -> float:
        """Returns the solver tolerance."""
        return self.__solver_tol

    @property
    def check_tol(self) -> float:
        """Returns the verification threshold."""
        return self.__check_tol

    @property
    def epsilons(self) -> Tuple[float, ...]:
        """Returns the finite-difference ladder."""
        return self.__epsilons

    @property
    def output_path(self) -> Path:
        """Returns the report path without extension."""
        return self.__output_path

    @property
    def basis_size(self) -> int:
        """Returns the truncated basis size."""
        return self.__basis_size

    @property
    def sweep_parameter(self) -> Optional[SweepParameter]:
        """Returns the configured sweep parameter, if any."""
        return self.__sweep_parameter

    @property
    def sweep_values(self) -> Tuple[float, ...]:
        """Returns the configured sweep values."""
        return self.__sweep_values

    @property
    def levels(self) -> Tuple[int, ...]:
        """Returns the radial counts of the convergence study."""
        return self.__levels

    def echo(self) -> Dict[str, Any]:
        """Returns the flattened keys, sorted, with defaults filled in."""
        merged = dict(DEFAULTS)
        merged.update(self.__flat)
        return {key: merged[key] for key in sorted(merged)}

    def replace(self, **overrides: Any) -> "RunConfig":
        """Returns a copy with some dotted keys replaced (``grid.R=0.8`` is spelled ``{"grid.R": 0.8}``)."""
        flat = dict(self.__flat)
        flat.update(overrides)
        return RunConfig(flat)

    def with_sweep_value(self, parameter: SweepParameter, value: float) -> "RunConfig":
        """
        Returns the configuration at one sweep value.

        R and n_r replace the grid entries, epsilon replaces the ladder by
        (eps, eps / 2, eps / 4) and Phi_scale multiplies every Phi coefficient.
        """
        parameter = SweepParameter(parameter)
        if parameter == SweepParameter.R:
            return self.replace(**{"grid.R": float(value)})
        if parameter == SweepParameter.N_R:
            return self.replace(**{"grid.n_r": int(value)})
        if parameter == SweepParameter.EPSILON:
            return self.replace(epsilons=[float(value), float(value) / 2.0, float(value) / 4.0])
        scaled = {
            key: entry * float(value)
            for key, entry in self.__flat.items()
            if key.startswith("base_point.phi.")
        }
        return self.replace(**scaled)

    def __repr__(self) -> str:
        return f"RunConfig({self.__scenario.label}, {self.__grid!r}, out={self.__output_path})"
