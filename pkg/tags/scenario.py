__all__ = ["Scenario", "SweepParameter", "ExitCode"]


from enum import IntEnum


class Scenario(IntEnum):
    """Verification scenarios reachable from the command line.

    Attributes:
        SOLVE_GAUSS (int): Gauss-equation solve and curvature diagnostics (0x00).
        BUILD_SURFACE (int): Induced Gauss maps, Hopf and energy checks (0x01).
        MESS_FORWARD (int): Forward Mess map (0x02).
        MESS_ROUNDTRIP (int): Forward Mess map followed by pointwise inversion (0x03).
        LIE_CHECK (int): Closed-form Lie derivatives against finite differences (0x04).
        SYMPLECTIC_CHECK (int): Canonical form against the Mess pullbacks (0x05).
        POTENTIAL_CHECK (int): Kaehler potential routes and energy first variation (0x06).
        CONVERGENCE (int): Grid refinement study (0x07).
    """

    SOLVE_GAUSS = 0x00
    BUILD_SURFACE = 0x01
    MESS_FORWARD = 0x02
    MESS_ROUNDTRIP = 0x03
    LIE_CHECK = 0x04
    SYMPLECTIC_CHECK = 0x05
    POTENTIAL_CHECK = 0x06
    CONVERGENCE = 0x07

    @property
    def label(self) -> str:
        """Returns the command-line spelling, e.g. ``solve-gauss``."""
        return self.name.lower().replace("_", "-")

    @classmethod
    def parse(cls, text: str) -> "Scenario":
        """Parses a command-line spelling.

        Raises:
            ValueError: If no scenario carries that label.
        """
        key = text.strip().upper().replace("-", "_")
        if key not in cls.__members__:
            raise ValueError(f"unknown scenario: {text!r}")
        return cls[key]


class SweepParameter(IntEnum):
    """Configuration parameters a sweep may vary."""

    R = 0x00
    N_R = 0x01
    EPSILON = 0x02
    PHI_SCALE = 0x03

    @property
    def label(self) -> str:
        """Returns the command-line spelling."""
        return {0x00: "R", 0x01: "n_r", 0x02: "epsilon", 0x03: "Phi_scale"}[self.value]

    @classmethod
    def parse(cls, text: str) -> "SweepParameter":
        """Parses a command-line spelling, case-insensitively.

        Raises:
            ValueError: If no parameter carries that label.
        """
        for member in cls:
            if member.label.lower() == text.strip().lower():
                return member
        raise ValueError(f"unknown sweep parameter: {text!r}")


class ExitCode(IntEnum):
    """Process exit status of the command-line runner."""

    PASS = 0
    FAIL = 1
    CONFIG_ERROR = 2
