"""Physical constants pinned to CODATA 2018.

The values are written out literally rather than imported from
``scipy.constants`` so that results do not drift with the installed scipy
version; every derived quantity in this package traces back to this one
table.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class PhysicalConstants:
    """CODATA 2018 constants used throughout, SI units.

    ``g_over_2`` is the electron g-factor divided by two, kept to the
    precision the calculations here actually exercise.
    """

    elementary_charge: float = 1.602176634e-19  # C (exact)
    electron_mass: float = 9.1093837015e-31  # kg
    bohr_magneton: float = 9.2740100783e-24  # J/T
    hbar: float = 1.054571817e-34  # J s
    boltzmann: float = 1.380649e-23  # J/K (exact)
    epsilon_0: float = 8.8541878128e-12  # F/m
    g_over_2: float = 1.00115965218  # dimensionless

    def __post_init__(self) -> None:
        for name in (
            "elementary_charge",
            "electron_mass",
            "bohr_magneton",
            "hbar",
            "boltzmann",
            "epsilon_0",
        ):
            if getattr(self, name) <= 0.0:
                raise ValueError(f"{name} must be positive")
        if not 1.0 < self.g_over_2 < 1.01:
            raise ValueError("g_over_2 must be slightly above 1 for an electron")


#: Module-wide instance; treat as read-only.
CODATA = PhysicalConstants()
