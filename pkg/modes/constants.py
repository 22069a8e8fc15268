"""Physical constants (CODATA 2018 exact SI values)."""

from pydantic import BaseModel, ConfigDict, Field

BOLTZMANN = 1.380649e-23      # J/K
PLANCK = 6.62607015e-34       # J*s
LIGHT_SPEED = 299792458.0     # m/s


class PhysicalConstants(BaseModel):
    """Constants used to convert between Φ and physical frequency/temperature."""
    model_config = ConfigDict(frozen=True)

    k_B: float = Field(BOLTZMANN, gt=0, allow_inf_nan=False, description="Boltzmann constant (J/K)")
    h: float = Field(PLANCK, gt=0, allow_inf_nan=False, description="Planck constant (J*s)")
    c: float = Field(LIGHT_SPEED, gt=0, allow_inf_nan=False, description="Speed of light (m/s)")


CODATA = PhysicalConstants()
