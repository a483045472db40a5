from dataclasses import dataclass

from src.errors import InputError


@dataclass(frozen=True)
class BenchmarkSample:
    """One timed factorization (uniform for all oracles)."""

    bits: int
    trial_index: int
    algorithm: str
    wall_seconds: float
    timed_out: bool = False
    modulus: int = 0
    steps: int = 0

    def __post_init__(self):
        if self.wall_seconds < 0:
            raise InputError(f"wall_seconds must be non-negative, got {self.wall_seconds}")

    def to_dict(self) -> dict:
        return {
            'bits': self.bits,
            'trial': self.trial_index,
            'algorithm': self.algorithm,
            'wall_seconds': self.wall_seconds,
            'timeout': self.timed_out,
        }
