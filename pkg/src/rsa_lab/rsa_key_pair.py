"""Toy RSA key material."""

import math
from dataclasses import dataclass
from typing import NamedTuple

from src.errors import InputError
from src.util.primality import is_prime


class PublicKey(NamedTuple):
    n: int
    e: int


@dataclass(frozen=True)
class RsaKeyPair:
    """n = p * q with k_pub = (n, e) and k_pr = d."""

    n: int
    e: int
    d: int
    p: int
    q: int

    def __post_init__(self):
        if self.p == self.q:
            raise InputError("p and q must be distinct")
        if not (is_prime(self.p) and is_prime(self.q)):
            raise InputError(f"p = {self.p} and q = {self.q} must both be prime")
        if self.n != self.p * self.q:
            raise InputError(f"n = {self.n} is not p * q")
        phi = self.phi
        if math.gcd(self.e, phi) != 1 or math.gcd(self.d, phi) != 1:
            raise InputError("exponents must be coprime to (p - 1)(q - 1)")
        if (self.e * self.d) % phi != 1:
            raise InputError("e * d is not 1 modulo (p - 1)(q - 1)")

    @property
    def phi(self) -> int:
        return (self.p - 1) * (self.q - 1)

    @property
    def public_key(self) -> PublicKey:
        return PublicKey(self.n, self.e)

    @property
    def bits(self) -> int:
        return self.n.bit_length()

    def to_dict(self) -> dict:
        # big integers as decimal strings
        return {name: str(getattr(self, name)) for name in ('n', 'e', 'd', 'p', 'q')}
