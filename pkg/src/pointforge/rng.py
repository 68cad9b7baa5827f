"""Deterministic seeded randomness: string-keyed xoshiro256** plus the five samplers.

The stream is a pure function of the seed token, identical on every platform:
the token's UTF-8 bytes are hashed with 64-bit FNV-1a and the hash is expanded
to the 256-bit generator state by four successive splitmix64 outputs.

The compiled kernel reimplements the exact same arithmetic; see
``kernel/_native.pyx``.  Any change here must be mirrored there.
"""

from __future__ import annotations

import math
from enum import Enum

from .errors import InvalidSeedError

_MASK64 = (1 << 64) - 1
_UNIT53 = 1.0 / 9007199254740992.0  # 2**-53


class Distribution(Enum):
    """The five samplers whose fresh draws scale every function application.

    Parameters are fixed: Uniform(a=-1, b=1), Gaussian(mu=0, sigma=1),
    Betavariate(alpha=1, beta=1), Gammavariate(alpha=1, beta=1),
    Lognormvariate(mu=0, sigma=1).  Integer values double as the codes the
    evaluation kernels switch on.
    """

    UNIFORM = 0
    GAUSSIAN = 1
    BETAVARIATE = 2
    GAMMAVARIATE = 3
    LOGNORMVARIATE = 4

    @property
    def token(self) -> str:
        """Canonical sampler token used in serialized equations."""
        return _DIST_TOKENS[self]


_DIST_TOKENS = {
    Distribution.UNIFORM: "uniform(-1,1)",
    Distribution.GAUSSIAN: "gauss(0,1)",
    Distribution.BETAVARIATE: "betavariate(1,1)",
    Distribution.GAMMAVARIATE: "gammavariate(1,1)",
    Distribution.LOGNORMVARIATE: "lognormvariate(0,1)",
}


def normalize_seed(token) -> str:
    """Canonical text form of a seed token.

    Numbers become decimal text; strings are stripped.  Raises
    InvalidSeedError if nothing is left.
    """
    if isinstance(token, int):
        text = str(token)
    elif isinstance(token, float):
        text = repr(token)
    elif isinstance(token, bytes):
        text = token.decode("utf-8").strip()
    else:
        text = str(token).strip()
    if not text:
        raise InvalidSeedError("seed token is empty")
    return text


def _fnv1a64(data: bytes) -> int:
    h = 0xCBF29CE484222325
    for b in data:
        h ^= b
        h = (h * 0x100000001B3) & _MASK64
    return h


class Rng:
    """One xoshiro256** stream keyed by a seed token.

    Seeding always starts with an empty Box-Muller spare, so the stream
    depends only on the key.  Instances are single-owner mutable values:
    move them between threads, never share them concurrently.

    Draw costs in uniform units, per ``sample`` call:
    Uniform 1, Gaussian 2 (or 0 when the spare is cached), Betavariate 1,
    Gammavariate 1, Lognormvariate as Gaussian.
    """

    __slots__ = ("_s0", "_s1", "_s2", "_s3", "_spare")

    def __init__(self, key) -> None:
        h = _fnv1a64(normalize_seed(key).encode("utf-8"))
        words = []
        for _ in range(4):
            h = (h + 0x9E3779B97F4A7C15) & _MASK64
            z = h
            z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
            z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
            words.append(z ^ (z >> 31))
        if not any(words):
            words[0] = 1  # keep xoshiro out of its absorbing all-zero state
        self._s0, self._s1, self._s2, self._s3 = words
        self._spare: float | None = None

    @classmethod
    def from_words(cls, words) -> "Rng":
        """Rebuild a stream from four raw 64-bit state words (spare empty)."""
        rng = cls.__new__(cls)
        rng._s0, rng._s1, rng._s2, rng._s3 = (w & _MASK64 for w in words)
        rng._spare = None
        return rng

    def state_words(self) -> tuple[int, int, int, int]:
        return (self._s0, self._s1, self._s2, self._s3)

    def next_unit(self) -> float:
        """One xoshiro256** step mapped to [0, 1) via the top 53 bits."""
        s1 = self._s1
        x = (s1 * 5) & _MASK64
        result = ((((x << 7) | (x >> 57)) & _MASK64) * 9) & _MASK64
        t = (s1 << 17) & _MASK64
        s2 = self._s2 ^ self._s0
        s3 = self._s3 ^ s1
        self._s1 = s1 ^ s2
        self._s0 = self._s0 ^ s3
        self._s2 = s2 ^ t
        self._s3 = ((s3 << 45) | (s3 >> 19)) & _MASK64
        return (result >> 11) * _UNIT53

    def uniform(self) -> float:
        return -1.0 + 2.0 * self.next_unit()

    def gauss(self) -> float:
        # Basic trigonometric Box-Muller; the sine variate is cached.
        if self._spare is not None:
            z, self._spare = self._spare, None
            return z
        u1 = self.next_unit()
        u2 = self.next_unit()
        r = math.sqrt(-2.0 * math.log(1.0 - u1))
        t = math.tau * u2
        self._spare = r * math.sin(t)
        return r * math.cos(t)

    def betavariate(self) -> float:
        # Beta(1,1) is exactly Uniform(0,1).
        return self.next_unit()

    def gammavariate(self) -> float:
        # Gamma(1,1) by inversion; 1-u > 0 since u < 1.
        return -math.log(1.0 - self.next_unit())

    def lognormvariate(self) -> float:
        return math.exp(self.gauss())

    def sample(self, dist: Distribution) -> float:
        return self.sample_kind(dist.value)

    def sample_kind(self, kind: int) -> float:
        """Sample by raw distribution code (kernel-facing)."""
        return _SAMPLERS[kind](self)


_SAMPLERS = (
    Rng.uniform,
    Rng.gauss,
    Rng.betavariate,
    Rng.gammavariate,
    Rng.lognormvariate,
)
