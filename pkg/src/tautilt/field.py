"""Exact scalar fields: a prime field GF(p) or the rationals.

Arrays over GF(p) are ``int64`` numpy arrays holding canonical residues in
``[0, p)``.  Arrays over Q are numpy ``object`` arrays of ``Fraction``.
Every arithmetic helper in the package goes through :meth:`Field.reduce`
after multiplying, so no floating point ever enters a computation.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

DEFAULT_PRIME = 32003


class Field:
    """A ground field; ``Field()`` is GF(32003), ``Field.rationals()`` is Q."""

    def __init__(self, prime: int | None = DEFAULT_PRIME):
        if prime is not None:
            prime = int(prime)
            if prime < 2 or any(prime % q == 0 for q in range(2, int(prime**0.5) + 1)):
                raise ValueError(f"{prime} is not a prime")
            # products of two residues must fit comfortably in int64
            if prime >= 2**31:
                raise ValueError("prime too large for int64 arithmetic")
        self.p = prime

    @classmethod
    def rationals(cls) -> "Field":
        return cls(None)

    @classmethod
    def from_descriptor(cls, desc: dict) -> "Field":
        if desc.get("rationals"):
            return cls.rationals()
        if "prime" in desc:
            return cls(int(desc["prime"]))
        raise ValueError(f"bad field descriptor {desc!r}")

    def descriptor(self) -> dict:
        return {"rationals": True} if self.p is None else {"prime": self.p}

    @property
    def is_prime(self) -> bool:
        return self.p is not None

    @property
    def dtype(self):
        return np.int64 if self.p is not None else object

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "Field(Q)" if self.p is None else f"Field(GF({self.p}))"

    # scalars

    def __call__(self, x) -> int | Fraction:
        """Coerce an int, Fraction or string like ``"-3"`` / ``"2/5"``."""
        if isinstance(x, str):
            x = Fraction(x.strip())
        if self.p is None:
            return Fraction(x)
        x = Fraction(x)
        num = x.numerator % self.p
        den = x.denominator % self.p
        if den == 0:
            raise ZeroDivisionError(f"denominator vanishes mod {self.p}")
        return (num * pow(den, -1, self.p)) % self.p

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.p is None:
            return Fraction(1) / x
        return pow(int(x), -1, self.p)

    def to_str(self, x) -> str:
        """Symmetric representative for GF(p) so that -1 prints as ``-1``."""
        if self.p is None:
            return str(Fraction(x))
        x = int(x) % self.p
        return str(x - self.p if x > self.p // 2 else x)

    # arrays

    def zeros(self, shape) -> np.ndarray:
        if self.p is None:
            return np.full(shape, Fraction(0), dtype=object)
        return np.zeros(shape, dtype=np.int64)

    def eye(self, n: int) -> np.ndarray:
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = self.one
        return out

    @property
    def one(self):
        return Fraction(1) if self.p is None else 1

    @property
    def zero(self):
        return Fraction(0) if self.p is None else 0

    def array(self, data) -> np.ndarray:
        """Build a field array from nested lists of ints / Fractions / strings."""
        raw = np.array(data, dtype=object)
        out = self.zeros(raw.shape)
        flat_out = out.reshape(-1)
        for k, x in enumerate(raw.reshape(-1)):
            flat_out[k] = self(x)
        return out

    def reduce(self, arr: np.ndarray) -> np.ndarray:
        if self.p is None:
            return arr
        return np.mod(arr, self.p)

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.p is None:
            if a.shape[-1] == 0 or a.size == 0 or b.size == 0:
                return self.zeros(a.shape[:-1] + b.shape[1:])
            return a @ b
        return (a @ b) % self.p

    def random_array(self, rng: np.random.Generator, shape, low: int = -3, high: int = 3) -> np.ndarray:
        """Small integers in ``[low, high]``, so a seed gives the same matrix in every field."""
        vals = rng.integers(low, high + 1, size=shape)
        if self.p is None:
            out = self.zeros(shape)
            out.reshape(-1)[:] = [Fraction(int(v)) for v in vals.reshape(-1)]
            return out
        return vals.astype(np.int64) % self.p

    def neg(self, arr: np.ndarray) -> np.ndarray:
        return self.reduce(-arr)
